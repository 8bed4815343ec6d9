"""Exact combinatorics: Catalan numbers by four independent routes, plus
Ballot, Fuss-Catalan and trivariate generalizations.

Everything is computed in arbitrary-precision integer (or exact rational)
arithmetic; no float ever enters a value.  The enumeration routines exist to
cross-check the closed forms, so they deliberately count one object at a time
instead of using any formula.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterator, Union

from .errors import DomainError, LimitExceededError, NonIntegerResultError

__all__ = [
    "DYCK_ENUMERATION_MAX",
    "binomial",
    "catalan_exact",
    "catalan_segner",
    "catalan_hypergeometric",
    "dyck_words",
    "count_dyck_words",
    "count_lattice_paths",
    "ballot",
    "fuss_catalan",
    "b3",
]

# C_14 ~ 2.7 million words; enumerating beyond that is pointless for testing
# and slow at desk scale.
DYCK_ENUMERATION_MAX = 14

ExactValue = Union[int, Fraction]


def binomial(a: int, b: int) -> int:
    """Exact binomial coefficient (a choose b); 0 when b > a."""
    if a < 0 or b < 0:
        raise DomainError(f"binomial needs nonnegative arguments, got ({a}, {b})")
    return comb(a, b)


def catalan_exact(n: int) -> int:
    """nth Catalan number, (1/(n+1)) * (2n choose n)."""
    if n < 0:
        raise DomainError(f"Catalan index must be nonnegative, got {n}")
    return comb(2 * n, n) // (n + 1)


def catalan_segner(n: int) -> int:
    """nth Catalan number by the convolution recurrence
    C_{m+1} = sum_{i=0}^{m} C_i * C_{m-i}, seeded C_0 = 1.

    Independent of any binomial coefficient; used as an oracle.
    """
    if n < 0:
        raise DomainError(f"Catalan index must be nonnegative, got {n}")
    c = [1]
    for m in range(n):
        c.append(sum(c[i] * c[m - i] for i in range(m + 1)))
    return c[n]


def catalan_hypergeometric(n: int) -> int:
    """nth Catalan number as the terminating Gauss series 2F1(1-n, -n; 2; 1).

    Both upper parameters are nonpositive integers, so the series terminates
    after n terms; summed in exact rationals, the result is provably integral.
    """
    if n < 1:
        raise DomainError(f"hypergeometric form needs n >= 1, got {n}")
    total = Fraction(0)
    term = Fraction(1)
    for k in range(n):
        total += term
        # term ratio: (1-n+k)(-n+k) / ((2+k)(1+k))
        term *= Fraction((1 - n + k) * (k - n), (2 + k) * (1 + k))
    if total.denominator != 1:
        raise NonIntegerResultError(f"2F1(1-{n}, -{n}; 2; 1) summed to {total}")
    return int(total)


def dyck_words(n: int) -> Iterator[str]:
    """Generate every Dyck word of length 2n: n X's and n Y's with no prefix
    holding more Y than X.  Backtracks over prefix-balance states."""
    if n < 0:
        raise DomainError(f"Dyck index must be nonnegative, got {n}")
    if n > DYCK_ENUMERATION_MAX:
        raise LimitExceededError(
            f"Dyck enumeration capped at n={DYCK_ENUMERATION_MAX}, got {n}"
        )
    word: list[str] = []

    def extend(xs: int, ys: int) -> Iterator[str]:
        if xs == n and ys == n:
            yield "".join(word)
            return
        if xs < n:
            word.append("X")
            yield from extend(xs + 1, ys)
            word.pop()
        if ys < xs:
            word.append("Y")
            yield from extend(xs, ys + 1)
            word.pop()

    yield from extend(0, 0)


def count_dyck_words(n: int) -> int:
    """Count Dyck words of length 2n by generating each one."""
    return sum(1 for _ in dyck_words(n))


def count_lattice_paths(n: int) -> int:
    """Count monotonic right/up paths across an n x n grid that stay weakly
    below the diagonal, by dynamic programming over grid nodes (no formula)."""
    if n < 0:
        raise DomainError(f"grid size must be nonnegative, got {n}")
    col = [1]  # paths reaching (x, y) for the current column x
    for x in range(1, n + 1):
        new = [0] * (x + 1)
        for y in range(x + 1):
            new[y] = (col[y] if y < len(col) else 0) + (new[y - 1] if y > 0 else 0)
        col = new
    return col[n]


def ballot(n: int, k: int) -> int:
    """Ballot number B(n, k) = ((n-k)/(n+k)) * (n+k choose n): sequences of
    n votes for A and k for B with A strictly ahead throughout the count."""
    if n < 1:
        raise DomainError(f"ballot needs n >= 1, got n={n}")
    if k < 0 or k > n:
        raise DomainError(f"ballot needs 0 <= k <= n, got k={k}, n={n}")
    value = Fraction(n - k, n + k) * comb(n + k, n)
    if value.denominator != 1:
        raise NonIntegerResultError(f"B({n},{k}) evaluated to non-integer {value}")
    return int(value)


def fuss_catalan(m: int, p: int, r: int) -> ExactValue:
    """Fuss-Catalan number A_m(p, r) = (r/(mp+r)) * (mp+r choose m).

    Integrality is not guaranteed for arbitrary (p, r); a non-integer value is
    returned as the exact Fraction rather than rounded or rejected.
    """
    if m < 0 or p < 1 or r < 1:
        raise DomainError(f"fuss_catalan needs m >= 0, p >= 1, r >= 1, got ({m}, {p}, {r})")
    value = Fraction(r, m * p + r) * comb(m * p + r, m)
    return int(value) if value.denominator == 1 else value


def b3(n: int, k: int, l: int) -> ExactValue:
    """Trivariate ballot-type number
    B3(n, k, l) = (n+k choose k) * (n+l-1 choose l) * (n-k-l)/(n+k),
    restricted to k + l <= n so the final factor stays nonnegative.

    Non-integer values are returned as exact Fractions, as in fuss_catalan.
    """
    if n < 1 or k < 0 or l < 0:
        raise DomainError(f"b3 needs n >= 1, k >= 0, l >= 0, got ({n}, {k}, {l})")
    if k + l > n:
        raise DomainError(f"b3 needs k + l <= n, got k={k}, l={l}, n={n}")
    value = comb(n + k, k) * comb(n + l - 1, l) * Fraction(n - k - l, n + k)
    return int(value) if value.denominator == 1 else value
