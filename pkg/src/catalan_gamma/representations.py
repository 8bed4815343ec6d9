"""Integral representations of the Catalan numbers, evaluated in log space
and compared against the exact big-integer values.

Two routes are implemented:

  * the Feaux route:        C_n = (2^(2n)/sqrt(pi)) * exp(I_n)
  * the duplication route:  C_n = 2 * exp(J_n)

where I_n and J_n are semi-infinite integrals of smooth brackets divided
by t.  All comparisons stay in log space, so the sweep range is not limited
by float overflow of C_n itself.

The canonical Feaux-route integrand carries (1+t)^(n+2) in its denominator;
`resolve_exponent_typo` also evaluates the (1+t)^(n+1) variant, which by the
index-shift identity reproduces log(4 C_(n-1)) instead - that discrepancy is
kept as a permanent regression artifact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, NonConvergenceError
from .exact import catalan_exact
from .loggamma import LOG_2, LOG_PI, loggamma_reference
from .quadrature import (
    DEFAULT_ABS_TOL,
    DEFAULT_MAX_EVALS,
    IntegrandSpec,
    QuadResult,
    integrate_semi_infinite,
)

__all__ = [
    "ReprResult",
    "ExponentCheck",
    "log_catalan_gamma",
    "feaux_catalan_integrand",
    "feaux_catalan_integrand_spec",
    "duplication_catalan_integrand",
    "duplication_catalan_integrand_spec",
    "catalan_via_feaux",
    "catalan_via_duplication",
    "resolve_exponent_typo",
]

# Both representations are stated for positive n only.
TYPO_MATCH_TOL = 1e-8


@dataclass(frozen=True)
class ReprResult:
    """One integral-representation evaluation compared to the exact value."""

    n: int
    log_value: float
    integral: QuadResult
    exact_log: float
    abs_log_error: float


@dataclass(frozen=True)
class ExponentCheck:
    """Outcome of evaluating both denominator-exponent variants at one n."""

    n: int
    log_exact: float
    shifted_target: float  # log(4 * C_(n-1))
    canonical_log: float  # (1+t)^(n+2) variant
    canonical_error: float  # |canonical_log - log C_n|
    shifted_log: float  # (1+t)^(n+1) variant
    shifted_error: float  # |shifted_log - log(4 C_(n-1))|
    canonical_matches: bool
    shifted_matches: bool


def _require_index(n: int) -> int:
    if n < 1:
        raise DomainError(f"integral representations need n >= 1, got {n}")
    return int(n)


def log_catalan_gamma(n: int) -> float:
    """log C_n from the Gamma-ratio form:
    (2 log 2) n - (log pi)/2 + log Gamma(n+1/2) - log Gamma(n+2).

    Both Gamma terms go through the reference, which is exact (up to one
    rounding) at these integer and half-integer arguments.
    """
    n = _require_index(n)
    return (
        2.0 * n * LOG_2
        - 0.5 * LOG_PI
        + loggamma_reference(n + 0.5)
        - loggamma_reference(n + 2.0)
    )


def _feaux_eval(exponent: float, t: float) -> float:
    # {[(1+t)^(3/2) - 1] / [(1+t)^exponent log(1+t)] - (3/2) e^-t} / t,
    # arranged in negative exponentials of L = log(1+t) so nothing overflows
    # and the small-t cancellation happens inside expm1.
    ell = math.log1p(t)
    bracket = math.expm1(1.5 * ell) * math.exp(-exponent * ell) / ell - 1.5 * math.exp(-t)
    return bracket / t


def _feaux_spec(exponent: float) -> IntegrandSpec:
    # Origin series: expm1(1.5 L)/L = 3/2 + (9/8) L + O(L^2) and
    # e^(-eL) = 1 - eL + ..., so the bracket is
    # (9/8 - (3/2)e + 3/2) t + O(t^2): the limit is 21/8 - (3/2) e.
    #
    # Tail certificate (alpha = e - 1/2):
    #   power term <= t^(1/2-e)/log 4          for t >= 3
    #   (3/2) e^-t <= (3/2) t^(1/2-e)          for t >= T0 = 2 e max(1, log e),
    # where t - (e-1/2) log t is positive and increasing past T0.
    return IntegrandSpec(
        eval=lambda t: _feaux_eval(exponent, t),
        limit_at_zero=2.625 - 1.5 * exponent,
        tail_exponent=exponent - 0.5,
        tail_coefficient=2.25,
        tail_start=2.0 * exponent * max(1.0, math.log(exponent)),
    )


def feaux_catalan_integrand(n: int, t: float) -> float:
    """Pointwise value of the Feaux-route Catalan integrand (exponent n+2)."""
    _require_index(n)
    if not t > 0.0:
        raise DomainError(f"integrand defined for t > 0, got {t}")
    return _feaux_eval(n + 2.0, t)


def feaux_catalan_integrand_spec(n: int) -> IntegrandSpec:
    """Integrand bundle for the Feaux route; limit_at_zero = -(3n/2 + 3/8)."""
    return _feaux_spec(_require_index(n) + 2.0)


def duplication_catalan_integrand(n: int, t: float) -> float:
    """Pointwise value of the duplication-route Catalan integrand:
    {[(1+t)^(-2n) - (1+t)^(-n) - (1+t)^(-n-2) + (1+t)^(-1)]/log(1+t) - e^-t}/t.
    """
    _require_index(n)
    if not t > 0.0:
        raise DomainError(f"integrand defined for t > 0, got {t}")
    ell = math.log1p(t)
    # Pair the four powers so each difference runs through expm1; summed
    # naively they cancel to O(L) and drown in rounding noise near 0.
    num = math.exp(-n * ell) * math.expm1(-n * ell) - math.exp(-ell) * math.expm1(
        -(n + 1.0) * ell
    )
    return (num / ell - math.exp(-t)) / t


def duplication_catalan_integrand_spec(n: int) -> IntegrandSpec:
    """Integrand bundle for the duplication route.

    Origin series: the power sum is L + (2n^2-4n-3)/2 L^2 + O(L^3), so
    dividing by L and subtracting e^-t = 1 - t + ... leaves
    (n^2 - 2n - 1/2) t + O(t^2): the limit is n^2 - 2n - 1/2.

    Tail: each power is <= 1/(1+t), so the bracket is bounded by
    4/(t log 4) + e^-t on t >= 3, an alpha = 2 certificate with K = 3.4.
    """
    n = _require_index(n)
    return IntegrandSpec(
        eval=lambda t: duplication_catalan_integrand(n, t),
        limit_at_zero=n * n - 2.0 * n - 0.5,
        tail_exponent=2.0,
        tail_coefficient=3.4,
        tail_start=3.0,
    )


def _compare(n: int, log_value: float, quad: QuadResult) -> ReprResult:
    exact_log = math.log(catalan_exact(n))
    return ReprResult(
        n=n,
        log_value=log_value,
        integral=quad,
        exact_log=exact_log,
        abs_log_error=abs(log_value - exact_log),
    )


def catalan_via_feaux(
    n: int, abs_tol: float = DEFAULT_ABS_TOL, max_evals: int = DEFAULT_MAX_EVALS
) -> ReprResult:
    """Evaluate C_n through the Feaux route and compare in log space.

    log C_n = 2n log 2 - (log pi)/2 + I_n.  Non-convergence is carried in
    the embedded QuadResult, never hidden.
    """
    n = _require_index(n)
    quad = integrate_semi_infinite(feaux_catalan_integrand_spec(n), abs_tol, max_evals)
    log_value = 2.0 * n * LOG_2 - 0.5 * LOG_PI + quad.value
    return _compare(n, log_value, quad)


def catalan_via_duplication(
    n: int, abs_tol: float = DEFAULT_ABS_TOL, max_evals: int = DEFAULT_MAX_EVALS
) -> ReprResult:
    """Evaluate C_n through the duplication route: log C_n = log 2 + J_n."""
    n = _require_index(n)
    quad = integrate_semi_infinite(
        duplication_catalan_integrand_spec(n), abs_tol, max_evals
    )
    log_value = LOG_2 + quad.value
    return _compare(n, log_value, quad)


def resolve_exponent_typo(n: int, abs_tol: float = DEFAULT_ABS_TOL) -> ExponentCheck:
    """Evaluate both denominator-exponent variants of the Feaux route at n.

    The (1+t)^(n+2) variant must reproduce log C_n; the (1+t)^(n+1) variant
    is the same integral at index n-1, so it lands on log(4 C_(n-1)).
    """
    n = _require_index(n)
    prefactor = 2.0 * n * LOG_2 - 0.5 * LOG_PI
    results = {}
    for shift in (2.0, 1.0):
        quad = integrate_semi_infinite(_feaux_spec(n + shift), abs_tol, DEFAULT_MAX_EVALS)
        if not quad.converged:
            raise NonConvergenceError(
                f"exponent check at n={n} did not converge (shift {shift})"
            )
        results[shift] = prefactor + quad.value
    log_exact = math.log(catalan_exact(n))
    shifted_target = math.log(4 * catalan_exact(n - 1))
    canonical_error = abs(results[2.0] - log_exact)
    shifted_error = abs(results[1.0] - shifted_target)
    return ExponentCheck(
        n=n,
        log_exact=log_exact,
        shifted_target=shifted_target,
        canonical_log=results[2.0],
        canonical_error=canonical_error,
        shifted_log=results[1.0],
        shifted_error=shifted_error,
        canonical_matches=canonical_error <= TYPO_MATCH_TOL,
        shifted_matches=shifted_error <= TYPO_MATCH_TOL,
    )
