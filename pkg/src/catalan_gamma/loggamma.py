"""log Gamma: an exact-anchored reference plus five classical integral
representations, each wired into the semi-infinite quadrature engine.

Every representation ships its origin limit as a hand-derived series
coefficient (the formulas are all of the shape "bracket that vanishes at
t = 0, divided by t") and a rigorous algebraic tail certificate.  The
reference shares no code with the representations, so agreement between the
two routes is a genuine cross-check.
"""

from __future__ import annotations

import enum
import math

from .errors import DomainError, NonConvergenceError
from .quadrature import (
    DEFAULT_ABS_TOL,
    DEFAULT_MAX_EVALS,
    IntegrandSpec,
    integrate_finite,
    integrate_semi_infinite,
)

__all__ = [
    "ReprId",
    "loggamma_reference",
    "loggamma_feaux",
    "loggamma_binet1",
    "loggamma_binet2",
    "loggamma_malmsten",
    "loggamma_kummer",
    "loggamma_by_tag",
    "duplication_residual",
    "raabe_residual",
    "feaux_integrand_spec",
    "binet1_integrand_spec",
    "binet2_integrand_spec",
    "malmsten_integrand_spec",
    "kummer_integrand_spec",
]

LOG_2 = math.log(2.0)
LOG_PI = math.log(math.pi)
LOG_2PI = math.log(2.0 * math.pi)
TWO_PI = 2.0 * math.pi

# Exact big-integer anchor paths are used up to this argument; factorials
# beyond it cost more than the extra accuracy is worth.
_EXACT_ANCHOR_CAP = 100_000.0


class ReprId(enum.Enum):
    """Closed registry of the log-gamma routes; serialized as the tag string."""

    FEAUX = "feaux"
    BINET1 = "binet1"
    BINET2 = "binet2"
    MALMSTEN = "malmsten"
    KUMMER = "kummer"
    REFERENCE = "reference"


def _log_factorial(k: int) -> float:
    # math.log accepts arbitrary-size ints, so this is exact up to one rounding
    return 0.0 if k < 2 else math.log(math.factorial(k))


def loggamma_reference(x: float) -> float:
    """log Gamma(x) for x > 0, relative error <= 1e-13.

    Positive integers take log((x-1)!) and half-integers take
    log[(2n)! sqrt(pi) / (4^n n!)] with exact big-integer factorials (one
    float rounding at the final log).  All other arguments use the C library
    lgamma, which is a few ulp on this range and independent of every
    integral representation in this package.
    """
    x = float(x)
    if not x > 0.0:
        raise DomainError(f"log Gamma reference needs x > 0, got {x}")
    if x <= _EXACT_ANCHOR_CAP:
        if x == math.floor(x):
            return _log_factorial(int(x) - 1)
        two_x = 2.0 * x
        if two_x == math.floor(two_x):
            n = (int(two_x) - 1) // 2
            num = math.factorial(2 * n)
            den = 4**n * math.factorial(n)
            return math.log(num) - math.log(den) + 0.5 * LOG_PI
    return math.lgamma(x)


def _sup_power_exp(p: float, m: float, t0: float) -> float:
    """sup over [t0, inf) of t**p * exp(-m*t), for p >= 0, m > 0."""
    t_star = max(t0, p / m)
    return t_star**p * math.exp(-m * t_star)


# ---------------------------------------------------------------------------
# Feaux: log Gamma(x+1) = Int_0^inf [x e^-t + ((1+t)^(-x-1) - (1+t)^-1)/log(1+t)] dt/t
# ---------------------------------------------------------------------------

def feaux_integrand_spec(x: float) -> IntegrandSpec:
    """Integrand bundle for the Feaux representation of log Gamma(x+1).

    Origin series (L = log(1+t) = t - t^2/2 + ...):
        ((1+t)^(-x-1) - (1+t)^(-1))/L = e^-L expm1(-xL)/L
                                      = -x + (x^2/2 + x) L + O(L^2)
        x e^-t                        =  x - x t + O(t^2)
    so the bracket is (x^2/2) t + O(t^2) and the integrand tends to x^2/2.

    Tail: the power-ratio term is bounded by t^(x-2)/log 3 when -1 < x < 0
    and by 1/(t^2 log 3) when x >= 0; the exponential term by
    0.54|x| t^-alpha on t >= 2.  Hence alpha = 2 + min(x, 0).
    """

    def evaluate(t: float) -> float:
        ell = math.log1p(t)
        ratio = math.exp(-ell) * math.expm1(-x * ell) / ell
        return (x * math.exp(-t) + ratio) / t

    return IntegrandSpec(
        eval=evaluate,
        limit_at_zero=0.5 * x * x,
        tail_exponent=2.0 + min(x, 0.0),
        tail_coefficient=0.6 * abs(x) + 1.0,
        tail_start=2.0,
    )


def loggamma_feaux(x: float, abs_tol: float = DEFAULT_ABS_TOL) -> float:
    """log Gamma(x+1) by the Feaux integral, for x > -1."""
    x = float(x)
    if not x > -1.0:
        raise DomainError(f"Feaux integral needs x > -1, got {x}")
    result = integrate_semi_infinite(feaux_integrand_spec(x), abs_tol, DEFAULT_MAX_EVALS)
    if not result.converged:
        raise NonConvergenceError(
            f"Feaux integral at x={x} stopped at error {result.abs_error_est:.3e}"
        )
    return result.value


# ---------------------------------------------------------------------------
# First Binet: log Gamma(x) = (x-1/2) log x - x + log(2 pi)/2
#                             + Int_0^inf (1/2 - 1/t + 1/(e^t-1)) e^(-tx)/t dt
# ---------------------------------------------------------------------------

_BINET_KERNEL_SWITCH = 0.1


def _binet_kernel(t: float) -> float:
    # 1/2 - 1/t + 1/(e^t - 1).  Below the switch the two large terms cancel
    # catastrophically in binary64, so use the Bernoulli series
    # t/12 - t^3/720 + t^5/30240 - t^7/1209600 + O(t^9); truncation < 3e-17
    # at t = 0.1.
    if t < _BINET_KERNEL_SWITCH:
        t2 = t * t
        return t * (
            1.0 / 12.0
            + t2 * (-1.0 / 720.0 + t2 * (1.0 / 30240.0 - t2 / 1209600.0))
        )
    return 0.5 - 1.0 / t + math.exp(-t) / (-math.expm1(-t))


def binet1_integrand_spec(x: float) -> IntegrandSpec:
    """Integrand bundle for the first Binet correction integral.

    The kernel is t/12 + O(t^3), so the integrand tends to 1/12 regardless
    of x.  The kernel stays in (0, 1/2), giving |integrand| <= e^(-xt)/(2t)
    and the alpha = 3 certificate K = sup_{t>=1} t^2 e^(-xt) / 2.
    """

    def evaluate(t: float) -> float:
        return _binet_kernel(t) * math.exp(-x * t) / t

    return IntegrandSpec(
        eval=evaluate,
        limit_at_zero=1.0 / 12.0,
        tail_exponent=3.0,
        tail_coefficient=0.5 * _sup_power_exp(2.0, x, 1.0),
        tail_start=1.0,
    )


def loggamma_binet1(x: float, abs_tol: float = DEFAULT_ABS_TOL) -> float:
    """log Gamma(x) by the first Binet formula, for x > 0."""
    x = float(x)
    if not x > 0.0:
        raise DomainError(f"first Binet formula needs x > 0, got {x}")
    result = integrate_semi_infinite(binet1_integrand_spec(x), abs_tol, DEFAULT_MAX_EVALS)
    if not result.converged:
        raise NonConvergenceError(
            f"first Binet integral at x={x} stopped at error {result.abs_error_est:.3e}"
        )
    return (x - 0.5) * math.log(x) - x + 0.5 * LOG_2PI + result.value


# ---------------------------------------------------------------------------
# Second Binet: log Gamma(x) = (x-1/2) log x - x + log(2 pi)/2
#                              + 2 Int_0^inf arctan(t/x)/(e^(2 pi t)-1) dt
# ---------------------------------------------------------------------------

def binet2_integrand_spec(x: float) -> IntegrandSpec:
    """Integrand bundle for the second Binet correction integral (without the
    outer factor 2).

    arctan(t/x) ~ t/x and e^(2 pi t) - 1 ~ 2 pi t, so the integrand tends to
    1/(2 pi x).  |arctan| <= pi/2 and 1/(e^(2 pi t)-1) <= e^(-2 pi t)/(1-e^(-2 pi))
    for t >= 1 give an alpha = 6 certificate.
    """

    def evaluate(t: float) -> float:
        return math.atan(t / x) * math.exp(-TWO_PI * t) / (-math.expm1(-TWO_PI * t))

    big_c = 0.5 * math.pi / (1.0 - math.exp(-TWO_PI))
    return IntegrandSpec(
        eval=evaluate,
        limit_at_zero=1.0 / (TWO_PI * x),
        tail_exponent=6.0,
        tail_coefficient=big_c * _sup_power_exp(6.0, TWO_PI, 1.0),
        tail_start=1.0,
    )


def loggamma_binet2(x: float, abs_tol: float = DEFAULT_ABS_TOL) -> float:
    """log Gamma(x) by the second Binet formula, for x > 0."""
    x = float(x)
    if not x > 0.0:
        raise DomainError(f"second Binet formula needs x > 0, got {x}")
    result = integrate_semi_infinite(
        binet2_integrand_spec(x), 0.5 * abs_tol, DEFAULT_MAX_EVALS
    )
    if not result.converged:
        raise NonConvergenceError(
            f"second Binet integral at x={x} stopped at error {result.abs_error_est:.3e}"
        )
    return (x - 0.5) * math.log(x) - x + 0.5 * LOG_2PI + 2.0 * result.value


# ---------------------------------------------------------------------------
# Malmsten: log Gamma(x) = Int_0^inf [(x-1) e^-t + (e^(-xt) - e^-t)/(1-e^-t)] dt/t
# ---------------------------------------------------------------------------

def malmsten_integrand_spec(x: float) -> IntegrandSpec:
    """Integrand bundle for the Malmsten representation of log Gamma(x).

    Origin series: (e^(-xt) - e^-t)/(1 - e^-t) = (1-x) + x(x-1) t/2 + O(t^2)
    and (x-1) e^-t = (x-1)(1 - t + ...), so the bracket is
    (x-1)(x-2) t/2 + O(t^2) and the integrand tends to (x-1)(x-2)/2.

    Tail: |bracket| <= (|x-1| + 2/(1-e^-1)) e^(-mt) with m = min(x, 1) for
    t >= 1, folded into an alpha = 3 certificate.
    """

    def evaluate(t: float) -> float:
        ratio = math.exp(-t) * math.expm1(-(x - 1.0) * t) / (-math.expm1(-t))
        return ((x - 1.0) * math.exp(-t) + ratio) / t

    m = min(x, 1.0)
    big_c = abs(x - 1.0) + 2.0 / (1.0 - math.exp(-1.0))
    return IntegrandSpec(
        eval=evaluate,
        limit_at_zero=0.5 * (x - 1.0) * (x - 2.0),
        tail_exponent=3.0,
        tail_coefficient=big_c * _sup_power_exp(2.0, m, 1.0),
        tail_start=1.0,
    )


def loggamma_malmsten(x: float, abs_tol: float = DEFAULT_ABS_TOL) -> float:
    """log Gamma(x) by the Malmsten integral, for x > 0."""
    x = float(x)
    if not x > 0.0:
        raise DomainError(f"Malmsten integral needs x > 0, got {x}")
    result = integrate_semi_infinite(malmsten_integrand_spec(x), abs_tol, DEFAULT_MAX_EVALS)
    if not result.converged:
        raise NonConvergenceError(
            f"Malmsten integral at x={x} stopped at error {result.abs_error_est:.3e}"
        )
    return result.value


# ---------------------------------------------------------------------------
# Kummer: on 0 < x < 1,
#   log Gamma(x) = log(pi)/2 - log(sin(pi x))/2
#                  + (1/2) Int_0^inf [sinh((1/2-x)t)/sinh(t/2) - (1-2x) e^-t] dt/t
# ---------------------------------------------------------------------------

def kummer_integrand_spec(x: float) -> IntegrandSpec:
    """Integrand bundle for the Kummer representation, valid on 0 < x < 1.

    sinh(at)/sinh(t/2) with a = 1/2 - x is even in t:
        (2a)(1 + (a^2 - 1/4) t^2/6 + O(t^4)),
    while (1-2x) e^-t = 2a (1 - t + ...), so the bracket is
    2a t + O(t^2) and the integrand tends to 1 - 2x.  (It vanishes
    identically at x = 1/2.)

    Tail: |sinh(at)/sinh(t/2)| <= e^((|a|-1/2)t)/(1-e^-1) for t >= 1 and the
    subtracted term is bounded by e^-t, giving an alpha = 3 certificate with
    decay rate m = min(x, 1-x).
    """
    a = 0.5 - x

    def evaluate(t: float) -> float:
        if a == 0.0:
            return 0.0
        aa = abs(a)
        ratio = math.exp((aa - 0.5) * t) * math.expm1(-2.0 * aa * t) / math.expm1(-t)
        if a < 0.0:
            ratio = -ratio
        return (ratio - 2.0 * a * math.exp(-t)) / t

    m = min(x, 1.0 - x)
    big_c = 1.0 / (1.0 - math.exp(-1.0)) + 1.0
    return IntegrandSpec(
        eval=evaluate,
        limit_at_zero=1.0 - 2.0 * x,
        tail_exponent=3.0,
        tail_coefficient=big_c * _sup_power_exp(2.0, m, 1.0),
        tail_start=1.0,
    )


def loggamma_kummer(x: float, abs_tol: float = DEFAULT_ABS_TOL) -> float:
    """log Gamma(x) by the Kummer integral.

    The integral form is valid on the strip 0 < x < 1; x >= 1 reduces through
    log Gamma(x) = log Gamma(frac) + sum log(frac + k) with frac = x - floor(x),
    and exact positive integers return log((x-1)!) directly.
    """
    x = float(x)
    if not x > 0.0:
        raise DomainError(f"Kummer integral needs x > 0, got {x}")
    if x >= 1.0:
        if x == math.floor(x) and x <= _EXACT_ANCHOR_CAP:
            return _log_factorial(int(x) - 1)
        shift = int(math.floor(x))
        frac = x - shift
        value = loggamma_kummer(frac, abs_tol)
        for k in range(shift):
            value += math.log(frac + k)
        return value
    result = integrate_semi_infinite(kummer_integrand_spec(x), abs_tol, DEFAULT_MAX_EVALS)
    if not result.converged:
        raise NonConvergenceError(
            f"Kummer integral at x={x} stopped at error {result.abs_error_est:.3e}"
        )
    return 0.5 * LOG_PI - 0.5 * math.log(math.sin(math.pi * x)) + 0.5 * result.value


def loggamma_by_tag(
    tag: ReprId | str, x: float, abs_tol: float = DEFAULT_ABS_TOL
) -> float:
    """Evaluate log Gamma(x) by the named route.

    Normalizes the Feaux convention: that representation natively computes
    log Gamma(x+1), so it is invoked at x-1 here (requiring x > 0 like the
    others).
    """
    tag = ReprId(tag) if not isinstance(tag, ReprId) else tag
    if tag is ReprId.REFERENCE:
        return loggamma_reference(x)
    if tag is ReprId.FEAUX:
        if not x > 0.0:
            raise DomainError(f"log Gamma needs x > 0, got {x}")
        return loggamma_feaux(x - 1.0, abs_tol)
    if tag is ReprId.BINET1:
        return loggamma_binet1(x, abs_tol)
    if tag is ReprId.BINET2:
        return loggamma_binet2(x, abs_tol)
    if tag is ReprId.MALMSTEN:
        return loggamma_malmsten(x, abs_tol)
    return loggamma_kummer(x, abs_tol)


# ---------------------------------------------------------------------------
# Identity residuals
# ---------------------------------------------------------------------------

def duplication_residual(x: float) -> float:
    """Signed defect of the Legendre duplication identity
    log Gamma(x) + log Gamma(x+1/2) - [(1-2x) log 2 + log(pi)/2 + log Gamma(2x)],
    every term through the reference; exactly zero in real arithmetic.
    """
    x = float(x)
    if not x > 0.0:
        raise DomainError(f"duplication residual needs x > 0, got {x}")
    lhs = loggamma_reference(x) + loggamma_reference(x + 0.5)
    rhs = (1.0 - 2.0 * x) * LOG_2 + 0.5 * LOG_PI + loggamma_reference(2.0 * x)
    return lhs - rhs


def raabe_residual(a: float, abs_tol: float = 1e-11) -> float:
    """|Int_a^(a+1) log Gamma(x) dx - (log(2 pi)/2 + a log a - a)| with the
    integral evaluated adaptively from the reference."""
    a = float(a)
    if not a > 0.0:
        raise DomainError(f"Raabe residual needs a > 0, got {a}")
    quad = integrate_finite(loggamma_reference, a, a + 1.0, abs_tol, DEFAULT_MAX_EVALS)
    if not quad.converged:
        raise NonConvergenceError(
            f"Raabe integral at a={a} stopped at error {quad.abs_error_est:.3e}"
        )
    rhs = 0.5 * LOG_2PI + a * math.log(a) - a
    return abs(quad.value - rhs)
