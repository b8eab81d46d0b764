"""Special functions needed by the certification chain.

Digamma and real zeta to near machine accuracy, the Gamma modulus on the
critical line, and the smoothing-error integral of Lemma 4,

    zeta(3/2)^4/(4 pi^2) * int_0^inf (25/4+t^2)^(3/4) sqrt(9/4+t^2)
        * 2 (1+t^2)^(1/200) / sqrt(1+4t^2) * sqrt(pi sech(pi t)) dt,

whose value must stay below 62 (equivalently below 20*pi after dividing
by pi) for the error constant 20 in the L-value chain to be valid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.integrate import quad

__all__ = [
    "EULER_GAMMA",
    "ZETA_3_HALVES",
    "QuadratureResult",
    "digamma",
    "zeta_real",
    "abs_gamma_half_line",
    "error_integrand",
    "error_integral_tail_bound",
    "lemma4_error_integral",
]

EULER_GAMMA = 0.57721566490153286061

# zeta(3/2), frozen to 20 significant digits.
ZETA_3_HALVES = 2.6123753486854883440

# B_{2k}/(2k) for the digamma asymptotic series, k = 1..7 (through B14).
_DIGAMMA_SERIES = (
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
)

# B_{2k}/(2k)! for the Euler-Maclaurin zeta tail, k = 1..7.
_ZETA_EM = (
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -691.0 / 1307674368000.0,
    1.0 / 74724249600.0,
)


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    abs_error_estimate: float
    truncation_point: float


def digamma(x: float) -> float:
    """Digamma for x > 0: upward recurrence to x >= 10, then the
    asymptotic series with Bernoulli terms through B14."""
    if not x > 0.0:
        raise ValueError("digamma requires x > 0")
    acc = 0.0
    while x < 10.0:
        acc -= 1.0 / x
        x += 1.0
    inv2 = 1.0 / (x * x)
    series = 0.0
    power = inv2
    for coeff in _DIGAMMA_SERIES:
        series += coeff * power
        power *= inv2
    return acc + math.log(x) - 0.5 / x - series


def zeta_real(s: float, n_terms: int = 25) -> float:
    """Riemann zeta on the real axis, s > 1, by Euler-Maclaurin."""
    if not s > 1.0:
        raise ValueError("zeta_real requires s > 1")
    n = n_terms
    total = sum(k ** (-s) for k in range(1, n))
    total += 0.5 * n ** (-s) + n ** (1.0 - s) / (s - 1.0)
    rising = s
    power = n ** (-s - 1.0)
    for k, coeff in enumerate(_ZETA_EM, start=1):
        total += coeff * rising * power
        rising *= (s + 2 * k - 1) * (s + 2 * k)
        power /= n * n
    return total


def abs_gamma_half_line(t: float) -> float:
    """|Gamma(1/2 + it)| = sqrt(pi * sech(pi t)); even in t, overflow safe."""
    at = abs(t)
    # sech(pi t) = 2 e^{-pi t} / (1 + e^{-2 pi t})
    sech = 2.0 * math.exp(-math.pi * at) / (1.0 + math.exp(-2.0 * math.pi * at))
    return math.sqrt(math.pi * sech)


_ERROR_PREFACTOR = ZETA_3_HALVES**4 / (4.0 * math.pi**2)
_ERROR_TRUNCATION = 40.0


def error_integrand(t: float) -> float:
    """Integrand of the smoothing-error integral, prefactor included.

    (25/4 + t^2)^(3/4) is |5/2 + it|^(3/2), the convexity bound's growth
    on the half line.
    """
    poly = (
        (6.25 + t * t) ** 0.75
        * math.sqrt(2.25 + t * t)
        * 2.0
        * (1.0 + t * t) ** 0.005
        / math.sqrt(1.0 + 4.0 * t * t)
    )
    return _ERROR_PREFACTOR * poly * abs_gamma_half_line(t)


def error_integral_tail_bound(t0: float) -> float:
    """Upper bound for the integral of error_integrand over [t0, inf).

    For t >= 10 the integrand is below prefactor * 2.6 * e^{-1.3 t}:
    the algebraic factors are at most 2.6 t^{1.51} and
    t^{1.51} e^{-pi t/2} <= e^{-1.3 t} there.
    """
    if t0 < 10.0:
        raise ValueError("tail bound only valid for t0 >= 10")
    return _ERROR_PREFACTOR * 2.6 * math.exp(-1.3 * t0) / 1.3


def lemma4_error_integral(epsabs: float = 1e-10, epsrel: float = 1e-12) -> QuadratureResult:
    """Evaluate the smoothing-error integral on [0, 40] plus an analytic
    tail bound; the tail beyond 40 is below 1e-20."""
    value, err = quad(error_integrand, 0.0, _ERROR_TRUNCATION, epsabs=epsabs, epsrel=epsrel, limit=200)
    tail = error_integral_tail_bound(_ERROR_TRUNCATION)
    result = QuadratureResult(
        value=value + tail,
        abs_error_estimate=err + tail,
        truncation_point=_ERROR_TRUNCATION,
    )
    if not result.value > 0.0 or not math.isfinite(result.value):
        raise ArithmeticError("quadrature failed to produce a finite positive value")
    return result
