"""Lower bound for the symmetric-square L-value at the edge.

Lemma 4 of the certified chain: for symmetric-square conductor n2 >= 142,

    L(Sym^2, 1) >= 0.033 / log(n2)

(in the motivic normalization with functional-equation symmetry
s -> 1-s).  The proof smooths the Dirichlet series with exp(-n/X) at
X = (4000000 n2)^(50/49), shifts the Mellin contour, and needs a handful
of explicit constants; certify_* recomputes each one.  A truncated Euler
product over good primes provides a non-rigorous sanity estimate of the
actual L-value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .curves import CurveModel, derive_invariants, trace_of_frobenius, POINT_COUNT_CUTOFF
from .specfun import ZETA_3_HALVES, lemma4_error_integral
from .zerofree import MIN_CERTIFIED_N2, SymPowerConductors, Waypoint, _wp

__all__ = [
    "Lemma4Cert",
    "LineBounds",
    "symsq_lower_bound",
    "rademacher_line_bounds",
    "lemma4_certify",
    "symsq_value_estimate",
]


def _n2_value(n2: int | SymPowerConductors) -> int:
    value = n2.n2 if isinstance(n2, SymPowerConductors) else int(n2)
    if value < MIN_CERTIFIED_N2:
        raise ValueError(f"n2 = {value} is below the certified minimum {MIN_CERTIFIED_N2}")
    return value


def symsq_lower_bound(n2: int | SymPowerConductors) -> float:
    """The certified lower bound 0.033/log(n2), n2 >= 142."""
    return 0.033 / math.log(_n2_value(n2))


@dataclass(frozen=True)
class LineBounds:
    """Convexity bounds on the half line used by the error estimate."""

    symsq_halfline: float  # |L(Sym^2, 1/2+it)| <= zeta(3/2)^3 sqrt(n2/8pi^3) |5/2+it|^(3/2)
    zeta_halfline: float  # |zeta(1/2+it)|    <= zeta(3/2)/sqrt(2pi) sqrt(9/4+t^2)


def rademacher_line_bounds(t: float, n2: int) -> LineBounds:
    """Phragmen-Lindelof (Rademacher) bounds at 1/2 + it."""
    symsq = (
        ZETA_3_HALVES**3
        * math.sqrt(n2 / (8.0 * math.pi**3))
        * (6.25 + t * t) ** 0.75
    )
    zeta = ZETA_3_HALVES / math.sqrt(2.0 * math.pi) * math.sqrt(2.25 + t * t)
    return LineBounds(symsq_halfline=symsq, zeta_halfline=zeta)


@dataclass(frozen=True)
class Lemma4Cert:
    n2: int
    b: float
    log_x: float
    x_power: float  # X^(1-b)
    gamma_1mb: float  # Gamma(1-b), computed
    gamma_bound: float  # 25 log n2
    error_integral: float
    e_const: float  # error constant (20) the integral must support
    lower_bound: float  # 0.033/log n2
    chain_value: float  # reconstructed lower bound for L(Sym^2, 1)
    waypoints: tuple[Waypoint, ...]
    overall_pass: bool
    notes: tuple[str, ...]


def lemma4_certify(n2: int | SymPowerConductors) -> Lemma4Cert:
    """Certify every explicit constant in the L-value chain.

    With b = 1 - 1/(25 log n2) and X = (4000000 n2)^(50/49):
    b >= 0.99, log X <= 4.2 log n2, X^(1-b) <= 1.19,
    Gamma(1-b) <= 25 log n2, the smoothing-error integral is below 62
    (hence below 20 pi, validating the error constant 20), and the
    reconstructed chain

        (e^(-1e-6) - 0.01) / (X^(1-b) Gamma(1-b)) >= 0.033/log n2

    holds with nonnegative slack.
    """
    n2v = _n2_value(n2)
    log_n2 = math.log(n2v)
    b = 1.0 - 1.0 / (25.0 * log_n2)
    log_x = (50.0 / 49.0) * math.log(4_000_000.0 * n2v)
    x_power = math.exp(log_x * (1.0 - b))
    gamma_1mb = math.gamma(2.0 - b) / (1.0 - b)
    gamma_bound = 25.0 * log_n2
    integral = lemma4_error_integral()
    lower = 0.033 / log_n2
    # e^(-1/X) >= e^(-1e-6) since X >= 1e6, and 20 sqrt(n2)/X^0.49 = 0.01
    # exactly by the choice of X.
    chain_value = (math.exp(-1e-6) - 0.01) / (x_power * gamma_1mb)

    waypoints = (
        _wp("b_lower", b, ">=", 0.99),
        _wp("log_x", log_x, "<=", 4.2 * log_n2),
        _wp("x_power", x_power, "<=", 1.19),
        _wp("gamma_one_minus_b", gamma_1mb, "<=", gamma_bound),
        _wp("error_integral", integral.value, "<", 62.0),
        _wp("error_integral_quad_error", integral.abs_error_estimate, "<=", 1e-6),
        _wp("error_constant", integral.value / math.pi, "<=", 20.0),
        _wp("chain_slack", chain_value - lower, ">=", 0.0),
    )
    return Lemma4Cert(
        n2=n2v,
        b=b,
        log_x=log_x,
        x_power=x_power,
        gamma_1mb=gamma_1mb,
        gamma_bound=gamma_bound,
        error_integral=integral.value,
        e_const=20.0,
        lower_bound=lower,
        chain_value=chain_value,
        waypoints=waypoints,
        overall_pass=all(w.passed for w in waypoints),
        notes=(
            "nonpositivity of the ordinary part is applied at the smoothing "
            "exponent b itself (the product L-function has no zeros in [b, 1))",
        ),
    )


def symsq_value_estimate(curve: CurveModel, prime_cutoff: int) -> float:
    """NON-RIGOROUS truncated Euler product for L(Sym^2, 1).

    Product over good primes p <= prime_cutoff of
    [(1 - alpha^2/p^2)(1 - 1/p)(1 - beta^2/p^2)]^(-1) with alpha, beta the
    Frobenius roots (alpha+beta = a_p, alpha*beta = p); this is the local
    factor at the symmetry-normalized edge point.  Primes dividing the
    conductor or the model discriminant are skipped.  Sanity only; no
    truncation error control.
    """
    if prime_cutoff > POINT_COUNT_CUTOFF:
        raise ValueError("prime_cutoff exceeds the point-counting cutoff")
    inv = derive_invariants(curve)
    bad = abs(inv.disc) * (curve.conductor or 1)
    product = 1.0
    sieve = bytearray([1]) * (prime_cutoff + 1)
    for p in range(2, prime_cutoff + 1):
        if not sieve[p]:
            continue
        for m in range(p * p, prime_cutoff + 1, p):
            sieve[m] = 0
        if bad % p == 0:
            continue
        a_p = trace_of_frobenius(curve, p)
        # (1 - a^2/p^2)(1 - b^2/p^2) = 1 - (a_p^2 - 2p)/p^2 + 1/p^2
        p2 = float(p * p)
        sym_part = 1.0 - (a_p * a_p - 2.0 * p) / p2 + 1.0 / p2
        product /= sym_part * (1.0 - 1.0 / p)
    return product
