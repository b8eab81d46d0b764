"""Arithmetic-geometric mean and fundamental-parallelogram areas.

The area Omega of the fundamental parallelogram of a real elliptic curve
is the real period multiplied by the imaginary part of the imaginary
period; both periods are AGM values of simple root expressions.  This
module computes Omega for either discriminant sign and certifies the
library's Lemma 1,

    1 / Omega  >=  D^(1/6) / 14.045,        D = |disc|,

together with the two extremal constants behind it:

* positive discriminant, with t = (e1-e2)/(e1-e3) in (0,1):

      1/Omega = (e1-e3) agm(1, sqrt(t)) agm(1, sqrt(1-t)) / pi^2
              >= D^(1/6) agm(1, 1/sqrt(2))^2 / pi^2,

  the quotient being minimised at t = 1/2;

* negative discriminant, with c = r_tilde / Z:

      1/Omega = D^(1/6) (1 + 9c^2/4)^(1/6) M(m+(c)) M(m-(c)) / pi^2,
      M(x) = agm(1, x),   m+-(c) = sqrt(1/2 +- 3c / sqrt(16 + 36 c^2)),

  minimised at c = +-sqrt(4/3).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .curves import Invariants, RootData, two_torsion_roots

__all__ = [
    "AGM_TOL",
    "AGM_MAX_ITER",
    "AREA_BOUND_DENOMINATOR",
    "PeriodData",
    "AreaBoundConstants",
    "Lemma1Check",
    "agm",
    "area_pos_disc",
    "area_neg_disc",
    "period_data",
    "lemma1_constants",
    "lemma1_check",
]

AGM_TOL = 1e-15
AGM_MAX_ITER = 64

# Certified denominator of Lemma 1; the true worst constant (the negative
# discriminant case) is just below it.
AREA_BOUND_DENOMINATOR = 14.045


@dataclass(frozen=True)
class PeriodData:
    """Area Omega with its two period factors.

    t_or_c is the shape parameter of the case: t = (e1-e2)/(e1-e3) for
    positive discriminant, c = r_tilde/Z for negative discriminant.
    """

    omega: float
    real_period: float
    imag_part: float
    inv_omega: float
    case_tag: str  # "pos_disc" | "neg_disc"
    t_or_c: float


@dataclass(frozen=True)
class AreaBoundConstants:
    """Worst-case constants pi^2 / (extremal AGM product) for the two cases."""

    k1: float  # positive discriminant, at t = 1/2
    k2: float  # negative discriminant, at c = sqrt(4/3)


@dataclass(frozen=True)
class Lemma1Check:
    inv_omega: float
    rhs: float
    ok: bool
    margin: float


def agm(x: float, y: float) -> float:
    """Arithmetic-geometric mean of two positive reals.

    Stops when |a - b| <= 1e-15 * a; quadratic convergence makes the
    64-iteration cap unreachable in practice.
    """
    if not (x > 0.0 and y > 0.0):
        raise ValueError("agm requires strictly positive arguments")
    a, b = float(x), float(y)
    if a < b:
        a, b = b, a
    for _ in range(AGM_MAX_ITER):
        a, b = (a + b) / 2.0, math.sqrt(a * b)
        if abs(a - b) <= AGM_TOL * a:
            break
    return (a + b) / 2.0


_CONSISTENCY_TOL = 1e-9  # generous guard; the two routes agree to ~1e-15


def area_pos_disc(e1: float, e2: float, e3: float) -> PeriodData:
    """Period data from the three ordered real roots e1 > e2 > e3."""
    if not (e1 > e2 > e3):
        raise ValueError("roots must satisfy e1 > e2 > e3")
    d12, d13, d23 = e1 - e2, e1 - e3, e2 - e3
    real_period = math.pi / agm(math.sqrt(d12), math.sqrt(d13))
    imag_part = math.pi / agm(math.sqrt(d23), math.sqrt(d13))
    omega = real_period * imag_part
    inv_omega = 1.0 / omega
    t = d12 / d13
    # 1 - t computed as d23/d13 so nothing cancels near t = 1
    closed = d13 * agm(1.0, math.sqrt(t)) * agm(1.0, math.sqrt(d23 / d13)) / math.pi**2
    if abs(closed - inv_omega) > _CONSISTENCY_TOL * inv_omega:
        raise ArithmeticError("period product and closed form disagree")
    return PeriodData(
        omega=omega,
        real_period=real_period,
        imag_part=imag_part,
        inv_omega=inv_omega,
        case_tag="pos_disc",
        t_or_c=t,
    )


def area_neg_disc(r: float, b2: int, b4: int) -> PeriodData:
    """Period data from the real root r of a one-real-root 2-torsion cubic.

    Uses A = 3r + b2/4 and B = sqrt(3r^2 + b2 r/2 + b4/2); the real period
    is 2 pi / agm(2 sqrt(B), sqrt(2B+A)) and the imaginary part is
    pi / agm(2 sqrt(B), sqrt(2B-A)).
    """
    b_sq = 3.0 * r * r + b2 * r / 2.0 + b4 / 2.0
    if b_sq <= 0.0:
        raise ValueError("B^2 <= 0: not a one-real-root 2-torsion cubic")
    r_tilde = r + b2 / 12.0
    z_sq = b_sq - (1.5 * r_tilde) ** 2
    # 4B^2 - A^2 = 4Z^2, so 2B > |A| is exactly Z^2 > 0
    if z_sq <= 0.0:
        raise ValueError("2B <= |A|: not a one-real-root 2-torsion cubic")
    z = math.sqrt(z_sq)
    c = r_tilde / z
    # (2B +- A)/(4B) = 1/2 +- 3c/sqrt(16+36c^2); the branch that vanishes
    # as |c| grows is rationalized, and both periods are scaled out of the
    # stable ratios via agm homogeneity (the raw differences 2B -+ A
    # cancel catastrophically for |c| beyond ~1e4).
    s = math.hypot(4.0, 6.0 * c)
    if c >= 0.0:
        plus = (s + 6.0 * c) / (2.0 * s)
        minus = 8.0 / (s * (s + 6.0 * c))
    else:
        plus = 8.0 / (s * (s - 6.0 * c))
        minus = (s - 6.0 * c) / (2.0 * s)
    agm_plus = agm(1.0, math.sqrt(plus))
    agm_minus = agm(1.0, math.sqrt(minus))
    sqrt_b = b_sq**0.25
    # real period 2 pi / agm(2 sqrt(B), sqrt(2B+A)) = pi/(sqrt(B) agm(1, sqrt(plus)))
    real_period = math.pi / (sqrt_b * agm_plus)
    # imaginary part pi / agm(2 sqrt(B), sqrt(2B-A))
    imag_part = math.pi / (2.0 * sqrt_b * agm_minus)
    omega = real_period * imag_part
    inv_omega = 1.0 / omega

    # Closed form in terms of D^(1/6) = 2 Z (1 + 9c^2/4)^(1/3).
    scale = 1.0 + 2.25 * c * c
    d_sixth = 2.0 * z * scale ** (1.0 / 3.0)
    closed = d_sixth * scale ** (1.0 / 6.0) * agm_plus * agm_minus / math.pi**2
    if abs(closed - inv_omega) > _CONSISTENCY_TOL * inv_omega:
        raise ArithmeticError("period product and closed form disagree")
    return PeriodData(
        omega=omega,
        real_period=real_period,
        imag_part=imag_part,
        inv_omega=inv_omega,
        case_tag="neg_disc",
        t_or_c=c,
    )


def period_data(inv: Invariants, roots: RootData | None = None) -> PeriodData:
    """Dispatch on the discriminant sign."""
    if roots is None:
        roots = two_torsion_roots(inv)
    if roots.kind == "three_real":
        return area_pos_disc(roots.e1, roots.e2, roots.e3)
    return area_neg_disc(roots.r, inv.b2, inv.b4)


def lemma1_constants() -> AreaBoundConstants:
    """The two extremal constants; max(k1, k2) <= 14.045."""
    k1 = math.pi**2 / agm(1.0, 1.0 / math.sqrt(2.0)) ** 2
    k2 = math.pi**2 / (
        4.0 ** (1.0 / 6.0)
        * agm(1.0, math.sqrt(0.5 + math.sqrt(3.0) / 4.0))
        * agm(1.0, math.sqrt(0.5 - math.sqrt(3.0) / 4.0))
    )
    return AreaBoundConstants(k1=k1, k2=k2)


def lemma1_check(inv: Invariants) -> Lemma1Check:
    """Check 1/Omega >= D^(1/6)/14.045 for the given model."""
    data = period_data(inv)
    rhs = inv.abs_disc ** (1.0 / 6.0) / AREA_BOUND_DENOMINATOR
    return Lemma1Check(
        inv_omega=data.inv_omega,
        rhs=rhs,
        ok=data.inv_omega >= rhs,
        margin=data.inv_omega - rhs,
    )
