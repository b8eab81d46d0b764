"""Exact Weierstrass-model arithmetic.

Integer b/c-invariants and the discriminant, roots of the 2-torsion
polynomial ``4x^3 + b2 x^2 + 2 b4 x + b6`` (the polynomial appearing on
the right side of ``y^2 = 4x^3 + b2 x^2 + 2 b4 x + b6``), naive point
counts over small prime fields, and CM detection by rational j-invariant.

The conductor is always an input, never computed; reports downstream
carry a "conductor: supplied" provenance.  Models are used exactly as
given (no re-minimalization): every derived quantity, in particular the
discriminant feeding the area bound, belongs to the supplied model.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "SingularCurveError",
    "CurveModel",
    "Invariants",
    "RootData",
    "CM_J_INVARIANTS",
    "POINT_COUNT_CUTOFF",
    "derive_invariants",
    "two_torsion_roots",
    "trace_of_frobenius",
    "is_cm",
    "is_prime",
]


class SingularCurveError(ValueError):
    """Model has vanishing discriminant."""


# The thirteen rational CM j-invariants (class number one orders), keyed by
# the discriminant of the order.  Every rational CM curve has one of these.
CM_J_INVARIANTS = {
    -3: 0,
    -4: 1728,
    -7: -3375,
    -8: 8000,
    -11: -32768,
    -12: 54000,
    -16: 287496,
    -19: -884736,
    -27: -12288000,
    -28: 16581375,
    -43: -884736000,
    -67: -147197952000,
    -163: -262537412640768000,
}

# Naive point counting is O(p); keep it at desk scale.
POINT_COUNT_CUTOFF = 10**6


@dataclass(frozen=True)
class CurveModel:
    """Integral Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.

    The conductor is optional so that purely model-level quantities
    (invariants, periods) can be computed without one; every report-level
    operation requires it.
    """

    a1: int
    a2: int
    a3: int
    a4: int
    a6: int
    conductor: int | None = None
    label: str | None = None
    known_degree: int | None = None
    n2: int | None = None

    def __post_init__(self) -> None:
        for name in ("a1", "a2", "a3", "a4", "a6"):
            v = getattr(self, name)
            if not isinstance(v, int):
                raise ValueError(f"{name} must be an exact integer, got {v!r}")
        if self.conductor is not None and self.conductor < 1:
            raise ValueError("conductor must be a positive integer")
        if self.known_degree is not None and self.known_degree < 1:
            raise ValueError("known_degree must be a positive integer")
        if self.n2 is not None and self.n2 < 1:
            raise ValueError("n2 must be a positive integer")

    @property
    def a_invariants(self) -> tuple[int, int, int, int, int]:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)


@dataclass(frozen=True)
class Invariants:
    """Derived integer invariants of a Weierstrass model.

    Satisfies 4*b8 = b2*b6 - b4^2 and 1728*disc = c4^3 - c6^2 exactly.
    """

    b2: int
    b4: int
    b6: int
    b8: int
    c4: int
    c6: int
    disc: int
    abs_disc: int
    disc_positive: bool
    j_num: int
    j_den: int


@dataclass(frozen=True)
class RootData:
    """Roots of the 2-torsion polynomial 4x^3 + b2 x^2 + 2 b4 x + b6.

    kind == "three_real": e1 > e2 > e3 (positive discriminant).
    kind == "one_real":   real root r, complex pair with imaginary part z > 0,
    and r_tilde = r + b2/12 (the real root of the depressed cubic).
    """

    kind: str
    e1: float | None = None
    e2: float | None = None
    e3: float | None = None
    r: float | None = None
    z: float | None = None
    r_tilde: float | None = None


def derive_invariants(curve: CurveModel) -> Invariants:
    """Compute b2, b4, b6, b8, c4, c6, disc and the j-invariant exactly."""
    a1, a2, a3, a4, a6 = curve.a_invariants
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
    c4 = b2 * b2 - 24 * b4
    c6 = -b2**3 + 36 * b2 * b4 - 216 * b6
    disc = -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6
    if disc == 0:
        raise SingularCurveError("singular curve: discriminant is zero")
    j = Fraction(c4**3, disc)
    return Invariants(
        b2=b2,
        b4=b4,
        b6=b6,
        b8=b8,
        c4=c4,
        c6=c6,
        disc=disc,
        abs_disc=abs(disc),
        disc_positive=disc > 0,
        j_num=j.numerator,
        j_den=j.denominator,
    )


def _torsion_poly(inv: Invariants, x: float) -> float:
    return ((4.0 * x + inv.b2) * x + 2.0 * inv.b4) * x + inv.b6


def _torsion_poly_deriv(inv: Invariants, x: float) -> float:
    return (12.0 * x + 2.0 * inv.b2) * x + 2.0 * inv.b4


def _newton_polish(inv: Invariants, x: float, steps: int = 2) -> float:
    for _ in range(steps):
        fp = _torsion_poly_deriv(inv, x)
        if fp == 0.0:
            break
        x -= _torsion_poly(inv, x) / fp
    return x


def two_torsion_roots(inv: Invariants) -> RootData:
    """Solve 4x^3 + b2 x^2 + 2 b4 x + b6 = 0.

    Closed form (trigonometric for three real roots, Cardano otherwise)
    followed by a Newton polish against the exact integer coefficients;
    the roots of nondegenerate 2-torsion cubics are well separated so this
    is robust in double precision.
    """
    # Depressed form: with y = x + b2/12 the cubic is y^3 - (c4/48) y - c6/864.
    p = -inv.c4 / 48.0
    q = -inv.c6 / 864.0
    shift = inv.b2 / 12.0
    if inv.disc_positive:
        # Three real roots; disc > 0 forces p < 0.
        m = 2.0 * math.sqrt(-p / 3.0)
        arg = 3.0 * q / (p * m)
        arg = min(1.0, max(-1.0, arg))
        phi = math.acos(arg)
        ys = [m * math.cos((phi - 2.0 * math.pi * k) / 3.0) for k in range(3)]
        roots = sorted((_newton_polish(inv, y - shift) for y in ys), reverse=True)
        return RootData(kind="three_real", e1=roots[0], e2=roots[1], e3=roots[2])
    # One real root: Cardano.
    half_q = q / 2.0
    rad = math.sqrt(half_q * half_q + (p / 3.0) ** 3)
    y = math.copysign(abs(-half_q + rad) ** (1.0 / 3.0), -half_q + rad) + math.copysign(
        abs(-half_q - rad) ** (1.0 / 3.0), -half_q - rad
    )
    r = _newton_polish(inv, y - shift, steps=3)
    # Quadratic cofactor of (x - r): x^2 + ux + v.
    u = (inv.b2 + 4.0 * r) / 4.0
    v = (2.0 * inv.b4 + r * (inv.b2 + 4.0 * r)) / 4.0
    z = math.sqrt(v - u * u / 4.0)
    return RootData(kind="one_real", r=r, z=z, r_tilde=r + inv.b2 / 12.0)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def trace_of_frobenius(curve: CurveModel, p: int) -> int:
    """a_p = p + 1 - #E(F_p) by exhaustive point enumeration.

    Requires p prime, p below the counting cutoff, and good reduction
    (p does not divide the discriminant of the supplied model).
    """
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    if p > POINT_COUNT_CUTOFF:
        raise ValueError(f"p = {p} exceeds the point-counting cutoff {POINT_COUNT_CUTOFF}")
    inv = derive_invariants(curve)
    if inv.disc % p == 0:
        raise ValueError(f"bad reduction: {p} divides the discriminant")
    if p == 2:
        a1, a2, a3, a4, a6 = curve.a_invariants
        count = 1  # point at infinity
        for x in range(2):
            for y in range(2):
                lhs = y * y + a1 * x * y + a3 * y
                rhs = x**3 + a2 * x * x + a4 * x + a6
                if (lhs - rhs) % 2 == 0:
                    count += 1
        a_p = 2 + 1 - count
    else:
        # Completing the square turns the fibre count over x into
        # 1 + chi(4x^3 + b2 x^2 + 2 b4 x + b6) with chi the Legendre symbol.
        chi = bytearray(p)
        for i in range(1, p):
            chi[i * i % p] = 1
        b2, b4, b6 = inv.b2 % p, inv.b4 % p, inv.b6 % p
        total = 0
        for x in range(p):
            v = (((4 * x + b2) * x + 2 * b4) * x + b6) % p
            if v:
                total += 1 if chi[v] else -1
        a_p = -total
    if a_p * a_p > 4 * p:
        raise ArithmeticError(f"point count violates the Hasse bound at p = {p}")
    return a_p


def is_cm(inv: Invariants) -> bool:
    """True iff j = c4^3/disc is one of the thirteen rational CM j-invariants."""
    return inv.j_den == 1 and inv.j_num in set(CM_J_INVARIANTS.values())
