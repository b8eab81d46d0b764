"""Certify every explicit constant behind the degree bounds.

Runs the three zero-free-region contradiction chains, the L-value chain,
and the shared machinery (cosine polynomials, the quintic weight
optimum), printing each waypoint against its certified bound.  This is
the library view of what `moddeg verify-lemmas` prints.
"""

from fractions import Fraction

from moddeg import (
    certify_cm_qi,
    certify_cm_zeta3,
    certify_noncm,
    lemma4_certify,
    quintic_beta_optimum,
    trig_poly_expand,
)
from moddeg.zerofree import cos_poly_min_on_grid

N2 = 142  # the smallest certified symmetric-square conductor


def show(case_name, waypoints):
    print(case_name)
    for wp in waypoints:
        bound = f"[{wp.bound[0]:g}, {wp.bound[1]:g}]" if isinstance(wp.bound, tuple) else f"{wp.bound:g}"
        print(f"   {'ok ' if wp.passed else 'BAD'} {wp.name:<24} {wp.value:+.9g}  {wp.op} {bound}")
    print()


for cert in (certify_noncm(N2), certify_cm_qi(N2), certify_cm_zeta3(N2)):
    show(f"zero-free region, case {cert.case_tag} (n2 = {N2}):", cert.waypoints)
    for note in cert.notes:
        print(f"   note: {note}")
        print()

l4 = lemma4_certify(N2)
show(f"L-value lower bound 0.033/log(n2) (n2 = {N2}):", l4.waypoints)
print(f"   reconstructed chain value {l4.chain_value:.8f} >= {l4.lower_bound:.8f}")
print()

# the cosine polynomial machinery of the Q(zeta3) case
coeffs = trig_poly_expand(Fraction(5, 2))
print(f"(1+cos t)(1+(5/2)cos t)^2 = {coeffs[0]} + {coeffs[1]} cos t + {coeffs[2]} cos 2t + {coeffs[3]} cos 3t")
print(f"   minimum on a 10^4-point grid: {cos_poly_min_on_grid(coeffs):.3e} (nonnegative)")
quintic = quintic_beta_optimum()
print(f"   optimal weight beta* = {quintic.beta_star:.9f} (5/2 loses little)")
