"""moddeg: certified lower bounds on modular degrees of rational elliptic curves.

A numerical-analysis library that computes fundamental-parallelogram
areas via the AGM, certifies every explicit constant in the chain of
lemmas behind the degree bounds (area bound, zero-free regions for
symmetric-square L-functions, the L-value lower bound, local fudge
factors), and assembles per-curve lower bounds with consistency checks
against known modular degrees.
"""

__version__ = "0.1.0"

from .agm import (
    AreaBoundConstants,
    Lemma1Check,
    PeriodData,
    agm,
    area_neg_disc,
    area_pos_disc,
    lemma1_check,
    lemma1_constants,
    period_data,
)
from .bounds import (
    LinearBounds,
    Theorem1Bounds,
    Theorem2Bounds,
    crossover_check,
    degree_formula_bound,
    linear_bounds,
    theorem1,
    theorem2,
    theorem2_closed_form,
)
from .curves import (
    CM_J_INVARIANTS,
    CurveModel,
    Invariants,
    RootData,
    SingularCurveError,
    derive_invariants,
    is_cm,
    trace_of_frobenius,
    two_torsion_roots,
)
from .fudge import (
    FudgeFactor,
    PrimeProductBound,
    TwistGrowth,
    epsilon_p,
    fudge_factor_for,
    prime_product_bound,
    sixth_power_credit,
    twist_growth_check,
    u_p_special,
)
from .lvalue import (
    Lemma4Cert,
    LineBounds,
    lemma4_certify,
    rademacher_line_bounds,
    symsq_lower_bound,
    symsq_value_estimate,
)
from .report import CurveRecord, build_report, invariants_document, parse_record
from .specfun import (
    QuadratureResult,
    abs_gamma_half_line,
    digamma,
    lemma4_error_integral,
    zeta_real,
)
from .zerofree import (
    CertReport,
    QuinticOptimum,
    RegionConstants,
    SymPowerConductors,
    Waypoint,
    certify_cm_qi,
    certify_cm_zeta3,
    certify_noncm,
    cos_poly_min_on_grid,
    eta_smaller_root,
    quintic_beta_optimum,
    region_cm_qi,
    region_cm_zeta3,
    region_noncm,
    sym_power_conductors,
    trig_poly_expand,
)

__all__ = [name for name in dir() if not name.startswith("_")]
