import math

import pytest

from moddeg import CurveModel, derive_invariants, period_data
from moddeg.lvalue import (
    lemma4_certify,
    rademacher_line_bounds,
    symsq_lower_bound,
    symsq_value_estimate,
)
from moddeg.specfun import ZETA_3_HALVES

N2_LADDER = [142, 10**3, 10**6, 10**12, 10**18]


class TestSymsqLowerBound:
    def test_at_142(self):
        assert symsq_lower_bound(142) == pytest.approx(0.033 / math.log(142), rel=1e-15)
        assert symsq_lower_bound(142) == pytest.approx(0.0066590, abs=1e-6)

    def test_at_1000(self):
        assert symsq_lower_bound(1000) == pytest.approx(0.0047772, abs=1e-6)

    def test_precondition(self):
        with pytest.raises(ValueError):
            symsq_lower_bound(100)

    def test_strictly_decreasing(self):
        values = [symsq_lower_bound(n2) for n2 in N2_LADDER]
        assert all(b < a for a, b in zip(values, values[1:]))


class TestRademacherLineBounds:
    def test_at_zero(self):
        bounds = rademacher_line_bounds(0.0, 142)
        # independent re-derivation of the closed forms
        symsq = ZETA_3_HALVES**3 * math.sqrt(142 / (8 * math.pi**3)) * (2.5) ** 1.5
        zeta = ZETA_3_HALVES * 1.5 / math.sqrt(2 * math.pi)
        assert bounds.symsq_halfline == pytest.approx(symsq, rel=1e-12)
        assert bounds.zeta_halfline == pytest.approx(zeta, rel=1e-12)
        assert bounds.zeta_halfline == pytest.approx(1.5632, abs=1e-3)

    def test_monotone_in_t(self):
        ts = [0.0, 0.5, 1.0, 3.0, 10.0]
        for small, large in zip(ts, ts[1:]):
            lo = rademacher_line_bounds(small, 142)
            hi = rademacher_line_bounds(large, 142)
            assert hi.symsq_halfline >= lo.symsq_halfline
            assert hi.zeta_halfline >= lo.zeta_halfline

    def test_even_in_t(self):
        lo = rademacher_line_bounds(-2.0, 500)
        hi = rademacher_line_bounds(2.0, 500)
        assert lo == hi


class TestLemma4Certify:
    def test_at_142(self):
        cert = lemma4_certify(142)
        assert cert.overall_pass
        assert cert.b == pytest.approx(1.0 - 1.0 / (25.0 * math.log(142)), rel=1e-15)
        assert cert.b == pytest.approx(0.9919287, abs=1e-7)
        assert cert.b >= 0.99
        assert cert.log_x == pytest.approx(20.569, abs=1e-3)
        assert cert.log_x <= 4.2 * math.log(142)
        assert cert.x_power == pytest.approx(1.1806, abs=1e-3)
        assert cert.x_power <= 1.19
        assert cert.gamma_1mb <= cert.gamma_bound
        assert cert.error_integral < 62.0
        assert cert.chain_value >= cert.lower_bound

    def test_x_power_identity(self):
        for n2 in N2_LADDER:
            cert = lemma4_certify(n2)
            identity = math.exp(cert.log_x / (25.0 * math.log(n2)))
            assert cert.x_power == pytest.approx(identity, rel=1e-12)
            assert cert.x_power <= math.exp(4.2 / 25.0) <= 1.19

    def test_ladder_passes(self):
        for n2 in N2_LADDER:
            assert lemma4_certify(n2).overall_pass

    def test_margins_grow(self):
        small = lemma4_certify(142)
        large = lemma4_certify(10**9)
        assert large.x_power < small.x_power
        assert 4.2 * math.log(10**9) - large.log_x > 4.2 * math.log(142) - small.log_x

    def test_precondition(self):
        with pytest.raises(ValueError):
            lemma4_certify(141)


class TestEulerProductEstimate:
    CURVE = CurveModel(0, 0, 1, -1, 0, conductor=37)

    def test_cutoff_self_consistency(self):
        small = symsq_value_estimate(self.CURVE, 1000)
        large = symsq_value_estimate(self.CURVE, 10_000)
        assert small > 0.0 and large > 0.0
        assert abs(small - large) / large < 0.05

    def test_against_degree_formula(self):
        # for this curve the exact degree formula gives
        # L(Sym^2, 1) = 2 pi Omega deg / N with deg = 2
        inv = derive_invariants(self.CURVE)
        omega = period_data(inv).omega
        target = 2.0 * math.pi * omega * 2.0 / 37.0
        estimate = symsq_value_estimate(self.CURVE, 10_000)
        assert estimate == pytest.approx(target, rel=0.02)

    def test_exceeds_certified_lower_bound(self):
        estimate = symsq_value_estimate(self.CURVE, 1000)
        assert estimate >= symsq_lower_bound(37**2)

    def test_cutoff_validation(self):
        with pytest.raises(ValueError):
            symsq_value_estimate(self.CURVE, 10**7)
