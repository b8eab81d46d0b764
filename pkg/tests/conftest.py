"""Shared test helpers: independent oracles and sample data."""

from __future__ import annotations

import json
import math
from importlib import resources

import numpy as np
import pytest
from scipy.integrate import quad

from moddeg import CurveModel, Invariants, derive_invariants, two_torsion_roots


def real_period_by_integration(inv: Invariants) -> tuple[float, float]:
    """Independent oracle: 2 * integral over [x0, inf) of dx/sqrt(p(x)),
    p the 2-torsion polynomial and x0 its largest real root.

    The substitution x = x0 + u^2 removes the endpoint singularity; the
    integrand becomes 2/sqrt(q(u)) with q(u) = p(x0 + u^2)/(4 u^2) smooth
    and positive.  Returns (value, quadrature error estimate).
    """
    roots = two_torsion_roots(inv)
    x0 = roots.e1 if roots.kind == "three_real" else roots.r
    p_prime_quarter = ((12.0 * x0 + 2.0 * inv.b2) * x0 + 2.0 * inv.b4) / 4.0

    def q(u: float) -> float:
        if u == 0.0:
            return p_prime_quarter
        x = x0 + u * u
        val = ((4.0 * x + inv.b2) * x + 2.0 * inv.b4) * x + inv.b6
        return val / (4.0 * u * u)

    value, err = quad(lambda u: 2.0 / math.sqrt(q(u)), 0.0, np.inf, epsabs=1e-13, epsrel=1e-12, limit=400)
    return value, err


def random_curves(count: int, seed: int = 0, span: int = 50) -> list[CurveModel]:
    """Deterministic stream of nondegenerate integer models."""
    rng = np.random.RandomState(seed)
    curves: list[CurveModel] = []
    while len(curves) < count:
        a = [int(v) for v in rng.randint(-span, span + 1, size=5)]
        model = CurveModel(*a)
        try:
            derive_invariants(model)
        except ValueError:
            continue
        curves.append(model)
    return curves


def load_bundled_records() -> list[dict]:
    text = resources.files("moddeg").joinpath("data/curves.jsonl").read_text()
    return [json.loads(line) for line in text.splitlines() if line.strip()]


@pytest.fixture(scope="session")
def bundled_records() -> list[dict]:
    return load_bundled_records()
