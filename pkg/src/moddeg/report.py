"""Dataset records and per-curve degree-bound reports.

Input wire format (JSONL, one record per line):

    {"label": "37a1", "a": [0,0,1,-1,0], "conductor": 37,
     "n2": null, "semistable": true, "twist_minimal": true, "deg_phi": 2}

Only "a" and "conductor" are required.  Reports are emitted one JSON
object per input line, input order preserved; reals carry 12 significant
digits and integers above 2^53 are serialized as decimal strings.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Any

from .agm import lemma1_check, period_data
from .bounds import (
    CONDUCTOR_THRESHOLD,
    degree_formula_bound,
    linear_bounds,
    theorem1,
    theorem2,
)
from .curves import CurveModel, derive_invariants, is_cm, two_torsion_roots
from .fudge import fudge_factor_for
from .zerofree import MIN_CERTIFIED_N2, sym_power_conductors

__all__ = [
    "CurveRecord",
    "parse_record",
    "build_report",
    "invariants_document",
    "round_reals",
    "json_default",
    "dumps_report",
    "factorize",
    "squared_primes",
    "is_squarefree",
]

_MAX_EXACT_JSON_INT = 2**53


@dataclass(frozen=True)
class CurveRecord:
    label: str | None
    a: tuple[int, int, int, int, int]
    conductor: int
    n2: int | None = None
    semistable: bool | None = None
    twist_minimal: bool = True
    deg_phi: int | None = None

    def to_model(self) -> CurveModel:
        a1, a2, a3, a4, a6 = self.a
        return CurveModel(
            a1,
            a2,
            a3,
            a4,
            a6,
            conductor=self.conductor,
            label=self.label,
            known_degree=self.deg_phi,
            n2=self.n2,
        )


def parse_record(obj: dict[str, Any]) -> CurveRecord:
    if not isinstance(obj, dict):
        raise ValueError("record must be a JSON object")
    try:
        a = obj["a"]
        conductor = obj["conductor"]
    except KeyError as exc:
        raise ValueError(f"record is missing required field {exc.args[0]!r}") from None
    if not (isinstance(a, list) and len(a) == 5 and all(isinstance(x, int) for x in a)):
        raise ValueError('"a" must be a list of 5 exact integers')
    if isinstance(conductor, str):
        conductor = int(conductor)
    if not isinstance(conductor, int) or conductor < 1:
        raise ValueError("conductor must be a positive integer")
    n2 = obj.get("n2")
    if isinstance(n2, str):
        n2 = int(n2)
    deg = obj.get("deg_phi")
    if deg is not None and (not isinstance(deg, int) or deg < 1):
        raise ValueError("deg_phi must be a positive integer")
    return CurveRecord(
        label=obj.get("label"),
        a=tuple(a),
        conductor=conductor,
        n2=n2,
        semistable=obj.get("semistable"),
        twist_minimal=obj.get("twist_minimal", True),
        deg_phi=deg,
    )


def factorize(n: int) -> dict[int, int]:
    """Trial-division factorization; desk scale (n up to ~1e12)."""
    if n < 1:
        raise ValueError("can only factor positive integers")
    factors: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            while n % p == 0:
                factors[p] = factors.get(p, 0) + 1
                n //= p
        f += 6
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def squared_primes(n: int) -> list[int]:
    return sorted(p for p, e in factorize(n).items() if e >= 2)


def is_squarefree(n: int) -> bool:
    return not squared_primes(n)


def round_reals(value: Any) -> Any:
    """Round floats to 12 significant digits, recursively."""
    if isinstance(value, float):
        return float(f"{value:.12g}")
    if isinstance(value, dict):
        return {k: round_reals(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [round_reals(v) for v in value]
    return value


def json_default(value: Any) -> Any:
    raise TypeError(f"not JSON serializable: {value!r}")


def _encode_ints(value: Any) -> Any:
    if isinstance(value, bool):
        return value
    if isinstance(value, int) and abs(value) > _MAX_EXACT_JSON_INT:
        return str(value)
    if isinstance(value, dict):
        return {k: _encode_ints(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_encode_ints(v) for v in value]
    return value


def dumps_report(report: dict[str, Any]) -> str:
    return json.dumps(_encode_ints(round_reals(report)), default=json_default)


def invariants_document(a: tuple[int, int, int, int, int]) -> dict[str, Any]:
    """Document for the `invariants` command: invariants, roots, periods,
    and the Lemma 1 check."""
    a1, a2, a3, a4, a6 = a
    curve = CurveModel(a1, a2, a3, a4, a6)
    inv = derive_invariants(curve)
    roots = two_torsion_roots(inv)
    period = period_data(inv, roots)
    check = lemma1_check(inv)
    doc: dict[str, Any] = {
        "a": list(a),
        "b2": inv.b2,
        "b4": inv.b4,
        "b6": inv.b6,
        "b8": inv.b8,
        "c4": inv.c4,
        "c6": inv.c6,
        "disc": inv.disc,
        "abs_disc": inv.abs_disc,
        "disc_positive": inv.disc_positive,
        "j_num": inv.j_num,
        "j_den": inv.j_den,
        "is_cm": is_cm(inv),
        "case_tag": period.case_tag,
    }
    if roots.kind == "three_real":
        doc["roots"] = {"e1": roots.e1, "e2": roots.e2, "e3": roots.e3}
    else:
        doc["roots"] = {"r": roots.r, "z": roots.z, "r_tilde": roots.r_tilde}
    doc.update(
        {
            "omega": period.omega,
            "real_period": period.real_period,
            "imag_part": period.imag_part,
            "inv_omega": period.inv_omega,
            "t_or_c": period.t_or_c,
            "lemma1_rhs": check.rhs,
            "lemma1_margin": check.margin,
            "lemma1_ok": check.ok,
        }
    )
    return doc


def build_report(
    record: CurveRecord, n2_override: int | None = None, assume_cm: str = "auto"
) -> dict[str, Any]:
    """Full degree-bound report for one record."""
    curve = record.to_model()
    inv = derive_invariants(curve)
    roots = two_torsion_roots(inv)
    period = period_data(inv, roots)
    check = lemma1_check(inv)
    n = record.conductor

    conductors = sym_power_conductors(
        n2=n2_override if n2_override is not None else record.n2, conductor=n
    )
    n2 = conductors.n2

    warnings: list[str] = []
    if n < CONDUCTOR_THRESHOLD:
        warnings.append("conductor below certified range (N >= 20000); consult curve tables")
    if n2 < MIN_CERTIFIED_N2:
        warnings.append(f"n2 below the certified minimum {MIN_CERTIFIED_N2}")

    square_ps = squared_primes(n)
    squarefree = not square_ps
    if record.semistable is not None and record.semistable != squarefree:
        raise ValueError(
            f"semistable flag {record.semistable} disagrees with squarefree(N) = {squarefree}"
        )
    if not record.twist_minimal:
        warnings.append("declared non-twist-minimal; worst-case local factors used")

    if assume_cm == "auto":
        cm_flag = is_cm(inv)
    elif assume_cm in ("cm", "noncm"):
        cm_flag = assume_cm == "cm"
    else:
        raise ValueError("assume_cm must be one of auto, cm, noncm")

    fudge = [
        fudge_factor_for(inv, p, n, twist_minimal=record.twist_minimal) for p in square_ps
    ]
    l_lower = 0.033 / math.log(n2)
    formula = degree_formula_bound(n, period.omega, l_lower, [f.u_inverse_at_1 for f in fudge])
    th1 = theorem1(n, period.omega)
    multiplier = math.exp(0.33) / math.sqrt(0.02 + math.log(math.log(n))) if n >= 3 else None
    th2 = theorem2(n, n2, period.omega, fudge, prime_multiplier=multiplier)

    good_p = 2
    while inv.disc % good_p == 0 or n % good_p == 0:
        good_p += 1
        while not _is_small_prime(good_p):
            good_p += 1
    lin = linear_bounds(n, p=good_p)

    certified = [formula, th2.analytic, th2.intermediate, th2.closed_form]
    if squarefree:
        certified.extend([th1.analytic, th1.closed_form])
    certified.extend([lin.abramovich, lin.abramovich_selberg])
    consistency_ok = None
    if record.deg_phi is not None:
        consistency_ok = all(b <= record.deg_phi + 1e-9 for b in certified)

    return {
        "label": record.label,
        "conductor": n,
        "n2": {"value": n2, "source": conductors.source},
        "conductor_provenance": "supplied",
        "semistable": {"declared": record.semistable, "squarefree": squarefree},
        "twist_minimal": record.twist_minimal,
        "cm": cm_flag,
        "disc": inv.disc,
        "abs_disc": inv.abs_disc,
        "omega": period.omega,
        "inv_omega": period.inv_omega,
        "case_tag": period.case_tag,
        "lemma1": {"rhs": check.rhs, "margin": check.margin, "ok": check.ok},
        "fudge": [
            {
                "p": f.p,
                "epsilon": f.epsilon,
                "u_inverse_at_1": f.u_inverse_at_1,
                "determined": f.determined,
            }
            for f in fudge
        ],
        "l_value_lower": l_lower,
        "formula_bound": formula,
        "theorem1": {
            "analytic": th1.analytic,
            "closed_form": th1.closed_form,
            "applicable": squarefree,
        },
        "theorem2": {
            "analytic": th2.analytic,
            "intermediate": th2.intermediate,
            "closed_form": th2.closed_form,
            "chain_ok": th2.chain_ok,
        },
        "linear": {
            "abramovich": lin.abramovich,
            "abramovich_selberg": lin.abramovich_selberg,
            "ogg_estimate": lin.ogg_estimate,
            "ogg_prime": lin.ogg_prime,
            "ogg_heuristic": True,
        },
        "known_degree": record.deg_phi,
        "consistency_ok": consistency_ok,
        "warnings": warnings,
    }


def _is_small_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True
