"""JSON and plain-text reports for a singularity Y(n, q).

Integers are written as decimal strings and rationals as ``"p/q"`` strings,
so reports survive any JSON reader without precision loss. Keys appear in a
fixed order and P-resolutions in lexicographic chain order.
"""

from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources
from typing import Any, Optional

from . import oracles
from .contfrac import enumerate_zero_chains
from .invariants import CqsInvariants, CyclicQuotient, InvariantViolation, cone_of, invariants
from .lattice import NVector, dual_cone, hilbert_basis
from .presolutions import (
    PResolutionRecord,
    admissible_chains,
    enumerate_presolutions,
    m_resolution,
    milnor_numbers,
    verify_presolution,
)
from .resolutions import (
    Fan,
    discrepancies,
    maximal_resolution,
    maximal_resolution_iterative,
    minimal_resolution,
    self_intersections,
)

SCHEMA_ID = "cqpres.report/1"

# exhaustive chain search in --verify mode is skipped beyond this many tuples
EXHAUSTIVE_LIMIT = 2_000_000


def _int(x: int) -> str:
    return str(int(x))


def _frac(x: Fraction) -> str:
    return str(Fraction(x))


def _vec(v) -> list[str]:
    return [_int(c) for c in v]


def _ints(xs) -> list[str]:
    return [_int(x) for x in xs]


def _resolution_entry(fan: Fan) -> dict[str, Any]:
    data = discrepancies(fan)
    try:
        c = _ints(self_intersections(fan))
    except ValueError:
        c = None
    return {
        "rays": [_vec(r) for r in fan.rays],
        "self_intersections": c,
        "alphas": [_frac(a) for a in data.alphas],
        "discrepancies": [_frac(a) for a in data.discrepancies],
    }


def _cone_entry(c) -> dict[str, Any]:
    if c.degenerate:
        kind, nf = "degenerate", None
    else:
        kind = c.ttype.kind
        nf = None if c.ttype.normal_form is None else _vec((c.ttype.normal_form.n, c.ttype.normal_form.q))
    return {
        "index": _int(c.index),
        "w": _vec(c.w),
        "height": _int(c.height),
        "length": _int(c.length),
        "left": _vec(c.left),
        "right": _vec(c.right),
        "degenerate": c.degenerate,
        "milnor": None if c.milnor is None else _int(c.milnor),
        "type": kind,
        "normal_form": nf,
    }


def _presolution_entry(rec: PResolutionRecord) -> dict[str, Any]:
    report = verify_presolution(rec)
    return {
        "chain": _ints(rec.chain),
        "q_seq": _ints(rec.qseq),
        "rays": [_vec(r) for r in rec.fan.rays],
        "verified": report.passed,
        "milnor_numbers": [[_int(i), _int(mu)] for i, mu in milnor_numbers(rec)],
        "cones": [_cone_entry(c) for c in rec.cones],
        "m_resolution_rays": [_vec(r) for r in m_resolution(rec).rays],
    }


def build_report(cq: CyclicQuotient) -> dict[str, Any]:
    inv = invariants(cq)
    mini = minimal_resolution(cq)
    maxi = maximal_resolution(cq)
    records = enumerate_presolutions(cq)
    return {
        "schema": SCHEMA_ID,
        "n": _int(cq.n),
        "q": _int(cq.q),
        "canonical_q": _int(cq.canonical().q),
        "e": _int(inv.e),
        "a_chain": _ints(inv.a_chain),
        "b_chain": _ints(inv.b_chain),
        "w_points": [_vec(w) for w in inv.w_points],
        "v_points": [_vec(v) for v in inv.v_points],
        "r_vector": [_frac(discrepancies(maxi).r_vector.a), _frac(discrepancies(maxi).r_vector.b)],
        "minimal_resolution": _resolution_entry(mini),
        "maximal_resolution": _resolution_entry(maxi),
        "p_resolutions": [_presolution_entry(r) for r in records],
    }


def dumps(report: dict[str, Any]) -> str:
    return json.dumps(report, indent=2, ensure_ascii=True) + "\n"


def load_schema() -> dict[str, Any]:
    text = resources.files("cqpres").joinpath("report.schema.json").read_text(encoding="utf-8")
    return json.loads(text)


def fans_from_report(report: dict[str, Any]) -> dict[str, Any]:
    """Rebuild the fans stored in a (parsed) report.

    Returns ``{"minimal": Fan, "maximal": Fan, "p_resolutions": {chain: Fan},
    "m_resolutions": {chain: Fan}}``.
    """
    cq = CyclicQuotient(int(report["n"]), int(report["q"]))

    def fan(rays):
        return Fan(cq, [NVector(int(x), int(y)) for x, y in rays])

    out: dict[str, Any] = {
        "minimal": fan(report["minimal_resolution"]["rays"]),
        "maximal": fan(report["maximal_resolution"]["rays"]),
        "p_resolutions": {},
        "m_resolutions": {},
    }
    for entry in report["p_resolutions"]:
        chain = tuple(int(k) for k in entry["chain"])
        out["p_resolutions"][chain] = fan(entry["rays"])
        out["m_resolutions"][chain] = fan(entry["m_resolution_rays"])
    return out


def oracle_problems(cq: CyclicQuotient, inv: Optional[CqsInvariants] = None) -> list[str]:
    """Cross-check the fast constructions for ``cq`` against brute force."""
    inv = inv or invariants(cq)
    problems = []
    sigma = cone_of(cq)
    for cone in (sigma, dual_cone(sigma)):
        if hilbert_basis(cone) != oracles.brute_force_hilbert_basis(cone):
            problems.append(f"Hilbert basis of {cone} differs from brute force")
    if maximal_resolution(cq) != maximal_resolution_iterative(cq):
        problems.append("direct and iterative maximal resolutions differ")
    size = 1
    for a in inv.a_chain:
        size *= a
    if size <= EXHAUSTIVE_LIMIT:
        brute = oracles.chains_in(
            oracles.exhaustive_zero_chains(len(inv.a_chain), max(inv.a_chain)), inv.a_chain)
        if brute != admissible_chains(cq, inv):
            problems.append("admissible chains differ from exhaustive search")
    return problems


def chain_oracle_problems(m: int) -> list[str]:
    if enumerate_zero_chains(m) != oracles.exhaustive_zero_chains(m):
        return [f"zero chains of length {m} differ from exhaustive search"]
    return []


def render_text(report: dict[str, Any]) -> str:
    """Plain-text rendering of a report."""

    def vecs(vs):
        return " ".join(f"({x},{y})" for x, y in vs)

    lines = [
        f"Y({report['n']},{report['q']})  canonical q = {report['canonical_q']}",
        f"e = {report['e']}   a = ({','.join(report['a_chain'])})"
        f"   b = ({','.join(report['b_chain'])})",
        f"w: {' '.join('[' + ','.join(w) + ']' for w in report['w_points'])}",
        f"R = [{', '.join(report['r_vector'])}]",
    ]
    for key, title in (("minimal_resolution", "minimal"), ("maximal_resolution", "maximal")):
        res = report[key]
        lines.append(f"{title} resolution: {vecs(res['rays'])}")
        if res["self_intersections"] is not None:
            lines.append(f"  -c_j: {' '.join('-' + c for c in res['self_intersections']) or '-'}")
        lines.append(f"  alpha: {' '.join(res['alphas'][1:-1]) or '-'}")
    lines.append(f"P-resolutions: {len(report['p_resolutions'])}")
    for entry in report["p_resolutions"]:
        status = "ok" if entry["verified"] else "FAILED"
        lines.append(f"  k = ({','.join(entry['chain'])})  q = ({','.join(entry['q_seq'])})  [{status}]")
        lines.append(f"    rays: {vecs(entry['rays'])}")
        for c in entry["cones"]:
            if c["degenerate"]:
                continue
            nf = "" if c["normal_form"] is None else f" Y({c['normal_form'][0]},{c['normal_form'][1]})"
            lines.append(
                f"    tau^{c['index']}: w=[{','.join(c['w'])}] height {c['height']}"
                f" length {c['length']} {c['type']}{nf} mu={c['milnor']}")
        lines.append(f"    M-resolution: {vecs(entry['m_resolution_rays'])}")
    return "\n".join(lines) + "\n"


def check_report(report: dict[str, Any]) -> None:
    """Raise :class:`InvariantViolation` if any P-resolution failed verification."""
    bad = [e["chain"] for e in report["p_resolutions"] if not e["verified"]]
    if bad:
        raise InvariantViolation(f"unverified P-resolutions: {bad}")
