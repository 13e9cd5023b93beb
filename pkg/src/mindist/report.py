"""Analysis pipeline and JSON reports.

``analyze`` runs both routes to the minimum socle degree (minimal free
resolution, and Artinian reduction) next to the combinatorial side
(hyp, d, generalized distances, separators) and records named checks.
Reports are plain dicts of ints, strings, lists and bools: exact,
key-sorted and free of timings unless asked for, so a seeded run is
byte-for-byte repeatable.
"""
from __future__ import annotations

import json
import time
from collections import Counter
from dataclasses import dataclass, field as dc_field

import numpy as np

from .artinian import min_socle_degree_oracle
from .constructions import (
    AN_IN_BETA_OR_BETA_MINUS_1,
    D_EQ_AN,
    D_GT_AN,
    MiglioreParams,
    load_fixture,
    migliore_config,
    plane_and_line_fixture,
    spawn_seeds,
)
from .errors import DegenerateConfigurationError, DuplicatePointError
from .field import QQ, format_exact
from .groebner import DEFAULT_DEGREE_CEILING, buchberger_moeller, hilbert_function_eval, hilbert_function_gb
from .pointset import ProjectivePointSet, normalize
from .points import (
    generalized_distance_witness,
    hf_difference,
    is_nondegenerate,
    min_distance,
    separators,
    veronese_distance_oracle,
)
from .resolution import betti_table, minimal_resolution, render_betti, verify_resolution

REPORT_VERSION = 1

CHECK_NAMES = (
    "distance_at_least_min_socle",
    "generalized_distance_chain",
    "generalized_distance_monotone",
    "separator_hf_jump",
    "separator_at_least_min_socle",
    "separator_is_socle_degree",
    "oracle_agreement",
    "hilbert_function_agreement",
    "max_socle_is_regularity",
    "witness_consistent",
    "resolution_valid",
)

# Test hook: names a stage whose output gets corrupted, to prove the
# cross-checks notice.  Only "betti" is understood.
FAULTS = ("betti",)


@dataclass
class AnalysisReport:
    data: dict
    checks: dict = dc_field(default_factory=dict)
    failures: dict = dc_field(default_factory=dict)
    betti_text: str = ""

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def failed(self) -> list[str]:
        return [k for k, v in self.checks.items() if not v]

    def to_dict(self) -> dict:
        out = dict(self.data)
        out["checks"] = dict(self.checks)
        out["failures"] = {k: list(v) for k, v in self.failures.items()}
        out["all_checks_pass"] = self.ok
        return out

    def to_json(self) -> str:
        return dump_json(self.to_dict())


def dump_json(doc) -> str:
    _assert_exact(doc)
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _assert_exact(x, path="$"):
    if isinstance(x, float):
        raise TypeError(f"float at {path}; reports carry exact values only")
    if isinstance(x, dict):
        for k, v in x.items():
            _assert_exact(v, f"{path}.{k}")
    elif isinstance(x, (list, tuple)):
        for i, v in enumerate(x):
            _assert_exact(v, f"{path}[{i}]")


def _multiset(xs) -> dict:
    return {str(k): v for k, v in sorted(Counter(xs).items())}


class _Checks:
    def __init__(self):
        self.verdicts: dict = {}
        self.failures: dict = {}

    def record(self, name, ok, detail=""):
        self.verdicts[name] = self.verdicts.get(name, True) and bool(ok)
        if not ok:
            self.failures.setdefault(name, []).append(detail)


def analyze(points: ProjectivePointSet, max_a: int = 2, seed: int = 0,
            max_degree: int = DEFAULT_DEGREE_CEILING, timings: bool = False,
            fault: str | None = None, extra_seed: int | None = None) -> AnalysisReport:
    """Run every pipeline on ``points`` and cross-check the results.

    ``extra_seed`` reruns the Artinian route with a second linear form and
    requires the same socle.
    """
    if fault is not None and fault not in FAULTS:
        raise ValueError(f"unknown fault {fault!r}")
    if not is_nondegenerate(points):
        raise DegenerateConfigurationError(
            "all points lie in one hyperplane; the configuration must span P^n"
        )
    clock = {}
    t0 = time.perf_counter()
    chk = _Checks()
    pts = points
    n, m = pts.n, pts.m

    G = buchberger_moeller(pts, max_degree=max_degree)
    clock["groebner"] = time.perf_counter() - t0

    t = time.perf_counter()
    res = minimal_resolution(G)
    table = betti_table(res)
    clock["resolution"] = time.perf_counter() - t
    socle_res = tuple(table.socle_degrees)
    if fault == "betti":
        socle_res = tuple(s + 1 for s in socle_res)
    AN = min(socle_res)
    reg = table.regularity

    t = time.perf_counter()
    rec = verify_resolution(res, G)
    chk.record("resolution_valid", rec.ok, "; ".join(f"{k}: {v}" for k, v in rec.failures.items()) if not rec.ok else "")
    clock["verify"] = time.perf_counter() - t

    t = time.perf_counter()
    oracle = min_socle_degree_oracle(pts, seed, G)
    clock["artinian"] = time.perf_counter() - t
    chk.record(
        "oracle_agreement",
        oracle.socle == socle_res,
        f"resolution socle {list(socle_res)} vs Artinian socle {list(oracle.socle)}",
    )
    if extra_seed is not None:
        other = min_socle_degree_oracle(pts, extra_seed, G)
        chk.record("oracle_agreement", other.socle == oracle.socle,
                   f"socle depends on the linear form: {list(oracle.socle)} vs {list(other.socle)}")
    chk.record("max_socle_is_regularity", max(oracle.socle) == reg,
               f"max socle degree {max(oracle.socle)} vs regularity {reg}")

    hf_eval = [hilbert_function_eval(pts, d) for d in range(reg + 3)]
    hf_gb = [hilbert_function_gb(G, d) for d in range(reg + 3)]
    chk.record("hilbert_function_agreement", hf_eval == hf_gb, f"evaluation {hf_eval} vs Groebner {hf_gb}")

    t = time.perf_counter()
    dist = min_distance(pts)
    chk.record("witness_consistent", len(dist.incident) == dist.hyp, "witness hyperplane recount differs")
    AN_oracle = oracle.AN
    chk.record("distance_at_least_min_socle", dist.d >= AN and dist.d >= AN_oracle,
               f"d = {dist.d} < A_n = {min(AN, AN_oracle)}")

    gen = {}
    for a in range(1, max_a + 1):
        gen[a] = generalized_distance_witness(pts, a)
    if gen:
        chk.record("generalized_distance_chain", gen[1][0] == dist.d, f"d_1 = {gen[1][0]} but d = {dist.d}")
    for b in gen:
        for a in gen:
            if a <= b:
                if gen[b][0] >= 2:
                    chk.record("generalized_distance_chain", gen[a][0] >= b - a + 2,
                               f"d_{b} = {gen[b][0]} >= 2 but d_{a} = {gen[a][0]} < {b - a + 2}")
                chk.record("generalized_distance_monotone", gen[a][0] >= gen[b][0],
                           f"d_{a} = {gen[a][0]} < d_{b} = {gen[b][0]}")
    chk.verdicts.setdefault("generalized_distance_chain", True)
    chk.verdicts.setdefault("generalized_distance_monotone", True)
    clock["distance"] = time.perf_counter() - t

    t = time.perf_counter()
    sep = separators(pts, reg)
    socle_set = set(oracle.socle)
    for i, delta in sep.per_point.items():
        diff = hf_difference(pts, i, reg + 1)
        pattern = [1 if d >= delta else 0 for d in range(reg + 2)]
        chk.record("separator_hf_jump", diff == pattern, f"point {i}: difference {diff}, expected {pattern}")
        chk.record("separator_at_least_min_socle", delta >= AN, f"point {i}: degree {delta} < A_n = {AN}")
        chk.record("separator_is_socle_degree", delta in socle_set, f"point {i}: degree {delta} not in socle")
    clock["separators"] = time.perf_counter() - t

    for name in CHECK_NAMES:
        chk.verdicts.setdefault(name, True)

    data = {
        "report_version": REPORT_VERSION,
        "input_digest": pts.digest(),
        "field": pts.field.name,
        "exact": pts.field == QQ,
        "seed": seed,
        "n": n,
        "m": m,
        "points": pts.as_strings(),
        "hyp": dist.hyp,
        "d": dist.d,
        "witness_hyperplane": [str(format_exact(x)) for x in dist.witness_hyperplane],
        "witness_points": list(dist.incident),
        "betti": table.as_rows(),
        "resolution": res.describe(),
        "regularity": reg,
        "last_shifts": list(table.last_shifts),
        "a_min": min(table.last_shifts),
        "socle_degrees": list(socle_res),
        "socle_multiset": _multiset(socle_res),
        "socle_degrees_oracle": list(oracle.socle),
        "artinian_linear_form": list(oracle.linear_form),
        "artinian_graded_dims": list(oracle.graded_dims),
        "AN": AN,
        "AN_oracle": AN_oracle,
        "tight": dist.d == AN,
        "hilbert_function": hf_eval,
        "separator_degrees": [sep.per_point[i] for i in range(m)],
        "delta_gamma": sep.delta_gamma,
        "generalized_distances": {str(a): {"value": v, "removed": list(w)} for a, (v, w) in gen.items()},
    }
    if timings:
        clock["total"] = time.perf_counter() - t0
        data["timings_ms"] = {k: int(v * 1000) for k, v in clock.items()}
    report = AnalysisReport(data, chk.verdicts, chk.failures, render_betti(table))
    return report


# ---------------------------------------------------------------------------
# hyperplane-plus-line batches


def measured_relation(d: int, AN: int) -> str:
    if d > AN:
        return "d>AN"
    if d == AN:
        return "d=AN"
    return "d<AN"


def prediction_holds(prediction: str, d: int, AN: int, beta: int) -> bool | None:
    """None when nothing is predicted (the gray zone)."""
    if prediction == D_GT_AN:
        return d > AN
    if prediction == D_EQ_AN:
        return d == AN
    if prediction == AN_IN_BETA_OR_BETA_MINUS_1:
        return AN in (beta - 1, beta)
    return None


def migliore_batch(n: int, alpha: int, beta: int, seed: int = 0, count: int = 1,
                   fixture: bool = False, max_a: int = 1, max_degree: int = DEFAULT_DEGREE_CEILING) -> dict:
    params = MiglioreParams(n, alpha, beta, seed)
    runs = []
    if fixture:
        if (n, alpha, beta) != (3, 6, 3):
            raise ValueError("the stored fixture has n = 3, alpha = 6, beta = 3")
        configs = [plane_and_line_fixture()]
    else:
        configs = [migliore_config(params, rng=rng) for rng in spawn_seeds(seed, count)]
    all_ok = True
    for k, cfg in enumerate(configs):
        rep = analyze(cfg.points, max_a=max_a, seed=seed, max_degree=max_degree)
        d, AN = rep.data["d"], rep.data["AN"]
        holds = prediction_holds(params.predicted, d, AN, beta)
        construction_ok = rep.data["hyp"] == alpha and d == beta
        all_ok = all_ok and rep.ok and construction_ok and holds is not False
        runs.append({
            "index": k,
            "points": rep.data["points"],
            "u": list(cfg.u),
            "attempts": cfg.attempts,
            "genericity_hf": list(cfg.certificate.hilbert_values),
            "hyp": rep.data["hyp"],
            "d": d,
            "AN": AN,
            "regularity": rep.data["regularity"],
            "resolution": rep.data["resolution"],
            "measured": measured_relation(d, AN),
            "AN_minus_beta": AN - beta,
            "prediction_holds": holds,
            "construction_ok": construction_ok,
            "checks": rep.checks,
        })
    return {
        "report_version": REPORT_VERSION,
        "kind": "migliore",
        "n": n,
        "alpha": alpha,
        "beta": beta,
        "s": params.s,
        "predicted": params.predicted,
        "seed": seed,
        "fixture": fixture,
        "count": len(runs),
        "runs": runs,
        "all_ok": all_ok,
    }


# ---------------------------------------------------------------------------
# verification suite


def random_configuration(rng: np.random.Generator, n: int, m: int, bound: int = 9,
                         max_attempts: int = 1000) -> ProjectivePointSet:
    """Reduced, non-degenerate integer configuration (resampled as needed)."""
    for _ in range(max_attempts):
        raw = [[int(x) for x in rng.integers(-bound, bound + 1, size=n + 1)] for _ in range(m)]
        try:
            pts = normalize(raw, n)
        except (DuplicatePointError, ValueError):
            continue
        if is_nondegenerate(pts):
            return pts
    raise RuntimeError("could not sample a non-degenerate configuration")  # pragma: no cover


FIXTURE_EXPECTATIONS = {
    "five_points_four_collinear": {"hyp": 4, "d": 1, "AN": 1, "regularity": 3,
                                   "resolution": "0 -> R(-5)+R(-3) -> R(-4)+R^2(-2) -> R"},
    "p3_six_plane_three_line": {"hyp": 6, "d": 3, "AN": 2, "regularity": 3,
                                "resolution": "0 -> R(-6)+R(-5) -> R^6(-4)+R(-3) -> R^4(-3)+R^2(-2) -> R"},
    "p3_five_plane_three_line": {"hyp": 5, "d": 3, "AN": 2},
    "p3_six_plane_two_line": {"hyp": 6, "d": 2, "AN": 2},
    "simplex_plus_one_p2": {"hyp": 2, "d": 2, "AN": 2, "regularity": 2},
    "simplex_plus_one_p3": {"hyp": 3, "d": 2, "AN": 2, "regularity": 2},
    "simplex_plus_one_p4": {"hyp": 4, "d": 2, "AN": 2, "regularity": 2},
    "p2_6_points_no_conic": {"hyp": 3, "d": 3},
    "p2_7_points_no_conic": {"hyp": 2, "d": 5},
    "p2_8_points_no_conic": {"hyp": 3, "d": 5},
    "p2_8_points_four_on_a_line": {"hyp": 4, "d": 4},
}


def _property_row(label, pts, seed, max_a, fault=None):
    rep = analyze(pts, max_a=max_a, seed=seed, fault=fault, extra_seed=seed + 1)
    checks = dict(rep.checks)
    if pts.n == 2 and pts.m <= 8:
        oracle = veronese_distance_oracle(pts, 2)
        if oracle is not None:
            gd = rep.data["generalized_distances"].get("2", {}).get("value")
            if gd is None:
                gd = generalized_distance_witness(pts, 2)[0]
            checks["veronese_oracle"] = gd == oracle
    return {
        "input": label,
        "n": pts.n,
        "m": pts.m,
        "points": pts.as_strings(),
        "checks": checks,
        "failures": rep.failures,
        "ok": all(checks.values()),
    }


def verify_suite(count: int = 50, seed: int = 0, ns=(2, 3), m_range=(4, 10), bound: int = 9,
                 max_a: int = 3, fixtures: bool = True, fault: str | None = None) -> dict:
    rows = []
    fixture_rows = []
    if fixtures:
        for name, expect in FIXTURE_EXPECTATIONS.items():
            pts = load_fixture(name)
            rep = analyze(pts, max_a=1, seed=seed, fault=fault)
            got = {k: rep.data[k] for k in expect}
            fixture_rows.append({
                "input": name,
                "expected": expect,
                "measured": got,
                "checks": rep.checks,
                "ok": got == expect and rep.ok,
            })
    rng = np.random.default_rng(seed)
    for k in range(count):
        n = int(ns[k % len(ns)])
        m = int(rng.integers(m_range[0], m_range[1] + 1))
        pts = random_configuration(rng, n, m, bound)
        rows.append(_property_row(f"random[{k}]", pts, seed, max_a, fault))
    by_property: dict = {}
    for row in rows + fixture_rows:
        for name, v in row["checks"].items():
            by_property.setdefault(name, [0, 0])
            by_property[name][0 if v else 1] += 1
    return {
        "report_version": REPORT_VERSION,
        "kind": "verify",
        "seed": seed,
        "count": count,
        "coordinate_bound": bound,
        "fixtures": fixture_rows,
        "random": rows,
        "by_property": {k: {"pass": v[0], "fail": v[1]} for k, v in sorted(by_property.items())},
        "all_ok": all(r["ok"] for r in rows + fixture_rows),
    }
