"""Acceptance gate.  Each criterion prints one PASS/FAIL line (shown even
without ``-s``) and asserts its runtime bound."""
import subprocess
import sys
import time
from collections import Counter
from math import comb

import pytest

from mindist.constructions import FIXTURES, generic_points, load_fixture
from mindist.pointset import normalize
from mindist.points import ideal_dim, generalized_distance, hyp, veronese
from mindist.report import analyze, migliore_batch, verify_suite

FIVE_POINTS = [[0, 0, 1], [0, 1, 0], [0, 2, 1], [0, 3, 1], [1, 0, 0]]


@pytest.fixture
def report_line(capsys):
    def emit(number, title, ok, elapsed, limit, detail=""):
        status = "PASS" if ok and (limit is None or elapsed < limit) else "FAIL"
        budget = f"{elapsed:.1f}s" if limit is None else f"{elapsed:.1f}s of {limit}s"
        with capsys.disabled():
            print(f"\n[acceptance {number}] {status}  {title}  ({budget})  {detail}")
    return emit


def shifts_by_step(betti_rows):
    out = {}
    for i, j, c in betti_rows:
        if i > 0:
            out.setdefault(i, []).extend([j] * c)
    return {i: sorted(v) for i, v in out.items()}


def test_five_points_in_the_plane(report_line):
    t = time.perf_counter()
    pts = normalize(FIVE_POINTS, 2)
    assert load_fixture("five_points_four_collinear").points == pts.points
    d = analyze(pts, max_a=1).data
    elapsed = time.perf_counter() - t
    got = (d["hyp"], d["d"], shifts_by_step(d["betti"]), d["regularity"], d["AN"], d["tight"])
    ok = got == (4, 1, {1: [2, 2, 4], 2: [3, 5]}, 3, 1, True)
    report_line(1, "five points in P^2", ok, elapsed, 5,
                f"hyp={d['hyp']} d={d['d']} reg={d['regularity']} A_2={d['AN']}")
    assert ok
    assert elapsed < 5


def test_plane_and_line_in_p3(report_line):
    t = time.perf_counter()
    d = analyze(load_fixture("p3_six_plane_three_line"), max_a=1).data
    elapsed = time.perf_counter() - t
    want = "0 -> R(-6)+R(-5) -> R^6(-4)+R(-3) -> R^4(-3)+R^2(-2) -> R"
    ok = (d["m"], d["hyp"], d["d"], d["resolution"], d["AN"]) == (9, 6, 3, want, 2) and d["d"] == d["AN"] + 1
    report_line(2, "six plane points plus three line points in P^3", ok, elapsed, 60,
                f"hyp={d['hyp']} d={d['d']} A_3={d['AN']} resolution: {d['resolution']}")
    assert ok
    assert elapsed < 60


def test_generic_n_plus_two_points(report_line):
    t = time.perf_counter()
    rows = []
    for n in (2, 3, 4):
        for source in ("stored", "sampled"):
            if source == "stored":
                pts = load_fixture(f"simplex_plus_one_p{n}")
            else:
                pts, cert = generic_points(n, n + 2, seed=n, general_position=True)
                assert cert.valid
            d = analyze(pts, max_a=1).data
            rows.append((n, source, d["regularity"], d["AN"], d["hyp"], d["d"], len(d["socle_degrees"])))
    elapsed = time.perf_counter() - t
    ok = all(r[2:] == (2, 2, r[0], 2, 1) for r in rows)
    report_line(3, "generic n+2 points, n = 2, 3, 4", ok, elapsed, 60,
                f"{len(rows)} sets, reg = A_n = d = 2, hyp = n, one socle degree")
    assert ok, rows
    assert elapsed < 60


def test_hyperplane_plus_line_classification(report_line):
    t = time.perf_counter()
    cases = [
        ((2, 6, 2), False, lambda r: r["d"] == r["AN"]),
        ((3, 10, 2), False, lambda r: r["d"] == r["AN"]),
        ((3, 5, 4), False, lambda r: r["d"] > r["AN"]),
        ((3, 6, 3), True, lambda r: r["AN"] == 3 - 1),
    ]
    results = []
    for (n, alpha, beta), fixture, relation in cases:
        doc = migliore_batch(n, alpha, beta, seed=0, count=1, fixture=fixture)
        run = doc["runs"][0]
        results.append(((n, alpha, beta), run["d"], run["AN"], relation(run) and doc["all_ok"]))
    elapsed = time.perf_counter() - t
    ok = all(r[3] for r in results)
    detail = "; ".join(f"{p}: d={d} A_n={a}" for p, d, a, _ in results)
    report_line(4, "hyperplane-plus-line spot checks", ok, elapsed, 300, detail)
    assert ok, results
    assert elapsed < 300


REQUIRED_PROPERTIES = {
    "distance_at_least_min_socle",
    "separator_at_least_min_socle",
    "separator_hf_jump",
    "generalized_distance_chain",
    "generalized_distance_monotone",
    "oracle_agreement",
    "hilbert_function_agreement",
    "resolution_valid",
}


def test_property_suite(report_line):
    t = time.perf_counter()
    doc = verify_suite(count=50, seed=0, ns=(2, 3), m_range=(4, 10), bound=9, max_a=3, fixtures=False)
    elapsed = time.perf_counter() - t
    rows = doc["random"]
    sizes = Counter((r["n"], r["m"]) for r in rows)
    covered = REQUIRED_PROPERTIES <= set(doc["by_property"])
    every_row = all(REQUIRED_PROPERTIES <= set(r["checks"]) for r in rows)
    ok = doc["all_ok"] and covered and every_row and len(rows) >= 50
    fails = sum(v["fail"] for v in doc["by_property"].values())
    report_line(5, "property suite on 50 random configurations", ok, elapsed, 600,
                f"{len(rows)} configs, {len(sizes)} (n, m) shapes, {fails} failed checks")
    assert ok, {k: v for k, v in doc["by_property"].items() if v["fail"]}
    assert all(r["n"] in (2, 3) and 4 <= r["m"] <= 10 for r in rows)
    assert elapsed < 600


def test_generalized_distance_against_veronese(report_line):
    t = time.perf_counter()
    checked = []
    for name in sorted(FIXTURES):
        pts = load_fixture(name)
        if pts.n != 2 or pts.m > 8 or ideal_dim(pts, 2) != 0:
            continue
        v = veronese(pts, 2)
        oracle = pts.m - hyp(v)[0]
        checked.append((name, generalized_distance(pts, 2), oracle))
    elapsed = time.perf_counter() - t
    ok = len(checked) > 0 and all(g == o for _, g, o in checked)
    report_line(6, "d_2 equals the Veronese distance", ok, elapsed, 120,
                ", ".join(f"{n}: {g}/{o}" for n, g, o in checked))
    assert ok, checked
    assert comb(2 + 2, 2) == len(v.points[0])
    assert elapsed < 120


def _run_cli(args, path):
    cmd = [sys.executable, "-m", "mindist", *args, "--json", str(path)]
    proc = subprocess.run(cmd, capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    return path.read_bytes()


def test_determinism(report_line, tmp_path):
    from mindist.constructions import fixture_text
    five = tmp_path / "five.json"
    five.write_text(fixture_text("five_points_four_collinear"))
    commands = {
        "analyze": ["analyze", str(five), "--seed", "7", "--max-a", "2"],
        "migliore": ["migliore", "--n", "2", "--alpha", "6", "--beta", "2", "--count", "2", "--seed", "3"],
        "verify": ["verify", "--count", "6", "--seed", "11", "--no-fixtures"],
        "betti": ["betti", str(five)],
        "dgamma": ["dgamma", str(five), "--max-a", "3"],
    }
    t = time.perf_counter()
    same = {}
    for verb, args in commands.items():
        first = _run_cli(args, tmp_path / f"{verb}-1.json")
        second = _run_cli(args, tmp_path / f"{verb}-2.json")
        same[verb] = first == second and len(first) > 0
    elapsed = time.perf_counter() - t
    ok = all(same.values())
    report_line(7, "seeded commands give byte-identical JSON", ok, elapsed, None,
                ", ".join(f"{v}={'same' if s else 'DIFFERENT'}" for v, s in same.items()))
    assert ok, same
