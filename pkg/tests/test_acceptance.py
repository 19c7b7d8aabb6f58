"""Acceptance suite: one test per criterion, each recording a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py``; the lines are repeated in the
"acceptance criteria" section of the terminal summary.
"""

import random
import time
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from multitile import QQ, LatticeBasis, Vec, bolle_check, decide, edge_pairs, enumerate_maximal_sets, is_discrete, level, select_j
from multitile.generators import SQRT2, random_polygon, random_selector_instance, regular_octagon
from multitile.oracle import brute_force_decide, brute_force_select, sample_verify
from multitile.selector import mixed_generators
from multitile.subgroup import count_discreteness_calls

from conftest import OCTAGON, SQUARE, qpoly, record_acceptance

Z2 = LatticeBasis(Vec.of(QQ, 1, 0), Vec.of(QQ, 0, 1))


@lru_cache(maxsize=None)
def decision_corpus():
    """Criterion 1 corpus: 60 polygons over Q and 180 over Q(sqrt 2), n in 2..6."""
    rng = random.Random(2024)
    polys = [random_polygon(rng, rng.randint(2, 6), QQ) for _ in range(60)]
    polys += [random_polygon(rng, rng.randint(2, 6), SQRT2, p_irrational=rng.choice([0.05, 0.15, 0.3, 0.6]))
              for _ in range(180)]
    return polys


@lru_cache(maxsize=None)
def criterion_1():
    t0 = time.perf_counter()
    results = [(P, decide(P), brute_force_decide(P)) for P in decision_corpus()]
    return results, time.perf_counter() - t0


@lru_cache(maxsize=None)
def criterion_3():
    rng = random.Random(3)
    out = []
    for _ in range(100):
        P = random_polygon(rng, rng.randint(2, 8), QQ)
        v = decide(P)
        conds = bolle_check(P, v.lattice) if v.tiles else []
        report = sample_verify(P, v.lattice, v.level, 500) if v.tiles else None
        out.append((P, v, conds, report))
    return out


@lru_cache(maxsize=None)
def criterion_4():
    rng = random.Random(4)
    out = []
    for i in range(100):
        spec = QQ if i < 20 else SQRT2
        P = random_polygon(rng, 3, spec, p_irrational=rng.choice([0.3, 0.6, 1.0]))
        out.append((P, decide(P)))
    return out


@lru_cache(maxsize=None)
def criterion_5():
    square = qpoly(*SQUARE)
    octagon = qpoly(*OCTAGON)
    return {
        "square": (square, decide(square)),
        "octagon": (octagon, decide(octagon)),
        "regular": (regular_octagon(), decide(regular_octagon())),
        "square_z2_level": level(square, Z2),
        "octagon_z2_level": level(octagon, Z2),
        "octagon_z2_bolle": bolle_check(octagon, Z2),
        "octagon_z2_report": sample_verify(octagon, Z2, 7, 1000),
    }


def test_criterion_1_decision_matches_brute_force():
    results, elapsed = criterion_1()
    mismatches = sum(v.tiles != b.tiles for _, v, b in results)
    tiles = sum(v.tiles for _, v, _ in results)
    irrational = sum(P.field is SQRT2 for P, _, _ in results)
    ok = len(results) >= 200 and mismatches == 0 and elapsed < 60 and 0 < tiles < len(results)
    record_acceptance(1, ok, f"{len(results)} polygons ({irrational} over Q(sqrt2)), {tiles} tile, "
                             f"{mismatches} disagreements, {elapsed:.1f} s")
    assert ok


def test_criterion_2_selector_matches_exhaustive():
    rng = random.Random(2)
    agree = found = 0
    certified = True
    total = 220
    for _ in range(total):
        inst = random_selector_instance(rng, rng.randint(2, 10), p_irrational=rng.choice([0.1, 0.3, 0.5, 0.8]))
        J = select_j(inst)
        agree += (J is None) == (brute_force_select(inst) is None)
        if J is not None:
            found += 1
            certified &= is_discrete(mixed_generators(inst, J)).discrete
    ok = agree == total and certified and 0 < found < total
    record_acceptance(2, ok, f"{agree}/{total} agree with 2^n enumeration, {found} selections, all certified: {certified}")
    assert ok


def test_criterion_3_rational_polygons_tile():
    runs = criterion_3()
    tiles = sum(v.tiles for _, v, _, _ in runs)
    bolle_ok = sum(v.tiles and "Fail" not in [c.status for c in conds] for _, v, conds, _ in runs)
    sampled_ok = sum(r is not None and r.passed for *_, r in runs)
    max_level = max(v.level for _, v, _, _ in runs if v.tiles)
    ok = tiles == bolle_ok == sampled_ok == 100
    record_acceptance(3, ok, f"100 rational polygons: {tiles} tile, {bolle_ok} pass the edge-pair check, "
                             f"{sampled_ok} pass 500-point sampling (levels up to {max_level})")
    assert ok


def test_criterion_4_hexagons_tile():
    runs = criterion_4()
    tiles = sum(v.tiles for _, v in runs)
    identity = sum(pp.tau[2] == pp.tau[1] - pp.tau[0] for pp in (edge_pairs(P) for P, _ in runs))
    irrational = sum(any(not c.is_rational() for v in P.vertices for c in v) for P, _ in runs)
    ok = tiles == identity == 100 and irrational > 50
    record_acceptance(4, ok, f"100 hexagons ({irrational} with irrational vertices): {tiles} tile, "
                             f"tau_3 = tau_2 - tau_1 in {identity}")
    assert ok


def test_criterion_5_golden_cases():
    g = criterion_5()
    _, sq = g["square"]
    _, octo = g["octagon"]
    P_reg, reg = g["regular"]
    brute_reg = brute_force_decide(P_reg)
    checks = {
        "square tiles at level 1": sq.tiles and sq.level == 1 and g["square_z2_level"] == 1,
        "octagon tiles": octo.tiles,
        "octagon on Z^2 at level 7": g["octagon_z2_level"] == 7
        and all(c.status != "Fail" for c in g["octagon_z2_bolle"]),
        "octagon 1000-point sampling": g["octagon_z2_report"].passed and g["octagon_z2_report"].samples == 1000,
        "regular octagon does not tile": not reg.tiles and not brute_reg.tiles,
        "16 subsets rejected": len(brute_reg.rejections) == 16,
    }
    ok = all(checks.values())
    failed = [name for name, good in checks.items() if not good]
    record_acceptance(5, ok, "all golden cases hold" if ok else f"failed: {failed}")
    assert ok


def _fraction(rng, bound=6):
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def _finite_index_triple(rng):
    """(G, G1, H) with G a rational lattice, G1 of finite index in it, H rational vectors."""
    while True:
        b1, b2 = (Vec.of(QQ, _fraction(rng), _fraction(rng)) for _ in range(2))
        if not (b1.x * b2.y - b1.y * b2.x).is_zero():
            break
    G = LatticeBasis(b1, b2)
    while True:
        m = [[rng.randint(-4, 4) for _ in range(2)] for _ in range(2)]
        if m[0][0] * m[1][1] - m[0][1] * m[1][0]:
            break
    G1 = [G.point(*m[0]), G.point(*m[1])]
    H = [Vec.of(QQ, _fraction(rng), _fraction(rng)) for _ in range(rng.randint(1, 3))]
    return G, G1, H


def test_criterion_6_lemma_suite():
    rng = random.Random(6)
    pairs_checked = intersection_ok = 0
    sets_seen = 0
    for _ in range(100):
        inst = random_selector_instance(rng, rng.randint(3, 10), p_irrational=rng.choice([0.3, 0.5, 0.8]))
        maximal = enumerate_maximal_sets(inst)
        sets_seen += len(maximal)
        for A, B in combinations(maximal, 2):
            pairs_checked += 1
            intersection_ok += len(set(A) & set(B)) <= 1
    lemma_ok = premises = 0
    for _ in range(100):
        G, G1, H = _finite_index_triple(rng)
        if is_discrete(G1 + H).discrete:
            premises += 1
            lemma_ok += is_discrete(G.generators() + H).discrete
    ok = intersection_ok == pairs_checked > 0 and lemma_ok == premises == 100
    record_acceptance(6, ok, f"|A & B| <= 1 for {intersection_ok}/{pairs_checked} pairs of {sets_seen} maximal sets; "
                             f"G + H discrete in {lemma_ok}/{premises} triples")
    assert ok


def test_criterion_7_polynomial_scaling():
    C = 1
    ratios = {}
    for n in (10, 20, 50):
        P = random_polygon(random.Random(n), n, SQRT2, p_irrational=0.5)
        t0 = time.perf_counter()
        with count_discreteness_calls() as calls:
            verdict = decide(P)
        elapsed = time.perf_counter() - t0
        ratios[n] = (calls[0] / n ** 3, elapsed, verdict.tiles)
    big_time = ratios[50][1]
    ok = big_time < 10 and all(r <= C for r, _, _ in ratios.values())
    detail = ", ".join(f"n={n}: {r:.3f} n^3 calls in {t:.2f} s" for n, (r, t, _) in ratios.items())
    record_acceptance(7, ok, f"{detail} (bound C={C})")
    assert ok


def test_criterion_8_witness_integrity():
    verdicts = [(P, v) for P, v, _ in criterion_1()[0] if v.tiles]
    verdicts += [(P, v) for P, v, _, _ in criterion_3() if v.tiles]
    verdicts += [(P, v) for P, v in criterion_4() if v.tiles]
    g = criterion_5()
    verdicts += [g["square"], g["octagon"]]
    bad = []
    for P, v in verdicts:
        k = level(P, v.lattice)  # raises on a non-integer level
        if not (isinstance(k, int) and k >= 1 and k == v.level):
            bad.append(("level", v.level))
        if not all(v.lattice.contains(b) for b in v.base_lattice.generators()):
            bad.append(("containment", v.J))
    ok = not bad
    record_acceptance(8, ok, f"{len(verdicts)} tiling verdicts, {len(bad)} integrity failures")
    assert ok
