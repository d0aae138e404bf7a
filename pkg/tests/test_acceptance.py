"""Acceptance checks, one per criterion, each printing a PASS/FAIL line.

Three criteria are stated in a form that does not hold; their tests assert
the criterion as written and fail, and print the measured facts alongside.
"""
import math
import random
import time
from fractions import Fraction

import pytest

from msamoeba import amoeba as am
from msamoeba.archgeo import ConeKind, ConeSpec, Membership, arch_newton, cone_member, logconcavity
from msamoeba.discriminant import discriminant_of, symbolic_discriminant
from msamoeba.multiplier import s_vector
from msamoeba.plotting import region_grid
from msamoeba.polycore import Poly
from msamoeba.realroots import root_report
from msamoeba.verify import KNOWN_S_VECTORS, Sampler, cs_interior_violations, run_suite

F = Fraction
SEED = 2024


@pytest.fixture
def report(capsys):
    def emit(number: int, ok: bool, detail: str):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")
        return ok
    return emit


def test_criterion_01_cubic_expansion(report):
    t0 = time.perf_counter()
    terms = symbolic_discriminant(3).terms
    dt = time.perf_counter() - t0
    expected = {(2, 0, 0, 2): -27, (1, 1, 1, 1): 18, (0, 2, 2, 0): 1,
                (1, 0, 3, 0): -4, (0, 3, 0, 1): -4}
    ok = terms == expected and dt < 1.0
    assert report(1, ok, f"{len(terms)} terms match, {dt:.3f} s")


def test_criterion_02_homogeneities(report):
    rnd = random.Random(SEED)
    t0 = time.perf_counter()
    bad = 0
    for k in range(2, 7):
        for _ in range(100):
            a = [F(rnd.randint(-50, 50), rnd.randint(1, 20)) for _ in range(k)]
            a.append(F(rnd.choice([-1, 1]) * rnd.randint(1, 50), rnd.randint(1, 20)))
            lam = F(rnd.choice([-1, 1]) * rnd.randint(1, 30), rnd.randint(1, 30))
            d = discriminant_of(a)
            bad += discriminant_of([lam * x for x in a]) != lam ** (2 * (k - 1)) * d
            bad += discriminant_of([lam ** j * x for j, x in enumerate(a)]) != \
                lam ** (k * (k - 1)) * d
    dt = time.perf_counter() - t0
    assert report(2, bad == 0 and dt < 10, f"{bad} violations over 500 points, {dt:.2f} s")


def test_criterion_03_cubic_root_counts(report):
    n1 = root_report(Poly([1, F(29, 10), F(29, 10), 1])).distinct_real
    n2 = root_report(Poly([1, 9, 9, 1])).distinct_real
    assert report(3, (n1, n2) == (1, 3), f"real roots {n1} and {n2}")


def test_criterion_04_region_nesting(report):
    t0 = time.perf_counter()
    codes, counts, violations = region_grid(100, 12)
    dt = time.perf_counter() - t0
    # SS minus SI must be visible too; RR minus SS is empty on the positive
    # quadrant (Descartes: all roots are negative), so RR is checked as a set.
    si, ss_only, rr_only = counts["SI"], counts["SS"], counts["RR"]
    nonempty = si > 0 and si + ss_only > 0 and si + ss_only + rr_only > 0 and ss_only > 0
    ok = violations == 0 and nonempty and dt < 120
    assert report(4, ok, f"violations={violations} counts={counts} {dt:.1f} s")


def test_criterion_05_supporting_cone(report):
    v = cone_member(ConeSpec(ConeKind.C_K_SUPPORTING, 2), [1, 2, 1])
    facet = v.status is Membership.BOUNDARY and v.tight == (1,)
    pts = am.sample_amoeba(3, 10_000, seed=SEED)
    count, worst = cs_interior_violations(pts, tol=am.TOL_OUTSIDE)
    ok = facet and count == 0
    assert report(5, ok, f"facet boundary={facet}; {count} of 10000 amoeba samples strictly "
                         f"inside C^s (max log margin {worst:.4f})")


def test_criterion_06_log_concave_suite(report):
    rep = run_suite("thm1", seed=SEED, samples=200)
    pres = rep.check("log_concave_preserves_SI")
    defeat = rep.check("non_log_concave_defeated_by_witness")
    ok = pres.passed and defeat.passed
    assert report(6, ok, f"preservation {pres.cases} cases, defeat {defeat.cases} cases, "
                         f"exceptions {len(pres.failures) + len(defeat.failures)}")


def test_criterion_07_trinomial_suite(report):
    rep = run_suite("thm2", seed=SEED, samples=200)
    names = ["trinomial_discriminant_zero", "trinomial_a_unique_degenerate_root",
             "trinomial_b_real_root_count", "trinomial_c_minus_in_II",
             "trinomial_d_plus_not_in_II", "normalized_pass_preserves_II"]
    failing = {n: rep.check(n).failures for n in names if not rep.check(n).passed}
    div = rep.check("literal_vs_normalized_divergence").info
    ok = not failing
    assert report(7, ok, f"failing={failing or 'none'}; literal/normalized "
                         f"disagreements={div['disagreements']}")


def test_criterion_08_ronkin(report):
    t0 = time.perf_counter()
    est = am.ronkin_estimate(3, [math.log(20), math.log(20)], grid=512)
    dt = time.perf_counter() - t0
    err = abs(est.value - 4 * math.log(20))
    ok = err < 1e-2 and est.error_hint < 1e-3 and dt < 30
    assert report(8, ok, f"|N - 4 log 20| = {err:.2e}, error_hint = {est.error_hint:.2e}, "
                         f"{dt:.1f} s")


def test_criterion_09_hull_equivalence(report):
    s = Sampler(SEED)
    literal_bad = corrected_bad = strict_count = 0
    for i in range(1000):
        k = s.int(2, 8)
        coeffs = s.log_concave(k + 1).entries if i % 2 else [s.pos() for _ in range(k + 1)]
        strict = logconcavity(coeffs, strict=True)[0]
        edges = len(arch_newton(Poly(coeffs)).lower_edges)
        strict_count += strict
        literal_bad += strict != (edges == k - 1)
        corrected_bad += strict != (edges == k)
    ok = literal_bad == 0
    assert report(9, ok, f"'k-1 edges' violations={literal_bad}; with k edges "
                         f"violations={corrected_bad} ({strict_count} strictly log-concave)")


def test_criterion_10_single_image_oracle(report):
    rep = run_suite("thmB", seed=SEED, samples=500)
    bad = [c.name for c in rep.checks if not c.passed]
    cases = sum(c.cases for c in rep.checks)
    assert report(10, not bad, f"{cases} checks, contradictions in {bad or 'none'}")


def test_criterion_11_s_vectors(report):
    wrong = [k for k, v in KNOWN_S_VECTORS.items() if s_vector(k) != v]
    ok = not wrong and sorted(KNOWN_S_VECTORS) == list(range(2, 11))
    assert report(11, ok, f"k=2..10 checked, mismatches {wrong or 'none'}")


def test_criterion_12_component_count(report):
    rep = am.count_reflected_components(
        3, resolution=512,
        probes={"SI": [math.log(9), math.log(9)], "II": [-math.log(10), -math.log(10)]})
    si, ii = rep["probes"]["SI"]["component"], rep["probes"]["II"]["component"]
    ok = si is not None and ii is not None and si != ii
    assert report(12, ok, f"raw={rep['raw_count']} significant={rep['significant_count']} "
                          f"vs 2^k={rep['conjecture_2k']} (reported); SI in {si}, II in {ii}")
