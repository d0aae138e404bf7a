import pytest

from msamoeba.verify import SUITES, run_suite, trinomial_facts

SMALL = {"thmA": 20, "thmB": 30, "thm1": 20, "thm2": 20, "cor1": 10, "lemma1": None,
         "lemma2": 5, "cones": 100, "amoeba": 20}
GREEN = [name for name in SUITES if name != "thm2"]


@pytest.mark.parametrize("name", GREEN)
def test_suite_green(name):
    rep = run_suite(name, seed=3, samples=SMALL[name])
    failing = [c.name for c in rep.checks if not c.passed]
    assert rep.passed, failing
    assert all(c.cases > 0 for c in rep.checks)


def test_suite_deterministic():
    a = run_suite("thmB", seed=1, samples=10).to_dict()
    b = run_suite("thmB", seed=1, samples=10).to_dict()
    assert a == b


def test_thm2_sampled_checks_green():
    rep = run_suite("thm2", seed=3, samples=SMALL["thm2"])
    for name in ("trinomial_discriminant_zero", "trinomial_c_minus_in_II",
                 "trinomial_d_plus_not_in_II", "normalized_pass_preserves_II",
                 "normalized_fail_defeated_by_trinomial"):
        assert rep.check(name).passed, name
    assert rep.check("literal_vs_normalized_divergence").info["divergence_exists"]


def test_thm2_trinomial_degenerate_root_claims_fail_only_at_k4_j2():
    # (k - j) - k x^j + j x^k = 2 (x^2 - 1)^2 for k = 4, j = 2: two double
    # roots at +-1, so "unique degenerate root" and the root count both fail.
    rep = run_suite("thm2", seed=3, samples=SMALL["thm2"])
    for name in ("trinomial_a_unique_degenerate_root", "trinomial_b_real_root_count"):
        c = rep.check(name)
        assert not c.passed
        assert [(f["k"], f["j"]) for f in c.failures] == [(4, 2)]
    f = trinomial_facts(4, 2)
    assert f["degenerate_roots"] == 2 and f["discriminant_zero"]


@pytest.mark.parametrize("k,j", [(k, j) for k in range(2, 6) for j in range(1, k)
                                 if (k, j) != (4, 2)])
def test_trinomial_facts_hold_elsewhere(k, j):
    f = trinomial_facts(k, j)
    assert f["a_unique_degenerate_root"] and f["b_real_root_count"]
    assert f["c_minus_in_II"] and f["d_plus_not_in_II"]
