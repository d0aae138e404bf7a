from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import pos_rationals
from msamoeba.archgeo import logconcavity
from msamoeba.discriminant import discriminant_value
from msamoeba.errors import (BadIndex, DegreeTooLow, LambdaTooSmall, NotSI,
                             SignPrecondition)
from msamoeba.multiplier import (Kind, Side, corollary1_check, fiber_path_check, ms_check,
                                 p_k, q_k, s_vector, search_lambda, trinomial_pj,
                                 witness_ii, witness_si)
from msamoeba.polycore import GammaSeq, Poly, apply_diagonal, hadamard_product
from msamoeba.realroots import classify, is_real_rooted, real_root_count, root_report

F = Fraction


def test_s_vector_examples():
    assert s_vector(4) == (2, 3, 2)
    assert s_vector(7) == (3, 5, 6, 6, 5, 3)
    assert s_vector(10) == (5, 9, 12, 14, 15, 14, 12, 9, 5)
    with pytest.raises(DegreeTooLow):
        s_vector(1)


@pytest.mark.parametrize("k", range(2, 13))
def test_s_vector_symmetric_and_concave(k):
    s = (0, *s_vector(k), 0)
    assert s == s[::-1]
    assert all(2 * s[j] > s[j - 1] + s[j + 1] for j in range(1, k))


def test_witness_si_examples():
    assert witness_si(3, 9) == Poly([1, 9, 9, 1])
    with pytest.raises(LambdaTooSmall) as exc:
        witness_si(3, 4)
    assert exc.value.args
    assert witness_si(2, 3) == Poly([1, 3, 1])


def test_witness_ii_examples():
    assert witness_ii(3, 10) == Poly([1, F(1, 10), F(1, 10), 1])
    assert real_root_count(witness_ii(2, 10)) == 0
    assert root_report(q_k(4, 1000)).distinct_real == 0
    with pytest.raises(ValueError):
        witness_ii(3, 1)


@pytest.mark.parametrize("k", range(2, 7))
def test_search_finds_witnesses(k):
    lam, p = search_lambda(witness_si, k)
    assert p == p_k(k, lam) and classify(p).in_SIgeq
    lam, q = search_lambda(witness_ii, k)
    assert classify(q).in_IIgeq


def test_trinomial_examples():
    p = trinomial_pj(3, 1)
    assert p == Poly([2, -3, 0, 1])
    assert discriminant_value(p) == 0 and p(1) == 0 and p.derivative()(1) == 0
    m = trinomial_pj(3, 1, F(1, 10), Side.MINUS)
    assert m == Poly([2, F(-27, 10), 0, 1]) and real_root_count(m) == 1
    pl = trinomial_pj(3, 1, F(1, 10), Side.PLUS)
    assert pl == Poly([2, F(-33, 10), 0, 1]) and real_root_count(pl) == 3
    for j in (0, 3):
        with pytest.raises(BadIndex):
            trinomial_pj(3, j)


def test_ms_check_examples():
    assert ms_check(GammaSeq([1, 1, 1, 1]), Kind.KIND1_FINITE).passed
    v = ms_check(GammaSeq([2, 1, 2]), Kind.KIND3)
    assert not v.passed and v.witness == Poly([1, 2, 1])
    assert v.witness_image == Poly([2, 2, 2]) and discriminant_value(v.witness_image) == -12
    assert ms_check(GammaSeq([1, 2, 1]), Kind.KIND3).passed
    assert ms_check(GammaSeq([1, F(1, 9), F(1, 9), 1]), Kind.THM2_LITERAL).passed
    assert ms_check(GammaSeq([1, 2, 1]), "kind3").to_dict()["pass"] is True


def test_ms_check_preconditions():
    with pytest.raises(SignPrecondition):
        ms_check(GammaSeq([1, -1, 1]), Kind.KIND3)
    with pytest.raises(SignPrecondition):
        ms_check(GammaSeq([1, 0, 1]), Kind.KIND3)
    with pytest.raises(SignPrecondition):
        ms_check(GammaSeq([1, 0, 1]), Kind.THM2_NORMALIZED)


def test_kind3_preserves_si_samples():
    g = GammaSeq([1, 2, 1, F(1, 3)])
    assert ms_check(g, Kind.KIND3).passed
    lam, p = search_lambda(witness_si, 3)
    for extra in range(20):
        w = apply_diagonal(GammaSeq([1, 1 + extra, 1 + extra, 1]), p)
        assert classify(apply_diagonal(g, w)).in_SIgeq


def test_thm2_literal_and_normalized_differ_under_scaling():
    g = GammaSeq([1, F(1, 9), F(1, 9), 1])
    scaled = GammaSeq([10 * x for x in g])
    assert ms_check(scaled, Kind.THM2_NORMALIZED).passed
    assert not ms_check(scaled, Kind.THM2_LITERAL).passed


def test_thm2_failure_defeated_by_trinomial():
    g = GammaSeq([1, 2, 1, 1])
    v = ms_check(g, Kind.THM2_NORMALIZED)
    assert not v.passed and v.failing_index == 1
    assert classify(v.witness.abs_coeffs()).in_IIgeq
    assert not classify(v.witness_image.abs_coeffs()).in_IIgeq


def test_corollary1_examples():
    rep = corollary1_check(Poly([1, 9, 9, 1]))
    assert rep.passed and len(rep.truncations) == 6
    rep = corollary1_check(Poly([0, 1, 2, 1]))
    assert rep.turan[1]["equality"] and rep.passed
    rep = corollary1_check(Poly([1, 2, 1]))
    assert rep.turan[0]["equality"] and rep.passed
    with pytest.raises(NotSI):
        corollary1_check(Poly([1, 4, 4, 1]))


def test_fiber_path_examples():
    rep = fiber_path_check(Poly([1, 9, 9, 1]), steps=10)
    assert rep.base == Poly([9, 9, 1]) and len(rep.taus) == 11
    assert fiber_path_check(Poly([1, 2, 1]), steps=4).steps == 4
    with pytest.raises(NotSI):
        fiber_path_check(Poly([1, 4, 4, 1]))


gammas = st.lists(pos_rationals, min_size=3, max_size=6).map(GammaSeq)


@given(gammas)
def test_kind1_implies_kind2(g):
    if ms_check(g, Kind.KIND1_FINITE).passed:
        assert ms_check(g, Kind.KIND2_FINITE).passed


@given(gammas)
def test_kind1_failure_image_is_counterexample(g):
    v = ms_check(g, Kind.KIND2_FINITE)
    if not v.passed:
        assert is_real_rooted(v.witness) and not is_real_rooted(v.witness_image)


@given(gammas, st.data())
def test_kind3_closed_under_hadamard(g1, data):
    g2 = GammaSeq(data.draw(st.lists(pos_rationals, min_size=len(g1), max_size=len(g1))))
    if logconcavity(g1)[0] and logconcavity(g2)[0]:
        assert ms_check(hadamard_product(g1, g2), Kind.KIND3).passed


@given(gammas)
def test_kind3_witness_matches_inequality(g):
    v = ms_check(g, Kind.KIND3)
    if not v.passed:
        n = v.failing_index
        assert g[n] ** 2 < g[n - 1] * g[n + 1]
        assert not is_real_rooted(v.witness_image)
