from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import pos_rationals
from msamoeba.archgeo import (ConeKind, ConeSpec, Membership, Subdivision, arch_newton,
                              cone_member, enumerate_subdivisions, logconcavity)
from msamoeba.errors import NegativeEntry, NonPositiveEntry, ZeroPolynomial
from msamoeba.multiplier import search_lambda, witness_si
from msamoeba.polycore import Poly

F = Fraction
positive_vectors = st.lists(pos_rationals, min_size=3, max_size=7)


def test_hull_examples():
    an = arch_newton(Poly([1, 9, 9, 1]))
    assert len(an.lower_edges) == 3 and an.breakpoints == (0, 1, 2, 3)
    an = arch_newton(Poly([1, 1, 1, 1]))
    assert an.lower_edges == [(0, 3)] and an.breakpoints == (0, 3)
    assert len(arch_newton(Poly([1, F(29, 10), F(29, 10), 1])).lower_edges) == 3
    with pytest.raises(ZeroPolynomial):
        arch_newton(Poly([0]))


def test_sparse_support():
    an = arch_newton(Poly([1, 0, 0, 1]))
    assert an.breakpoints == (0, 3)


def test_logconcavity_examples():
    assert logconcavity([1, 2, 1], strict=True) == (True, None)
    assert logconcavity([1, 1, 1]) == (True, None)
    assert logconcavity([1, 1, 1], strict=True) == (False, 1)
    assert logconcavity([1, 1, 2]) == (False, 1)
    with pytest.raises(NegativeEntry):
        logconcavity([1, -1, 1])


def test_cone_examples():
    v = cone_member(ConeSpec(ConeKind.C_K_SUPPORTING, 2), [1, 2, 1])
    assert v.status is Membership.BOUNDARY and v.tight == (1,)
    assert cone_member(ConeSpec(ConeKind.C_K_SUPPORTING, 3), [1, 9, 9, 1]).status \
        is Membership.INTERIOR
    assert cone_member(ConeSpec(ConeKind.C_K_PRIME, 3), [1, F(1, 9), F(1, 9), 1]).status \
        is Membership.INTERIOR
    assert cone_member(ConeSpec(ConeKind.C_K_SUPPORTING, 3), [1, F(29, 10), F(29, 10), 1]) \
        .status is Membership.OUTSIDE
    with pytest.raises(NonPositiveEntry):
        cone_member(ConeSpec(ConeKind.C_K, 2), [1, 0, 1])


def test_enumerate_subdivisions():
    assert [s.breakpoints for s in enumerate_subdivisions(3)] == \
        [(0, 3), (0, 1, 3), (0, 2, 3), (0, 1, 2, 3)]
    assert len(enumerate_subdivisions(2)) == 2
    assert len(enumerate_subdivisions(5)) == 16
    assert Subdivision.finest(4).breakpoints == (0, 1, 2, 3, 4)
    assert Subdivision.trivial(4).breakpoints == (0, 4)


@given(positive_vectors)
def test_strict_logconcave_iff_finest(a):
    k = len(a) - 1
    strict, _ = logconcavity(a, strict=True)
    an = arch_newton(Poly(a))
    # every index is a hull vertex, so the k unit segments are the lower edges
    assert strict == (len(an.lower_edges) == k)
    if strict:
        assert an.subdivision == Subdivision.finest(k)


@given(positive_vectors)
def test_hull_is_convex(a):
    an = arch_newton(Poly(a))
    b = an.breakpoints
    for i, j, l in zip(b, b[1:], b[2:]):
        assert a[i] ** (l - j) * a[l] ** (j - i) < a[j] ** (l - i)
    assert b[0] == 0 and b[-1] == len(a) - 1


@given(positive_vectors)
def test_supporting_cone_inside_logconcave_cone(a):
    k = len(a) - 1
    if cone_member(ConeSpec(ConeKind.C_K_SUPPORTING, k), a).status is Membership.INTERIOR:
        assert cone_member(ConeSpec(ConeKind.C_K, k), a).status is Membership.INTERIOR


@given(positive_vectors, pos_rationals, pos_rationals, st.sampled_from(list(ConeKind)))
def test_cones_invariant_under_geometric_scaling(a, c, q, kind):
    k = len(a) - 1
    b = [c * q ** j * x for j, x in enumerate(a)]
    assert cone_member(ConeSpec(kind, k), a) == cone_member(ConeSpec(kind, k), b)


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_si_witnesses_not_outside_supporting_cone(k):
    _, p = search_lambda(witness_si, k)
    assert cone_member(ConeSpec(ConeKind.C_K_SUPPORTING, k), p.coeffs).status \
        is not Membership.OUTSIDE


def test_convex_violating_heights_give_trivial_subdivision():
    an = arch_newton(Poly([1, F(1, 9), F(1, 9), 1]))
    assert an.subdivision == Subdivision.trivial(3)
