from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from conftest import coeff_lists, nonzero_int, rationals
from msamoeba.archgeo import enumerate_subdivisions
from msamoeba.errors import DegreeTooLow, EmptyPolynomial, Unsupported
from msamoeba.multiplier import trinomial_pj
from msamoeba.polycore import Poly
from msamoeba.discriminant import (SymbolicPoly, bareiss_det, discriminant_of,
                                   discriminant_value, newton_polytope_vertices,
                                   resultant, symbolic_discriminant, vertex_exponent)
from msamoeba.realroots import root_report

F = Fraction
X = sympy.Symbol("x")


def delta3(a0, a1, a2, a3):
    return (-27 * a0**2 * a3**2 + 18 * a0 * a1 * a2 * a3 + a1**2 * a2**2
            - 4 * a0 * a2**3 - 4 * a1**3 * a3)


def sympy_disc(coeffs):
    expr = sum(sympy.Rational(c.numerator, c.denominator) * X**j for j, c in enumerate(coeffs))
    return F(str(sympy.discriminant(expr, X)))


def test_value_examples():
    assert discriminant_value(Poly([1, 3, 3, 1])) == 0
    assert discriminant_value(Poly([1, 2, 1])) == 0
    assert discriminant_value(Poly([1, F(29, 10), F(29, 10), 1])) < 0
    assert discriminant_value(Poly([1, 9, 9, 1])) > 0
    with pytest.raises(DegreeTooLow):
        discriminant_value(Poly([1, 1]))


def test_resultant_and_det_examples():
    assert resultant(Poly([-1, 1]), Poly([-2, 1])) == -1
    assert resultant(Poly([1, 2, 1]), Poly([2, 2])) == 0
    assert bareiss_det([[2, 1], [1, 3]]) == 5
    assert bareiss_det([[0, 1], [1, 0]]) == -1


@given(st.lists(rationals, min_size=4, max_size=4).filter(lambda c: c[-1] != 0))
def test_matches_cubic_formula(c):
    assert discriminant_value(Poly(c)) == delta3(*c)


@given(coeff_lists(3, 7))
def test_matches_sympy(c):
    assert discriminant_value(Poly(c)) == sympy_disc(Poly(c).coeffs)


def test_symbolic_small():
    assert symbolic_discriminant(2).terms == {(0, 2, 0): 1, (1, 0, 1): -4}
    d3 = symbolic_discriminant(3).terms
    assert d3 == {(2, 0, 0, 2): -27, (1, 1, 1, 1): 18, (0, 2, 2, 0): 1,
                  (1, 0, 3, 0): -4, (0, 3, 0, 1): -4}
    with pytest.raises(Unsupported):
        symbolic_discriminant(6)


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_symbolic_agrees_with_value(k):
    import random

    rnd = random.Random(k)
    s = symbolic_discriminant(k)
    for _ in range(100):
        a = [F(rnd.randint(-9, 9), rnd.randint(1, 5)) for _ in range(k)] + [F(rnd.randint(1, 9))]
        assert s.evaluate(a) == discriminant_value(Poly(a))


@pytest.mark.parametrize("k,count", [(2, 2), (3, 4), (4, 8), (5, 16)])
def test_vertex_count_is_cube(k, count):
    poly = newton_polytope_vertices(symbolic_discriminant(k))
    assert len(poly.vertices) == count
    expected = {vertex_exponent(k, s.breakpoints) for s in enumerate_subdivisions(k)}
    assert set(poly.vertices) == expected


def test_interior_point_of_cubic():
    assert (1, 1, 1, 1) not in newton_polytope_vertices(symbolic_discriminant(3)).vertices


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_vertex_monomial_unit(k):
    s = symbolic_discriminant(k)
    assert abs(s.coefficient((0,) + (2,) * (k - 1) + (0,))) == 1


def test_quartic_four_terms():
    k = 4
    s = symbolic_discriminant(k)
    v0 = [0, 2, 2, 2, 0]
    for l in range(1, k):
        e = list(v0)
        e[l - 1] += 1
        e[l] -= 2
        e[l + 1] += 1
        assert abs(s.coefficient(e)) == 4


@pytest.mark.parametrize("k", range(2, 7))
def test_trinomials_are_degenerate(k):
    for j in range(1, k):
        assert discriminant_value(trinomial_pj(k, j)) == 0


@given(st.integers(2, 6), st.data())
def test_homogeneities(k, data):
    a = data.draw(st.lists(rationals, min_size=k + 1, max_size=k + 1).filter(lambda c: c[-1] != 0))
    lam = F(data.draw(nonzero_int), data.draw(st.integers(1, 5)))
    base = discriminant_of(a)
    assert discriminant_of([lam * x for x in a]) == lam ** (2 * (k - 1)) * base
    assert discriminant_of([lam ** j * x for j, x in enumerate(a)]) == lam ** (k * (k - 1)) * base


@given(coeff_lists(3, 6), st.booleans())
def test_zero_iff_repeated_root(c, square):
    p = Poly(c)
    if square:
        p = p * Poly(c[:2] if c[1] != 0 else [1, 1])
        p = Poly([1, 1]) * p if p.degree < 2 else p
    r = root_report(p)
    repeated = any(iv.multiplicity > 1 for iv in r.isolating_intervals) or r.zero_multiplicity > 1
    if discriminant_value(p) != 0:
        assert not repeated
    else:
        # a repeated root exists, possibly a complex pair
        expr = sum(sympy.Rational(x.numerator, x.denominator) * X**j for j, x in enumerate(p.coeffs))
        assert sympy.degree(sympy.gcd(expr, sympy.diff(expr, X)), X) >= 1


def test_json_roundtrip():
    s = symbolic_discriminant(4)
    assert SymbolicPoly.from_json(s.to_json()) == s
    with pytest.raises(EmptyPolynomial):
        SymbolicPoly.from_json("[]")
