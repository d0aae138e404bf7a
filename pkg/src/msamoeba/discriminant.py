"""Resultants, discriminants of a_0 + ... + a_k x^k, and Newt(Delta_k).

Sign convention: Delta_k = (-1)^(k(k-1)/2) Res(p, p') / a_k, which for k = 3
gives  -27 a0^2 a3^2 + 18 a0 a1 a2 a3 + a1^2 a2^2 - 4 a0 a2^3 - 4 a1^3 a3.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .errors import DegreeTooLow, EmptyPolynomial, Unsupported
from .polycore import Poly, require_nonzero

MAX_SYMBOLIC_K = 5


def sylvester_matrix(p: Poly, q: Poly) -> list[list[Fraction]]:
    """Rows of shifted coefficient vectors, highest degree first."""
    m, n = p.degree, q.degree
    size = m + n
    pd = list(reversed(p.coeffs))
    qd = list(reversed(q.coeffs))
    rows = []
    for i in range(n):
        rows.append([Fraction(0)] * i + pd + [Fraction(0)] * (size - m - 1 - i))
    for i in range(m):
        rows.append([Fraction(0)] * i + qd + [Fraction(0)] * (size - n - 1 - i))
    return rows


def bareiss_det(matrix) -> Fraction:
    """Fraction-free Gaussian elimination; exact over any field of fractions."""
    a = [list(row) for row in matrix]
    n = len(a)
    if n == 0:
        return Fraction(1)
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def resultant(p: Poly, q: Poly) -> Fraction:
    require_nonzero(p)
    require_nonzero(q)
    if p.degree == 0 and q.degree == 0:
        return Fraction(1)
    return bareiss_det(sylvester_matrix(p, q))


def _disc_sign(k: int) -> int:
    return -1 if (k * (k - 1) // 2) % 2 else 1


def discriminant_value(p: Poly) -> Fraction:
    require_nonzero(p)
    k = p.degree
    if k < 2:
        raise DegreeTooLow(f"discriminant needs degree >= 2, got {k}")
    return _disc_sign(k) * resultant(p, p.derivative()) / p.leading


def discriminant_of(coeffs: Iterable) -> Fraction:
    """Delta_k at a coefficient vector whose length fixes k.

    Unlike :func:`discriminant_value` this does not drop a vanishing a_k, so it
    is the polynomial function Delta_k(a_0, ..., a_k) everywhere.
    """
    a = [Fraction(c) for c in coeffs]
    k = len(a) - 1
    if k < 2:
        raise DegreeTooLow(f"discriminant needs k >= 2, got {k}")
    if a[-1] != 0:
        return discriminant_value(Poly(a))
    sym = symbolic_discriminant(k) if k <= MAX_SYMBOLIC_K else None
    if sym is not None:
        return sym.evaluate(a)
    raise Unsupported("leading coefficient zero and k beyond symbolic range")


# -- symbolic expansion ------------------------------------------------------

@dataclass(frozen=True)
class SymbolicPoly:
    """Sparse multivariate polynomial with integer coefficients."""

    terms: Mapping[tuple[int, ...], int]
    nvars: int

    def __post_init__(self):
        clean = {e: c for e, c in self.terms.items() if c != 0}
        for e in clean:
            if len(e) != self.nvars:
                raise ValueError(f"exponent {e} does not have {self.nvars} entries")
        object.__setattr__(self, "terms", dict(sorted(clean.items())))

    def __len__(self):
        return len(self.terms)

    def coefficient(self, exponents) -> int:
        return self.terms.get(tuple(exponents), 0)

    def evaluate(self, point) -> Fraction:
        total = Fraction(0)
        for e, c in self.terms.items():
            term = Fraction(c)
            for x, k in zip(point, e):
                if k:
                    term *= Fraction(x) ** k
            total += term
        return total

    def to_records(self):
        return [{"exponents": list(e), "coefficient": str(c)}
                for e, c in self.terms.items()]

    def to_json(self) -> str:
        return json.dumps(self.to_records(), separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "SymbolicPoly":
        records = json.loads(text)
        if not records:
            raise EmptyPolynomial("no terms")
        nvars = len(records[0]["exponents"])
        return cls({tuple(r["exponents"]): int(r["coefficient"]) for r in records}, nvars)


def _padd(a: dict, b: dict, sign=1) -> dict:
    out = dict(a)
    for e, c in b.items():
        v = out.get(e, 0) + sign * c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def _pmul(a: dict, b: dict) -> dict:
    out: dict = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            v = out.get(e, 0) + c1 * c2
            if v:
                out[e] = v
            else:
                out.pop(e)
    return out


def _generic_sylvester(k: int):
    """Sylvester matrix of a_0+...+a_k x^k and its derivative, entries as dicts."""
    nv = k + 1

    def var(j, c=1):
        e = [0] * nv
        e[j] = 1
        return {tuple(e): c}

    p_desc = [var(j) for j in range(k, -1, -1)]
    dp_desc = [var(j, j) for j in range(k, 0, -1)]
    size = 2 * k - 1
    rows = []
    for i in range(k - 1):
        rows.append([{}] * i + p_desc + [{}] * (size - (k + 1) - i))
    for i in range(k):
        rows.append([{}] * i + dp_desc + [{}] * (size - k - i))
    return rows


@lru_cache(maxsize=None)
def symbolic_discriminant(k: int) -> SymbolicPoly:
    """Full monomial expansion of Delta_k for 2 <= k <= 5.

    Determinant by Laplace expansion along rows with the minors memoized on
    the set of remaining columns; the Sylvester matrix is sparse enough that
    this stays small for a 9x9 matrix.
    """
    if k < 2:
        raise DegreeTooLow(f"k must be >= 2, got {k}")
    if k > MAX_SYMBOLIC_K:
        raise Unsupported(f"symbolic expansion is capped at k = {MAX_SYMBOLIC_K}")
    rows = _generic_sylvester(k)
    n = len(rows)
    memo: dict[int, dict] = {}

    def minor(r: int, cols: int) -> dict:
        if r == n:
            return {(0,) * (k + 1): 1}
        if cols in memo:
            return memo[cols]
        acc: dict = {}
        pos = 0
        for c in range(n):
            if cols >> c & 1:
                entry = rows[r][c]
                if entry:
                    sub = minor(r + 1, cols & ~(1 << c))
                    if sub:
                        acc = _padd(acc, _pmul(entry, sub), -1 if pos % 2 else 1)
                pos += 1
        memo[cols] = acc
        return acc

    res = minor(0, (1 << n) - 1)
    sign = _disc_sign(k)
    terms = {}
    for e, c in res.items():
        if e[k] < 1:
            raise ArithmeticError("Res(p, p') is not divisible by a_k")
        e2 = e[:k] + (e[k] - 1,)
        terms[e2] = sign * c
    return SymbolicPoly(terms, k + 1)


def monomial_count(k: int) -> int:
    return len(symbolic_discriminant(k))


# -- Newton polytope ----------------------------------------------------------

@dataclass(frozen=True)
class LatticePolytope:
    points: tuple[tuple[int, ...], ...]
    vertices: tuple[tuple[int, ...], ...]


def _in_convex_hull(target, others) -> bool:
    """Exact phase-1 simplex: is target a convex combination of others?

    Constraints  sum_w lam_w * w = target,  sum_w lam_w = 1,  lam >= 0.
    Bland's rule keeps the pivoting finite.
    """
    if not others:
        return False
    m = len(target) + 1
    ncols = len(others)
    rows = []
    for i in range(m):
        if i < len(target):
            row = [Fraction(w[i]) for w in others]
            rhs = Fraction(target[i])
        else:
            row = [Fraction(1)] * ncols
            rhs = Fraction(1)
        if rhs < 0:
            row = [-x for x in row]
            rhs = -rhs
        art = [Fraction(0)] * m
        art[i] = Fraction(1)
        rows.append(row + art + [rhs])
    total = ncols + m
    basis = [ncols + i for i in range(m)]
    # objective: minimize the sum of artificials, reduced costs over columns
    cost = [Fraction(0)] * (total + 1)
    for row in rows:
        for j in range(total + 1):
            cost[j] -= row[j]
    for i in range(m):
        cost[ncols + i] += 1
    while True:
        enter = next((j for j in range(total) if cost[j] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i, row in enumerate(rows):
            if row[enter] > 0:
                ratio = row[-1] / row[enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            break
        piv = rows[leave][enter]
        rows[leave] = [x / piv for x in rows[leave]]
        for i in range(m):
            if i != leave and rows[i][enter] != 0:
                f = rows[i][enter]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[leave])]
        f = cost[enter]
        cost = [x - f * y for x, y in zip(cost, rows[leave])]
        basis[leave] = enter
    return -cost[-1] == 0


def newton_polytope_vertices(s: SymbolicPoly) -> LatticePolytope:
    points = tuple(s.terms.keys())
    if not points:
        raise EmptyPolynomial("polynomial has no terms")
    vertices = []
    for i, pt in enumerate(points):
        others = points[:i] + points[i + 1:]
        if not _in_convex_hull(pt, others):
            vertices.append(pt)
    return LatticePolytope(points, tuple(vertices))


def vertex_exponent(k: int, breakpoints) -> tuple[int, ...]:
    """Exponent of the vertex monomial of Delta_k for a subdivision of [0, k].

    Each point i gets the total length of the cells containing it; the
    endpoints 0 and k then lose one.  The finest subdivision gives
    (0, 2, ..., 2, 0) and the trivial one (k-1, 0, ..., 0, k-1).
    """
    bps = list(breakpoints)
    phi = [0] * (k + 1)
    for lo, hi in zip(bps, bps[1:]):
        phi[lo] += hi - lo
        phi[hi] += hi - lo
    phi[0] -= 1
    phi[k] -= 1
    return tuple(phi)
