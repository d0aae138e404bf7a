"""Archimedean Newton polygons, subdivisions of {0..k} and recession cones.

Heights -log|a_i| are never materialized.  Every slope or cone comparison is
rewritten as an exact comparison of power products of the |a_i|.
"""
from __future__ import annotations

import csv
import enum
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import NegativeEntry, NonPositiveEntry
from .polycore import GammaSeq, Poly, require_nonzero, to_fraction


@dataclass(frozen=True)
class Subdivision:
    breakpoints: tuple[int, ...]

    def __post_init__(self):
        b = tuple(int(x) for x in self.breakpoints)
        if len(b) < 2 or b[0] != 0 or any(x >= y for x, y in zip(b, b[1:])):
            raise ValueError(f"breakpoints must be 0 = b_0 < ... < b_m = k, got {b}")
        object.__setattr__(self, "breakpoints", b)

    @property
    def k(self) -> int:
        return self.breakpoints[-1]

    @property
    def cells(self) -> list[tuple[int, int]]:
        return list(zip(self.breakpoints, self.breakpoints[1:]))

    @property
    def bitmask(self) -> int:
        """Bit i-1 set iff i in {1..k-1} is a breakpoint."""
        return sum(1 << (b - 1) for b in self.breakpoints[1:-1])

    @classmethod
    def from_bitmask(cls, k: int, mask: int) -> "Subdivision":
        inner = [i for i in range(1, k) if mask >> (i - 1) & 1]
        return cls((0, *inner, k))

    @classmethod
    def finest(cls, k: int) -> "Subdivision":
        return cls(tuple(range(k + 1)))

    @classmethod
    def trivial(cls, k: int) -> "Subdivision":
        return cls((0, k))

    def to_json(self) -> str:
        return json.dumps(list(self.breakpoints))


def enumerate_subdivisions(k: int) -> list[Subdivision]:
    if k < 1:
        raise ValueError("k must be >= 1")
    return [Subdivision.from_bitmask(k, mask) for mask in range(1 << (k - 1))]


@dataclass(frozen=True)
class ArchNewton:
    degree: int
    support: tuple[int, ...]
    moduli: tuple[Fraction, ...]
    lower_vertices: tuple[int, ...]

    @property
    def lower_edges(self) -> list[tuple[int, int]]:
        v = self.lower_vertices
        return list(zip(v, v[1:]))

    @property
    def breakpoints(self) -> tuple[int, ...]:
        return self.lower_vertices

    @property
    def subdivision(self) -> Subdivision:
        """Induced subdivision of {0..k}; needs a_0 != 0."""
        if self.lower_vertices[0] != 0:
            raise ValueError("a_0 = 0: the hull does not reach index 0")
        return Subdivision(self.lower_vertices)

    @property
    def interior_breakpoints(self) -> int:
        return max(len(self.lower_vertices) - 2, 0)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["index", "numerator", "denominator", "lower_vertex"])
        lower = set(self.lower_vertices)
        for i, m in zip(self.support, self.moduli):
            w.writerow([i, m.numerator, m.denominator, int(i in lower)])
        return buf.getvalue()

    def to_dict(self):
        return {
            "support": list(self.support),
            "lower_vertices": list(self.lower_vertices),
            "lower_edges": [list(e) for e in self.lower_edges],
            "breakpoints": list(self.lower_vertices),
        }


def _below_chord(i, mi, j, mj, l, ml) -> int:
    """Compare point j against the chord from i to l (i < j < l).

    Returns +1 if j lies strictly below (bowed), 0 if on the chord, -1 above.
    Height -log m below the chord  <=>  m_j^(l-i) > m_i^(l-j) * m_l^(j-i).
    """
    lhs = mj ** (l - i)
    rhs = mi ** (l - j) * ml ** (j - i)
    return (lhs > rhs) - (lhs < rhs)


def arch_newton(p: Poly) -> ArchNewton:
    """Lower hull of {(i, -log|a_i|)} via a monotone chain with exact tests.

    Collinear points are dropped so every edge is a maximal segment.
    """
    require_nonzero(p)
    support = tuple(i for i, c in enumerate(p.coeffs) if c != 0)
    moduli = tuple(abs(p.coeffs[i]) for i in support)
    hull: list[int] = []
    for idx in range(len(support)):
        while len(hull) >= 2:
            i, j = hull[-2], hull[-1]
            if _below_chord(support[i], moduli[i], support[j], moduli[j],
                            support[idx], moduli[idx]) > 0:
                break
            hull.pop()
        hull.append(idx)
    return ArchNewton(p.degree, support, moduli, tuple(support[h] for h in hull))


def logconcavity(gamma: GammaSeq | Sequence, strict: bool = False):
    """(ok, first failing interior index or None) for gamma_j^2 >= g_{j-1} g_{j+1}."""
    g = list(gamma.entries if isinstance(gamma, GammaSeq) else map(to_fraction, gamma))
    if any(x < 0 for x in g):
        raise NegativeEntry("log-concavity is tested on nonnegative sequences")
    for j in range(1, len(g) - 1):
        lhs, rhs = g[j] * g[j], g[j - 1] * g[j + 1]
        if lhs < rhs or (strict and lhs == rhs):
            return False, j
    return True, None


class ConeKind(str, enum.Enum):
    C_K = "C_k"
    C_K_SUPPORTING = "C_k_supporting"
    C_K_PRIME = "C_k_prime"


@dataclass(frozen=True)
class ConeSpec:
    kind: ConeKind
    k: int


class Membership(str, enum.Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


@dataclass(frozen=True)
class ConeVerdict:
    status: Membership
    tight: tuple[int, ...]
    violated: tuple[int, ...]

    def to_dict(self):
        return {"status": self.status.value, "tight": list(self.tight),
                "violated": list(self.violated)}


def cone_inequalities(c: ConeSpec, a: Sequence[Fraction]):
    """Yield (index, lhs, rhs) with membership meaning lhs >= rhs."""
    k = c.k
    if c.kind is ConeKind.C_K:
        for l in range(1, k):
            yield l, a[l] ** 2, a[l - 1] * a[l + 1]
    elif c.kind is ConeKind.C_K_SUPPORTING:
        for l in range(1, k):
            yield l, a[l] ** 2, 4 * a[l - 1] * a[l + 1]
    else:
        # k x_j <= (k-j) x_0 + j x_k, which is k x_j <= j (x_k - x_0) once x_0 = 0
        for j in range(1, k):
            yield j, a[0] ** (k - j) * a[k] ** j, a[j] ** k


def cone_member(c: ConeSpec, a: Sequence) -> ConeVerdict:
    vals = [to_fraction(x) for x in a]
    if len(vals) != c.k + 1:
        raise ValueError(f"need {c.k + 1} entries for k = {c.k}, got {len(vals)}")
    if any(x <= 0 for x in vals):
        raise NonPositiveEntry("cone membership is defined for positive vectors")
    tight, violated = [], []
    for idx, lhs, rhs in cone_inequalities(ConeSpec(ConeKind(c.kind), c.k), vals):
        if lhs == rhs:
            tight.append(idx)
        elif lhs < rhs:
            violated.append(idx)
    if violated:
        status = Membership.OUTSIDE
    elif tight:
        status = Membership.BOUNDARY
    else:
        status = Membership.INTERIOR
    return ConeVerdict(status, tuple(tight), tuple(violated))


def cone_margins_log(kind: ConeKind, k: int, x: Sequence[float]) -> list[float]:
    """Float slack of each defining inequality at a log point (>= 0 inside)."""
    from math import log

    if kind is ConeKind.C_K:
        return [2 * x[l] - x[l - 1] - x[l + 1] for l in range(1, k)]
    if kind is ConeKind.C_K_SUPPORTING:
        return [2 * x[l] - x[l - 1] - x[l + 1] - log(4) for l in range(1, k)]
    return [(k - j) * x[0] + j * x[k] - k * x[j] for j in range(1, k)]
