"""Numerics on Amoeba(Delta_k): membership, sampling, Ronkin function, labels.

Everything here is floating point.  Delta_k is evaluated from its exact
monomial expansion in numpy ``longdouble``/``clongdouble`` (80-bit on x86-64)
with two phases pinned to zero by the two homogeneities, so the search space
for degree k is the (k-1)-torus of the interior phases.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

import numpy as np

from .archgeo import Subdivision, enumerate_subdivisions
from .discriminant import (MAX_SYMBOLIC_K, SymbolicPoly, newton_polytope_vertices,
                           symbolic_discriminant, vertex_exponent)
from .errors import (BadTolerances, DegenerateSample, DegreeTooLow, Unsupported,
                     ZeroCoordinate)
from .realroots import si_patterns

LD = np.longdouble
CLD = np.clongdouble
TWO_PI = 2 * np.pi

TOL_INSIDE = 1e-10
TOL_OUTSIDE = 1e-6
DEFAULT_GRID = 256
MAX_REFINE = 50
# cap on phase-grid points; per-dimension resolution shrinks for k >= 4
MAX_GRID_POINTS = 1 << 20


def slice_project(coords: Sequence[float]) -> np.ndarray:
    """x_j' = x_j - x_0 + (j/k)(x_0 - x_k); removes both homogeneities."""
    x = np.asarray(coords, dtype=LD)
    k = len(x) - 1
    j = np.arange(k + 1, dtype=LD)
    return x - x[0] + (j / k) * (x[0] - x[k])


@dataclass(frozen=True)
class LogPoint:
    coords: np.ndarray
    slice_form: np.ndarray = field(init=False)

    def __post_init__(self):
        c = np.asarray(self.coords, dtype=LD)
        if c.ndim != 1 or len(c) < 2:
            raise ValueError("a log point needs at least two coordinates")
        object.__setattr__(self, "coords", c)
        object.__setattr__(self, "slice_form", slice_project(c)[1:-1])

    @property
    def k(self) -> int:
        return len(self.coords) - 1

    @classmethod
    def from_slice(cls, slice_coords: Sequence[float]) -> "LogPoint":
        s = [float(v) for v in slice_coords]
        return cls(np.array([0.0, *s, 0.0], dtype=LD))

    def full_slice(self) -> np.ndarray:
        return np.concatenate([[LD(0)], self.slice_form, [LD(0)]])

    def to_list(self):
        return [float(v) for v in self.coords]


def _log_modulus(v) -> LD:
    if isinstance(v, (int, Fraction)):
        v = Fraction(v)
        if v == 0:
            raise ZeroCoordinate("Log|.| needs nonzero coordinates")
        return LD(math.log(abs(v.numerator))) - LD(math.log(v.denominator))
    m = abs(complex(v))
    if m == 0:
        raise ZeroCoordinate("Log|.| needs nonzero coordinates")
    return np.log(LD(m))


def log_abs(a: Sequence) -> LogPoint:
    """Coordinatewise log|a_j| for real, rational or complex entries."""
    return LogPoint(np.array([_log_modulus(v) for v in a], dtype=LD))


# -- vectorized Delta_k ---------------------------------------------------------

@dataclass(frozen=True)
class _DiscTable:
    k: int
    exps: np.ndarray      # (T, k+1) int
    logc: np.ndarray      # (T,) log|c|
    signc: np.ndarray     # (T,) sign of c
    abs_c: tuple          # exact |c| for reporting


@lru_cache(maxsize=None)
def _disc_table(k: int) -> _DiscTable:
    if k < 2:
        raise DegreeTooLow("amoeba numerics need k >= 2")
    if k > MAX_SYMBOLIC_K:
        raise Unsupported(f"amoeba numerics are limited to k <= {MAX_SYMBOLIC_K}")
    s = symbolic_discriminant(k)
    exps = np.array(list(s.terms.keys()), dtype=np.int64)
    coefs = list(s.terms.values())
    logc = np.array([math.log(abs(c)) for c in coefs], dtype=LD)
    signc = np.array([1 if c > 0 else -1 for c in coefs], dtype=LD)
    return _DiscTable(k, exps, logc, signc, tuple(abs(c) for c in coefs))


def _term_moduli(tab: _DiscTable, x_full: np.ndarray) -> np.ndarray:
    """|c_alpha| * exp(<alpha, x>) per term."""
    return np.exp(tab.logc + tab.exps.astype(LD) @ x_full.astype(LD))


def _delta_on_phases(tab: _DiscTable, mod: np.ndarray, phases: np.ndarray):
    """Delta at a_j = e^{x_j + i theta_j}, theta_0 = theta_k = 0.

    ``phases`` has shape (N, k-1).  Returns (Delta (N,), per-term values (N, T)).
    """
    free = tab.exps[:, 1:-1].astype(LD)            # (T, k-1)
    ang = phases.astype(LD) @ free.T                # (N, T)
    terms = (tab.signc * mod) * (np.cos(ang) + 1j * np.sin(ang)).astype(CLD)
    return terms.sum(axis=1), terms


def _screen_phases(tab: _DiscTable, mod: np.ndarray, phases: np.ndarray):
    """Double-precision |Delta| and Newton distance estimate on a phase grid."""
    free = tab.exps[:, 1:-1].astype(np.float64)
    m = (tab.signc * mod).astype(np.float64)
    terms = m * np.exp(1j * (phases.astype(np.float64) @ free.T))
    d = np.abs(terms.sum(axis=1))
    grad = np.abs(terms @ free)
    return d, d / (np.sqrt((grad ** 2).sum(axis=1)) + 1e-300)


def delta_normalized(k: int, slice_coords: Sequence[float], phases) -> np.ndarray:
    """|Delta| / sum |terms| at the slice point over the given phases."""
    tab = _disc_table(k)
    x = np.concatenate([[LD(0)], np.asarray(slice_coords, dtype=LD), [LD(0)]])
    mod = _term_moduli(tab, x)
    ph = np.atleast_2d(np.asarray(phases, dtype=LD))
    d, _ = _delta_on_phases(tab, mod, ph)
    return np.abs(d) / mod.sum()


def grid_per_dim(k: int, grid: int) -> int:
    dims = k - 1
    cap = int(round(MAX_GRID_POINTS ** (1.0 / dims)))
    return max(8, min(grid, cap))


def _phase_grid(n: int, dims: int) -> np.ndarray:
    ticks = np.arange(n, dtype=LD) * (LD(TWO_PI) / n)
    mesh = np.meshgrid(*([ticks] * dims), indexing="ij")
    return np.stack([m.ravel() for m in mesh], axis=1)


class Status(str, enum.Enum):
    INSIDE = "inside"
    OUTSIDE = "outside"
    UNCERTAIN = "uncertain"


@dataclass(frozen=True)
class MembershipVerdict:
    status: Status
    min_abs_delta: float
    refine_iters: int
    best_phases: tuple[float, ...] = ()

    def to_dict(self):
        return {"status": self.status.value, "min_abs_delta": self.min_abs_delta,
                "refine_iters": self.refine_iters,
                "best_phases": list(self.best_phases)}


def _local_minima(vals: np.ndarray, n: int, dims: int, count: int) -> np.ndarray:
    cube = vals.reshape((n,) * dims)
    mask = np.ones(cube.shape, dtype=bool)
    for ax in range(dims):
        mask &= cube <= np.roll(cube, 1, axis=ax)
        mask &= cube <= np.roll(cube, -1, axis=ax)
    idx = np.flatnonzero(mask.ravel())
    if idx.size == 0:
        idx = np.arange(vals.size)
    order = np.argsort(vals[idx].astype(np.float64), kind="stable")
    return idx[order[:count]]


def _refine(tab, mod, start: np.ndarray, iters: int):
    """Levenberg-Marquardt on (Re Delta, Im Delta) over the free phases."""
    free = tab.exps[:, 1:-1].astype(LD)
    theta = start.astype(LD).copy()
    d, terms = _delta_on_phases(tab, mod, theta[None, :])
    best = abs(d[0])
    mu = 1e-3
    used = 0
    for used in range(1, iters + 1):
        # dDelta/dtheta_j = i * sum_alpha alpha_j * term_alpha
        grad = 1j * (terms[0][:, None] * free).sum(axis=0)
        J = np.stack([grad.real, grad.imag]).astype(np.float64)
        r = np.array([d[0].real, d[0].imag], dtype=np.float64)
        JtJ = J.T @ J
        g = J.T @ r
        improved = False
        for _ in range(12):
            step = np.linalg.solve(JtJ + mu * np.diag(np.diag(JtJ) + 1e-30), -g)
            cand = theta + step.astype(LD)
            d2, terms2 = _delta_on_phases(tab, mod, cand[None, :])
            if abs(d2[0]) < best:
                theta, d, terms, best = cand, d2, terms2, abs(d2[0])
                mu = max(mu / 10, 1e-12)
                improved = True
                break
            mu *= 10
        if not improved or best == 0:
            break
    return theta, best, used


def amoeba_member(k: int, x: LogPoint | Sequence[float], grid: int = DEFAULT_GRID,
                  tol_inside: float = TOL_INSIDE, tol_outside: float = TOL_OUTSIDE,
                  max_iters: int = MAX_REFINE, starts: int = 8) -> MembershipVerdict:
    """Does the torus over a slice point meet the discriminant locus?

    ``min_abs_delta`` is |Delta| divided by the sum of the term moduli, which
    is constant on the torus, so the verdict is scale free.
    """
    if tol_inside >= tol_outside:
        raise BadTolerances("tol_inside must be below tol_outside")
    if k < 2:
        raise DegreeTooLow("k must be >= 2")
    pt = x if isinstance(x, LogPoint) else LogPoint.from_slice(x)
    if pt.k != k:
        raise ValueError(f"point has degree {pt.k}, expected {k}")
    tab = _disc_table(k)
    mod = _term_moduli(tab, pt.full_slice())
    scale = mod.sum()
    dims = k - 1
    n = grid_per_dim(k, grid)
    phases = _phase_grid(n, dims)
    vals = np.empty(len(phases), dtype=np.float64)
    dist = np.empty(len(phases), dtype=np.float64)
    chunk = 1 << 15
    for s in range(0, len(phases), chunk):
        # one Newton step |Delta| / |grad| estimates the distance to a zero
        vals[s:s + chunk], dist[s:s + chunk] = _screen_phases(tab, mod, phases[s:s + chunk])
    near = _local_minima(dist, n, dims, starts)
    low = _local_minima(vals, n, dims, starts)
    pairs = np.stack([near, low], axis=1).ravel() if len(near) == len(low) else \
        np.concatenate([near, low])
    seeds = list(dict.fromkeys(pairs.tolist()))
    best = LD(np.inf)
    best_theta = phases[0]
    total_iters = 0
    for idx in seeds:
        theta, val, used = _refine(tab, mod, phases[idx], max_iters)
        total_iters += used
        if val < best:
            best, best_theta = val, theta
        if best / scale <= tol_inside:
            break
    rel = float(best / scale)
    if rel <= tol_inside:
        status = Status.INSIDE
    elif rel >= tol_outside:
        status = Status.OUTSIDE
    else:
        status = Status.UNCERTAIN
    wrapped = tuple(float(t % TWO_PI) for t in best_theta)
    return MembershipVerdict(status, rel, total_iters, wrapped)


# -- sampling -------------------------------------------------------------------

def make_rng(seed: int) -> np.random.Generator:
    """Counter-based generator so results are reproducible for a seed."""
    return np.random.Generator(np.random.Philox(int(seed) & (2 ** 64 - 1)))


def _double_root_coeffs(t: np.ndarray, h: np.ndarray) -> np.ndarray:
    """Coefficients (ascending) of (x - t)^2 h(x), rows are samples."""
    n, dh = h.shape
    sq = np.stack([t * t, -2 * t, np.ones_like(t)], axis=1)
    out = np.zeros((n, dh + 2), dtype=np.complex128)
    for i in range(3):
        out[:, i:i + dh] += sq[:, i:i + 1] * h
    return out


def sample_amoeba(k: int, n: int, seed: int, spread: float = 3.0,
                  return_coeffs: bool = False):
    """Slice coordinates of n points of Amoeba(Delta_k).

    Each point is Log|.| of f = (x - t)^2 h(x) for a random complex double
    root t and random complex cofactor h of degree k-2, so every point lies
    on the discriminant locus by construction.
    """
    if k < 2:
        raise DegreeTooLow("k must be >= 2")
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = make_rng(seed)
    pts = np.empty((n, k - 1), dtype=np.float64)
    coeffs_out = np.empty((n, k + 1), dtype=np.complex128) if return_coeffs else None
    filled = 0
    attempts = 0
    while filled < n:
        attempts += 1
        if attempts > 100:
            raise DegenerateSample("could not draw nondegenerate samples")
        m = n - filled
        t = np.exp(rng.uniform(-spread, spread, m) + 1j * rng.uniform(0, TWO_PI, m))
        h = np.exp(rng.uniform(-spread, spread, (m, k - 1))
                   + 1j * rng.uniform(0, TWO_PI, (m, k - 1)))
        f = _double_root_coeffs(t, h)
        mods = np.abs(f)
        ok = np.all(mods > 0, axis=1) & np.all(np.isfinite(mods), axis=1)
        logs = np.log(mods[ok])
        sl = _slice_rows(logs)
        take = min(len(sl), m)
        pts[filled:filled + take] = sl[:take, 1:-1]
        if return_coeffs:
            coeffs_out[filled:filled + take] = f[ok][:take]
        filled += take
    return (pts, coeffs_out) if return_coeffs else pts


def sample_certificates(k: int, coeffs: np.ndarray) -> np.ndarray:
    """|Delta| / sum|terms| at each sampled complex coefficient vector.

    This bounds min_abs_delta of the sample's log point from above without a
    torus search; it is zero up to rounding for the double-root sampler.
    """
    tab = _disc_table(k)
    c = np.asarray(coeffs, dtype=np.complex128)
    logs = np.log(np.abs(c))
    ang = np.angle(c)
    e = tab.exps.astype(np.float64)
    mods = np.exp(tab.logc.astype(np.float64) + logs @ e.T)
    terms = tab.signc.astype(np.float64) * mods * np.exp(1j * (ang @ e.T))
    return np.abs(terms.sum(axis=1)) / mods.sum(axis=1)


def _slice_rows(logs: np.ndarray) -> np.ndarray:
    k = logs.shape[1] - 1
    j = np.arange(k + 1, dtype=np.float64)
    x0 = logs[:, :1]
    xk = logs[:, -1:]
    return logs - x0 + (j / k) * (x0 - xk)


# -- Ronkin function -----------------------------------------------------------

@dataclass(frozen=True)
class RonkinEstimate:
    value: float
    grid: int
    error_hint: float
    inside_flag: bool = False

    def to_dict(self):
        return {"value": self.value, "grid": self.grid,
                "error_hint": self.error_hint, "inside_flag": self.inside_flag}


def ronkin(poly: SymbolicPoly, x: Sequence[float], grid: int) -> float:
    """Torus average of log|poly| over all phases (trapezoidal rule)."""
    exps = np.array(list(poly.terms.keys()), dtype=np.int64).astype(LD)
    coefs = list(poly.terms.values())
    logc = np.array([math.log(abs(c)) for c in coefs], dtype=LD)
    sign = np.array([1 if c > 0 else -1 for c in coefs], dtype=LD)
    mod = np.exp(logc + exps @ np.asarray(x, dtype=LD))
    dims = poly.nvars
    phases = _phase_grid(grid, dims)
    total = LD(0)
    chunk = 1 << 16
    for s in range(0, len(phases), chunk):
        ang = phases[s:s + chunk] @ exps.T
        vals = ((sign * mod) * (np.cos(ang) + 1j * np.sin(ang))).sum(axis=1)
        total += np.log(np.abs(vals)).sum()
    return float(total / len(phases))


def _ronkin_slice(k: int, slice_coords, grid: int) -> tuple[float, float]:
    tab = _disc_table(k)
    x = np.concatenate([[LD(0)], np.asarray(slice_coords, dtype=LD), [LD(0)]])
    mod = _term_moduli(tab, x)
    phases = _phase_grid(grid, k - 1)
    total = LD(0)
    worst = LD(np.inf)
    chunk = 1 << 16
    for s in range(0, len(phases), chunk):
        d, _ = _delta_on_phases(tab, mod, phases[s:s + chunk])
        a = np.abs(d)
        worst = min(worst, a.min())
        total += np.log(a).sum()
    return float(total / len(phases)), float(worst / mod.sum())


def ronkin_estimate(k: int, x: LogPoint | Sequence[float], grid: int = 512) -> RonkinEstimate:
    """N_{Delta_k}(x) by trapezoidal quadrature over the free phases.

    Off the slice N picks up (k-1)(x_0 + x_k) from the homogeneities.
    ``error_hint`` is the change against the half-resolution grid.
    """
    pt = x if isinstance(x, LogPoint) else LogPoint.from_slice(x)
    if pt.k != k:
        raise ValueError(f"point has degree {pt.k}, expected {k}")
    n = grid_per_dim(k, grid)
    fine, worst = _ronkin_slice(k, pt.slice_form, n)
    coarse, _ = _ronkin_slice(k, pt.slice_form, max(n // 2, 4))
    offset = float((k - 1) * (pt.coords[0] + pt.coords[-1]))
    inside = worst < TOL_OUTSIDE
    return RonkinEstimate(fine + offset, n, abs(fine - coarse), bool(inside))


# -- dominance labels --------------------------------------------------------------

@dataclass(frozen=True)
class VertexTerm:
    subdivision: Subdivision
    exponent: tuple[int, ...]
    coefficient: int


@lru_cache(maxsize=None)
def vertex_terms(k: int) -> tuple[VertexTerm, ...]:
    """Vertex monomials of Delta_k matched to subdivisions of [0, k]."""
    if k > MAX_SYMBOLIC_K:
        raise Unsupported(f"vertex coefficients are extracted only for k <= {MAX_SYMBOLIC_K}")
    s = symbolic_discriminant(k)
    verts = set(newton_polytope_vertices(s).vertices)
    out = []
    for sub in enumerate_subdivisions(k):
        e = vertex_exponent(k, sub.breakpoints)
        if e not in verts:
            raise ArithmeticError(f"subdivision {sub.breakpoints} has no vertex {e}")
        out.append(VertexTerm(sub, e, s.coefficient(e)))
    if len(out) != len(verts):
        raise ArithmeticError("vertex/subdivision correspondence is not bijective")
    return tuple(out)


def dominance_scores(k: int, x_full: Sequence[float]) -> list[tuple[float, VertexTerm]]:
    xs = [float(v) for v in x_full]
    return [(math.log(abs(v.coefficient)) + sum(e * xi for e, xi in zip(v.exponent, xs)), v)
            for v in vertex_terms(k)]


def component_label(k: int, x: LogPoint | Sequence[float],
                    tie_tol: float = 1e-12) -> Optional[Subdivision]:
    """Subdivision whose vertex term log|c_v| + <v, x> dominates; None on a tie."""
    pt = x if isinstance(x, LogPoint) else LogPoint.from_slice(x)
    scores = sorted(dominance_scores(k, pt.coords), key=lambda s: -s[0])
    if len(scores) > 1 and scores[0][0] - scores[1][0] <= tie_tol:
        return None
    return scores[0][1].subdivision


def label_slice_points(k: int, pts: np.ndarray) -> np.ndarray:
    """Vectorized dominance label (subdivision bitmask) for slice points."""
    terms = vertex_terms(k)
    E = np.array([t.exponent[1:-1] for t in terms], dtype=np.float64)
    c = np.array([math.log(abs(t.coefficient)) for t in terms])
    scores = pts @ E.T + c
    return np.array([terms[i].subdivision.bitmask for i in scores.argmax(axis=1)])


# -- reflected discriminant components ---------------------------------------------

class UnionFind:
    """Union-find with path halving and union by size."""

    def __init__(self, size):
        self.parent = list(range(size))
        self.size = [1] * size

    def find(self, a):
        parent = self.parent
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return True


def _reflected_values(k: int, pts: np.ndarray):
    """Normalized Delta for every essential sign flip at real slice points.

    Delta is invariant under a -> -a and a_j -> (-1)^j a_j, so one flip per
    orbit suffices.  Returns an array of shape (N, 2**(k-1)).
    """
    tab = _disc_table(k)
    x = np.concatenate([np.zeros((len(pts), 1)), pts, np.zeros((len(pts), 1))], axis=1)
    mod = np.exp(x.astype(LD) @ tab.exps.T.astype(LD) + tab.logc)   # (N, T)
    scale = mod.sum(axis=1)
    cols = []
    for signs in si_patterns(k):
        tsign = np.prod(np.array(signs, dtype=np.int64)[None, :] ** tab.exps, axis=1)
        cols.append(((tab.signc * tsign) * mod).sum(axis=1) / scale)
    return np.stack(cols, axis=1).astype(np.float64)


@dataclass
class ComponentInfo:
    id: int
    cells: int
    representative: list[float]
    sign_vector: list[int]
    in_SIgeq: bool
    in_IIgeq: bool

    def to_dict(self):
        return {"id": self.id, "cells": self.cells,
                "representative": self.representative,
                "sign_vector": self.sign_vector,
                "in_SIgeq": self.in_SIgeq, "in_IIgeq": self.in_IIgeq}


def _label_grid(k, resolution, tol, lo, hi):
    dims = k - 1
    step = (hi - lo) / resolution
    ticks = lo + (np.arange(resolution) + 0.5) * step
    mesh = np.meshgrid(*([ticks] * dims), indexing="ij")
    pts = np.stack([m.ravel() for m in mesh], axis=1)
    vals = _reflected_values(k, pts)
    marked = np.all(np.abs(vals) >= tol, axis=1)
    code = (vals > 0).astype(np.int64) @ (1 << np.arange(vals.shape[1]))
    shape = (resolution,) * dims
    uf = UnionFind(len(pts))
    flat = np.arange(len(pts)).reshape(shape)
    mcube = marked.reshape(shape)
    ccube = code.reshape(shape)
    for ax in range(dims):
        a = [slice(None)] * dims
        b = [slice(None)] * dims
        a[ax] = slice(0, -1)
        b[ax] = slice(1, None)
        a, b = tuple(a), tuple(b)
        ok = mcube[a] & mcube[b] & (ccube[a] == ccube[b])
        for i, j in zip(flat[a][ok].tolist(), flat[b][ok].tolist()):
            uf.union(i, j)
    roots = np.array([uf.find(i) for i in range(len(pts))])
    return pts, vals, marked, code, roots


def _rational_coeffs(k, slice_pt):
    return [Fraction(1)] + [Fraction(math.exp(v)).limit_denominator(10 ** 9)
                            for v in slice_pt] + [Fraction(1)]


def count_reflected_components(k: int, resolution: int = 512, tol: float = 1e-9,
                               lo: float = -4.0, hi: float = 4.0,
                               min_fraction: float = 1e-3,
                               probes: Optional[dict] = None) -> dict:
    """Components of the positive slice minus the reflected real discriminant.

    Cells are centers of a uniform grid on (lo, hi)^(k-1) in log coordinates.
    A cell is marked when every essential flip keeps |Delta| / sum|terms| at
    or above ``tol``; adjacent marked cells with the same sign vector are
    merged.  ``probes`` maps names to slice points whose components are
    reported.
    """
    from .polycore import Poly
    from .realroots import classify

    if k not in (2, 3, 4):
        raise Unsupported("component counting is desk-scale: k in {2, 3, 4}")
    pts, vals, marked, code, roots = _label_grid(k, resolution, tol, lo, hi)
    total = len(pts)
    comps: dict[int, list[int]] = {}
    for i in np.flatnonzero(marked).tolist():
        comps.setdefault(int(roots[i]), []).append(i)
    depth = np.abs(vals).min(axis=1)
    infos = []
    order = sorted(comps.items(), key=lambda kv: min(kv[1]))
    root_to_id = {}
    for cid, (root, members) in enumerate(order):
        root_to_id[root] = cid
        m = np.array(members)
        rep_idx = int(m[np.argmax(depth[m])])
        rep = pts[rep_idx]
        flags = classify(Poly(_rational_coeffs(k, rep)))
        sv = [int(v) for v in np.sign(vals[rep_idx])]
        infos.append(ComponentInfo(cid, len(members), [float(v) for v in rep], sv,
                                   flags.in_SIgeq, flags.in_IIgeq))
    threshold = max(1, int(min_fraction * total))
    significant = [c for c in infos if c.cells >= threshold]
    report = {
        "k": k,
        "resolution": resolution,
        "domain": [lo, hi],
        "tol": tol,
        "cells": total,
        "marked_cells": int(marked.sum()),
        "raw_count": len(infos),
        "significant_count": len(significant),
        "significant_threshold_cells": threshold,
        "slice_adjusted_count": len(significant),
        "conjecture_2k": 2 ** k,
        "conjecture_matches": len(significant) == 2 ** k,
        "components": [c.to_dict() for c in infos if c.cells >= threshold],
        "si_components": [c.id for c in infos if c.in_SIgeq],
        "ii_components": [c.id for c in infos if c.in_IIgeq],
    }
    if probes:
        step = (hi - lo) / resolution
        found = {}
        for name, sp in probes.items():
            idx = np.clip(((np.asarray(sp) - lo) / step).astype(int), 0, resolution - 1)
            flat = int(np.ravel_multi_index(tuple(idx), (resolution,) * (k - 1)))
            found[name] = {
                "point": [float(v) for v in sp],
                "component": root_to_id.get(int(roots[flat])) if marked[flat] else None,
            }
        report["probes"] = found
    return report
