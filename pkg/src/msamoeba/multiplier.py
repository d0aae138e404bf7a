"""Multiplier-sequence tests and the witness families used in the proofs."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .archgeo import logconcavity
from .errors import (BadIndex, DegreeTooLow, LambdaTooSmall, NotSI, PathBroken,
                     SignPrecondition)
from .polycore import GammaSeq, Poly, apply_diagonal, to_fraction, truncate
from .realroots import (classify, is_ii, is_real_rooted, is_si, nonzero_root_signs)

DEFAULT_N_MAX = 12


class Kind(str, enum.Enum):
    KIND1_FINITE = "kind1_finite"
    KIND2_FINITE = "kind2_finite"
    KIND3 = "kind3"
    THM2_LITERAL = "thm2_literal"
    THM2_NORMALIZED = "thm2_normalized"


@dataclass(frozen=True)
class MsVerdict:
    kind: Kind
    passed: bool
    witness: Optional[Poly] = None
    witness_image: Optional[Poly] = None
    failing_index: Optional[int] = None

    def to_dict(self):
        return {
            "kind": self.kind.value,
            "pass": self.passed,
            "witness": self.witness.to_text() if self.witness else None,
            "witness_image": self.witness_image.to_text() if self.witness_image else None,
            "failing_index": self.failing_index,
        }


def s_vector(k: int) -> tuple[int, ...]:
    """Exponents s_1..s_{k-1} with p_k = 1 + sum lambda^{s_j} x^j + x^k."""
    if k < 2:
        raise DegreeTooLow("s-vector needs k >= 2")
    m = k // 2
    out = []
    for j in range(1, k):
        jj = min(j, k - j)
        out.append(sum(range(m - jj + 1, m + 1)))
    return tuple(out)


def p_k(k: int, lam) -> Poly:
    lam = to_fraction(lam)
    return Poly([1] + [lam ** s for s in s_vector(k)] + [1])


def q_k(k: int, lam) -> Poly:
    lam = to_fraction(lam)
    return Poly([1] + [1 / lam] * (k - 1) + [1])


def witness_si(k: int, lam) -> Poly:
    """p_k(lambda), checked to be sign-independently real-rooted."""
    lam = to_fraction(lam)
    if lam <= 0:
        raise ValueError("lambda must be positive")
    p = p_k(k, lam)
    flags = classify(p)
    if not flags.in_SIgeq:
        raise LambdaTooSmall(f"p_{k}({lam}) is not SI: flip {flags.si_witness} fails",
                             flags.si_witness)
    return p


def witness_ii(k: int, lam) -> Poly:
    """q_k(lambda) = 1 + (x + ... + x^{k-1})/lambda + x^k, checked to be II>=."""
    lam = to_fraction(lam)
    if lam <= 1:
        raise ValueError("lambda must exceed 1")
    if k < 2:
        raise DegreeTooLow("k must be >= 2")
    q = q_k(k, lam)
    flags = classify(q)
    if not flags.in_IIgeq:
        raise LambdaTooSmall(f"q_{k}({lam}) is not II: flip {flags.ii_witness} fails",
                             flags.ii_witness)
    return q


def search_lambda(builder, k: int, start=2, max_doublings: int = 40):
    """Double lambda until builder(k, lambda) succeeds; returns (lambda, poly)."""
    lam = to_fraction(start)
    for _ in range(max_doublings):
        try:
            return lam, builder(k, lam)
        except LambdaTooSmall:
            lam *= 2
    raise LambdaTooSmall(f"no lambda up to {lam} works for k = {k}")


class Side(str, enum.Enum):
    NONE = "none"
    MINUS = "minus"
    PLUS = "plus"


def trinomial_pj(k: int, j: int, eps=0, side: Side | str = Side.NONE) -> Poly:
    """(k-j) - k(1 -/+ eps) x^j + j x^k."""
    side = Side(side)
    if not 1 <= j <= k - 1:
        raise BadIndex(f"need 1 <= j <= k-1, got j={j}, k={k}")
    eps = to_fraction(eps)
    if side is Side.NONE:
        mid = Fraction(k)
    elif side is Side.MINUS:
        if not 0 < eps <= 1:
            raise ValueError("minus side needs eps in (0, 1]")
        mid = k * (1 - eps)
    else:
        if eps <= 0:
            raise ValueError("plus side needs eps > 0")
        mid = k * (1 + eps)
    coeffs = [Fraction(0)] * (k + 1)
    coeffs[0] = Fraction(k - j)
    coeffs[j] = -mid
    coeffs[k] = Fraction(j)
    return Poly(coeffs)


def binomial_power(k: int) -> Poly:
    return Poly([1, 1]) ** k


def _require_nonneg(gamma: GammaSeq, kind):
    if any(g < 0 for g in gamma):
        raise SignPrecondition(f"{kind.value} needs a nonnegative sequence")


def _require_pos(gamma: GammaSeq, kind):
    if any(g <= 0 for g in gamma):
        raise SignPrecondition(f"{kind.value} needs a positive sequence")


def thm2_inequality(gamma: GammaSeq, j: int, normalized: bool) -> bool:
    """gamma_j^k <= (gamma_k/gamma_0)^j, or with gamma_j/gamma_0 on the left."""
    k = len(gamma) - 1
    g0, gj, gk = gamma[0], gamma[j], gamma[k]
    if normalized:
        return (gj / g0) ** k <= (gk / g0) ** j
    return gj ** k <= (gk / g0) ** j


def ms_check(gamma: GammaSeq, kind: Kind | str) -> MsVerdict:
    kind = Kind(kind)
    k = len(gamma) - 1
    if kind in (Kind.KIND1_FINITE, Kind.KIND2_FINITE):
        base = binomial_power(k)
        image = apply_diagonal(gamma, base)
        if image.is_zero:
            return MsVerdict(kind, False, base, image)
        flags = classify(image)
        ok = flags.in_SS if kind is Kind.KIND1_FINITE else flags.in_RR
        return MsVerdict(kind, ok, None if ok else base, None if ok else image)
    if kind is Kind.KIND3:
        _require_nonneg(gamma, kind)
        if any(g == 0 for g in gamma.entries[1:-1]):
            raise SignPrecondition("kind3 with interior zero entries is not handled")
        ok, j = logconcavity(gamma, strict=False)
        if ok:
            return MsVerdict(kind, True)
        n = j - 1
        w = Poly([0] * n + [1, 2, 1])
        return MsVerdict(kind, False, w, apply_diagonal(gamma, w), j)
    _require_pos(gamma, kind)
    normalized = kind is Kind.THM2_NORMALIZED
    for j in range(1, k):
        if not thm2_inequality(gamma, j, normalized):
            w = defeat_thm2(gamma, j)
            return MsVerdict(kind, False, w, apply_diagonal(gamma, w) if w else None, j)
    return MsVerdict(kind, True)


def defeat_thm2(gamma: GammaSeq, j: int, max_halvings: int = 60) -> Optional[Poly]:
    """A trinomial p^-_{j,eps} in II>= (up to interior flips) whose image is not.

    Only gamma_0, gamma_j, gamma_k act on the trinomial, so this is the
    construction with gamma' = (gamma_0, 1, .., 1, gamma_j, 1, .., 1, gamma_k).
    Returns None when no eps in (0, 1] works, which happens exactly when the
    normalized inequality holds at j.
    """
    k = len(gamma) - 1
    eps = Fraction(1, 2)
    for _ in range(max_halvings):
        w = trinomial_pj(k, j, eps, Side.MINUS)
        image = apply_diagonal(gamma, w)
        if is_ii(w.abs_coeffs()) and not is_ii(image.abs_coeffs()):
            return w
        eps /= 2
    return None


def preserves(gamma: GammaSeq, polys, predicate) -> tuple[bool, Optional[Poly]]:
    for p in polys:
        img = apply_diagonal(gamma, p)
        if img.is_zero or not predicate(img):
            return False, p
    return True, None


@dataclass
class Corollary1Report:
    turan: list[dict]
    truncations: list[dict]

    @property
    def passed(self) -> bool:
        return all(t["holds"] for t in self.turan) and \
            all(t["real_rooted"] and t["nonzero_roots_negative"] for t in self.truncations)

    def to_dict(self):
        return {"pass": self.passed, "turan": self.turan, "truncations": self.truncations}


def corollary1_check(p: Poly) -> Corollary1Report:
    """a_v^2 >= 4 a_{v-1} a_{v+1} and negative-rootedness of all truncations."""
    if not is_si(p):
        raise NotSI(f"{p.to_text()} is not in SI>=")
    a = p.coeffs
    k = p.degree
    turan = []
    for v in range(1, k):
        lhs, rhs = a[v] ** 2, 4 * a[v - 1] * a[v + 1]
        turan.append({"index": v, "lhs": str(lhs), "rhs": str(rhs),
                      "holds": lhs >= rhs, "equality": lhs == rhs})
    truncs = []
    for m in range(k):
        for n in range(m + 1, k + 1):
            t = truncate(p, m, n)
            if t.is_zero:
                truncs.append({"m": m, "n": n, "real_rooted": True,
                               "nonzero_roots_negative": True})
                continue
            rr = is_real_rooted(t)
            neg_only = rr and nonzero_root_signs(t)[0] == 0
            truncs.append({"m": m, "n": n, "real_rooted": rr,
                           "nonzero_roots_negative": neg_only})
    return Corollary1Report(turan, truncs)


@dataclass
class FiberReport:
    steps: int
    taus: list[str]
    base: Poly

    def to_dict(self):
        return {"steps": self.steps, "taus": self.taus, "base": self.base.to_text(),
                "pass": True}


def fiber_path_check(p: Poly, steps: int = 10) -> FiberReport:
    """p - a_0 tau stays in SI>= for tau in [0, 1]; at tau = 1, p/x is in SI>=_{k-1}."""
    if not is_si(p):
        raise NotSI(f"{p.to_text()} is not in SI>=")
    a0 = p.coeffs[0]
    if a0 <= 0:
        raise NotSI("the fiber path needs a_0 > 0")
    taus = []
    for i in range(steps + 1):
        tau = Fraction(i, steps)
        q = p - Poly([a0 * tau])
        if not is_si(q):
            raise PathBroken(f"p - a_0*{tau} leaves SI>=", tau)
        taus.append(str(tau))
    base = (p - Poly([a0])).shift_down()
    if not is_si(base):
        raise PathBroken("p/x at tau = 1 is not in SI>=_{k-1}", Fraction(1))
    return FiberReport(steps, taus, base)
