"""Exact real-root counting and the classes RR, SS, SI>= and II>=.

All decisions go through Sturm sequences over the integers; no tolerance is
involved anywhere in this module.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional

from . import _intpoly as ip
from .errors import NotRealRooted
from .polycore import Poly, SignPattern, require_nonzero


@dataclass(frozen=True)
class RootInterval:
    """An isolating interval.  ``lo == hi`` marks an exact rational root;
    otherwise the root lies in the open interval (lo, hi)."""

    lo: Fraction
    hi: Fraction
    multiplicity: int

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    def to_dict(self):
        return {"lo": str(self.lo), "hi": str(self.hi),
                "multiplicity": self.multiplicity}


@dataclass(frozen=True)
class RootReport:
    distinct_real: int
    total_real_with_mult: int
    isolating_intervals: tuple[RootInterval, ...]
    has_zero_root: bool
    zero_multiplicity: int
    degree: int

    def to_dict(self):
        return {
            "degree": self.degree,
            "distinct_real": self.distinct_real,
            "total_real_with_mult": self.total_real_with_mult,
            "has_zero_root": self.has_zero_root,
            "zero_multiplicity": self.zero_multiplicity,
            "isolating_intervals": [iv.to_dict() for iv in self.isolating_intervals],
        }


@dataclass(frozen=True)
class ClassFlags:
    in_RR: bool
    in_SS: bool
    in_SIgeq: bool
    in_IIgeq: bool
    si_witness: Optional[SignPattern] = None
    ii_witness: Optional[SignPattern] = None

    @property
    def witness(self) -> Optional[SignPattern]:
        return self.si_witness or self.ii_witness

    def to_dict(self):
        return {
            "in_RR": self.in_RR,
            "in_SS": self.in_SS,
            "in_SIgeq": self.in_SIgeq,
            "in_IIgeq": self.in_IIgeq,
            "si_witness": self.si_witness.to_text() if self.si_witness else None,
            "ii_witness": self.ii_witness.to_text() if self.ii_witness else None,
        }


def _int_coeffs(p: Poly):
    return ip.from_fractions(p.coeffs)


def _split_zero_root(a):
    m = 0
    while m < len(a) and a[m] == 0:
        m += 1
    return m, a[m:]


def cauchy_bound(a) -> Fraction:
    lead = abs(a[-1])
    return 1 + max(Fraction(abs(c), lead) for c in a[:-1])


def _isolate(chain, lo: Fraction, hi: Fraction, out: list):
    """Bisect (lo, hi] until every piece holds exactly one root."""
    stack = [(lo, hi, ip.var_at(chain, lo.numerator, lo.denominator),
              ip.var_at(chain, hi.numerator, hi.denominator))]
    sqf = chain[0]
    while stack:
        a, b, va, vb = stack.pop()
        n = va - vb
        if n == 0:
            continue
        if n == 1:
            if ip.sign_at(sqf, b.numerator, b.denominator) == 0:
                out.append((b, b))
            else:
                out.append((a, b))
            continue
        mid = (a + b) / 2
        vm = ip.var_at(chain, mid.numerator, mid.denominator)
        stack.append((mid, b, vm, vb))
        stack.append((a, mid, va, vm))


def root_report(p: Poly) -> RootReport:
    require_nonzero(p)
    a = _int_coeffs(p)
    m, rest = _split_zero_root(a)
    factors = ip.squarefree_decomposition(rest)
    sqf = [1]
    for f, _ in factors:
        sqf = _mul(sqf, f)
    sqf = ip.primitive(sqf)

    pieces: list[tuple[Fraction, Fraction]] = []
    if len(sqf) > 1:
        chain = ip.sturm_chain(sqf)
        bound = cauchy_bound(sqf)
        _isolate(chain, -bound, Fraction(0), pieces)
        _isolate(chain, Fraction(0), bound, pieces)
    pieces.sort()

    intervals = []
    total = m
    for lo, hi in pieces:
        mult = _multiplicity_in(factors, lo, hi)
        intervals.append(RootInterval(lo, hi, mult))
        total += mult
    return RootReport(
        distinct_real=len(intervals) + (1 if m else 0),
        total_real_with_mult=total,
        isolating_intervals=tuple(intervals),
        has_zero_root=m > 0,
        zero_multiplicity=m,
        degree=p.degree,
    )


def _mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _multiplicity_in(factors, lo, hi):
    for f, mult in factors:
        if lo == hi:
            if ip.sign_at(f, lo.numerator, lo.denominator) == 0:
                return mult
        elif ip.real_count_in(f, lo, hi) == 1:
            return mult
    raise AssertionError("isolated root not found in any square-free factor")


def real_root_count(p: Poly) -> int:
    """Number of real roots counted with multiplicity."""
    require_nonzero(p)
    return _count_with_mult(_int_coeffs(p))


def _count_with_mult(a, lo=None, hi=None):
    m, rest = _split_zero_root(a)
    zero_in = m if _contains_zero(lo, hi) else 0
    return zero_in + sum(mult * ip.real_count_in(f, lo, hi)
                         for f, mult in ip.squarefree_decomposition(rest))


def _contains_zero(lo, hi):
    return (lo is None or lo < 0) and (hi is None or hi >= 0)


def is_real_rooted(p: Poly) -> bool:
    require_nonzero(p)
    return ip.is_real_rooted(_int_coeffs(p))


def nonzero_root_signs(p: Poly) -> tuple[int, int]:
    """(positive, negative) real-root counts with multiplicity."""
    require_nonzero(p)
    a = _int_coeffs(p)
    if not ip.is_real_rooted(a):
        raise NotRealRooted(f"{p.to_text()} has non-real roots")
    return _signed_counts(a)


def _signed_counts(a):
    _, rest = _split_zero_root(a)
    pos = neg = 0
    for f, mult in ip.squarefree_decomposition(rest):
        pos += mult * ip.real_count_in(f, Fraction(0), None)
        neg += mult * ip.real_count_in(f, None, Fraction(0))
    return pos, neg


def _flip(a, signs):
    return ip.strip([s * c for s, c in zip(signs, a)])


def _bits_to_signs(n, free, mask):
    signs = [1] * n
    for bit, idx in enumerate(free):
        if mask >> bit & 1:
            signs[idx] = -1
    return signs


def si_patterns(k: int) -> Iterator[tuple[int, ...]]:
    """One sign pattern per orbit of {p -> -p, p(x) -> p(-x)}.

    s_0 and s_m are pinned to + where m is the largest odd index <= k: global
    negation moves s_0, and x -> -x moves s_m but not s_0.  This leaves
    2**(k-1) patterns for k >= 1.
    """
    n = k + 1
    if k == 0:
        yield (1,)
        return
    m = k if k % 2 else k - 1
    free = [i for i in range(1, n) if i != m]
    for mask in range(1 << len(free)):
        yield tuple(_bits_to_signs(n, free, mask))


def all_patterns(k: int) -> Iterator[tuple[int, ...]]:
    n = k + 1
    for mask in range(1 << n):
        yield tuple(_bits_to_signs(n, list(range(n)), mask))


def interior_patterns(k: int) -> Iterator[tuple[int, ...]]:
    n = k + 1
    free = list(range(1, k))
    for mask in range(1 << len(free)):
        yield tuple(_bits_to_signs(n, free, mask))


def _si_check(a, k, patterns=None):
    """First pattern whose flip is not real-rooted, or None."""
    for signs in patterns if patterns is not None else si_patterns(k):
        if not ip.is_real_rooted(_flip(a, signs)):
            return SignPattern(signs)
    return None


def _maximally_imaginary(a, k):
    return _count_with_mult(a) == k % 2


def _ii_check(a, k):
    for signs in interior_patterns(k):
        if not _maximally_imaginary(_flip(a, signs), k):
            return SignPattern(signs)
    return None


def classify(p: Poly, full_enumeration: bool = False) -> ClassFlags:
    """Membership flags for RR, SS, SI>= and II>=.

    ``full_enumeration`` checks all 2**(k+1) flips for SI>= instead of the
    2**(k-1) orbit representatives; the answers must agree.
    """
    require_nonzero(p)
    a = _int_coeffs(p)
    k = p.degree
    in_rr = ip.is_real_rooted(a)
    in_ss = False
    if in_rr:
        pos, neg = _signed_counts(a)
        in_ss = pos == 0 or neg == 0

    nonneg = all(c >= 0 for c in a)
    in_si = False
    si_witness = None
    if nonneg:
        if not in_rr:
            si_witness = SignPattern.identity(k + 1)
        else:
            pats = all_patterns(k) if full_enumeration else None
            si_witness = _si_check(a, k, pats)
            in_si = si_witness is None

    in_ii = False
    ii_witness = None
    if nonneg and a[0] > 0 and a[-1] > 0:
        ii_witness = _ii_check(a, k)
        in_ii = ii_witness is None
    return ClassFlags(in_rr, in_ss, in_si, in_ii, si_witness, ii_witness)


def is_si(p: Poly) -> bool:
    """SI>= membership only (skips the SS and II>= work)."""
    require_nonzero(p)
    a = _int_coeffs(p)
    if any(c < 0 for c in a) or not ip.is_real_rooted(a):
        return False
    return _si_check(a, p.degree) is None


def is_ii(p: Poly) -> bool:
    require_nonzero(p)
    a = _int_coeffs(p)
    if any(c < 0 for c in a) or a[0] <= 0 or a[-1] <= 0:
        return False
    return _ii_check(a, p.degree) is None
