"""Exact-rational univariate polynomials and diagonal operators.

Coefficients are stored in ascending degree order (``coeffs[j]`` is the
coefficient of ``x**j``) as :class:`fractions.Fraction`.  Nothing in this
module touches floating point.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

from .errors import BadRange, LengthMismatch, ParseError, ZeroPolynomial


def to_fraction(value) -> Fraction:
    """Coerce ints, Fractions and decimal/fraction strings to Fraction.

    Floats are rejected on purpose: ``2.9`` as a binary double is not 29/10.
    """
    if isinstance(value, bool):
        raise TypeError("bool is not a coefficient")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational literal {value!r}") from exc
    raise TypeError(f"cannot use {type(value).__name__} as an exact coefficient")


def _trim(coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    end = len(coeffs)
    while end > 1 and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


@dataclass(frozen=True, init=False)
class Poly:
    """A polynomial a_0 + a_1 x + ... + a_k x^k with rational coefficients."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable):
        vals = [to_fraction(c) for c in coeffs]
        if not vals:
            raise ParseError("empty coefficient list")
        object.__setattr__(self, "coeffs", _trim(vals))

    @classmethod
    def parse(cls, text: str) -> "Poly":
        return cls(parse_coefficients(text))

    @classmethod
    def monomial(cls, j: int, c=1) -> "Poly":
        return cls([0] * j + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] == 0

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1]

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, j):
        return self.coeffs[j]

    def __iter__(self):
        return iter(self.coeffs)

    def __add__(self, other: "Poly") -> "Poly":
        n = max(len(self), len(other))
        a = list(self.coeffs) + [Fraction(0)] * (n - len(self))
        b = list(other.coeffs) + [Fraction(0)] * (n - len(other))
        return Poly([x + y for x, y in zip(a, b)])

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, Poly):
            out = [Fraction(0)] * (len(self) + len(other) - 1)
            for i, a in enumerate(self.coeffs):
                if a:
                    for j, b in enumerate(other.coeffs):
                        out[i + j] += a * b
            return Poly(out)
        c = to_fraction(other)
        return Poly([c * a for a in self.coeffs])

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        out = Poly([1])
        for _ in range(n):
            out = out * self
        return out

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Poly":
        if self.degree == 0:
            return Poly([0])
        return Poly([j * c for j, c in enumerate(self.coeffs)][1:])

    def reflect(self) -> "Poly":
        """p(x) -> p(-x)."""
        return Poly([c if j % 2 == 0 else -c for j, c in enumerate(self.coeffs)])

    def abs_coeffs(self) -> "Poly":
        return Poly([abs(c) for c in self.coeffs])

    def shift_down(self) -> "Poly":
        """Divide by x; the constant coefficient must vanish."""
        if self.coeffs[0] != 0:
            raise ValueError("constant coefficient is nonzero")
        return Poly(self.coeffs[1:] or [0])

    def to_text(self) -> str:
        return format_coefficients(self.coeffs)

    def __str__(self):
        return self.to_text()


def require_nonzero(p: Poly) -> Poly:
    if p.is_zero:
        raise ZeroPolynomial("the zero polynomial has no real-rootedness class")
    return p


@dataclass(frozen=True, init=False)
class GammaSeq:
    """A finite sequence (gamma_0, ..., gamma_k) defining T_gamma."""

    entries: tuple[Fraction, ...]

    def __init__(self, entries: Iterable):
        vals = tuple(to_fraction(c) for c in entries)
        if not vals:
            raise ParseError("gamma sequence must have length >= 1")
        object.__setattr__(self, "entries", vals)

    @classmethod
    def parse(cls, text: str) -> "GammaSeq":
        return cls(parse_coefficients(text))

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, j):
        return self.entries[j]

    def __iter__(self):
        return iter(self.entries)

    def to_text(self) -> str:
        return format_coefficients(self.entries)


@dataclass(frozen=True)
class SignPattern:
    """Signs in {+1, -1}, one per coefficient."""

    signs: tuple[int, ...]

    def __post_init__(self):
        signs = tuple(int(s) for s in self.signs)
        if any(s not in (1, -1) for s in signs):
            raise ValueError("sign pattern entries must be +1 or -1")
        object.__setattr__(self, "signs", signs)

    @classmethod
    def from_text(cls, text: str) -> "SignPattern":
        table = {"+": 1, "-": -1}
        try:
            return cls(tuple(table[ch] for ch in text.replace(",", "").strip()))
        except KeyError as exc:
            raise ParseError(f"bad sign pattern {text!r}") from exc

    @classmethod
    def identity(cls, n: int) -> "SignPattern":
        return cls((1,) * n)

    def __len__(self):
        return len(self.signs)

    def to_text(self) -> str:
        return "".join("+" if s > 0 else "-" for s in self.signs)

    def __str__(self):
        return self.to_text()


def parse_coefficients(text: str) -> list[Fraction]:
    """Parse ``"n0/d0,n1/d1,..."`` (denominators optional, ascending degree)."""
    if text is None or not text.strip():
        raise ParseError("empty coefficient string")
    parts = text.split(",")
    try:
        return [Fraction(part.strip()) for part in parts]
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"cannot parse coefficient string {text!r}") from exc


def format_coefficients(coeffs: Sequence[Fraction]) -> str:
    return ",".join(str(Fraction(c)) for c in coeffs)


def apply_diagonal(gamma: GammaSeq, p: Poly) -> Poly:
    """T_gamma(p): multiply the coefficient of x^j by gamma_j."""
    if len(gamma) < len(p):
        raise LengthMismatch(
            f"gamma has {len(gamma)} entries but p has degree {p.degree}")
    return Poly([g * a for g, a in zip(gamma.entries, p.coeffs)])


def flip_signs(p: Poly, s: SignPattern) -> Poly:
    if len(s) != len(p):
        raise LengthMismatch(
            f"pattern length {len(s)} != number of coefficients {len(p)}")
    return Poly([sign * a for sign, a in zip(s.signs, p.coeffs)])


def hadamard_product(g1: GammaSeq, g2: GammaSeq) -> GammaSeq:
    if len(g1) != len(g2):
        raise LengthMismatch(f"lengths {len(g1)} and {len(g2)} differ")
    return GammaSeq([a * b for a, b in zip(g1.entries, g2.entries)])


def truncate(p: Poly, m: int, n: int) -> Poly:
    """Keep a_m x^m + ... + a_n x^n at their original indices."""
    if not (0 <= m < n <= p.degree):
        raise BadRange(f"need 0 <= m < n <= {p.degree}, got m={m}, n={n}")
    return Poly([0] * m + list(p.coeffs[m:n + 1]))
