"""Integer polynomial kernels: primitive PRS, Sturm chains, Yun decomposition.

Polynomials are plain lists of Python ints in ascending degree order with no
trailing zeros; ``[]`` is the zero polynomial.  Every normalization multiplies
by a *positive* constant so signs of values are preserved, which is all the
Sturm machinery needs.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm


def strip(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def from_fractions(coeffs):
    """Scale rational coefficients by the positive lcm of denominators."""
    den = 1
    for c in coeffs:
        den = lcm(den, Fraction(c).denominator)
    return primitive([int(Fraction(c) * den) for c in coeffs])


def primitive(a):
    a = strip(a)
    g = 0
    for c in a:
        g = gcd(g, c)
    if g > 1:
        a = [c // g for c in a]
    return a


def deriv(a):
    return strip([j * c for j, c in enumerate(a)][1:])


def reflect(a):
    return [c if j % 2 == 0 else -c for j, c in enumerate(a)]


def prem(a, b):
    """Remainder of a modulo b, scaled by a positive integer."""
    a = strip(a)
    b = strip(b)
    if b[-1] < 0:
        b = [-c for c in b]
    db = len(b) - 1
    lb = b[-1]
    while len(a) - 1 >= db and a:
        la = a[-1]
        shift = len(a) - 1 - db
        a = [lb * c for c in a]
        for i, c in enumerate(b):
            a[shift + i] -= la * c
        a = strip(a)
    return a


def pgcd(a, b):
    a = primitive(a)
    b = primitive(b)
    while b:
        a, b = b, primitive(prem(a, b))
    if a and a[-1] < 0:
        a = [-c for c in a]
    return a


def exact_div(a, b):
    """Quotient a / b over Q, returned primitive with positive scaling."""
    a = [Fraction(c) for c in strip(a)]
    b = strip(b)
    db = len(b) - 1
    q = [Fraction(0)] * max(len(a) - db, 1)
    while len(a) - 1 >= db and any(a):
        shift = len(a) - 1 - db
        t = a[-1] / b[-1]
        q[shift] = t
        for i, c in enumerate(b):
            a[shift + i] -= t * c
        a = strip(a)
    if any(a):
        raise ArithmeticError("division is not exact")
    return from_fractions(q)


def sturm_chain(a):
    """Sturm sequence of a; the last element is gcd(a, a') up to scale."""
    chain = [primitive(a)]
    d = primitive(deriv(chain[0]))
    if not d:
        return chain
    chain.append(d)
    while True:
        r = prem(chain[-2], chain[-1])
        if not r:
            return chain
        chain.append(primitive([-c for c in r]))


def sign_at(a, num, den=1):
    """Sign of a(num/den), den > 0, via the homogenized form."""
    n = len(a) - 1
    acc = 0
    dpow = 1
    for i in range(n, -1, -1):
        acc = acc * num + a[i] * dpow
        dpow *= den
    return (acc > 0) - (acc < 0)


def sign_at_inf(a, negative=False):
    s = (a[-1] > 0) - (a[-1] < 0)
    if negative and (len(a) - 1) % 2:
        s = -s
    return s


def variations(signs):
    count = 0
    prev = 0
    for s in signs:
        if s:
            if prev and s != prev:
                count += 1
            prev = s
    return count


def var_at(chain, num, den=1):
    return variations([sign_at(f, num, den) for f in chain])


def var_at_inf(chain, negative=False):
    return variations([sign_at_inf(f, negative) for f in chain])


def distinct_real_count(a):
    """Number of distinct real roots of a nonzero integer polynomial."""
    if len(a) <= 2:
        return len(a) - 1
    chain = sturm_chain(a)
    return var_at_inf(chain, True) - var_at_inf(chain, False)


def is_real_rooted(a):
    """True iff every complex root of a (counted with multiplicity) is real."""
    if len(a) <= 2:
        return True
    chain = sturm_chain(a)
    distinct = var_at_inf(chain, True) - var_at_inf(chain, False)
    return distinct == (len(a) - 1) - (len(chain[-1]) - 1)


def squarefree_decomposition(a):
    """List of (factor, multiplicity) with pairwise coprime square-free factors.

    g_0 = a, g_{i+1} = gcd(g_i, g_i'); h_i = g_{i-1}/g_i collects the roots of
    multiplicity >= i, and h_i/h_{i+1} those of multiplicity exactly i.
    """
    a = primitive(a)
    if len(a) <= 1:
        return []
    gs = [a]
    while len(gs[-1]) > 1:
        gs.append(pgcd(gs[-1], deriv(gs[-1])))
    hs = [exact_div(gs[i - 1], gs[i]) for i in range(1, len(gs))]
    hs.append([1])
    out = []
    for i in range(1, len(hs)):
        f = exact_div(hs[i - 1], hs[i])
        if len(f) > 1:
            out.append((f, i))
    return out


def real_count_in(a, lo=None, hi=None):
    """Distinct real roots of square-free a in (lo, hi]; None means infinite."""
    if len(a) <= 1:
        return 0
    chain = sturm_chain(a)
    v_lo = var_at_inf(chain, True) if lo is None else var_at(chain, lo.numerator, lo.denominator)
    v_hi = var_at_inf(chain, False) if hi is None else var_at(chain, hi.numerator, hi.denominator)
    return v_lo - v_hi
