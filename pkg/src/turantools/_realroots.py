"""Exact largest-root isolation and comparison for integer polynomials.

Polynomials are lists of integer (or Fraction) coefficients, lowest
degree first.  Everything here assumes the inputs are characteristic
polynomials of symmetric integer matrices: all roots are real algebraic
integers.  That gives one very convenient fact (a rational sample
point that is not an integer can never be a root) which lets the
bisection pick Sturm evaluation points without ever landing on a root.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def evaluate(p, x):
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def derivative(p):
    return [i * c for i, c in enumerate(p)][1:]


def _divmod(a, b):
    """Division with remainder over the rationals."""
    a = [Fraction(c) for c in trim(a)]
    b = [Fraction(c) for c in trim(b)]
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    r = a
    while len(r) >= len(b) and trim(r):
        shift = len(r) - len(b)
        factor = r[-1] / b[-1]
        q[shift] = factor
        for i, c in enumerate(b):
            r[shift + i] -= factor * c
        r = trim(r)
    return trim(q), r


def primitive(p):
    """Scale by a positive rational to coprime integers, positive lead."""
    p = trim(p)
    if not p:
        return []
    denom = 1
    for c in p:
        c = Fraction(c)
        denom = denom * c.denominator // gcd(denom, c.denominator)
    ints = [int(Fraction(c) * denom) for c in p]
    g = 0
    for c in ints:
        g = gcd(g, abs(c))
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return ints


def poly_gcd(a, b):
    """Greatest common divisor, returned primitive with positive lead."""
    a, b = trim(a), trim(b)
    while trim(b):
        _, r = _divmod(a, b)
        a, b = b, r
    return primitive(a)


def square_free(p):
    """p with repeated roots collapsed to simple ones (primitive)."""
    p = trim(p)
    if len(p) <= 2:
        return primitive(p)
    g = poly_gcd(p, derivative(p))
    if len(g) == 1:
        return primitive(p)
    q, r = _divmod(p, g)
    assert not trim(r), "square-free division must be exact"
    return primitive(q)


def sturm_chain(p):
    chain = [primitive(p)]
    d = primitive(derivative(p))
    if d:
        chain.append(d)
    while len(chain[-1]) > 1:
        _, r = _divmod(chain[-2], chain[-1])
        r = trim(r)
        if not r:
            break
        chain.append(primitive([-c for c in r]))
    return chain


def _variations(chain, x):
    signs = []
    for p in chain:
        v = evaluate(p, x)
        if v:
            signs.append(1 if v > 0 else -1)
    count = 0
    for a, b in zip(signs, signs[1:]):
        if a != b:
            count += 1
    return count


def count_roots(chain, lo, hi):
    """Distinct real roots in (lo, hi]; endpoints must not be roots."""
    return _variations(chain, lo) - _variations(chain, hi)


def root_bound(p):
    """Cauchy bound: every root lies in [-bound, bound]."""
    p = trim(p)
    lead = abs(Fraction(p[-1]))
    best = Fraction(0)
    for c in p[:-1]:
        best = max(best, abs(Fraction(c)) / lead)
    return best + 1


def _sample_between(lo, hi):
    """A rational in (lo, hi) that is not an integer.

    Valid sample point because the roots handled here are algebraic
    integers, so no non-integer rational can be a root.
    """
    mid = (lo + hi) / 2
    if mid.denominator != 1:
        return mid
    gap = hi - lo
    if gap > Fraction(2, 3):
        return mid + Fraction(1, 3)
    return mid + gap / 6


class LargestRoot:
    """Shrinking isolating interval (lo, hi] for a poly's largest root."""

    def __init__(self, coeffs):
        sf = square_free(coeffs)
        if len(sf) <= 1:
            raise ValueError("polynomial has no roots")
        self.poly = sf
        self.chain = sturm_chain(sf)
        b = root_bound(sf)
        self.lo = -b - Fraction(1, 3)
        self.hi = b + Fraction(1, 3)
        if count_roots(self.chain, self.lo, self.hi) < 1:
            raise ValueError("polynomial has no real roots")

    def width(self):
        return self.hi - self.lo

    def step(self):
        mid = _sample_between(self.lo, self.hi)
        if count_roots(self.chain, mid, self.hi) >= 1:
            self.lo = mid
        else:
            self.hi = mid

    def isolate(self):
        while count_roots(self.chain, self.lo, self.hi) > 1:
            self.step()

    def refine_to(self, width):
        self.isolate()
        while self.width() > width:
            self.step()
        return self.lo, self.hi


def compare_largest_roots(p, q) -> int:
    """-1, 0, or 1 as the largest real root of p is below, equal to, or
    above that of q.  Exact: equality is certified through the gcd, an
    ordering through disjoint isolating intervals.
    """
    ip, iq = LargestRoot(p), LargestRoot(q)
    if ip.poly == iq.poly:
        return 0
    ip.isolate()
    iq.isolate()
    g = poly_gcd(ip.poly, iq.poly)
    may_share = len(g) > 1
    gchain = sturm_chain(g) if may_share else None
    while True:
        if ip.hi <= iq.lo:
            return -1
        if iq.hi <= ip.lo:
            return 1
        if may_share:
            a = max(ip.lo, iq.lo)
            b = min(ip.hi, iq.hi)
            if a < b and count_roots(gchain, a, b) >= 1:
                # the shared root sits in both isolating intervals, so it
                # is the largest root of each
                return 0
        if ip.width() >= iq.width():
            ip.step()
        else:
            iq.step()
