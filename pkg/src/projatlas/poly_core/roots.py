"""Real root isolation by Sturm sequences with bisection refinement."""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Optional

from .poly1 import Poly1, square_free_decomposition

DEFAULT_ROOT_TOL = 1e-12


class RealRoot(NamedTuple):
    value: float
    multiplicity: int
    exact: Optional[Fraction] = None

    @property
    def is_exact(self) -> bool:
        return self.exact is not None


def _int_coeffs(p: Poly1) -> list[int]:
    return [int(c) for c in p.primitive_integer().coeffs]


def _sign_dyadic(coeffs: list[int], num: int, shift: int) -> int:
    """Sign of p(num / 2**shift) for integer coefficients, using integers only."""
    # Horner on the homogenized form sum c_i num^i den^(d-i)
    den = 1 << shift
    acc = coeffs[-1]
    weight = 1
    for c in reversed(coeffs[:-1]):
        weight *= den
        acc = acc * num + c * weight
    return (acc > 0) - (acc < 0)


class _Dyadic(NamedTuple):
    num: int
    shift: int

    def as_fraction(self) -> Fraction:
        return Fraction(self.num, 1 << self.shift)

    def midpoint(self, other: "_Dyadic") -> "_Dyadic":
        k = max(self.shift, other.shift)
        n = (self.num << (k - self.shift)) + (other.num << (k - other.shift))
        return _Dyadic(n, k + 1)._reduced()

    def _reduced(self) -> "_Dyadic":
        n, k = self.num, self.shift
        while k > 0 and n % 2 == 0:
            n //= 2
            k -= 1
        return _Dyadic(n, k)


def sturm_sequence(p: Poly1) -> list[list[int]]:
    """Sturm chain of a square-free polynomial, each member scaled to integers.

    Every member is multiplied by a positive constant only, so sign counts are
    those of the classical chain p, p', -rem(p, p'), ...
    """
    chain = [p.primitive_integer(), p.derivative().primitive_integer()]
    while chain[-1].degree > 0:
        r = -(chain[-2] % chain[-1])
        if r.is_zero():
            break
        chain.append(r.primitive_integer())
    return [_int_coeffs(q) if not q.is_zero() else [0] for q in chain]


def _sign_changes(chain: list[list[int]], point: _Dyadic) -> int:
    signs = [s for s in (_sign_dyadic(c, point.num, point.shift) for c in chain) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sign_changes_at(p: Poly1, t: Fraction) -> int:
    """Number of sign variations of the Sturm chain of ``p`` at a rational point."""
    chain = [Poly1(c) for c in sturm_sequence(p)]
    signs = [s for s in (q.sign_at(t) for q in chain) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots_in(p: Poly1, a: Fraction, b: Fraction) -> int:
    """Number of distinct real roots of square-free ``p`` in the half-open interval (a, b]."""
    return sign_changes_at(p, Fraction(a)) - sign_changes_at(p, Fraction(b))


def _cauchy_shift(coeffs: list[int]) -> int:
    lead = abs(coeffs[-1])
    bound = 1 + max(Fraction(abs(c), lead) for c in coeffs[:-1])
    k = 0
    while (1 << k) <= bound:
        k += 1
    return k


def _isolate(p: Poly1) -> list[tuple[_Dyadic, _Dyadic]]:
    """Disjoint half-open dyadic intervals (a, b] each holding one root of square-free p."""
    chain = sturm_sequence(p)
    e = _cauchy_shift(chain[0])
    lo, hi = _Dyadic(-(1 << e), 0), _Dyadic(1 << e, 0)
    stack = [(lo, hi, _sign_changes(chain, lo), _sign_changes(chain, hi))]
    found = []
    while stack:
        a, b, va, vb = stack.pop()
        count = va - vb
        if count == 0:
            continue
        if count == 1:
            found.append((a, b))
            continue
        m = a.midpoint(b)
        vm = _sign_changes(chain, m)
        stack.append((a, m, va, vm))
        stack.append((m, b, vm, vb))
    found.sort(key=lambda ab: ab[0].as_fraction())
    return found


def _refine(p: Poly1, a: _Dyadic, b: _Dyadic, tol: float) -> tuple[float, Optional[Fraction]]:
    coeffs = _int_coeffs(p)
    if _sign_dyadic(coeffs, b.num, b.shift) == 0:
        return float(b.as_fraction()), b.as_fraction()
    left = _sign_dyadic(coeffs, a.num, a.shift)
    if left == 0:  # a is a root outside the interval; look just to its right
        deriv = _int_coeffs(p.derivative())
        left = _sign_dyadic(deriv, a.num, a.shift)
    while float(b.as_fraction() - a.as_fraction()) > tol:
        m = a.midpoint(b)
        s = _sign_dyadic(coeffs, m.num, m.shift)
        if s == 0:
            return float(m.as_fraction()), m.as_fraction()
        if s == left:
            a = m
        else:
            b = m
    mid = (a.as_fraction() + b.as_fraction()) / 2
    guess = Fraction(float(mid)).limit_denominator(10**6)
    if a.as_fraction() < guess <= b.as_fraction() and p(guess) == 0:
        return float(guess), guess
    return float(mid), None


def real_roots_univariate(p: Poly1, tol: float = DEFAULT_ROOT_TOL) -> list[RealRoot]:
    """All real roots of ``p`` sorted ascending, each with its multiplicity.

    Roots are isolated with Sturm sequences on the square-free factors and
    refined by bisection to an interval of width at most ``tol``. Rational
    roots with small denominators are detected and reported exactly.
    """
    if p.is_zero():
        raise ValueError("the zero polynomial has every number as a root")
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    roots: list[RealRoot] = []
    for factor, mult in square_free_decomposition(p):
        for a, b in _isolate(factor):
            value, exact = _refine(factor, a, b, tol)
            roots.append(RealRoot(value, mult, exact))
    roots.sort(key=lambda r: r.value)
    return roots
