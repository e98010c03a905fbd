"""Dense univariate polynomials with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Union

Number = Union[int, Fraction]


def _as_fraction(value: Number) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"exact coefficient expected, got {type(value).__name__}")


class Poly1:
    """Univariate polynomial ``c[0] + c[1] t + ... + c[d] t^d`` over the rationals.

    Instances are immutable. The leading coefficient is nonzero unless the
    polynomial is zero, in which case ``coeffs`` is empty and ``degree`` is -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly1 is immutable")

    @classmethod
    def constant(cls, c: Number) -> Poly1:
        return cls([c])

    @classmethod
    def monomial(cls, k: int, c: Number = 1) -> Poly1:
        return cls([0] * k + [c])

    @classmethod
    def from_roots(cls, roots: Iterable[Number]) -> Poly1:
        p = cls([1])
        for r in roots:
            p = p * cls([-_as_fraction(r), 1])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly1):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly1([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(("Poly1", self.coeffs))

    def __repr__(self):
        return f"Poly1({[str(c) for c in self.coeffs]})"

    def __neg__(self) -> Poly1:
        return Poly1(-c for c in self.coeffs)

    def __add__(self, other) -> Poly1:
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly1(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __sub__(self, other) -> Poly1:
        return self + (-_coerce(other))

    def __rsub__(self, other) -> Poly1:
        return _coerce(other) - self

    def __mul__(self, other) -> Poly1:
        if isinstance(other, (int, Fraction)):
            return Poly1(c * other for c in self.coeffs)
        other = _coerce(other)
        if self.is_zero() or other.is_zero():
            return Poly1()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly1(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly1:
        if k < 0:
            raise ValueError("negative exponent")
        result, base = Poly1([1]), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other: Poly1):
        other = _coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly1(), self
        quot = [Fraction(0)] * (dq + 1)
        lead = other.coeffs[-1]
        for k in range(dq, -1, -1):
            c = rem[k + len(other.coeffs) - 1] / lead
            quot[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return Poly1(quot), Poly1(rem[: len(other.coeffs) - 1])

    def __floordiv__(self, other) -> Poly1:
        return divmod(self, other)[0]

    def __mod__(self, other) -> Poly1:
        return divmod(self, other)[1]

    def __call__(self, t):
        """Horner evaluation; exact for rational ``t``, float for float ``t``."""
        acc = 0 if not isinstance(t, float) else 0.0
        if isinstance(t, float):
            for c in reversed(self.coeffs):
                acc = acc * t + float(c)
            return acc
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def derivative(self) -> Poly1:
        return Poly1(k * c for k, c in enumerate(self.coeffs) if k > 0)

    def monic(self) -> Poly1:
        if self.is_zero():
            return self
        return Poly1(c / self.leading for c in self.coeffs)

    def primitive_integer(self) -> Poly1:
        """Positive rational multiple with coprime integer coefficients.

        The sign is preserved, so sign evaluations are unaffected.
        """
        if self.is_zero():
            return self
        den = lcm(*(c.denominator for c in self.coeffs))
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = gcd(g, v)
        return Poly1(v // g for v in ints)

    def sign_at(self, t: Fraction) -> int:
        v = self(t)
        return (v > 0) - (v < 0)

    def sign_at_infinity(self, direction: int) -> int:
        """Sign of p(t) as t tends to +inf (direction=1) or -inf (direction=-1)."""
        if self.is_zero():
            return 0
        s = 1 if self.leading > 0 else -1
        if direction < 0 and self.degree % 2 == 1:
            s = -s
        return s


def _coerce(value) -> Poly1:
    if isinstance(value, Poly1):
        return value
    if isinstance(value, (int, Fraction)):
        return Poly1([value])
    raise TypeError(f"cannot combine Poly1 with {type(value).__name__}")


def poly1_gcd(a: Poly1, b: Poly1) -> Poly1:
    """Monic greatest common divisor (zero only when both inputs are zero)."""
    a, b = a.primitive_integer(), b.primitive_integer()
    while not b.is_zero():
        a, b = b, (a % b).primitive_integer()
    return a.monic()


def square_free_part(p: Poly1) -> Poly1:
    if p.degree <= 0:
        return p.monic()
    return (p // poly1_gcd(p, p.derivative())).monic()


def square_free_decomposition(p: Poly1) -> list[tuple[Poly1, int]]:
    """Yun's algorithm: monic square-free factors paired with their multiplicity.

    Constant factors are dropped; factors with no roots are still listed.
    """
    if p.is_zero():
        raise ValueError("square-free decomposition of the zero polynomial")
    if p.degree == 0:
        return []
    out: list[tuple[Poly1, int]] = []
    dp = p.derivative()
    a = poly1_gcd(p, dp)
    b = p // a
    c = dp // a
    d = c - b.derivative()
    k = 1
    while b.degree > 0:
        g = poly1_gcd(b, d)
        if g.degree > 0:
            out.append((g, k))
        b = b // g
        c = d // g
        d = c - b.derivative()
        k += 1
    return out

