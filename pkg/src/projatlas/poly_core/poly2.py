"""Sparse bivariate polynomials with exact rational coefficients.

Monomials are exponent pairs ``(i, j)`` standing for ``u^i v^j`` where ``u`` is
the first and ``v`` the second variable of whatever chart the polynomial lives
in. The monomial order used for division and for choosing a leading term is
graded lexicographic with the first variable major.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Callable, Iterable, Mapping, Union

from .poly1 import Poly1

Number = Union[int, Fraction]
Monomial = tuple[int, int]


def _frac(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"exact coefficient expected, got {type(value).__name__}")


def grlex_key(m: Monomial) -> tuple[int, int]:
    """Sort key: larger key means larger monomial in graded-lex order."""
    return (m[0] + m[1], m[0])


class Poly2:
    """Immutable bivariate polynomial over the rationals."""

    __slots__ = ("terms", "degree", "_hash")

    def __init__(self, terms: Mapping[Monomial, Number] | None = None):
        clean: dict[Monomial, Fraction] = {}
        for (i, j), c in (terms or {}).items():
            if i < 0 or j < 0:
                raise ValueError("negative exponent")
            c = _frac(c)
            if c:
                clean[(int(i), int(j))] = c
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "degree", max((i + j for i, j in clean), default=-1))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Poly2 is immutable")

    # construction helpers

    @classmethod
    def constant(cls, c: Number) -> Poly2:
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, i: int, j: int, c: Number = 1) -> Poly2:
        return cls({(i, j): c})

    @classmethod
    def first(cls) -> Poly2:
        return cls({(1, 0): 1})

    @classmethod
    def second(cls) -> Poly2:
        return cls({(0, 1): 1})

    # inspection

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return self.degree <= 0

    def coefficient(self, i: int, j: int) -> Fraction:
        return self.terms.get((i, j), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.coefficient(0, 0)

    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self.terms, key=grlex_key)

    def leading_coefficient(self) -> Fraction:
        return self.terms[self.leading_monomial()] if self.terms else Fraction(0)

    def degree_in(self, var: int) -> int:
        """Degree in the first (var=0) or second (var=1) variable; -1 for zero."""
        return max((m[var] for m in self.terms), default=-1)

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in ascending graded order, first variable major within a degree."""
        return sorted(self.terms.items(), key=lambda t: (t[0][0] + t[0][1], -t[0][0]))

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly2):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == Poly2.constant(other).terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(frozenset(self.terms.items())))
        return self._hash

    def __repr__(self):
        return f"Poly2({self.to_string()!r})"

    def __str__(self):
        return self.to_string()

    # arithmetic

    def __neg__(self) -> Poly2:
        return Poly2({m: -c for m, c in self.terms.items()})

    def __add__(self, other) -> Poly2:
        other = as_poly2(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Poly2(out)

    __radd__ = __add__

    def __sub__(self, other) -> Poly2:
        return self + (-as_poly2(other))

    def __rsub__(self, other) -> Poly2:
        return as_poly2(other) - self

    def __mul__(self, other) -> Poly2:
        if isinstance(other, (int, Fraction)):
            return Poly2({m: c * other for m, c in self.terms.items()})
        other = as_poly2(other)
        out: dict[Monomial, Fraction] = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + c1 * c2
        return Poly2(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly2:
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result, base = Poly2.constant(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, other) -> Poly2:
        """Division by a nonzero rational scalar only; see ``exact_divide``."""
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (Fraction(1) / other)
        return NotImplemented

    def scale(self, c: Number) -> Poly2:
        return self * _frac(c)

    # calculus and structure

    def differentiate(self, var: int) -> Poly2:
        """Partial derivative with respect to the first (0) or second (1) variable."""
        out = {}
        for (i, j), c in self.terms.items():
            e = (i, j)[var]
            if e:
                out[(i - 1, j) if var == 0 else (i, j - 1)] = c * e
        return Poly2(out)

    def homogeneous_component(self, k: int) -> Poly2:
        return Poly2({m: c for m, c in self.terms.items() if m[0] + m[1] == k})

    def homogeneous_components(self) -> list[Poly2]:
        """Components of degree 0..deg; their sum is the polynomial itself."""
        return [self.homogeneous_component(k) for k in range(self.degree + 1)]

    def is_homogeneous(self) -> bool:
        return len({i + j for i, j in self.terms}) <= 1

    def swap_variables(self) -> Poly2:
        return Poly2({(j, i): c for (i, j), c in self.terms.items()})

    def divisible_by_first(self) -> bool:
        """True iff the first variable divides the polynomial."""
        return all(i > 0 for i, _ in self.terms)

    def divisible_by_second(self) -> bool:
        return all(j > 0 for _, j in self.terms)

    def max_power_of(self, var: int) -> int:
        """Largest k such that the variable to the k-th power divides the polynomial."""
        if not self.terms:
            raise ValueError("every power divides the zero polynomial")
        return min(m[var] for m in self.terms)

    def shift_down(self, var: int, k: int) -> Poly2:
        """Exact division by a power of one variable (caller guarantees divisibility)."""
        out = {}
        for (i, j), c in self.terms.items():
            m = (i - k, j) if var == 0 else (i, j - k)
            if min(m) < 0:
                raise ValueError("monomial not divisible by the requested power")
            out[m] = c
        return Poly2(out)

    def content(self) -> Fraction:
        """Positive rational c with self/c having coprime integer coefficients."""
        if not self.terms:
            return Fraction(0)
        den = lcm(*(c.denominator for c in self.terms.values()))
        g = 0
        for c in self.terms.values():
            g = gcd(g, int(c * den))
        return Fraction(g, den)

    def primitive(self) -> Poly2:
        """Integer primitive part with positive graded-lex leading coefficient."""
        if not self.terms:
            return self
        p = self / self.content()
        return -p if p.leading_coefficient() < 0 else p

    # evaluation

    def __call__(self, u, v):
        return evaluate(self, u, v)

    def restrict_first(self, value: Number) -> Poly1:
        """Univariate polynomial in the second variable with the first fixed."""
        value = _frac(value)
        coeffs: dict[int, Fraction] = {}
        for (i, j), c in self.terms.items():
            coeffs[j] = coeffs.get(j, 0) + c * value**i
        return Poly1([coeffs.get(k, 0) for k in range(max(coeffs, default=-1) + 1)])

    def restrict_second(self, value: Number) -> Poly1:
        value = _frac(value)
        coeffs: dict[int, Fraction] = {}
        for (i, j), c in self.terms.items():
            coeffs[i] = coeffs.get(i, 0) + c * value**j
        return Poly1([coeffs.get(k, 0) for k in range(max(coeffs, default=-1) + 1)])

    def as_poly_in(self, var: int) -> dict[int, Poly1]:
        """Coefficients of powers of ``var`` as univariate polynomials in the other variable."""
        other = 1 - var
        grouped: dict[int, dict[int, Fraction]] = {}
        for m, c in self.terms.items():
            grouped.setdefault(m[var], {})[m[other]] = c
        return {
            k: Poly1([d.get(e, 0) for e in range(max(d) + 1)]) for k, d in grouped.items()
        }

    def substitute(self, u_value, v_value) -> Poly2:
        """Compose with polynomial (or rational) expressions for both variables."""
        u_value, v_value = as_poly2(u_value), as_poly2(v_value)
        upow = _powers(u_value, self.degree_in(0))
        vpow = _powers(v_value, self.degree_in(1))
        out = Poly2()
        for (i, j), c in self.terms.items():
            out = out + upow[i] * vpow[j] * c
        return out

    def compile_float(self) -> Callable[[float, float], float]:
        return compile_float(self)

    def to_string(self, names: tuple[str, str] = ("x", "y")) -> str:
        return format_poly(self, names)


def as_poly2(value) -> Poly2:
    if isinstance(value, Poly2):
        return value
    if isinstance(value, (int, Fraction)):
        return Poly2.constant(value)
    raise TypeError(f"cannot combine Poly2 with {type(value).__name__}")


def _powers(p: Poly2, k: int) -> list[Poly2]:
    out = [Poly2.constant(1)]
    for _ in range(max(k, 0)):
        out.append(out[-1] * p)
    return out


def from_univariate(p: Poly1, var: int) -> Poly2:
    """Embed a univariate polynomial as a polynomial in the given variable."""
    return Poly2({((k, 0) if var == 0 else (0, k)): c for k, c in enumerate(p.coeffs)})


def evaluate(p: Poly2, u, v):
    """Horner-style evaluation (in the second variable, then the first).

    Exact when both arguments are rational, floating point if either is a float.
    """
    use_float = isinstance(u, float) or isinstance(v, float)
    if use_float:
        u, v = float(u), float(v)
        zero = 0.0
    else:
        u, v = _frac(u), _frac(v)
        zero = Fraction(0)
    by_first: dict[int, dict[int, Fraction]] = {}
    for (i, j), c in p.terms.items():
        by_first.setdefault(i, {})[j] = c
    acc = zero
    for i in range(p.degree_in(0), -1, -1):
        row = by_first.get(i)
        inner = zero
        if row:
            for j in range(max(row), -1, -1):
                c = row.get(j, 0)
                inner = inner * v + (float(c) if use_float else c)
        acc = acc * u + inner
    return acc


def compile_float(p: Poly2) -> Callable[[float, float], float]:
    """Fast float evaluator generated from the (trusted) coefficient table.

    The generated function performs the same nested Horner scheme as
    ``evaluate`` with coefficients rounded to doubles.
    """
    if p.is_zero():
        return lambda u, v: 0.0
    by_first: dict[int, dict[int, Fraction]] = {}
    for (i, j), c in p.terms.items():
        by_first.setdefault(i, {})[j] = c

    def horner(coeffs: list[str], var: str) -> str:
        expr = coeffs[-1]
        for c in reversed(coeffs[:-1]):
            expr = f"({expr})*{var}+{c}" if c != "0.0" else f"({expr})*{var}"
        return expr

    rows = []
    for i in range(p.degree_in(0) + 1):
        row = by_first.get(i)
        if not row:
            rows.append("0.0")
            continue
        rows.append(horner([repr(float(row.get(j, 0))) for j in range(max(row) + 1)], "v"))
    source = f"lambda u, v: {horner(rows, 'u')}"
    return eval(compile(source, "<poly2>", "eval"), {"__builtins__": {}})


def _format_coefficient(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(p: Poly2, names: tuple[str, str] = ("x", "y")) -> str:
    """Render in the input grammar, ascending degree, first variable major.

    ``parse_polynomial(format_poly(p, names), names) == p`` for every ``p``.
    """
    if p.is_zero():
        return "0"
    pieces: list[str] = []
    for (i, j), c in p.sorted_terms():
        factors = []
        for name, e in ((names[0], i), (names[1], j)):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        mag = abs(c)
        if factors and mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([_format_coefficient(mag)] + factors)
        if not pieces:
            pieces.append(("-" if c < 0 else "") + body)
        else:
            pieces.append(("- " if c < 0 else "+ ") + body)
    return " ".join(pieces)


def exact_divide(f: Poly2, g: Poly2) -> Poly2 | None:
    """Quotient q with f = q*g when g divides f over the rationals, else None.

    Multivariate division by a single divisor with respect to graded-lex order;
    the leading term of every intermediate remainder must be divisible by the
    leading term of ``g``, otherwise ``g`` cannot divide ``f``.
    """
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if f.is_zero():
        return Poly2()
    gi, gj = g.leading_monomial()
    gc = g.terms[(gi, gj)]
    rem = dict(f.terms)
    quot: dict[Monomial, Fraction] = {}
    while rem:
        (ri, rj) = max(rem, key=grlex_key)
        if ri < gi or rj < gj:
            return None
        coef = rem[(ri, rj)] / gc
        shift = (ri - gi, rj - gj)
        quot[shift] = quot.get(shift, 0) + coef
        for (i, j), c in g.terms.items():
            key = (i + shift[0], j + shift[1])
            val = rem.get(key, 0) - coef * c
            if val:
                rem[key] = val
            else:
                rem.pop(key, None)
    return Poly2(quot)


def poly_arith(op: str, a: Poly2, b) -> Poly2:
    """Dispatch helper mirroring the four elementary operations."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "scale":
        return a.scale(b)
    raise ValueError(f"unknown operation {op!r}")


def from_terms(items: Iterable[tuple[int, int, Number]]) -> Poly2:
    """Build from ``(i, j, coefficient)`` triples, summing duplicates."""
    out: dict[Monomial, Fraction] = {}
    for i, j, c in items:
        out[(i, j)] = out.get((i, j), 0) + _frac(c)
    return Poly2(out)
