"""Bivariate gcd and Sylvester resultants."""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .poly1 import Poly1, poly1_gcd
from .poly2 import Poly2, exact_divide, from_univariate

FIRST, SECOND = 0, 1


def _coeff_in(f: Poly2, var: int, k: int) -> Poly2:
    """Coefficient of var^k, as a polynomial in the other variable only."""
    out = {}
    for m, c in f.terms.items():
        if m[var] == k:
            out[(0, m[1]) if var == 0 else (m[0], 0)] = c
    return Poly2(out)


def _lead_in(f: Poly2, var: int) -> Poly2:
    return _coeff_in(f, var, f.degree_in(var))


def _content_in(f: Poly2, var: int) -> Poly2:
    """Gcd of the coefficients of powers of ``var`` (a monic polynomial in the other variable)."""
    other = 1 - var
    g = Poly1()
    for p in f.as_poly_in(var).values():
        g = poly1_gcd(g, p)
        if g.degree == 0:
            break
    return from_univariate(g, other)


def _primitive_in(f: Poly2, var: int) -> Poly2:
    if f.is_zero():
        return f
    q = exact_divide(f, _content_in(f, var))
    assert q is not None
    return q.primitive()


def _pseudo_remainder(a: Poly2, b: Poly2, var: int) -> Poly2:
    db = b.degree_in(var)
    lb = _lead_in(b, var)
    r = a
    while not r.is_zero() and r.degree_in(var) >= db:
        dr = r.degree_in(var)
        shift = Poly2.monomial(dr - db, 0) if var == 0 else Poly2.monomial(0, dr - db)
        r = r * lb - _lead_in(r, var) * shift * b
    return r


def gcd_bivariate(f: Poly2, g: Poly2) -> Poly2:
    """Greatest common divisor over the rationals.

    Primitive polynomial remainder sequence in the second variable with
    coefficients in the first; the result has coprime integer coefficients and
    a positive graded-lex leading coefficient.
    """
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd of two zero polynomials is undefined")
    if f.is_zero():
        return g.primitive()
    if g.is_zero():
        return f.primitive()
    var = SECOND
    content = from_univariate(
        poly1_gcd(
            Poly1(_content_in(f, var).restrict_second(0).coeffs),
            Poly1(_content_in(g, var).restrict_second(0).coeffs),
        ),
        FIRST,
    )
    a, b = _primitive_in(f, var), _primitive_in(g, var)
    if a.degree_in(var) < b.degree_in(var):
        a, b = b, a
    while not b.is_zero():
        r = _pseudo_remainder(a, b, var)
        a, b = b, _primitive_in(r, var)
    if a.degree_in(var) == 0:
        a = Poly2.constant(1)
    return (content * a).primitive()


def _det_int(matrix: list[list[int]]) -> int:
    """Bareiss fraction-free determinant of an integer matrix."""
    m = [row[:] for row in matrix]
    n = len(m)
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _sylvester(fc: list[int], gc: list[int]) -> list[list[int]]:
    """Sylvester matrix of two coefficient lists given highest power first."""
    p, q = len(fc) - 1, len(gc) - 1
    size = p + q
    rows = []
    for i in range(q):
        rows.append([0] * i + fc + [0] * (size - p - 1 - i))
    for i in range(p):
        rows.append([0] * i + gc + [0] * (size - q - 1 - i))
    return rows


def _interpolate(xs: list[int], ys: list[int]) -> Poly1:
    """Newton divided-difference interpolation through integer nodes."""
    coef = [Fraction(y) for y in ys]
    n = len(xs)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    result = Poly1([coef[-1]])
    for i in range(n - 2, -1, -1):
        result = result * Poly1([-xs[i], 1]) + coef[i]
    return result


def _integer_scale(f: Poly2) -> tuple[Poly2, Fraction]:
    den = lcm(*(c.denominator for c in f.terms.values()))
    return f * den, Fraction(den)


def resultant_eliminate(f: Poly2, g: Poly2, eliminate: int) -> Poly1:
    """Sylvester resultant of f and g with respect to one variable.

    ``eliminate`` is 0 to eliminate the first variable and 1 for the second; the
    result is a univariate polynomial in the remaining variable, normalized to
    a positive leading coefficient. It vanishes at the projection of every
    common root.
    """
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant of a zero polynomial")
    p, q = f.degree_in(eliminate), g.degree_in(eliminate)
    if p == 0 and q == 0:
        raise ValueError("both polynomials are constant in the eliminated variable")
    if p == 0:
        res = Poly1(f.as_poly_in(eliminate)[0].coeffs) ** q
    elif q == 0:
        res = Poly1(g.as_poly_in(eliminate)[0].coeffs) ** p
    else:
        fi, fs = _integer_scale(f)
        gi, gs = _integer_scale(g)
        fcols = fi.as_poly_in(eliminate)
        gcols = gi.as_poly_in(eliminate)
        bound = f.degree * g.degree
        xs = list(range(bound + 1))
        ys = []
        empty = Poly1()
        for t in xs:
            fc = [int(fcols.get(k, empty)(Fraction(t))) for k in range(p, -1, -1)]
            gc = [int(gcols.get(k, empty)(Fraction(t))) for k in range(q, -1, -1)]
            ys.append(_det_int(_sylvester(fc, gc)))
        res = _interpolate(xs, ys) * (Fraction(1) / (fs**q * gs**p))
    if not res.is_zero() and res.leading < 0:
        res = -res
    return res
