"""Divergence, invariant algebraic curves, invariant lines and cycle types."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb
from typing import Optional

from ..errors import AnalysisError
from ..poly_core import (
    Poly1,
    Poly2,
    exact_divide,
    gcd_bivariate,
    poly1_gcd,
    real_roots_univariate,
    resultant_eliminate,
)
from ..poly_core.roots import DEFAULT_ROOT_TOL, RealRoot
from ..projective import PlaneSystem, classify_projective_type
from .equilibria import finite_equilibria, infinite_equilibria

U, V = Poly2.first(), Poly2.second()
LINE_TOL = 1e-9
APPROX_DENOMINATOR = 10**12


class InfiniteFamilyError(AnalysisError):
    """Invariant lines form a continuous family (e.g. a pencil through a node)."""


class CycleKind(Enum):
    PLANE = "PlaneCycle"
    LINEAR = "LinearCycle"
    OPEN = "OpenCycle"
    ELL_INFINITY = "EllInfinityCycle"
    NOT_A_CYCLE = "NotACycle"


@dataclass(frozen=True)
class InvariantCurve:
    """Curve f = 0 with X f_x + Y f_y = cofactor * f.

    ``certified`` is False for lines with irrational coefficients: then ``f``
    is a rational approximation and ``cofactor`` is None.
    """

    f: Poly2
    cofactor: Optional[Poly2]
    certified: bool = True

    def to_string(self, names: tuple[str, str] = ("x", "y")) -> str:
        return self.f.to_string(names)


def divergence_field(sys: PlaneSystem) -> Poly2:
    return sys.X.differentiate(0) + sys.Y.differentiate(1)


def lie_derivative(sys: PlaneSystem, f: Poly2) -> Poly2:
    return sys.X * f.differentiate(0) + sys.Y * f.differentiate(1)


def verify_invariant_curve(sys: PlaneSystem, f: Poly2) -> InvariantCurve | None:
    """Cofactor of ``f`` when the curve f = 0 is invariant, else None."""
    if f.is_constant():
        raise ValueError("an invariant curve needs a nonconstant polynomial")
    q = exact_divide(lie_derivative(sys, f), f)
    return None if q is None else InvariantCurve(f, q)


# ---------------------------------------------------------------- lines


def _line_family_coefficients(sys: PlaneSystem) -> list[Poly2]:
    """Coefficients C_k(b, c) of (X + b Y)(-b y - c, y) as a polynomial in y.

    The line x + b y + c = 0 is invariant iff every C_k vanishes. The
    returned polynomials use (b, c) as their two variables.
    """
    B, C = Poly2.first(), Poly2.second()
    neg_b_pows = [Poly2.constant(1)]
    neg_c_pows = [Poly2.constant(1)]
    top = max(sys.X.degree_in(0), sys.Y.degree_in(0))
    for _ in range(top):
        neg_b_pows.append(neg_b_pows[-1] * (-B))
        neg_c_pows.append(neg_c_pows[-1] * (-C))
    coeffs: dict[int, Poly2] = {}

    def add(poly: Poly2, factor: Poly2):
        for (i, j), c in poly.terms.items():
            for k in range(i + 1):
                term = neg_b_pows[k] * neg_c_pows[i - k] * factor * (c * comb(i, k))
                coeffs[k + j] = coeffs.get(k + j, Poly2()) + term

    add(sys.X, Poly2.constant(1))
    add(sys.Y, B)
    return [p for _, p in sorted(coeffs.items()) if not p.is_zero()]


def _poly1_in(p: Poly2, var: int) -> Poly1:
    """View a polynomial free of the other variable as univariate."""
    return p.restrict_second(0) if var == 0 else p.restrict_first(0)


def _common_roots_univariate(polys: list[Poly1], tol: float) -> list[RealRoot] | None:
    """Common real roots, or None if all polynomials vanish identically."""
    g = Poly1()
    for p in polys:
        g = poly1_gcd(g, p)
    if g.is_zero():
        return None
    if g.degree <= 0:
        return []
    return real_roots_univariate(g, tol)


def _horizontal_lines(sys: PlaneSystem, tol: float) -> list[InvariantCurve]:
    """Invariant lines y + c = 0: Y(x, -c) vanishes for every x."""
    cs: dict[int, Poly1] = {}
    for (i, j), coef in sys.Y.terms.items():
        # coefficient of x^i gains coef * (-c)^j
        cs[i] = cs.get(i, Poly1()) + Poly1.monomial(j, coef * (-1) ** j)
    roots = _common_roots_univariate(list(cs.values()), tol)
    if roots is None:
        raise InfiniteFamilyError("every line parallel to the first axis is invariant")
    out = []
    for r in roots:
        c = r.exact if r.exact is not None else r.value
        out.append(_make_line(sys, Fraction(0), Fraction(1), c))
    return out


def _make_line(sys: PlaneSystem, a, b, c) -> InvariantCurve:
    exact = all(isinstance(t, (int, Fraction)) for t in (a, b, c))
    if exact:
        f = (U * Fraction(a) + V * Fraction(b) + Fraction(c)).primitive()
        curve = verify_invariant_curve(sys, f)
        if curve is None:
            raise AnalysisError(f"line {f} failed exact verification")
        return curve
    approx = [Fraction(t).limit_denominator(APPROX_DENOMINATOR) for t in (a, b, c)]
    f = U * approx[0] + V * approx[1] + approx[2]
    return InvariantCurve(f, None, certified=False)


def _combinations(polys: list[Poly2]):
    """Pairs of integer combinations used to build resultants."""
    weights = [
        ([1] * len(polys), [(k + 1) ** 2 * (-1) ** k for k in range(len(polys))]),
        ([k + 1 for k in range(len(polys))], [(-1) ** k * (2 * k + 3) for k in range(len(polys))]),
        ([(k * 7 + 3) % 11 + 1 for k in range(len(polys))], [(k * 5 + 2) % 13 - 6 or 1 for k in range(len(polys))]),
    ]
    for w1, w2 in weights:
        f1 = Poly2()
        f2 = Poly2()
        for w, a, p in zip(w1, w2, polys):
            f1 = f1 + p * w
            f2 = f2 + p * a
        yield f1, f2


def _slopes(polys: list[Poly2], tol: float) -> list[RealRoot]:
    """Candidate values of b: real roots of a resultant eliminating c."""
    if len(polys) == 1:
        pairs = [(polys[0], polys[0].differentiate(1))]
    else:
        pairs = list(_combinations(polys))
    for f1, f2 in pairs:
        if f1.is_zero() or f2.is_zero():
            continue
        try:
            res = resultant_eliminate(f1, f2, 1)
        except ValueError:
            # neither depends on c: b is a common root of the univariate members
            g = poly1_gcd(_poly1_in(f1, 0), _poly1_in(f2, 0))
            return real_roots_univariate(g, tol) if g.degree > 0 else []
        if res.is_zero():
            continue
        return real_roots_univariate(res, tol) if res.degree > 0 else []
    raise AnalysisError("invariant-line elimination degenerated for every combination")


def _offsets(polys: list[Poly2], b, tol: float) -> list:
    """Values c with C_k(b, c) = 0 for all k, at a fixed slope b."""
    if isinstance(b, Fraction):
        restricted = [p.restrict_first(b) for p in polys]
        roots = _common_roots_univariate(restricted, tol)
        if roots is None:
            raise InfiniteFamilyError(f"a whole pencil of invariant lines has slope parameter {b}")
        return [r.exact if r.exact is not None else r.value for r in roots]
    # irrational b: roots of the lowest-degree member, filtered numerically
    approx = Fraction(b).limit_denominator(APPROX_DENOMINATOR)
    candidates = sorted(
        (p.restrict_first(approx) for p in polys if p.degree_in(1) > 0), key=lambda q: q.degree
    )
    if not candidates:
        return []
    found = []
    for r in real_roots_univariate(candidates[0], tol):
        c = r.value
        ok = all(
            abs(p(float(b), c)) <= LINE_TOL * max(1.0, sum(abs(float(k)) * abs(b) ** i * abs(c) ** j for (i, j), k in p.terms.items()))
            for p in polys
        )
        if ok:
            found.append(c)
    return found


def find_invariant_lines(sys: PlaneSystem, tol: float = DEFAULT_ROOT_TOL) -> list[InvariantCurve]:
    """Every real invariant straight line of the system.

    Lines x + b y + c = 0 are found by solving the polynomial system in
    (b, c) obtained by reducing X + b Y modulo the line; lines y + c = 0 are
    handled separately. Raises InfiniteFamilyError when the solutions form a
    continuum.
    """
    out: list[InvariantCurve] = []
    polys = _line_family_coefficients(sys)
    if polys:
        g = polys[0]
        for p in polys[1:]:
            g = gcd_bivariate(g, p)
            if g.is_constant():
                break
        if not g.is_constant():
            raise InfiniteFamilyError(
                f"every line x + b*y + c = 0 with {g.primitive().to_string(('b', 'c'))} = 0 is invariant"
            )
        for rb in _slopes(polys, tol):
            b = rb.exact if rb.exact is not None else rb.value
            for c in _offsets(polys, b, tol):
                out.append(_make_line(sys, Fraction(1), b, c))
    else:
        raise InfiniteFamilyError("every line x + b*y + c is invariant")
    out.extend(_horizontal_lines(sys, tol))
    unique: list[InvariantCurve] = []
    for curve in out:
        if not any(curve.f == u.f for u in unique):
            unique.append(curve)
    return unique


# ---------------------------------------------------------------- cycles


def _has_real_projective_zero(top: Poly2, tol: float) -> bool:
    if top(0, 1) == 0:
        return True
    dehom = top.restrict_first(1)
    return dehom.degree > 0 and bool(real_roots_univariate(dehom, tol))


def _real_locus_nonempty(f: Poly2, tol: float) -> bool:
    """Sample horizontal and vertical lines for a real point of f = 0."""
    for k in range(-40, 41):
        t = Fraction(k, 2)
        for restricted in (f.restrict_second(t), f.restrict_first(t)):
            if restricted.is_zero():
                return True
            if restricted.degree > 0 and real_roots_univariate(restricted, tol):
                return True
    return False


def _equator_directions(top: Poly2, tol: float) -> list[tuple[str, float]]:
    dirs = []
    dehom = top.restrict_first(1)
    if dehom.degree > 0:
        dirs += [("y", r.value) for r in real_roots_univariate(dehom, tol)]
    if top(0, 1) == 0:
        dirs.append(("x", 0.0))
    return dirs


def classify_cycle_candidate(sys: PlaneSystem, curve: InvariantCurve | Poly2, tol: float = DEFAULT_ROOT_TOL) -> CycleKind:
    """Cycle type of an invariant curve f = 0 free of equilibria.

    Degree-one curves are linear cycles. Otherwise the zero set is bounded
    exactly when the top homogeneous form of f has no real projective zero;
    bounded curves are plane cycles, unbounded ones with real points are
    open cycles. Curves through an equilibrium, finite or at infinity, are
    not cycles.
    """
    f = curve.f if isinstance(curve, InvariantCurve) else curve
    if verify_invariant_curve(sys, f) is None:
        raise AnalysisError(f"{f.to_string(sys.names)} = 0 is not invariant")
    if not _real_locus_nonempty(f, tol):
        return CycleKind.NOT_A_CYCLE
    scale = max(abs(float(c)) for c in f.terms.values())
    for e in finite_equilibria(sys, tol):
        if abs(f(*e.point)) <= 1e-9 * scale * max(1.0, math.hypot(*e.point) ** f.degree):
            return CycleKind.NOT_A_CYCLE
    top = f.homogeneous_component(f.degree)
    if f.degree == 1 or _has_real_projective_zero(top, tol):
        at_infinity = _equator_directions(top, tol)
        for e in infinite_equilibria(sys, tol):
            d = e.direction
            if any(kind == d.kind and abs(slope - d.slope) <= 1e-9 for kind, slope in at_infinity):
                return CycleKind.NOT_A_CYCLE
        return CycleKind.LINEAR if f.degree == 1 else CycleKind.OPEN
    return CycleKind.PLANE


def equator_cycle_kind(sys: PlaneSystem) -> CycleKind:
    """The line at infinity is reported as a cycle iff the system is P-nonsingular."""
    return CycleKind.NOT_A_CYCLE if classify_projective_type(sys).singular else CycleKind.ELL_INFINITY
