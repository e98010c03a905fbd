"""Finite and infinite equilibria with linear classification."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

from ..errors import AnalysisError, NotAnEquilibriumError
from ..poly_core import Poly1, Poly2, poly1_gcd, real_roots_univariate, resultant_eliminate
from ..poly_core.roots import DEFAULT_ROOT_TOL, RealRoot
from ..projective import ChartId, Direction, PlaneSystem, Which, reduce_system

# relative tolerance used to decide T = 0, Delta = 0 and T^2 = 4 Delta for float data
ZERO_TOL = 1e-10
RESIDUAL_TOL = 1e-8
DEDUP_RADIUS = 1e-6


class EquilibriumKind(Enum):
    SADDLE = "SaddlePoint"
    NODE_STABLE = "NodeStable"
    NODE_UNSTABLE = "NodeUnstable"
    FOCUS_STABLE = "FocusStable"
    FOCUS_UNSTABLE = "FocusUnstable"
    CENTER_OR_FOCUS = "CenterOrFocus"
    DEGENERATE = "DegenerateLinearPart"

    @property
    def family(self) -> str:
        """Kind without its stability flag."""
        return {
            EquilibriumKind.NODE_STABLE: "Node",
            EquilibriumKind.NODE_UNSTABLE: "Node",
            EquilibriumKind.FOCUS_STABLE: "Focus",
            EquilibriumKind.FOCUS_UNSTABLE: "Focus",
        }.get(self, self.value)


@dataclass(frozen=True)
class Equilibrium:
    """An equilibrium with its linearization.

    ``point`` is given in ``chart``. Infinite equilibria are finite points of
    a reduced system; for them ``direction`` names the direction at infinity
    of the source system and ``modulo_direction`` is set, since the reduced
    time may run against the original one.
    """

    point: tuple[float, float]
    chart: ChartId
    jacobian: tuple[tuple[float, float], tuple[float, float]]
    trace: float
    determinant: float
    kind: EquilibriumKind
    multiplicity: int = 1
    exact: Optional[tuple[Fraction, Fraction]] = None
    direction: Optional[Direction] = None
    modulo_direction: bool = False

    @property
    def infinite(self) -> bool:
        return self.direction is not None

    @property
    def char_poly(self) -> tuple[float, float, float]:
        """Coefficients (1, -T, Delta) of lambda^2 - T lambda + Delta."""
        return (1.0, -self.trace, self.determinant)

    @property
    def eigenvalues(self) -> tuple[complex, complex]:
        t, d = self.trace, self.determinant
        root = cmath.sqrt(t * t - 4 * d)
        return ((t - root) / 2, (t + root) / 2)

    def eigenvectors(self) -> list[tuple[float, float]]:
        """Unit eigenvectors for real distinct eigenvalues (empty otherwise)."""
        (a, b), (c, d) = self.jacobian
        out = []
        disc = self.trace**2 - 4 * self.determinant
        if disc <= 0:
            return out
        for lam in sorted(e.real for e in self.eigenvalues):
            if abs(b) > abs(c) or (b != 0 and c == 0):
                v = (b, lam - a)
            elif c != 0:
                v = (lam - d, c)
            else:  # diagonal matrix
                v = (1.0, 0.0) if abs(lam - a) < abs(lam - d) else (0.0, 1.0)
            norm = math.hypot(*v)
            out.append((v[0] / norm, v[1] / norm))
        return out


def _is_zero(value, scale: float) -> bool:
    if isinstance(value, Fraction):
        return value == 0
    return abs(value) <= ZERO_TOL * max(scale, 1e-300)


def classify_jacobian(jac) -> tuple[EquilibriumKind, object, object]:
    """Kind from the signs of T, Delta and T^2 - 4 Delta.

    Exact (Fraction) Jacobians are decided exactly; float ones with a relative
    tolerance on each zero test.
    """
    (a, b), (c, d) = jac
    t = a + d
    det = a * d - b * c
    scale = max(abs(float(v)) for v in (a, b, c, d)) or 1.0
    if _is_zero(det, scale * scale):
        return EquilibriumKind.DEGENERATE, t, det
    if det < 0:
        return EquilibriumKind.SADDLE, t, det
    if _is_zero(t, scale):
        return EquilibriumKind.CENTER_OR_FOCUS, t, det
    disc = t * t - 4 * det
    if disc >= 0 or _is_zero(disc, scale * scale):
        return (EquilibriumKind.NODE_STABLE if t < 0 else EquilibriumKind.NODE_UNSTABLE), t, det
    return (EquilibriumKind.FOCUS_STABLE if t < 0 else EquilibriumKind.FOCUS_UNSTABLE), t, det


def _jacobian_at(sys: PlaneSystem, p):
    X, Y = sys.X, sys.Y
    return (
        (X.differentiate(0)(*p), X.differentiate(1)(*p)),
        (Y.differentiate(0)(*p), Y.differentiate(1)(*p)),
    )


def _magnitude(poly: Poly2, p) -> float:
    u, v = abs(float(p[0])), abs(float(p[1]))
    return sum(abs(float(c)) * u**i * v**j for (i, j), c in poly.terms.items())


def residual_ok(sys: PlaneSystem, p, tol: float = RESIDUAL_TOL) -> bool:
    if all(isinstance(c, (int, Fraction)) for c in p):
        return sys.X(*p) == 0 and sys.Y(*p) == 0
    for poly in (sys.X, sys.Y):
        if abs(poly(float(p[0]), float(p[1]))) > tol * max(1.0, _magnitude(poly, p)):
            return False
    return True


def classify_equilibrium(
    sys: PlaneSystem,
    p,
    *,
    multiplicity: int = 1,
    direction: Direction | None = None,
    tol: float = RESIDUAL_TOL,
) -> Equilibrium:
    """Linearize ``sys`` at ``p`` and classify the equilibrium."""
    exact = None
    if all(isinstance(c, (int, Fraction)) for c in p):
        exact = (Fraction(p[0]), Fraction(p[1]))
        point = exact
    else:
        point = (float(p[0]), float(p[1]))
    if not residual_ok(sys, point, tol):
        raise NotAnEquilibriumError(f"field does not vanish at {tuple(float(c) for c in point)}")
    jac = _jacobian_at(sys, point)
    kind, t, det = classify_jacobian(jac)
    if kind is not EquilibriumKind.DEGENERATE:
        multiplicity = 1
    fjac = tuple(tuple(float(v) for v in row) for row in jac)
    return Equilibrium(
        point=(float(point[0]), float(point[1])),
        chart=sys.chart,
        jacobian=fjac,
        trace=float(t),
        determinant=float(det),
        kind=kind,
        multiplicity=multiplicity,
        exact=exact,
        direction=direction,
        modulo_direction=direction is not None,
    )


def _root_value(r: RealRoot):
    return r.exact if r.exact is not None else r.value


def _newton_polish(sys: PlaneSystem, p: tuple[float, float], steps: int = 3) -> tuple[float, float]:
    X, Y = sys.X, sys.Y
    Xu, Xv, Yu, Yv = X.differentiate(0), X.differentiate(1), Y.differentiate(0), Y.differentiate(1)
    u, v = p
    for _ in range(steps):
        a, b, c, d = Xu(u, v), Xv(u, v), Yu(u, v), Yv(u, v)
        det = a * d - b * c
        if det == 0:
            break
        fx, fy = X(u, v), Y(u, v)
        du = (d * fx - b * fy) / det
        dv = (-c * fx + a * fy) / det
        if not (math.isfinite(du) and math.isfinite(dv)) or abs(du) + abs(dv) > 1e-6 * (1 + abs(u) + abs(v)):
            break
        u, v = u - du, v - dv
    return (u, v)


def _eliminant_roots(sys: PlaneSystem, eliminate: int, tol: float) -> list[RealRoot] | None:
    """Real roots of the resultant, or None when both members ignore the variable."""
    try:
        res = resultant_eliminate(sys.X, sys.Y, eliminate)
    except ValueError:
        return None
    if res.is_zero():
        raise AnalysisError("resultant vanishes identically: X and Y share a common factor")
    if res.degree == 0:
        return []
    return real_roots_univariate(res, tol)


def _univariate_common_roots(sys: PlaneSystem, var: int, tol: float) -> list:
    """Common roots when X and Y depend on one variable only (coordinate ``var``)."""
    pick = (lambda q: q.restrict_second(0)) if var == 0 else (lambda q: q.restrict_first(0))
    g = poly1_gcd(pick(sys.X), pick(sys.Y))
    if g.is_zero() or g.degree <= 0:
        return []
    raise AnalysisError("equilibria form whole lines: X and Y share a common factor")


def finite_equilibria(sys: PlaneSystem, tol: float = DEFAULT_ROOT_TOL) -> list[Equilibrium]:
    """All real solutions of X = Y = 0, each classified.

    Both coordinates are obtained from resultants (eliminating each variable
    in turn); every pairing of candidate coordinates is kept only if it passes
    back-substitution into X and Y, then polished by Newton steps.
    """
    if sys.X.is_zero() or sys.Y.is_zero():
        # one member vanishes identically, the other is a nonzero constant after the gcd check
        return []
    xs = _eliminant_roots(sys, 1, tol)
    ys = _eliminant_roots(sys, 0, tol)
    if xs is None:
        return _univariate_common_roots(sys, 0, tol)
    if ys is None:
        return _univariate_common_roots(sys, 1, tol)
    found: list[Equilibrium] = []
    for rx in xs:
        for ry in ys:
            candidate = (_root_value(rx), _root_value(ry))
            if not residual_ok(sys, candidate, RESIDUAL_TOL * 100):
                continue
            if not all(isinstance(c, Fraction) for c in candidate):
                polished = _newton_polish(sys, (float(candidate[0]), float(candidate[1])))
                # coordinates known exactly stay exact
                candidate = tuple(
                    c if isinstance(c, Fraction) else q for c, q in zip(candidate, polished)
                )
                if not residual_ok(sys, candidate):
                    continue
            if any(math.dist(e.point, (float(candidate[0]), float(candidate[1]))) < DEDUP_RADIUS for e in found):
                continue
            found.append(
                classify_equilibrium(sys, candidate, multiplicity=min(rx.multiplicity, ry.multiplicity))
            )
    found.sort(key=lambda e: e.point)
    return found


def infinite_equilibria(sys: PlaneSystem, tol: float = DEFAULT_ROOT_TOL) -> list[Equilibrium]:
    """Equilibria on the line at infinity, classified on the reduced systems.

    Directions ``y = a x`` are the common real roots of the first reduced
    members restricted to theta = 0 (W_n(1, xi) in the nonsingular case,
    X_n(1, xi) and W_{n-1}(1, xi) in the singular one). The remaining
    direction ``x = 0`` is the origin of the second reduced system.
    """
    out: list[Equilibrium] = []
    first = reduce_system(sys, Which.FIRST)
    fs = first.system
    g = poly1_gcd(fs.X.restrict_second(0), fs.Y.restrict_second(0))
    if g.degree > 0:
        for root in real_roots_univariate(g, tol):
            a = _root_value(root)
            zero = Fraction(0) if isinstance(a, Fraction) else 0.0
            out.append(
                classify_equilibrium(
                    fs,
                    (a, zero),
                    multiplicity=root.multiplicity,
                    direction=Direction("y", float(a)),
                )
            )
    second = reduce_system(sys, Which.SECOND)
    ss = second.system
    if ss.X.constant_term() == 0 and ss.Y.constant_term() == 0:
        mult = Poly1(ss.Y.restrict_first(0).coeffs)
        k = 0
        while k < len(mult.coeffs) and mult.coeffs[k] == 0:
            k += 1
        out.append(
            classify_equilibrium(
                ss,
                (Fraction(0), Fraction(0)),
                multiplicity=max(k, 1),
                direction=Direction("x", 0.0),
            )
        )
    return out
