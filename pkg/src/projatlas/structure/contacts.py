"""Contact points on the coordinate axes and on the equator."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

from ..poly_core import Poly1, poly1_gcd, real_roots_univariate, square_free_part
from ..poly_core.roots import DEFAULT_ROOT_TOL, RealRoot
from ..projective import ChartId, Direction, PlaneSystem, classify_projective_type


class Side(Enum):
    NONNEG = "nonneg-half"
    NONPOS = "nonpos-half"
    BOTH = "both-sides"
    UNDETERMINED = "undetermined"


@dataclass(frozen=True)
class ContactPoint:
    """A point where trajectories touch a line without crossing it.

    ``line`` is ``"Ox"``, ``"Oy"`` or ``"equator"``. ``side_variable`` names
    the coordinate whose sign describes the half-plane holding the touching
    trajectories. ``certificate`` is the signed product used for the side
    rule (``case`` a or b) or the second-order value (case c).
    """

    point: tuple[float, float]
    chart: ChartId
    line: str
    side: Side
    side_variable: str
    certificate: float
    case: str
    exact: Optional[tuple[Fraction, Fraction]] = None
    direction: Optional[Direction] = None
    strict: bool = False

    def describe_side(self) -> str:
        if self.side is Side.BOTH:
            return "both sides"
        if self.side is Side.UNDETERMINED:
            return "undetermined"
        rel = {Side.NONNEG: (">", ">="), Side.NONPOS: ("<", "<=")}[self.side][0 if self.strict else 1]
        return f"{self.side_variable}{rel}0"


def _split_roots(tangency: Poly1, flow: Poly1, along: Poly1, tol: float):
    """Roots of ``tangency`` where ``flow`` does not vanish.

    Yields (root, on_fold) where on_fold marks roots that are also roots of
    ``along`` (the derivative of the tangency function across the line).
    """
    if tangency.is_zero() or tangency.degree <= 0:
        return
    base = square_free_part(tangency)
    common = poly1_gcd(base, flow) if not flow.is_zero() else base
    contacts = base // common if common.degree > 0 else base
    if contacts.degree <= 0:
        return
    fold = poly1_gcd(contacts, along) if not along.is_zero() else contacts
    plain = contacts // fold if fold.degree > 0 else contacts
    for root in real_roots_univariate(plain, tol) if plain.degree > 0 else []:
        yield root, False
    for root in real_roots_univariate(fold, tol) if fold.degree > 0 else []:
        yield root, True


def _value(root: RealRoot):
    return root.exact if root.exact is not None else root.value


def _side_from(product, positive: Side, negative: Side) -> Side:
    return positive if product > 0 else negative


def _classify(flow: Poly1, along: Poly1, along2: Poly1, t, positive: Side, negative: Side, on_fold: bool):
    """Side and certificate for one contact point."""
    if not on_fold:
        cert = flow(t) * along(t)
        return _side_from(cert, positive, negative), cert, "a" if cert > 0 else "b"
    cert = flow(t) * along2(t)
    if cert == 0:
        return Side.UNDETERMINED, cert, "c"
    return Side.BOTH, cert, "c"


def axis_contact_points(sys: PlaneSystem, axis: str, tol: float = DEFAULT_ROOT_TOL) -> list[ContactPoint]:
    """Contact points on the first (``"Ox"``) or second (``"Oy"``) coordinate axis.

    On Oy the tangency equation is X(0, y) = 0 with Y(0, a) != 0, and the
    touching trajectories lie in x >= 0 when Y * dX/dy > 0 at the point, in
    x <= 0 when it is negative. If dX/dy vanishes there the trajectories
    cross to both sides. Ox is the same with the roles of X and Y swapped.
    """
    if axis not in ("Ox", "Oy"):
        raise ValueError(f"axis must be 'Ox' or 'Oy', got {axis!r}")
    u_name, v_name = sys.names
    if axis == "Oy":
        tangent, normal, var, side_var = sys.X, sys.Y, 1, u_name
        restrict = lambda p: p.restrict_first(0)  # noqa: E731
    else:
        tangent, normal, var, side_var = sys.Y, sys.X, 0, v_name
        restrict = lambda p: p.restrict_second(0)  # noqa: E731
    d1 = tangent.differentiate(var)
    d2 = d1.differentiate(var)
    tang, flow, along, along2 = restrict(tangent), restrict(normal), restrict(d1), restrict(d2)
    line = axis
    out = []
    for root, on_fold in _split_roots(tang, flow, along, tol):
        t = _value(root)
        side, cert, case = _classify(flow, along, along2, t, Side.NONNEG, Side.NONPOS, on_fold)
        zero = Fraction(0) if isinstance(t, Fraction) else 0.0
        p = (zero, t) if axis == "Oy" else (t, zero)
        out.append(
            ContactPoint(
                point=(float(p[0]), float(p[1])),
                chart=sys.chart,
                line=line,
                side=side,
                side_variable=side_var,
                certificate=float(cert),
                case=case,
                exact=p if isinstance(t, Fraction) else None,
            )
        )
    out.sort(key=lambda c: c.point)
    return out


def equatorial_contact_points(sys: PlaneSystem, tol: float = DEFAULT_ROOT_TOL) -> list[ContactPoint]:
    """Contact points of trajectories with the line at infinity.

    Only P-singular systems have them; for P-nonsingular ones the equator is
    made of trajectories and the result is empty. Directions y = a x come
    from roots of X_n(1, a) with W_{n-1}(1, a) != 0; the touching
    trajectories lie in x > 0 if W_{n-1} * dX_n/dy < 0 there and in x < 0 if
    it is positive.
    The direction x = 0 is handled from Y_n(0, 1) and W_{n-1}(0, 1) in the
    second reduced chart.
    """
    if not classify_projective_type(sys).singular:
        return []
    n = sys.n
    Xn, Yn = sys.X_k(n), sys.Y_k(n)
    W = sys.w(n - 1)
    first_chart = sys.chart.next
    second_chart = sys.chart.previous
    out = []

    # directions y = a x, seen as (a, 0) in the first reduced chart
    dX = Xn.differentiate(1)
    ddX = dX.differentiate(1)
    tang, flow = Xn.restrict_first(1), W.restrict_first(1)
    along, along2 = dX.restrict_first(1), ddX.restrict_first(1)
    for root, on_fold in _split_roots(tang, flow, along, tol):
        a = _value(root)
        # negative product puts the trajectories on the positive side
        side, cert, case = _classify(flow, along, along2, a, Side.NONPOS, Side.NONNEG, on_fold)
        if case in ("a", "b"):
            case = "b" if cert > 0 else "a"
        zero = Fraction(0) if isinstance(a, Fraction) else 0.0
        out.append(
            ContactPoint(
                point=(float(a), 0.0),
                chart=first_chart,
                line="equator",
                side=side,
                side_variable=sys.names[0],
                certificate=float(cert),
                case=case,
                exact=(a, zero) if isinstance(a, Fraction) else None,
                direction=Direction("y", float(a)),
                strict=True,
            )
        )

    # direction x = 0, seen as the origin of the second reduced chart
    if Yn(0, 1) == 0 and W(0, 1) != 0:
        dY = Yn.differentiate(0)
        cert = W(0, 1) * dY(0, 1)
        if cert != 0:
            side, case = _side_from(cert, Side.NONNEG, Side.NONPOS), "a" if cert > 0 else "b"
        else:
            cert = W(0, 1) * dY.differentiate(0)(0, 1)
            side, case = (Side.UNDETERMINED if cert == 0 else Side.BOTH), "c"
        out.append(
            ContactPoint(
                point=(0.0, 0.0),
                chart=second_chart,
                line="equator",
                side=side,
                side_variable=sys.names[1],
                certificate=float(cert),
                case=case,
                exact=(Fraction(0), Fraction(0)),
                direction=Direction("x", 0.0),
                strict=True,
            )
        )
    return out
