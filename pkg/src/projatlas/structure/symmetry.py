"""Mirror and point symmetries of the direction field, decided exactly."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from ..poly_core import Poly2
from ..projective import PlaneSystem

U, V = Poly2.first(), Poly2.second()


@dataclass(frozen=True)
class SymmetryReport:
    """Which reflections map the family of trajectories onto itself.

    Flags refer to the coordinate names of the system: ``axis_first`` is the
    axis of the first variable (Ox in the XY chart), ``axis_second`` the axis
    of the second one.
    """

    axis_first: bool
    axis_second: bool
    origin: bool
    diagonal: bool
    antidiagonal: bool
    lines: tuple[tuple[tuple[Fraction, Fraction, Fraction], bool], ...] = field(default=())

    def as_dict(self, names: tuple[str, str] = ("x", "y")) -> dict[str, bool]:
        u, v = names
        out = {
            f"O{u}": self.axis_first,
            f"O{v}": self.axis_second,
            "origin": self.origin,
            f"{v}={u}": self.diagonal,
            f"{v}=-{u}": self.antidiagonal,
        }
        for (a, b, c), flag in self.lines:
            out[f"line({a},{b},{c})"] = flag
        return out


def _compose(p: Poly2, u: Poly2, v: Poly2) -> Poly2:
    return p.substitute(u, v)


def symmetric_axis_first(sys: PlaneSystem) -> bool:
    """X(x,y) Y(x,-y) + X(x,-y) Y(x,y) vanishes identically."""
    X, Y = sys.X, sys.Y
    Xr, Yr = _compose(X, U, -V), _compose(Y, U, -V)
    return (X * Yr + Xr * Y).is_zero()


def symmetric_axis_second(sys: PlaneSystem) -> bool:
    """X(x,y) Y(-x,y) + X(-x,y) Y(x,y) vanishes identically."""
    X, Y = sys.X, sys.Y
    Xr, Yr = _compose(X, -U, V), _compose(Y, -U, V)
    return (X * Yr + Xr * Y).is_zero()


def symmetric_origin(sys: PlaneSystem) -> bool:
    """X(x,y) Y(-x,-y) - X(-x,-y) Y(x,y) vanishes identically."""
    X, Y = sys.X, sys.Y
    Xr, Yr = _compose(X, -U, -V), _compose(Y, -U, -V)
    return (X * Yr - Xr * Y).is_zero()


def symmetric_diagonal(sys: PlaneSystem) -> bool:
    """X(x,y) X(y,x) - Y(x,y) Y(y,x) vanishes identically."""
    X, Y = sys.X, sys.Y
    return (X * X.swap_variables() - Y * Y.swap_variables()).is_zero()


def symmetric_antidiagonal(sys: PlaneSystem) -> bool:
    """X(-x,-y) X(y,x) - Y(-x,-y) Y(y,x) vanishes identically."""
    X, Y = sys.X, sys.Y
    Xm, Ym = _compose(X, -U, -V), _compose(Y, -U, -V)
    return (Xm * X.swap_variables() - Ym * Y.swap_variables()).is_zero()


def symmetric_line(sys: PlaneSystem, a, b, c) -> bool:
    """Symmetry with respect to the line a*x + b*y + c = 0.

    The reflection p' = p - 2 (a, b) L(p) / (a^2 + b^2) must carry the field at
    p to a vector parallel to the field at p'. Cross-multiplied, this is

        Y' ((a^2 - b^2) X + 2ab Y) - X' (2ab X - (a^2 - b^2) Y) = 0

    with X', Y' the members evaluated at p'.
    """
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    norm = a * a + b * b
    if norm == 0:
        raise ValueError("line coefficients a and b cannot both vanish")
    line = U * a + V * b + c
    ur = U - line * (2 * a / norm)
    vr = V - line * (2 * b / norm)
    X, Y = sys.X, sys.Y
    Xr, Yr = _compose(X, ur, vr), _compose(Y, ur, vr)
    d, e = a * a - b * b, 2 * a * b
    return (Yr * (X * d + Y * e) - Xr * (X * e - Y * d)).is_zero()


def symmetry_report(sys: PlaneSystem, extra_lines: Sequence[tuple] = ()) -> SymmetryReport:
    lines = tuple(
        ((Fraction(a), Fraction(b), Fraction(c)), symmetric_line(sys, a, b, c)) for a, b, c in extra_lines
    )
    return SymmetryReport(
        axis_first=symmetric_axis_first(sys),
        axis_second=symmetric_axis_second(sys),
        origin=symmetric_origin(sys),
        diagonal=symmetric_diagonal(sys),
        antidiagonal=symmetric_antidiagonal(sys),
        lines=lines,
    )
