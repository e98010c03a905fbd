"""Qualitative skeleton of a system: equilibria, contacts, symmetry, invariant curves."""

from .contacts import ContactPoint, Side, axis_contact_points, equatorial_contact_points
from .equilibria import (
    Equilibrium,
    EquilibriumKind,
    classify_equilibrium,
    classify_jacobian,
    finite_equilibria,
    infinite_equilibria,
)
from .invariants import (
    CycleKind,
    InfiniteFamilyError,
    InvariantCurve,
    classify_cycle_candidate,
    divergence_field,
    equator_cycle_kind,
    find_invariant_lines,
    lie_derivative,
    verify_invariant_curve,
)
from .symmetry import SymmetryReport, symmetric_line, symmetry_report

__all__ = [
    "ContactPoint",
    "CycleKind",
    "Equilibrium",
    "EquilibriumKind",
    "InfiniteFamilyError",
    "InvariantCurve",
    "Side",
    "SymmetryReport",
    "axis_contact_points",
    "classify_cycle_candidate",
    "classify_equilibrium",
    "classify_jacobian",
    "divergence_field",
    "equator_cycle_kind",
    "equatorial_contact_points",
    "find_invariant_lines",
    "finite_equilibria",
    "infinite_equilibria",
    "lie_derivative",
    "symmetric_line",
    "symmetry_report",
    "verify_invariant_curve",
]
