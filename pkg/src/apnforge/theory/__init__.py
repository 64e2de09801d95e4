"""Computations built on the exclude spectrum: ortho-derivatives, difference sets,
Kloosterman sums, distance bounds, power-function and gamma_F identities."""

from .bounds import BoundReport, BoundRow, bound_report
from .gamma import gamma_linear_structures, gamma_weight_divisibility
from .kloosterman import KloostermanTable, kloosterman_table
from .ortho import OrthoDerivative, ortho_derivative
from .plateaued import Verdict, plateaued_nonequivalence_test
from .power import (
    monomial_apn_via_fractional_map,
    phi_preimage_mult,
    power_axis_mults,
    power_uniformity_check,
)
from .triplicate import PdsParams, check_pds, pds_params

__all__ = [
    "BoundReport", "BoundRow", "bound_report",
    "gamma_linear_structures", "gamma_weight_divisibility",
    "KloostermanTable", "kloosterman_table",
    "OrthoDerivative", "ortho_derivative",
    "Verdict", "plateaued_nonequivalence_test",
    "monomial_apn_via_fractional_map", "phi_preimage_mult", "power_axis_mults", "power_uniformity_check",
    "PdsParams", "check_pds", "pds_params",
]
