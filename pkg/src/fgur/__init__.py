"""Fine-grained uncertainty bounds for relativistically moving observers."""

from fgur.cavity import CavityGeometry, CavityParams, cavity_bound, cavity_reduced_density, period
from fgur.measurement import (
    XZ_PAIRS,
    Basis,
    MeasurementSetting,
    OutcomePair,
    analytic_bound_uniform,
    fgur_lhs,
    probability,
)
from fgur.optimizer import McsResult, maximize_cavity, maximize_uniform
from fgur.output import emit_csv, emit_svg
from fgur.polylog import Q, polylog
from fgur.scans import ScanMode, ScanSpec, ScanTable, run_cavity_scan, run_mcs, run_oracle_check, run_unruh_scan
from fgur.unruh import BlochState, UnruhParams, reduced_density_analytic, reduced_density_oracle

__all__ = [
    "Basis",
    "BlochState",
    "CavityGeometry",
    "CavityParams",
    "McsResult",
    "MeasurementSetting",
    "OutcomePair",
    "Q",
    "ScanMode",
    "ScanSpec",
    "ScanTable",
    "UnruhParams",
    "XZ_PAIRS",
    "analytic_bound_uniform",
    "cavity_bound",
    "cavity_reduced_density",
    "emit_csv",
    "emit_svg",
    "fgur_lhs",
    "maximize_cavity",
    "maximize_uniform",
    "period",
    "polylog",
    "probability",
    "reduced_density_analytic",
    "reduced_density_oracle",
    "run_cavity_scan",
    "run_mcs",
    "run_oracle_check",
    "run_unruh_scan",
]

__version__ = "0.1.0"
