"""Three-shear rotation of NEQR images over reversible NOT/CNOT/Toffoli circuits."""

from fractions import Fraction

from ._core import (
    FormatError,
    IoError,
    ParameterError,
    PreconditionError,
    QshearError,
    RangeError,
    RoutingError,
    StructuralError,
    UnsupportedAngleError,
    agreement_fraction,
    build_circuit,
    build_half_shear,
    eval_semantic,
    ideal_rotate,
    netlist_cost,
    oracle_rotate,
    oracle_shear,
    quantize_factor,
    rotate,
    rotate_quarter_turns,
    run_circuit,
    shear,
)
from . import _core

__all__ = [
    "FormatError",
    "IoError",
    "ParameterError",
    "PreconditionError",
    "QshearError",
    "RangeError",
    "RoutingError",
    "StructuralError",
    "UnsupportedAngleError",
    "agreement_fraction",
    "audit_rows",
    "build_circuit",
    "build_half_shear",
    "eval_semantic",
    "ideal_rotate",
    "netlist_cost",
    "oracle_rotate",
    "oracle_shear",
    "predict",
    "quantize_factor",
    "rotate",
    "rotate_quarter_turns",
    "run_circuit",
    "shear",
]


def predict(kind, n, m=None):
    """Closed-form CNOT-equivalent count for a circuit kind."""
    return Fraction(*_core.predict(kind, n, m))


def audit_rows(n_min=2, n_max=6, m_min=4, m_max=8):
    """Audit rows as dicts; predicted and delta are Fractions."""
    rows = _core.audit_rows(n_min, n_max, m_min, m_max)
    for row in rows:
        row["predicted"] = Fraction(*row["predicted"])
        row["delta"] = Fraction(*row["delta"])
    return rows
