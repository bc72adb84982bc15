from schublas.core.service.pipedreams.bumpless import (
    blank_weight,
    bpd_polynomial,
    enumerate_bpd,
    enumerate_ltbpd,
    ltbpd_composition,
    ltbpd_inductive_step,
    ltbpd_polynomial,
    ltbpd_shape,
    nonblank_weight,
    rotate_bpd,
)
from schublas.core.service.pipedreams.enumerator import PipeEnumerator, enumerate_grids
from schublas.core.service.pipedreams.tracing import is_valid_grid, trace_pipes, validate_grid

__all__ = [
    "PipeEnumerator",
    "blank_weight",
    "bpd_polynomial",
    "enumerate_bpd",
    "enumerate_grids",
    "enumerate_ltbpd",
    "is_valid_grid",
    "ltbpd_composition",
    "ltbpd_inductive_step",
    "ltbpd_polynomial",
    "ltbpd_shape",
    "nonblank_weight",
    "rotate_bpd",
    "trace_pipes",
    "validate_grid",
]
