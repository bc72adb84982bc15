from schublas.core.domain.basis_expansion import BasisExpansion, BasisKind
from schublas.core.domain.diagram import CellLabel, Diagram
from schublas.core.domain.perfect_tableau import PerfectTableau
from schublas.core.domain.permutation import Permutation
from schublas.core.domain.pipe_grid import PipeBoundary, PipeGrid
from schublas.core.domain.polynomial import Polynomial
from schublas.core.domain.tile import Tile
from schublas.core.domain.verification_report import CheckResult, VerificationReport
from schublas.core.domain.weak_composition import WeakComposition

__all__ = [
    "BasisExpansion",
    "BasisKind",
    "CellLabel",
    "CheckResult",
    "Diagram",
    "PerfectTableau",
    "Permutation",
    "PipeBoundary",
    "PipeGrid",
    "Polynomial",
    "Tile",
    "VerificationReport",
    "WeakComposition",
]
