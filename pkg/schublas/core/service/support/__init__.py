from schublas.core.service.support.newton import SnpResult, snp_check
from schublas.core.service.support.tableaux import (
    column_fillings,
    count_perfect_tableaux,
    enumerate_perfect_tableaux,
    schubert_support,
    standardized_rothe_diagram,
    tableau_bijection,
    top_lascoux_support,
)

__all__ = [
    "SnpResult",
    "column_fillings",
    "count_perfect_tableaux",
    "enumerate_perfect_tableaux",
    "schubert_support",
    "snp_check",
    "standardized_rothe_diagram",
    "tableau_bijection",
    "top_lascoux_support",
]
