from schublas.core.service.expansion.greedy import (
    basis_polynomial,
    expand_in_basis,
    reconstruct,
    solve_key_expansion,
)
from schublas.core.service.expansion.hilbert import enumerate_snowy_by_raj, hilbert_coefficients
from schublas.core.service.expansion.key_expansion import (
    box_compositions,
    key_expand_top_lascoux,
    schubert_key_expansion,
    verify_reverse_key,
)
from schublas.core.service.expansion.structure import (
    destandardize,
    schubert_product,
    top_lascoux_product,
    verify_structure_corollary,
    verify_structure_theorem,
)

__all__ = [
    "basis_polynomial",
    "box_compositions",
    "destandardize",
    "enumerate_snowy_by_raj",
    "expand_in_basis",
    "hilbert_coefficients",
    "key_expand_top_lascoux",
    "reconstruct",
    "schubert_key_expansion",
    "schubert_product",
    "solve_key_expansion",
    "top_lascoux_product",
    "verify_reverse_key",
    "verify_structure_corollary",
    "verify_structure_theorem",
]
