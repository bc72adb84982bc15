from schublas.core.service.bases.recursions import (
    key,
    reset_caches,
    resolve_in_order,
    schubert,
    top_lascoux,
)
from schublas.core.service.bases.transfer import (
    TransferStep,
    complement_composition,
    reverse_key,
    reverse_key_matches,
    schubert_via_top_lascoux,
    top_lascoux_via_reverse,
    transfer_chain,
)

__all__ = [
    "TransferStep",
    "complement_composition",
    "key",
    "reset_caches",
    "resolve_in_order",
    "reverse_key",
    "reverse_key_matches",
    "schubert",
    "schubert_via_top_lascoux",
    "top_lascoux",
    "top_lascoux_via_reverse",
    "transfer_chain",
]
