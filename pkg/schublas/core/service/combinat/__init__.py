from schublas.core.service.combinat.codes import (
    code_to_perm,
    coinversion_rajcode,
    invcode,
    raj,
    rajcode,
    rajcode_inverse,
)
from schublas.core.service.combinat.diagrams import rotate_complement, rothe_diagram, snow_diagram
from schublas.core.service.combinat.orders import tail_lex_compare, tail_lex_max
from schublas.core.service.combinat.standardization import check_box, reverse_complement, standardize

__all__ = [
    "check_box",
    "code_to_perm",
    "coinversion_rajcode",
    "invcode",
    "raj",
    "rajcode",
    "rajcode_inverse",
    "reverse_complement",
    "rotate_complement",
    "rothe_diagram",
    "snow_diagram",
    "standardize",
    "tail_lex_compare",
    "tail_lex_max",
]
