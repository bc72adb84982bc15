from schublas.core.domain import PerfectTableau, Permutation, Polynomial, WeakComposition
from schublas.core.domain.diagram import Diagram


def _poly(*exponents):
    return Polynomial({exponent: 1 for exponent in exponents})


def _tableau(*cells):
    return PerfectTableau.from_mapping(
        Diagram.from_cells((r, c) for r, c, _ in cells), {(r, c): entry for r, c, entry in cells}
    )


SCHUBERT_VALUES = {
    Permutation.of(2, 1, 4, 3): _poly((2,), (1, 1), (1, 0, 1)),
}

TOP_LASCOUX_VALUES = {
    WeakComposition.of(0, 3, 0, 2): _poly(
        (2, 3, 1, 2), (2, 3, 2, 1), (3, 3, 1, 1), (3, 2, 1, 2), (3, 2, 2, 1)
    ),
}

# (α, m, n) → std_{m,n}(α)
STANDARDIZATIONS = [
    ((WeakComposition.of(2, 4, 0, 6, 0, 0, 1), 6, 7), Permutation.of(6, 7, 8, 1, 9, 3, 5, 2, 4)),
    ((WeakComposition.of(0, 4, 2), 4, 3), Permutation.of(3, 1, 5, 2, 4)),
    ((WeakComposition.of(2, 0, 4, 0, 1), 4, 5), Permutation.of(4, 5, 1, 6, 3, 2)),
    ((WeakComposition.of(0, 3, 0, 2), 3, 4), Permutation.of(2, 4, 1, 5, 3)),
]

BPD_COUNTS = {
    Permutation.of(2, 1, 4, 3): 3,
    Permutation.of(2, 4, 1, 5, 3): 5,
}

LTBPD_COUNTS = {
    WeakComposition.of(0, 3, 0, 2): 5,
}

# Rothe BPD of [2,1,4,3]; blank weight (1,0,1,0)
ROTHE_BPD_2143 = [".r--", "r+--", "||.r", "||r+"]

SCHUBERT_PRODUCT = {
    "left": Permutation.of(1, 4, 2, 3),
    "right": Permutation.of(2, 1, 4, 3),
    "terms": [
        Permutation.of(2, 4, 3, 1),
        Permutation.of(2, 5, 1, 3, 4),
        Permutation.of(3, 4, 1, 2),
        Permutation.of(4, 1, 3, 2),
        Permutation.of(5, 1, 2, 3, 4),
    ],
}

TOP_LASCOUX_PRODUCT = {
    "left": WeakComposition.of(2, 3, 1, 4),
    "right": WeakComposition.of(2, 1, 4, 3),
    "terms": [
        WeakComposition.of(8, 6, 5, 7),
        WeakComposition.of(6, 8, 4, 7),
        WeakComposition.of(7, 8, 5, 6),
        WeakComposition.of(7, 6, 8, 5),
        WeakComposition.of(6, 7, 8, 4),
    ],
    "m1": 4,
    "m2": 4,
    "n": 4,
    "witness": (WeakComposition.of(8, 6, 5, 7), Permutation.of(2, 4, 3, 1)),
}

SCHUBERT_SUPPORT = {
    Permutation.of(3, 1, 5, 2, 4): {
        WeakComposition.of(3, 1),
        WeakComposition.of(2, 2),
        WeakComposition.of(2, 1, 1),
        WeakComposition.of(3, 0, 1),
        WeakComposition.of(2, 0, 2),
    },
}

TOP_LASCOUX_SUPPORT = {
    WeakComposition.of(0, 4, 2): {
        WeakComposition.of(4, 3, 1),
        WeakComposition.of(4, 2, 2),
        WeakComposition.of(3, 3, 2),
        WeakComposition.of(3, 4, 1),
        WeakComposition.of(2, 4, 2),
    },
}

PERFECT_TABLEAU_COUNTS = {
    "rothe_31524": 6,
    "snow_042": 6,
}

# third tableau on RD([3,1,5,2,4]) ↦ third tableau on snow((0,4,2)), m=4, n=3
TABLEAU_BIJECTION = {
    "alpha": WeakComposition.of(0, 4, 2),
    "m": 4,
    "n": 3,
    "source": _tableau((1, 1, 1), (1, 2, 1), (3, 2, 2), (3, 4, 3)),
    "target": _tableau(
        (1, 2, 1), (1, 4, 1),
        (2, 1, 2), (2, 2, 2), (2, 3, 1), (2, 4, 2),
        (3, 1, 3), (3, 2, 3),
    ),
}

TRANSFER_CHAIN = {
    "alpha": WeakComposition.of(2, 0, 4, 0, 1),
    "m": 4,
    "n": 5,
    "compositions": [
        WeakComposition.of(4, 2, 1),
        WeakComposition.of(4, 2, 0, 1),
        WeakComposition.of(4, 2, 0, 0, 1),
        WeakComposition.of(2, 4, 0, 0, 1),
        WeakComposition.of(2, 0, 4, 0, 1),
    ],
    "pi_hat": [3, 4, 1, 2],
    "permutations": [
        Permutation.of(5, 6, 4, 3, 1, 2),
        Permutation.of(5, 4, 6, 3, 1, 2),
        Permutation.of(4, 5, 6, 3, 1, 2),
        Permutation.of(4, 5, 6, 1, 3, 2),
        Permutation.of(4, 5, 1, 6, 3, 2),
    ],
    "divided_difference": [2, 1, 4, 3],
}

HILBERT_PREFIX = [1, 1, 2, 4]
