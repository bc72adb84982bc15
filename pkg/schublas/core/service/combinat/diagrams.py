from __future__ import annotations

from typing import Dict

from schublas.core.common.errors import OutOfRange
from schublas.core.domain.diagram import Cell, CellLabel, Diagram
from schublas.core.domain.permutation import Permutation
from schublas.core.domain.weak_composition import WeakComposition
from schublas.core.service.combinat.codes import _require_snowy


def rothe_diagram(w: Permutation) -> Diagram:
    """
    RD(w) = {(r, c) : w(r) > c, 어떤 i ≤ r 에서도 w(i) ≠ c}.

    @param w 순열.
    @returns Rothe 다이어그램.
    """
    images = w.images
    cells = []
    for r in range(1, len(images) + 1):
        seen = set(images[:r])
        cells.extend((r, c) for c in range(1, images[r - 1]) if c not in seen)
    return Diagram.from_cells(cells)


def snow_diagram(alpha: WeakComposition) -> Diagram:
    """
    snow(D(α)): 각 행의 가장 오른쪽 셀에 •, 그 위쪽 빈 자리마다 ✳ 셀을 추가한다.

    @param alpha 눈송이 약합성.
    @returns 레이블이 붙은 다이어그램.
    """
    _require_snowy(alpha)
    cells = set(Diagram.left_justified(alpha).cells)
    labels: Dict[Cell, CellLabel] = {}
    for i in alpha.support():
        column = alpha.at(i)
        labels[(i, column)] = CellLabel.BULLET
        for r in range(1, i):
            if alpha.at(r) < column:
                cells.add((r, column))
                labels[(r, column)] = CellLabel.ASTERISK
    return Diagram.from_cells(cells, labels)


def rotate_complement(diagram: Diagram, m: int, n: int) -> Diagram:
    """
    n×m 상자에 넣고 180° 회전한 뒤 상자 안에서 여집합을 취한다. 레이블은 버린다.

    @param diagram 처음 n행, m열 안의 다이어그램.
    @param m 열 수.
    @param n 행 수.
    @returns 회전-여집합 다이어그램.
    """
    if m < 0 or n < 0 or not diagram.fits_in(n, m):
        raise OutOfRange(f"diagram does not fit the {n}x{m} box", datum=diagram.sorted_cells())
    rotated = {(n + 1 - r, m + 1 - c) for r, c in diagram.cells}
    return Diagram.from_cells(
        (r, c) for r in range(1, n + 1) for c in range(1, m + 1) if (r, c) not in rotated
    )
