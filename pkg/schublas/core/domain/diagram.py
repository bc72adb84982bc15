from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Tuple

from schublas.core.common.errors import InvalidInput
from schublas.core.domain.weak_composition import WeakComposition

Cell = Tuple[int, int]


class CellLabel(str, Enum):
    """스노우 다이어그램 셀 레이블."""

    DOT = "dot"
    BULLET = "bullet"
    ASTERISK = "asterisk"


@dataclass(frozen=True)
class Diagram:
    """1-based (행, 열) 셀의 유한 집합과 선택적 레이블."""

    cells: FrozenSet[Cell] = frozenset()
    labels: Tuple[Tuple[Cell, CellLabel], ...] = field(default=())

    def __post_init__(self) -> None:
        cells = frozenset((int(r), int(c)) for r, c in self.cells)
        if any(r < 1 or c < 1 for r, c in cells):
            raise InvalidInput("diagram cells use 1-based coordinates", datum=sorted(cells))
        labels = tuple(sorted((cell, CellLabel(label)) for cell, label in self.labels if CellLabel(label) != CellLabel.DOT))
        if any(cell not in cells for cell, _ in labels):
            raise InvalidInput("label attached to a cell outside the diagram", datum=labels)
        object.__setattr__(self, "cells", cells)
        object.__setattr__(self, "labels", labels)

    @classmethod
    def from_cells(cls, cells: Iterable[Cell], labels: Optional[Mapping[Cell, CellLabel]] = None) -> "Diagram":
        return cls(frozenset(cells), tuple((labels or {}).items()))

    @classmethod
    def left_justified(cls, alpha: WeakComposition) -> "Diagram":
        """
        D(α): 행 r에 열 1..α_r 셀을 두는 왼쪽 정렬 다이어그램.

        @param alpha 약합성.
        @returns D(α).
        """
        return cls.from_cells((r, c) for r in range(1, len(alpha) + 1) for c in range(1, alpha.at(r) + 1))

    def label_map(self) -> Dict[Cell, CellLabel]:
        return dict(self.labels)

    def unlabeled(self) -> "Diagram":
        return Diagram(self.cells)

    def weight(self) -> WeakComposition:
        """
        wt(D): 각 행의 셀 개수.

        @returns 행별 셀 수를 담은 약합성.
        """
        counts = [0] * self.row_count()
        for r, _ in self.cells:
            counts[r - 1] += 1
        return WeakComposition(tuple(counts))

    def row_count(self) -> int:
        return max((r for r, _ in self.cells), default=0)

    def sorted_cells(self) -> List[Cell]:
        """
        @returns 행 우선으로 정렬된 셀 목록.
        """
        return sorted(self.cells)

    def column(self, c: int) -> List[int]:
        """
        @param c 열 번호.
        @returns 열 c에 있는 셀의 행 번호 (위에서 아래 순).
        """
        return sorted(r for r, col in self.cells if col == c)

    def fits_in(self, rows: int, cols: int) -> bool:
        return all(r <= rows and c <= cols for r, c in self.cells)

    def __len__(self) -> int:
        return len(self.cells)

    def to_json(self) -> List[list]:
        """
        @returns [[row, col, label], …] 행 우선 정렬. 레이블 없는 셀은 "dot".
        """
        labels = self.label_map()
        return [[r, c, labels.get((r, c), CellLabel.DOT).value] for r, c in self.sorted_cells()]

    @classmethod
    def from_json(cls, payload: Iterable[list]) -> "Diagram":
        """
        @param payload [[row, col, label?], …].
        @returns 복원된 Diagram.
        """
        cells: List[Cell] = []
        labels: Dict[Cell, CellLabel] = {}
        for item in payload:
            if len(item) not in (2, 3):
                raise InvalidInput("diagram cell must be [row, col, label?]", datum=item)
            cell = (int(item[0]), int(item[1]))
            cells.append(cell)
            if len(item) == 3:
                try:
                    labels[cell] = CellLabel(item[2])
                except ValueError as exc:
                    raise InvalidInput("unknown cell label", datum=item[2]) from exc
        return cls.from_cells(cells, labels)
