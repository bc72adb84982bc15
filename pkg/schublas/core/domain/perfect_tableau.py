from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Mapping, Tuple

from schublas.core.domain.diagram import Cell, Diagram
from schublas.core.domain.weak_composition import WeakComposition


@dataclass(frozen=True)
class PerfectTableau:
    """다이어그램의 정수 채우기 (열 방향 강증가, 행 i의 원소 ≤ i)."""

    shape: Diagram
    filling: Tuple[Tuple[Cell, int], ...]

    @classmethod
    def from_mapping(cls, shape: Diagram, filling: Mapping[Cell, int]) -> "PerfectTableau":
        return cls(shape.unlabeled(), tuple(sorted(filling.items())))

    def entry(self, cell: Cell) -> int:
        return dict(self.filling)[cell]

    def as_dict(self) -> Dict[Cell, int]:
        return dict(self.filling)

    def weight(self) -> WeakComposition:
        """
        @returns k번째 성분이 k로 채워진 셀 수인 약합성.
        """
        values = [entry for _, entry in self.filling]
        counts = [0] * max(values, default=0)
        for value in values:
            counts[value - 1] += 1
        return WeakComposition(tuple(counts))

    def is_perfect(self) -> bool:
        """
        @returns 모양 일치, 열 강증가, 행 플래그 조건을 모두 만족하면 True.
        """
        filling = self.as_dict()
        if set(filling) != set(self.shape.cells):
            return False
        if any(value < 1 or value > r for (r, _), value in filling.items()):
            return False
        for c in {col for _, col in filling}:
            column = [filling[(r, c)] for r in self.shape.column(c)]
            if any(a >= b for a, b in zip(column, column[1:])):
                return False
        return True

    def to_json(self) -> Dict[str, List[List[int]]]:
        return {"cells": [[r, c, value] for (r, c), value in self.filling]}
