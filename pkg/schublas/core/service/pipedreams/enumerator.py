from __future__ import annotations

import logging
from typing import List, Optional, Set, Tuple

from schublas.core.domain.pipe_grid import PipeBoundary, PipeGrid
from schublas.core.domain.tile import Tile

logger = logging.getLogger(__name__)

Label = Optional[int]


class PipeEnumerator:
    """
    경계 명세를 만족하는 축약 격자를 모두 찾는 백트래킹 열거기.
    셀은 아래 행부터, 각 행은 왼쪽부터 채운다. 그러면 각 셀의 S, W 변에 오는 파이프가
    이미 정해져 있다. 교차한 파이프 쌍을 기록해 두 번째 교차를 즉시 잘라낸다.
    """

    def __init__(self, rows: int, cols: int, boundary: PipeBoundary) -> None:
        """
        @param rows 행 수.
        @param cols 열 수.
        @param boundary 경계 명세.
        @returns None
        """
        self.rows = rows
        self.cols = cols
        self.boundary = boundary
        self._bottom = dict(boundary.bottom)
        self._left = dict(boundary.left)
        self._top = dict(boundary.top)
        self._right = dict(boundary.right)
        self._top_target = {pipe: c for c, pipe in boundary.top}
        self._right_target = {pipe: r for r, pipe in boundary.right}
        self._tiles: List[List[Tile]] = [[Tile.BLANK] * cols for _ in range(rows)]
        self._up: List[Label] = [self._bottom.get(c) for c in range(1, cols + 1)]
        self._crossed: Set[Tuple[int, int]] = set()
        self._found: List[PipeGrid] = []
        self.visited = 0

    def enumerate(self) -> List[PipeGrid]:
        """
        @returns 행 우선 타일 순서로 정렬된 격자 목록.
        """
        self._found = []
        if self.rows == 0 or self.cols == 0:
            if not self.boundary.pipes:
                self._found.append(PipeGrid(self.rows, self.cols, tuple(() for _ in range(self.rows)), self.boundary))
            return self._found
        self._visit(0, None)
        self._found.sort(key=PipeGrid.sort_key)
        logger.debug(
            "enumerated %d grids of size %dx%d (%d nodes)", len(self._found), self.rows, self.cols, self.visited
        )
        return self._found

    def _north_allowed(self, pipe: int, r: int, c: int) -> bool:
        if r == 1:
            return self._top.get(c) == pipe
        target = self._right_target.get(pipe)
        return target is None or r - 1 >= target

    def _east_allowed(self, pipe: int, r: int, c: int) -> bool:
        if c == self.cols:
            return self._right.get(r) == pipe
        target = self._top_target.get(pipe)
        return target is None or c + 1 <= target

    def _options(self, south: Label, west: Label, r: int, c: int) -> List[Tuple[Tile, Label, Label]]:
        if south is None and west is None:
            return [(Tile.BLANK, None, None)]
        if west is None:
            return [(Tile.VERTICAL, south, None), (Tile.ELBOW_SE, None, south)]
        if south is None:
            return [(Tile.HORIZONTAL, None, west), (Tile.ELBOW_NW, west, None)]
        return [(Tile.CROSS, south, west)]

    def _visit(self, k: int, carry: Label) -> None:
        self.visited += 1
        if k == self.rows * self.cols:
            self._found.append(
                PipeGrid(self.rows, self.cols, tuple(tuple(row) for row in self._tiles), self.boundary)
            )
            return
        r = self.rows - k // self.cols
        c = k % self.cols + 1
        south = self._up[c - 1]
        west = self._left.get(r) if c == 1 else carry
        for tile, north, east in self._options(south, west, r, c):
            if north is None and r == 1 and self._top.get(c) is not None:
                continue
            if east is None and c == self.cols and self._right.get(r) is not None:
                continue
            if north is not None and not self._north_allowed(north, r, c):
                continue
            if east is not None and not self._east_allowed(east, r, c):
                continue
            pair: Optional[Tuple[int, int]] = None
            if tile is Tile.CROSS:
                pair = (min(north, east), max(north, east))  # type: ignore[type-var]
                if pair in self._crossed:
                    continue
                self._crossed.add(pair)
            self._tiles[r - 1][c - 1] = tile
            self._up[c - 1] = north
            self._visit(k + 1, east)
            self._up[c - 1] = south
            self._tiles[r - 1][c - 1] = Tile.BLANK
            if pair is not None:
                self._crossed.discard(pair)


def enumerate_grids(rows: int, cols: int, boundary: PipeBoundary) -> List[PipeGrid]:
    return PipeEnumerator(rows, cols, boundary).enumerate()

