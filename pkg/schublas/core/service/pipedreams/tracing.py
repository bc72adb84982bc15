from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

from schublas.core.common.errors import InvalidSubgrid
from schublas.core.domain.pipe_grid import PipeBoundary, PipeGrid
from schublas.core.domain.tile import E, N, S, W, Tile

Exit = Tuple[str, int]  # ("top", 열) 또는 ("right", 행)

_TURN = {
    (S, Tile.VERTICAL): N,
    (S, Tile.CROSS): N,
    (S, Tile.ELBOW_SE): E,
    (W, Tile.HORIZONTAL): E,
    (W, Tile.CROSS): E,
    (W, Tile.ELBOW_NW): N,
}


@dataclass
class TraceResult:
    """파이프 추적 결과."""

    exits: Dict[int, Exit] = field(default_factory=dict)
    crossings: Dict[Tuple[int, int], int] = field(default_factory=dict)
    strands: int = 0

    def is_reduced(self) -> bool:
        return all(count <= 1 for count in self.crossings.values())


def trace_pipes(tiles: Sequence[Sequence[Tile]], entries: Sequence[Tuple[str, int, int]]) -> TraceResult:
    """
    각 입구에서 타일을 따라 북/동쪽으로만 이동해 출구를 찾는다.

    @param tiles rows × cols 타일 배열.
    @param entries (변 "bottom"|"left", 위치, 파이프 번호) 목록.
    @returns 출구와 교차 횟수.
    """
    rows = len(tiles)
    cols = len(tiles[0]) if rows else 0
    result = TraceResult()
    vertical_at: Dict[Tuple[int, int], int] = {}
    horizontal_at: Dict[Tuple[int, int], int] = {}
    for side, position, pipe in entries:
        if side == "bottom":
            r, c, heading = rows, position, S
        else:
            r, c, heading = position, 1, W
        while True:
            if not (1 <= r <= rows and 1 <= c <= cols):
                raise InvalidSubgrid(f"pipe {pipe} leaves the grid through a closed edge", datum=(r, c))
            tile = tiles[r - 1][c - 1]
            outgoing = _TURN.get((heading, tile))
            if outgoing is None:
                raise InvalidSubgrid(f"pipe {pipe} runs into {tile.name} at ({r}, {c})", datum=(r, c))
            result.strands += 1
            if tile is Tile.CROSS:
                (vertical_at if heading == S else horizontal_at)[(r, c)] = pipe
            if outgoing == N:
                if r == 1:
                    result.exits[pipe] = ("top", c)
                    break
                r, heading = r - 1, S
            else:
                if c == cols:
                    result.exits[pipe] = ("right", r)
                    break
                c, heading = c + 1, W
    for cell, up in vertical_at.items():
        across = horizontal_at.get(cell)
        if across is None:
            continue
        pair = (min(up, across), max(up, across))
        result.crossings[pair] = result.crossings.get(pair, 0) + 1
    return result


def boundary_entries(boundary: PipeBoundary) -> List[Tuple[str, int, int]]:
    return [("bottom", c, pipe) for c, pipe in boundary.bottom] + [("left", r, pipe) for r, pipe in boundary.left]


def _strand_count(tile: Tile) -> int:
    if tile is Tile.BLANK:
        return 0
    return 2 if tile is Tile.CROSS else 1


def validate_grid(grid: PipeGrid) -> None:
    """
    열거기와 독립적인 검사: 변 일치, 경계 계약, 추적 가능성, 축약성.

    @param grid 검사할 격자.
    @returns None. 위반 시 InvalidSubgrid.
    """
    rows, cols, boundary = grid.rows, grid.cols, grid.boundary
    for r in range(1, rows + 1):
        for c in range(1, cols + 1):
            edges = grid.tile(r, c).edges
            if c < cols and (E in edges) != (W in grid.tile(r, c + 1).edges):
                raise InvalidSubgrid("horizontal edge mismatch", datum=(r, c))
            if r < rows and (S in edges) != (N in grid.tile(r + 1, c).edges):
                raise InvalidSubgrid("vertical edge mismatch", datum=(r, c))
    sides = {
        "bottom": ({c for c, _ in boundary.bottom}, [(rows, c, S) for c in range(1, cols + 1)]),
        "top": ({c for c, _ in boundary.top}, [(1, c, N) for c in range(1, cols + 1)]),
        "left": ({r for r, _ in boundary.left}, [(r, 1, W) for r in range(1, rows + 1)]),
        "right": ({r for r, _ in boundary.right}, [(r, cols, E) for r in range(1, rows + 1)]),
    }
    for side, (ports, cells) in sides.items():
        for r, c, edge in cells:
            position = c if side in ("bottom", "top") else r
            if (edge in grid.tile(r, c).edges) != (position in ports):
                raise InvalidSubgrid(f"{side} boundary does not match the pipe contract", datum=(r, c))
        if any(position < 1 or position > (cols if side in ("bottom", "top") else rows) for position in ports):
            raise InvalidSubgrid(f"{side} boundary port outside the grid", datum=sorted(ports))
    trace = trace_pipes(grid.tiles, boundary_entries(boundary))
    expected = {pipe: ("top", c) for c, pipe in boundary.top}
    expected.update({pipe: ("right", r) for r, pipe in boundary.right})
    if trace.exits != expected:
        raise InvalidSubgrid("pipes do not reach their exits", datum=trace.exits)
    if trace.strands != sum(_strand_count(tile) for row in grid.tiles for tile in row):
        raise InvalidSubgrid("grid holds strands that no boundary pipe traverses")
    if not trace.is_reduced():
        twice = sorted(pair for pair, count in trace.crossings.items() if count > 1)
        raise InvalidSubgrid("two pipes cross more than once", datum=twice)


def is_valid_grid(grid: PipeGrid) -> bool:
    try:
        validate_grid(grid)
    except InvalidSubgrid:
        return False
    return True
