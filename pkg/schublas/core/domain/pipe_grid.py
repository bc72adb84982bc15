from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, List, Tuple

from schublas.core.common.errors import InvalidInput
from schublas.core.domain.permutation import Permutation
from schublas.core.domain.tile import Tile
from schublas.core.domain.weak_composition import WeakComposition

Port = Tuple[int, int]  # (경계 위치, 파이프 번호)


@dataclass(frozen=True)
class PipeBoundary:
    """
    경계 파이프 명세. 파이프는 아래/왼쪽 변으로 들어와 위/오른쪽 변으로 나간다.

    Attributes:
        bottom: (열, 파이프) 아래 변으로 들어오는 파이프.
        left: (행, 파이프) 왼쪽 변으로 들어오는 파이프.
        top: (열, 파이프) 위 변으로 나가는 파이프.
        right: (행, 파이프) 오른쪽 변으로 나가는 파이프.
    """

    bottom: Tuple[Port, ...] = ()
    left: Tuple[Port, ...] = ()
    top: Tuple[Port, ...] = ()
    right: Tuple[Port, ...] = ()

    def __post_init__(self) -> None:
        for name in ("bottom", "left", "top", "right"):
            object.__setattr__(self, name, tuple(sorted(tuple(port) for port in getattr(self, name))))
        entries = [pipe for _, pipe in self.bottom + self.left]
        exits = [pipe for _, pipe in self.top + self.right]
        if len(set(entries)) != len(entries) or sorted(entries) != sorted(exits):
            raise InvalidInput("every pipe needs exactly one entry and one exit", datum=self.to_json())

    @classmethod
    def bottom_to_right(cls, w: Permutation, size: int) -> "PipeBoundary":
        """
        BPD 경계: 행 r 오른쪽으로 나가는 파이프는 열 w(r) 아래에서 들어온다.
        파이프 번호는 들어오는 열이다.

        @param w 순열.
        @param size 격자 크기 n (w ∈ S_n).
        @returns 경계 명세.
        """
        images = w.one_line(size)
        return cls(
            bottom=tuple((i, i) for i in range(1, size + 1)),
            right=tuple((r, images[r - 1]) for r in range(1, size + 1)),
        )

    @classmethod
    def left_to_top(cls, alpha: WeakComposition) -> "PipeBoundary":
        """
        LTBPD 경계: α_i > 0 인 행 i의 왼쪽에서 들어와 열 α_i 위로 나간다.

        @param alpha 눈송이 약합성.
        @returns 경계 명세.
        """
        rows = alpha.support()
        return cls(
            left=tuple((i, i) for i in rows),
            top=tuple((alpha.at(i), i) for i in rows),
        )

    @property
    def pipes(self) -> List[int]:
        return sorted(pipe for _, pipe in self.bottom + self.left)

    def to_json(self) -> Dict[str, List[List[int]]]:
        return {
            "bottom": [list(port) for port in self.bottom],
            "left": [list(port) for port in self.left],
            "top": [list(port) for port in self.top],
            "right": [list(port) for port in self.right],
        }


@dataclass(frozen=True)
class PipeGrid:
    """rows × cols 타일 배열과 경계 명세."""

    rows: int
    cols: int
    tiles: Tuple[Tuple[Tile, ...], ...]
    boundary: PipeBoundary = field(default_factory=PipeBoundary)

    def __post_init__(self) -> None:
        if len(self.tiles) != self.rows or any(len(row) != self.cols for row in self.tiles):
            raise InvalidInput("tile array does not match grid dimensions", datum=(self.rows, self.cols))

    def tile(self, r: int, c: int) -> Tile:
        """
        @param r 1-based 행.
        @param c 1-based 열.
        @returns 해당 타일.
        """
        return self.tiles[r - 1][c - 1]

    def sort_key(self) -> Tuple[int, ...]:
        """행 우선 타일 순서의 사전식 키."""
        return tuple(tile.order for row in self.tiles for tile in row)

    def count_in_row(self, r: int, predicate: Callable[[Tile], bool]) -> int:
        return sum(1 for tile in self.tiles[r - 1] if predicate(tile))

    def render_ascii(self) -> str:
        """
        @returns 행마다 한 줄, 타일당 한 글자.
        """
        return "\n".join("".join(tile.value for tile in row) for row in self.tiles)

    def to_json(self) -> Dict[str, object]:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "tiles": ["".join(tile.value for tile in row) for row in self.tiles],
            "boundary": self.boundary.to_json(),
        }

    @classmethod
    def from_rows(cls, rows: List[str], boundary: PipeBoundary) -> "PipeGrid":
        """
        @param rows ASCII 행 목록.
        @param boundary 경계 명세.
        @returns PipeGrid.
        """
        try:
            tiles = tuple(tuple(Tile.from_char(char) for char in row) for row in rows)
        except ValueError as exc:
            raise InvalidInput("unknown tile character", datum=rows) from exc
        return cls(len(tiles), len(tiles[0]) if tiles else 0, tiles, boundary)
