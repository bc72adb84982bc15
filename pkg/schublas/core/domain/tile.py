from __future__ import annotations

from enum import Enum
from typing import FrozenSet

N, S, W, E = "N", "S", "W", "E"


class Tile(str, Enum):
    """BPD 타일 여섯 종. 값은 ASCII 렌더링 문자."""

    BLANK = "."
    CROSS = "+"
    ELBOW_SE = "r"
    ELBOW_NW = "j"
    HORIZONTAL = "-"
    VERTICAL = "|"

    @property
    def edges(self) -> FrozenSet[str]:
        """
        @returns 파이프가 지나는 변의 집합.
        """
        return _EDGES[self]

    @property
    def order(self) -> int:
        """정규 정렬에서의 순위."""
        return _ORDER[self]

    def rotated(self) -> "Tile":
        """
        @returns 180° 회전한 타일 (두 엘보만 서로 바뀐다).
        """
        if self is Tile.ELBOW_SE:
            return Tile.ELBOW_NW
        if self is Tile.ELBOW_NW:
            return Tile.ELBOW_SE
        return self

    @classmethod
    def from_char(cls, char: str) -> "Tile":
        return cls(char)


_EDGES = {
    Tile.BLANK: frozenset(),
    Tile.CROSS: frozenset({N, S, W, E}),
    Tile.ELBOW_SE: frozenset({S, E}),
    Tile.ELBOW_NW: frozenset({N, W}),
    Tile.HORIZONTAL: frozenset({W, E}),
    Tile.VERTICAL: frozenset({N, S}),
}

_ORDER = {tile: index for index, tile in enumerate(Tile)}
