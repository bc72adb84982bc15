from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Tuple

from schublas.core.common.errors import InvalidComposition


@dataclass(frozen=True)
class WeakComposition:
    """유한 지지집합을 갖는 음이 아닌 정수열. 뒤쪽 0은 저장하지 않는다."""

    entries: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        values = tuple(int(value) for value in self.entries)
        if any(value < 0 for value in values):
            raise InvalidComposition("weak composition entries must be non-negative", datum=values)
        end = len(values)
        while end and values[end - 1] == 0:
            end -= 1
        object.__setattr__(self, "entries", values[:end])

    @classmethod
    def of(cls, *values: int) -> "WeakComposition":
        """
        @param values 성분들.
        @returns 정규화된 WeakComposition.
        """
        return cls(tuple(values))

    def __len__(self) -> int:
        """
        @returns 마지막 양수 성분의 위치 (지지집합을 담는 최소 n).
        """
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def at(self, index: int) -> int:
        """
        @param index 1부터 시작하는 위치.
        @returns α_index (범위 밖이면 0).
        """
        if index < 1 or index > len(self.entries):
            return 0
        return self.entries[index - 1]

    def padded(self, length: int) -> Tuple[int, ...]:
        """
        @param length 원하는 길이.
        @returns 0으로 채운 튜플.
        """
        if length < len(self.entries):
            raise InvalidComposition(f"composition does not fit in {length} entries", datum=self.entries)
        return self.entries + (0,) * (length - len(self.entries))

    @property
    def size(self) -> int:
        """|α|"""
        return sum(self.entries)

    @property
    def max_entry(self) -> int:
        return max(self.entries, default=0)

    def support(self) -> Tuple[int, ...]:
        """
        @returns 양수 성분의 위치(1-based) 목록.
        """
        return tuple(index + 1 for index, value in enumerate(self.entries) if value > 0)

    def is_snowy(self) -> bool:
        positive = [value for value in self.entries if value > 0]
        return len(positive) == len(set(positive))

    def is_partition(self) -> bool:
        return all(a >= b for a, b in zip(self.entries, self.entries[1:]))

    def is_zero(self) -> bool:
        return not self.entries

    def swap(self, i: int) -> "WeakComposition":
        """
        s_i α: i번째와 i+1번째 성분을 교환합니다.

        @param i 1-based 위치.
        @returns 교환된 합성.
        """
        values = list(self.padded(max(len(self.entries), i + 1)))
        values[i - 1], values[i] = values[i], values[i - 1]
        return WeakComposition(tuple(values))

    def __add__(self, other: "WeakComposition") -> "WeakComposition":
        length = max(len(self), len(other))
        return WeakComposition(tuple(a + b for a, b in zip(self.padded(length), other.padded(length))))

    def to_text(self) -> str:
        """
        @returns "0,4,2" 형태의 텍스트 (영합성은 "0").
        """
        return ",".join(str(value) for value in self.entries) if self.entries else "0"

    def __repr__(self) -> str:
        return f"WeakComposition({self.entries!r})"


def normalize_exponent(values: Tuple[int, ...]) -> Tuple[int, ...]:
    """
    @param values 지수 벡터.
    @returns 뒤쪽 0을 제거한 벡터.
    """
    end = len(values)
    while end and values[end - 1] == 0:
        end -= 1
    return values if end == len(values) else values[:end]


def tail_lex_key(values: Tuple[int, ...]) -> Tuple[int, Tuple[int, ...]]:
    """
    정규화된 벡터의 tail-lex 정렬 키. 더 긴 벡터는 마지막 양수 성분에서 이긴다.

    @param values 정규화된(뒤쪽 0 없는) 지수 벡터.
    @returns 정렬 키.
    """
    return len(values), tuple(reversed(values))
