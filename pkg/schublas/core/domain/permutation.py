from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from schublas.core.common.errors import InvalidPermutation


@dataclass(frozen=True)
class Permutation:
    """S_+ 의 원소. one-line 표기에서 뒤쪽 고정점은 저장하지 않는다."""

    images: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        values = tuple(int(value) for value in self.images)
        if sorted(values) != list(range(1, len(values) + 1)):
            raise InvalidPermutation("one-line notation must be a bijection of [n]", datum=values)
        end = len(values)
        while end and values[end - 1] == end:
            end -= 1
        object.__setattr__(self, "images", values[:end])

    @classmethod
    def of(cls, *values: int) -> "Permutation":
        return cls(tuple(values))

    @classmethod
    def identity(cls) -> "Permutation":
        return cls(())

    def __call__(self, i: int) -> int:
        """
        @param i 1-based 위치.
        @returns w(i).
        """
        if 1 <= i <= len(self.images):
            return self.images[i - 1]
        return i

    def __len__(self) -> int:
        """
        @returns w ∈ S_n 를 만족하는 최소 n.
        """
        return len(self.images)

    def one_line(self, n: int) -> Tuple[int, ...]:
        """
        @param n 표기 길이 (len(self) 이상).
        @returns [w(1), …, w(n)].
        """
        if n < len(self.images):
            raise InvalidPermutation(f"permutation does not lie in S_{n}", datum=self.images)
        return self.images + tuple(range(len(self.images) + 1, n + 1))

    def swap_positions(self, i: int) -> "Permutation":
        """
        w s_i: 위치 i, i+1의 값을 교환합니다.

        @param i 1-based 위치.
        @returns 오른쪽 곱 w s_i.
        """
        values = list(self.one_line(max(len(self.images), i + 1)))
        values[i - 1], values[i] = values[i], values[i - 1]
        return Permutation(tuple(values))

    def to_text(self) -> str:
        """
        @returns "3,1,5,2,4" 형태 (항등원은 "1").
        """
        return ",".join(str(value) for value in self.images) if self.images else "1"

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)!r})"

    def lehmer_code(self) -> Tuple[int, ...]:
        """
        @returns i번째 성분이 #{j > i : w(i) > w(j)} 인 튜플 (뒤쪽 0 제거).
        """
        values = self.images
        code = [sum(1 for later in values[i + 1:] if later < values[i]) for i in range(len(values))]
        while code and code[-1] == 0:
            code.pop()
        return tuple(code)
