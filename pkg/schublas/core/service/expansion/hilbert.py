from __future__ import annotations

from typing import List, Set

from schublas.core.common.errors import InvalidInput
from schublas.core.domain.weak_composition import WeakComposition


def enumerate_snowy_by_raj(degree: int) -> Set[WeakComposition]:
    """
    |rajcode(α)| = d 인 모든 눈송이 α. 오른쪽 끝부터 성분을 고르며
    rajcode 부분합이 d 를 넘으면 잘라낸다.

    @param degree d ≥ 0.
    @returns 눈송이 약합성 집합.
    """
    if degree < 0:
        raise InvalidInput("degree must be non-negative", datum=degree)
    found: Set[WeakComposition] = {WeakComposition()} if degree == 0 else set()
    for length in range(1, degree + 1):
        _extend([], length, 0, degree, found)
    return found


def _extend(later: List[int], length: int, partial: int, degree: int, found: Set[WeakComposition]) -> None:
    remaining = length - len(later)
    if remaining == 0:
        if partial == degree:
            found.add(WeakComposition(tuple(later)))
        return
    # 마지막 성분은 양수, 그 앞의 각 칸은 rajcode에 최소 1을 더한다
    start = 1 if not later else 0
    for value in range(start, degree + 1):
        if value and value in later:
            continue
        contribution = value + sum(1 for other in later if other > value)
        if partial + contribution + (remaining - 1) > degree:
            continue
        _extend([value] + later, length, partial + contribution, degree, found)


def hilbert_coefficients(max_degree: int) -> List[int]:
    """
    ∏_{m>0} (1 + q^m/(1−q)) 의 q^0 … q^D 계수. q^m/(1−q) = Σ_{k≥m} q^k.

    @param max_degree D ≥ 0.
    @returns 길이 D+1 의 정수 목록.
    """
    if max_degree < 0:
        raise InvalidInput("max degree must be non-negative", datum=max_degree)
    series = [1] + [0] * max_degree
    for m in range(1, max_degree + 1):
        factor = [1] + [1 if k >= m else 0 for k in range(1, max_degree + 1)]
        series = [
            sum(series[j] * factor[k - j] for j in range(k + 1)) for k in range(max_degree + 1)
        ]
    return series
