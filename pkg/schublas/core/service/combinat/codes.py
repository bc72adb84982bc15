from __future__ import annotations

from typing import List, Optional, Set

from schublas.core.common.errors import InvalidCode, NotInImage, NotSnowy
from schublas.core.domain.permutation import Permutation
from schublas.core.domain.weak_composition import WeakComposition


def invcode(w: Permutation) -> WeakComposition:
    """
    역전 코드: i번째 성분은 #{j > i : w(i) > w(j)}.

    @param w 순열.
    @returns invcode(w).
    """
    return WeakComposition(w.lehmer_code())


def code_to_perm(code: WeakComposition, n: Optional[int] = None) -> Permutation:
    """
    Lehmer 코드 복원. 위치 i에서 남은 값 중 code_i 번째(0-based)로 작은 값을 고른다.

    @param code 역전 코드.
    @param n 주어지면 S_n 안에서만 복원한다.
    @returns invcode(w) = code 인 순열 w.
    """
    values = list(code.entries)
    size = max([len(values)] + [i + c for i, c in enumerate(values, start=1)])
    if n is not None:
        if n < len(values):
            raise InvalidCode(f"code is longer than {n}", datum=code.entries)
        size = n
    available = list(range(1, size + 1))
    images: List[int] = []
    for i, c in enumerate(values, start=1):
        if c >= len(available):
            raise InvalidCode(f"entry {c} at position {i} exceeds the {len(available)} remaining values", datum=code.entries)
        images.append(available.pop(c))
    return Permutation(tuple(images + available))


def _require_snowy(alpha: WeakComposition) -> None:
    if not alpha.is_snowy():
        raise NotSnowy("positive entries must be pairwise distinct", datum=alpha.entries)


def rajcode(alpha: WeakComposition) -> WeakComposition:
    """
    rajcode(α)_i = α_i + #{j > i : α_j > α_i}.

    @param alpha 눈송이 약합성.
    @returns rajcode(α).
    """
    _require_snowy(alpha)
    values = alpha.entries
    return WeakComposition(
        tuple(value + sum(1 for later in values[i + 1:] if later > value) for i, value in enumerate(values))
    )


def coinversion_rajcode(alpha: WeakComposition) -> WeakComposition:
    """
    α_i 에 (i, j) 꼴 역-역전(i < j, α_i < α_j)의 수를 더한 값. 눈송이 합성에서는 rajcode와 같다.

    @param alpha 약합성.
    @returns 성분별 합.
    """
    values = alpha.entries
    return WeakComposition(
        tuple(
            value + sum(1 for j in range(i + 1, len(values)) if value < values[j])
            for i, value in enumerate(values)
        )
    )


def raj(alpha: WeakComposition) -> int:
    """|rajcode(α)|, 즉 top Lascoux 다항식의 차수."""
    return rajcode(alpha).size


def rajcode_inverse(rho: WeakComposition) -> WeakComposition:
    """
    rajcode의 역. 마지막 위치부터 왼쪽으로, 위치 i에서 이미 놓인 양수와 겹치지 않는
    후보 0, 1, …, max(ρ)를 차례로 시험해 v + #{j > i : α_j > v} = ρ_i 인 v를 고른다.

    @param rho rajcode 상의 원소.
    @returns rajcode(α) = ρ 인 눈송이 α.
    """
    target = rho.entries
    bound = rho.max_entry
    placed: List[int] = [0] * len(target)
    used: Set[int] = set()
    for i in range(len(target) - 1, -1, -1):
        later = placed[i + 1:]
        for value in range(bound + 1):
            if value and value in used:
                continue
            if value + sum(1 for other in later if other > value) == target[i]:
                placed[i] = value
                if value:
                    used.add(value)
                break
        else:
            raise NotInImage(f"no entry at position {i + 1} reproduces {target[i]}", datum=target)
    return WeakComposition(tuple(placed))
