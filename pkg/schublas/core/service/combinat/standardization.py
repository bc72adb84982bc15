from __future__ import annotations

from typing import List

from schublas.core.common.errors import OutOfRange
from schublas.core.domain.permutation import Permutation
from schublas.core.domain.weak_composition import WeakComposition
from schublas.core.service.combinat.codes import _require_snowy


def check_box(alpha: WeakComposition, m: int, n: int) -> None:
    """
    @param alpha 약합성.
    @param m 성분 상한.
    @param n 지지집합 상한.
    @returns None. supp(α) ⊆ [n], max(α) ≤ m 이 아니면 OutOfRange.
    """
    if m < 0 or n < 0:
        raise OutOfRange(f"box bounds must be non-negative (m={m}, n={n})", datum=alpha.entries)
    if len(alpha) > n or alpha.max_entry > m:
        raise OutOfRange(f"composition does not fit the {m}x{n} box", datum=alpha.entries)


def reverse_complement(alpha: WeakComposition, m: int, n: int) -> WeakComposition:
    """
    r_{m,n}(α) = (m − α_n, …, m − α_1).

    @param alpha supp ⊆ [n], max ≤ m 인 약합성.
    @param m 성분 상한.
    @param n 길이.
    @returns 역보수 합성.
    """
    check_box(alpha, m, n)
    padded = alpha.padded(n)
    return WeakComposition(tuple(m - value for value in reversed(padded)))


def standardize(alpha: WeakComposition, m: int, n: int) -> Permutation:
    """
    (m, n)-표준화. β = r_{m+1,n}(α) 에 대해 β_i ≤ m 이면 w(i) = β_i,
    아니면 w(i) = m + #{j ≤ i : β_j = m+1}; 나머지 값은 n 이후에 오름차순으로 둔다.

    @param alpha 눈송이 약합성.
    @param m max(α) 이상.
    @param n 지지집합 상한.
    @returns std_{m,n}(α).
    """
    _require_snowy(alpha)
    check_box(alpha, m, n)
    beta = reverse_complement(alpha, m + 1, n).padded(n)
    images: List[int] = []
    overflow = 0
    for value in beta:
        if value <= m:
            images.append(value)
        else:
            overflow += 1
            images.append(m + overflow)
    used = set(images)
    size = max(images, default=0)
    rest = [value for value in range(1, size + 1) if value not in used]
    return Permutation(tuple(images + rest))
