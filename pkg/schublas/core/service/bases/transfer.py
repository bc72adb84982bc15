from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional

from schublas.core.common.errors import NotSnowy
from schublas.core.domain.permutation import Permutation
from schublas.core.domain.polynomial import Polynomial
from schublas.core.domain.weak_composition import WeakComposition
from schublas.core.service.bases.recursions import key, schubert, top_lascoux
from schublas.core.service.combinat.standardization import check_box, reverse_complement, standardize
from schublas.core.service.polynomial.operators import reverse_complement_poly

logger = logging.getLogger(__name__)


def top_lascoux_via_reverse(alpha: WeakComposition, m: int, n: int) -> Polynomial:
    """
    r_{m,n}(𝔖_{std_{m,n}(α)}).

    @param alpha supp ⊆ [n], max ≤ m 인 눈송이 약합성.
    @param m 성분 상한.
    @param n 지지집합 상한.
    @returns top_lascoux(α)와 같아야 하는 다항식.
    """
    w = standardize(alpha, m, n)
    return reverse_complement_poly(schubert(w), m, n)


def complement_composition(w: Permutation, n: int) -> WeakComposition:
    """
    @param w S_n 의 원소.
    @param n 크기.
    @returns (n+1−w(n), …, n+1−w(1)).
    """
    return WeakComposition(tuple(n + 1 - value for value in reversed(w.one_line(n))))


def schubert_via_top_lascoux(w: Permutation, n: Optional[int] = None) -> Polynomial:
    """
    𝔖_w = r_{n,n}(𝔏̂_α), α = (n+1−w(n), …, n+1−w(1)).

    @param w 순열.
    @param n w ∈ S_n 인 n (기본값: 최소 n).
    @returns schubert(w)와 같아야 하는 다항식.
    """
    n = len(w) if n is None else n
    return reverse_complement_poly(top_lascoux(complement_composition(w, n)), n, n)


@dataclass(frozen=True)
class TransferStep:
    """
    전이 사슬의 한 칸. 첫 칸은 분할이라 연산자가 없다.

    Attributes:
        composition: β.
        permutation: std_{m,n}(β).
        pi_hat_index: 이 칸을 만든 π̂_i 의 i.
        divided_difference_index: Schubert 쪽에서 대응하는 ∂_{n−i} 의 n−i.
    """

    composition: WeakComposition
    permutation: Permutation
    pi_hat_index: Optional[int] = None
    divided_difference_index: Optional[int] = None

    def to_json(self) -> Dict[str, object]:
        return {
            "composition": list(self.composition.entries),
            "permutation": list(self.permutation.images),
            "pi_hat": self.pi_hat_index,
            "divided_difference": self.divided_difference_index,
        }

    def to_text(self) -> str:
        head = f"({self.composition.to_text()}) <-> [{self.permutation.to_text()}]"
        if self.pi_hat_index is None:
            return head
        return f"pi_hat_{self.pi_hat_index} / d_{self.divided_difference_index}: {head}"


def transfer_chain(alpha: WeakComposition, m: int, n: int) -> List[TransferStep]:
    """
    분할 정렬에서 α 까지의 π̂ 사슬과, 각 칸을 std_{m,n} 으로 옮긴 ∂ 사슬.
    올라갈 때는 가장 작은 상승을 푼다. 각 칸에서 std(s_iβ) = std(β)·s_{n−i} 와
    w(n−i) < w(n−i+1) 을 확인한다.

    @param alpha supp ⊆ [n], max ≤ m 인 눈송이 약합성.
    @param m 성분 상한.
    @param n 지지집합 상한.
    @returns 분할부터 α 까지의 TransferStep 목록.
    """
    if not alpha.is_snowy():
        raise NotSnowy("transfer chains are defined for snowy compositions", datum=alpha.entries)
    check_box(alpha, m, n)
    ascents: List[int] = []
    current = alpha
    while not current.is_partition():
        i = next(k for k in range(1, len(current)) if current.at(k) < current.at(k + 1))
        ascents.append(i)
        current = current.swap(i)
    steps = [TransferStep(current, standardize(current, m, n))]
    for i in reversed(ascents):
        previous = steps[-1]
        composition = previous.composition.swap(i)
        permutation = standardize(composition, m, n)
        j = n - i
        if permutation != previous.permutation.swap_positions(j) or not permutation(j) < permutation(j + 1):
            raise AssertionError(f"standardization does not intertwine pi_hat_{i} with d_{j}")
        steps.append(TransferStep(composition, permutation, i, j))
    logger.debug("transfer chain for %s has %d steps", alpha.entries, len(steps))
    return steps


def reverse_key(alpha: WeakComposition, m: int, n: int) -> Polynomial:
    """
    r_{m,n}(κ_α). κ_{r_{m,n}(α)} 와 같다.

    @param alpha supp ⊆ [n], max ≤ m 인 약합성.
    @param m 성분 상한.
    @param n 지지집합 상한.
    @returns r_{m,n}(κ_α).
    """
    check_box(alpha, m, n)
    return reverse_complement_poly(key(alpha), m, n)


def reverse_key_matches(alpha: WeakComposition, m: int, n: int) -> bool:
    return reverse_key(alpha, m, n) == key(reverse_complement(alpha, m, n))
