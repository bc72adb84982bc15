from __future__ import annotations

import itertools
import logging
from typing import List

from schublas.core.common.errors import NotSnowy
from schublas.core.domain.basis_expansion import BasisExpansion, BasisKind
from schublas.core.domain.permutation import Permutation
from schublas.core.domain.verification_report import VerificationReport
from schublas.core.domain.weak_composition import WeakComposition
from schublas.core.service.bases.recursions import schubert, top_lascoux
from schublas.core.service.bases.transfer import reverse_key_matches
from schublas.core.service.combinat.standardization import check_box, reverse_complement, standardize
from schublas.core.service.expansion.greedy import expand_in_basis

logger = logging.getLogger(__name__)


def schubert_key_expansion(w: Permutation) -> BasisExpansion:
    """
    𝔖_w = Σ c^w_γ κ_γ.

    @param w 순열.
    @returns key 기저 전개 (음이 아닌 정수 계수).
    """
    expansion = expand_in_basis(schubert(w), BasisKind.KEY)
    if not expansion.is_nonnegative_integral():
        raise AssertionError(f"Schubert-to-key coefficients of {w} are not nonnegative integers")
    return expansion


def key_expand_top_lascoux(alpha: WeakComposition, m: int, n: int) -> BasisExpansion:
    """
    𝔏̂_α 의 key 전개. 인덱스와 계수가 𝔖_{std_{m,n}(α)} 의 key 전개를
    r_{m,n} 으로 옮긴 것과 같은지 확인한다.

    @param alpha supp ⊆ [n], max ≤ m 인 눈송이 약합성.
    @param m 성분 상한.
    @param n 지지집합 상한.
    @returns key 기저 전개.
    """
    if not alpha.is_snowy():
        raise NotSnowy("top Lascoux polynomials are indexed by snowy compositions", datum=alpha.entries)
    check_box(alpha, m, n)
    expansion = expand_in_basis(top_lascoux(alpha), BasisKind.KEY)
    if not expansion.is_nonnegative_integral():
        raise AssertionError(f"key coefficients of top_lascoux({alpha.entries}) are not nonnegative integers")
    transported = {
        reverse_complement(gamma, m, n): coeff for gamma, coeff in schubert_key_expansion(standardize(alpha, m, n)).terms
    }
    if expansion.as_dict() != transported:
        raise AssertionError(f"key expansion of top_lascoux({alpha.entries}) disagrees with the reversed Schubert one")
    return expansion


def box_compositions(m: int, n: int) -> List[WeakComposition]:
    """
    @param m 성분 상한.
    @param n 길이.
    @returns 길이 n, 성분 ≤ m 인 모든 약합성.
    """
    return [WeakComposition(values) for values in itertools.product(range(m + 1), repeat=n)]


def verify_reverse_key(m: int, n: int) -> VerificationReport:
    """
    m×n 상자의 모든 α 에서 r_{m,n}(κ_α) = κ_{r_{m,n}(α)}.

    @param m 성분 상한.
    @param n 길이.
    @returns 검증 리포트.
    """
    report = VerificationReport(suite="operators")
    for alpha in box_compositions(m, n):
        image = reverse_complement(alpha, m, n)
        report.record(
            f"reverse_key m={m} n={n} ({alpha.to_text()})",
            reverse_key_matches(alpha, m, n),
            f"-> ({image.to_text()})",
        )
    return report
