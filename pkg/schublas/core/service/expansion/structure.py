from __future__ import annotations

import logging
from typing import Optional

from schublas.core.common.errors import NotSnowy, OutOfRange
from schublas.core.domain.basis_expansion import BasisExpansion, BasisKind
from schublas.core.domain.permutation import Permutation
from schublas.core.domain.verification_report import VerificationReport
from schublas.core.domain.weak_composition import WeakComposition
from schublas.core.service.bases.recursions import schubert, top_lascoux
from schublas.core.service.bases.transfer import complement_composition
from schublas.core.service.combinat.standardization import check_box, standardize
from schublas.core.service.expansion.greedy import expand_in_basis

logger = logging.getLogger(__name__)


def schubert_product(u: Permutation, v: Permutation) -> BasisExpansion:
    """
    𝔖_u 𝔖_v = Σ c^w_{u,v} 𝔖_w.

    @param u 순열.
    @param v 순열.
    @returns Schubert 기저 전개. 계수가 음이 아닌 정수인지 확인한다.
    """
    expansion = expand_in_basis(schubert(u) * schubert(v), BasisKind.SCHUBERT)
    if not expansion.is_nonnegative_integral():
        raise AssertionError(f"Schubert structure constants of {u} * {v} are not nonnegative integers")
    return expansion


def top_lascoux_product(alpha: WeakComposition, gamma: WeakComposition) -> BasisExpansion:
    """
    𝔏̂_α 𝔏̂_γ = Σ d^δ_{α,γ} 𝔏̂_δ.
    모든 δ 가 supp(δ) ⊆ [n], max(δ) ≤ max(α) + max(γ) 를 만족하는지 확인한다.

    @param alpha 눈송이 약합성.
    @param gamma 눈송이 약합성.
    @returns top Lascoux 기저 전개.
    """
    for index in (alpha, gamma):
        if not index.is_snowy():
            raise NotSnowy("top Lascoux products take snowy compositions", datum=index.entries)
    expansion = expand_in_basis(top_lascoux(alpha) * top_lascoux(gamma), BasisKind.TOP_LASCOUX)
    n = max(len(alpha), len(gamma))
    bound = alpha.max_entry + gamma.max_entry
    for delta in expansion.indices():
        if len(delta) > n or delta.max_entry > bound:
            raise AssertionError(f"index {delta.entries} escapes the {bound}x{n} box")
    return expansion


def destandardize(w: Permutation, m: int, n: int) -> Optional[WeakComposition]:
    """
    std_{m,n} 의 역. w(i) ≤ m 이면 β_i = w(i), 아니면 β_i = m+1 로 두고 δ = r_{m+1,n}(β).

    @param w 순열.
    @param m 성분 상한.
    @param n 지지집합 상한.
    @returns std_{m,n}(δ) = w 인 눈송이 δ, 없으면 None.
    """
    line = w.one_line(max(len(w), n))
    beta = [value if value <= m else m + 1 for value in line[:n]]
    delta = WeakComposition(tuple(m + 1 - value for value in reversed(beta)))
    if not delta.is_snowy() or delta.max_entry > m:
        return None
    return delta if standardize(delta, m, n) == w else None


def verify_structure_theorem(
    alpha: WeakComposition, gamma: WeakComposition, m1: int, m2: int, n: int
) -> VerificationReport:
    """
    d^δ_{α,γ} = c^{std_{m1+m2,n}(δ)}_{u,v}, u = std_{m1,n}(α), v = std_{m2,n}(γ).
    양쪽 전개에 나타나는 모든 δ 를 비교하고 불일치를 모아 보고한다.

    @param alpha 눈송이 약합성.
    @param gamma 눈송이 약합성.
    @param m1 max(α) 이상.
    @param m2 max(γ) 이상.
    @param n supp(α) ∪ supp(γ) ⊆ [n].
    @returns 검증 리포트.
    """
    check_box(alpha, m1, n)
    check_box(gamma, m2, n)
    u, v = standardize(alpha, m1, n), standardize(gamma, m2, n)
    d = top_lascoux_product(alpha, gamma)
    c = schubert_product(u, v)
    total = m1 + m2
    report = VerificationReport(suite="structure")
    deltas = {delta for delta in d.indices() if len(delta) <= n and delta.max_entry <= total}
    for w in c.indices():
        delta = destandardize(w, total, n)
        if delta is not None:
            deltas.add(delta)
    label = f"({alpha.to_text()})*({gamma.to_text()})"
    for delta in sorted(deltas, key=lambda item: item.entries):
        w = standardize(delta, total, n)
        left, right = d.coefficient(delta), c.coefficient(w)
        report.record(
            f"structure {label} d[{delta.to_text()}]=c[{w.to_text()}]",
            left == right,
            f"d={left} c={right}",
        )
    if not deltas:
        report.record(f"structure {label} empty", len(d) == 0 and len(c) == 0, "no indices")
    return report


def verify_structure_corollary(u: Permutation, v: Permutation, n: int) -> VerificationReport:
    """
    u, v ∈ S_n, w ∈ S_{2n}, w(n+1) < ⋯ < w(2n) 일 때 c^w_{u,v} = d^δ_{α,γ},
    α = (n+1−u(n), …), γ = (n+1−v(n), …), δ = (2n+1−w(n), …, 2n+1−w(1)).

    @param u S_n 의 원소.
    @param v S_n 의 원소.
    @param n 크기.
    @returns 검증 리포트.
    """
    if len(u) > n or len(v) > n:
        raise OutOfRange(f"permutations must lie in S_{n}", datum=(u.images, v.images))
    alpha, gamma = complement_composition(u, n), complement_composition(v, n)
    c = schubert_product(u, v)
    d = top_lascoux_product(alpha, gamma)
    report = VerificationReport(suite="structure")
    for w in c.indices():
        if len(w) > 2 * n:
            continue
        line = w.one_line(2 * n)
        if any(a > b for a, b in zip(line[n:], line[n + 1:])):
            continue
        delta = WeakComposition(tuple(2 * n + 1 - value for value in reversed(line[:n])))
        left, right = c.coefficient(w), d.coefficient(delta)
        report.record(
            f"corollary [{u.to_text()}]*[{v.to_text()}] c[{w.to_text()}]=d[{delta.to_text()}]",
            left == right,
            f"c={left} d={right}",
        )
    if not report.checks:
        report.record(f"corollary [{u.to_text()}]*[{v.to_text()}] empty", True, "no eligible w")
    return report
