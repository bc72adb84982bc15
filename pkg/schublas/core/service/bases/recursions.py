from __future__ import annotations

import logging
from typing import Callable, Hashable, List, Optional, Tuple, TypeVar

from schublas.core.common.errors import NotSnowy
from schublas.core.domain.permutation import Permutation
from schublas.core.domain.polynomial import Polynomial
from schublas.core.domain.weak_composition import WeakComposition
from schublas.core.repository.memo_cache import MemoCache
from schublas.core.service.combinat.codes import rajcode
from schublas.core.service.polynomial.operators import (
    demazure_pi,
    divided_difference,
    leading_term,
    pi_hat,
)

logger = logging.getLogger(__name__)

K = TypeVar("K", bound=Hashable)

SCHUBERT_CACHE: MemoCache[Polynomial] = MemoCache("schubert")
KEY_CACHE: MemoCache[Polynomial] = MemoCache("key")
TOP_LASCOUX_CACHE: MemoCache[Polynomial] = MemoCache("toplascoux")


def reset_caches(maxsize: Optional[int] = None) -> None:
    """
    @param maxsize 새 용량. 없으면 활성 설정의 cache_entries.
    @returns None
    """
    for cache in (SCHUBERT_CACHE, KEY_CACHE, TOP_LASCOUX_CACHE):
        cache.reset(maxsize)


def _replay(
    index: K,
    cache: MemoCache[Polynomial],
    base: Callable[[K], Optional[Polynomial]],
    ascend: Callable[[K], Tuple[int, K]],
    operator: Callable[[Polynomial, int], Polynomial],
) -> Polynomial:
    """
    기저 조상까지 올라간 뒤 연산자를 내려오며 적용한다. 경로 위의 모든 인덱스를 캐시한다.

    @param index 목표 인덱스.
    @param cache 메모 캐시.
    @param base 기저 사례면 그 값, 아니면 None.
    @param ascend (i, 부모 인덱스). 목표 = operator_i(부모).
    @param operator 내려올 때 적용하는 연산자.
    @returns 목표 인덱스의 다항식.
    """
    path: List[Tuple[K, int]] = []
    current = index
    while True:
        value = cache.get(current)
        if value is not None:
            break
        value = base(current)
        if value is not None:
            cache.put(current, value)
            break
        i, parent = ascend(current)
        path.append((current, i))
        current = parent
    for node, i in reversed(path):
        value = cache.put(node, operator(value, i))
    return value


def _first_ascent(values: Tuple[int, ...], limit: int) -> int:
    return next(i for i in range(1, limit) if values[i - 1] < values[i])


def _ascend_composition(beta: WeakComposition) -> Tuple[int, WeakComposition]:
    i = _first_ascent(beta.entries, len(beta))
    return i, beta.swap(i)


def _partition_monomial(beta: WeakComposition) -> Optional[Polynomial]:
    return Polynomial.monomial(beta) if beta.is_partition() else None


def schubert(w: Permutation) -> Polynomial:
    """
    𝔖_w. w가 dominant면 x^{invcode(w)}, 아니면 가장 작은 상승 i에서 ∂_i 𝔖_{w s_i}.

    @param w 순열.
    @returns Schubert 다항식.
    """

    def base(u: Permutation) -> Optional[Polynomial]:
        code = u.lehmer_code()
        if all(a >= b for a, b in zip(code, code[1:])):
            return Polynomial.monomial(code)
        return None

    def ascend(u: Permutation) -> Tuple[int, Permutation]:
        i = _first_ascent(u.images, len(u.images))
        return i, u.swap_positions(i)

    return _replay(w, SCHUBERT_CACHE, base, ascend, divided_difference)


def key(alpha: WeakComposition) -> Polynomial:
    """
    κ_α. 분할이면 x^α, 아니면 가장 작은 i (α_i < α_{i+1})에서 π_i κ_{s_i α}.

    @param alpha 약합성.
    @returns key 다항식. x^α의 계수가 1인지 확인한다.
    """
    value = _replay(
        alpha,
        KEY_CACHE,
        _partition_monomial,
        _ascend_composition,
        demazure_pi,
    )
    if value.coefficient(alpha) != 1:
        raise AssertionError(f"coefficient of x^{alpha.entries} in key({alpha.entries}) is not 1")
    return value


def top_lascoux(alpha: WeakComposition) -> Polynomial:
    """
    𝔏̂_α. 분할이면 x^α, 아니면 가장 작은 i (α_i < α_{i+1})에서 π̂_i 𝔏̂_{s_i α}.

    @param alpha 눈송이 약합성.
    @returns top Lascoux 다항식. 차수와 선도항을 확인한다.
    """
    if not alpha.is_snowy():
        raise NotSnowy("top Lascoux polynomials are indexed by snowy compositions", datum=alpha.entries)
    value = _replay(
        alpha,
        TOP_LASCOUX_CACHE,
        _partition_monomial,
        _ascend_composition,
        pi_hat,
    )
    code = rajcode(alpha)
    exponent, coeff = leading_term(value)
    if value.degrees() != {code.size} or exponent != code or coeff != 1:
        raise AssertionError(f"top_lascoux({alpha.entries}) does not lead with x^{code.entries}")
    return value


def resolve_in_order(index, order: List[int], kind: str) -> Polynomial:
    """
    주어진 순서대로 상승을 풀어 기저까지 올라간 뒤 다시 내려온다. 캐시는 쓰지 않는다.
    재귀가 선택 순서와 무관함을 확인하는 데 쓴다.

    @param index 순열(schubert) 또는 약합성(key, toplascoux).
    @param order 각 단계에서 후보 상승 중 고를 순위 (순환 사용).
    @param kind "schubert", "key", "toplascoux".
    @returns 다항식.
    """
    operators = {"schubert": divided_difference, "key": demazure_pi, "toplascoux": pi_hat}
    operator = operators[kind]
    steps: List[int] = []
    current = index
    turn = 0
    while True:
        if isinstance(current, Permutation):
            code = current.lehmer_code()
            if all(a >= b for a, b in zip(code, code[1:])):
                value = Polynomial.monomial(code)
                break
            values, limit = current.images, len(current.images)
        else:
            if current.is_partition():
                value = Polynomial.monomial(current)
                break
            values, limit = current.entries, len(current)
        ascents = [i for i in range(1, limit) if values[i - 1] < values[i]]
        i = ascents[order[turn % len(order)] % len(ascents)] if order else ascents[0]
        turn += 1
        steps.append(i)
        current = current.swap_positions(i) if isinstance(current, Permutation) else current.swap(i)
    for i in reversed(steps):
        value = operator(value, i)
    return value
