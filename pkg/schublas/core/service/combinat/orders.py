from __future__ import annotations

from schublas.core.domain.weak_composition import WeakComposition, tail_lex_key


def tail_lex_compare(alpha: WeakComposition, gamma: WeakComposition) -> int:
    """
    tail-lex 비교: 두 합성이 다른 가장 큰 위치에서 큰 쪽이 크다.

    @param alpha 왼쪽 합성.
    @param gamma 오른쪽 합성.
    @returns α > γ 이면 1, 같으면 0, 작으면 -1.
    """
    left, right = tail_lex_key(alpha.entries), tail_lex_key(gamma.entries)
    return (left > right) - (left < right)


def tail_lex_max(compositions):
    """
    @param compositions 비어 있지 않은 합성 모음.
    @returns tail-lex 최대 원소.
    """
    return max(compositions, key=lambda alpha: tail_lex_key(alpha.entries))
