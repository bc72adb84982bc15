from __future__ import annotations

from typing import Any, Iterable, List

import orjson

from schublas.core.common.errors import InvalidComposition, InvalidInput, InvalidPermutation
from schublas.core.domain.permutation import Permutation
from schublas.core.domain.weak_composition import WeakComposition

JSON_OPTIONS = orjson.OPT_SORT_KEYS | orjson.OPT_INDENT_2


def dumps(payload: Any) -> str:
    """
    @param payload JSON 직렬화 가능한 값.
    @returns 키 정렬, 2칸 들여쓰기 JSON 문자열.
    """
    return orjson.dumps(payload, option=JSON_OPTIONS).decode("utf-8")


def loads(data: Any) -> Any:
    try:
        return orjson.loads(data)
    except orjson.JSONDecodeError as exc:
        raise InvalidInput(f"malformed JSON: {exc}") from exc


def parse_int_list(text: str) -> List[int]:
    """
    쉼표로 구분한 정수 목록. 빈 문자열은 빈 목록.

    @param text "0,4,2" 형태.
    @returns 정수 리스트.
    """
    stripped = text.strip().strip("[]()")
    if not stripped:
        return []
    try:
        return [int(part) for part in stripped.split(",")]
    except ValueError as exc:
        raise InvalidInput("expected comma-separated integers", datum=text) from exc


def parse_composition(text: str) -> WeakComposition:
    """
    @param text "0,4,2".
    @returns WeakComposition. 음수 성분은 InvalidComposition.
    """
    try:
        values = parse_int_list(text)
    except InvalidInput as exc:
        raise InvalidComposition(exc.message, datum=text) from exc
    return WeakComposition(tuple(values))


def parse_permutation(text: str) -> Permutation:
    """
    @param text "2,1,4,3".
    @returns Permutation. 전단사가 아니면 InvalidPermutation.
    """
    try:
        values = parse_int_list(text)
    except InvalidInput as exc:
        raise InvalidPermutation(exc.message, datum=text) from exc
    return Permutation(tuple(values))


def format_int_list(values: Iterable[int]) -> str:
    return ",".join(str(value) for value in values)
