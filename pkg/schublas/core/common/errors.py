from __future__ import annotations

from typing import Any


class SchublasError(Exception):
    """schublas 공통 예외의 루트."""

    def __init__(self, message: str, datum: Any = None) -> None:
        """
        @param message 사람이 읽는 오류 설명.
        @param datum 오류를 일으킨 입력값.
        @returns None
        """
        super().__init__(message)
        self.message = message
        self.datum = datum

    @property
    def name(self) -> str:
        """
        @returns 오류 이름(클래스 이름).
        """
        return type(self).__name__

    def __str__(self) -> str:
        if self.datum is None:
            return self.message
        return f"{self.message} (datum={self.datum!r})"


class InvalidPermutation(SchublasError, ValueError):
    """one-line 표기가 전단사가 아님."""


class InvalidComposition(SchublasError, ValueError):
    """음수 성분 등 잘못된 약합성."""


class InvalidCode(SchublasError, ValueError):
    """역전 코드 복원 중 후보가 부족함."""


class NotSnowy(SchublasError, ValueError):
    """양수 성분이 서로 다르지 않은 합성."""


class NotInImage(SchublasError, ValueError):
    """rajcode 상(image)에 속하지 않는 합성."""


class OutOfRange(SchublasError, ValueError):
    """(m, n) 박스 조건 위반."""


class ZeroPolynomial(SchublasError, ValueError):
    """영다항식이 허용되지 않는 연산."""


class InvalidSubgrid(SchublasError, ValueError):
    """파이프 격자의 경계/타일 규칙 위반."""


class InvalidInput(SchublasError, ValueError):
    """사전조건이 깨진 입력."""


class NotInSpan(SchublasError, ValueError):
    """선택한 기저의 생성공간 밖에 있는 다항식."""


class ConfigError(SchublasError, ValueError):
    """설정값 검증 실패."""


class SchemaError(SchublasError, ValueError):
    """JSON 스키마 검증 실패."""


class ResourceLimit(SchublasError, RuntimeError):
    """설정된 자원 한도 초과."""

    def __init__(self, limit_name: str, limit: int, observed: int) -> None:
        """
        @param limit_name 초과된 한도 이름 (term_limit 등).
        @param limit 설정된 한도값.
        @param observed 실제 관측값.
        @returns None
        """
        super().__init__(f"{limit_name} exceeded: {observed} > {limit}", datum=observed)
        self.limit_name = limit_name
        self.limit = limit
        self.observed = observed
