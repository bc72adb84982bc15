from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Set, Tuple, Union

from schublas.core.common.errors import InvalidInput, ResourceLimit
from schublas.core.config.engine_config import current_config
from schublas.core.domain.weak_composition import WeakComposition, normalize_exponent, tail_lex_key

Exponent = Tuple[int, ...]
Scalar = Union[int, Fraction]
ExponentLike = Union[WeakComposition, Tuple[int, ...], List[int]]


def _exponent(key: ExponentLike) -> Exponent:
    if isinstance(key, WeakComposition):
        return key.entries
    values = tuple(int(v) for v in key)
    if any(v < 0 for v in values):
        raise InvalidInput("exponents must be non-negative", datum=values)
    return normalize_exponent(values)


def check_term_limit(count: int) -> None:
    """
    @param count 항 개수.
    @returns None. 한도를 넘으면 ResourceLimit.
    """
    limit = current_config().term_limit
    if count > limit:
        raise ResourceLimit("term_limit", limit, count)


class Polynomial:
    """지수 벡터 → 0이 아닌 유리수 계수의 희소 다항식 (불변 값)."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[ExponentLike, Scalar]] = None) -> None:
        """
        @param terms 지수 → 계수 매핑. 같은 지수로 정규화되는 키는 합산됩니다.
        @returns None
        """
        merged: Dict[Exponent, Fraction] = {}
        for key, coeff in (terms or {}).items():
            exponent = _exponent(key)
            merged[exponent] = merged.get(exponent, Fraction(0)) + Fraction(coeff)
        self._terms = {e: c for e, c in merged.items() if c != 0}
        self._hash: Optional[int] = None
        check_term_limit(len(self._terms))

    @classmethod
    def _trusted(cls, terms: Dict[Exponent, Fraction]) -> "Polynomial":
        """정규화된 지수와 0이 아닌 계수만 담긴 dict로 바로 만든다."""
        check_term_limit(len(terms))
        poly = cls.__new__(cls)
        poly._terms = terms
        poly._hash = None
        return poly

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls._trusted({})

    @classmethod
    def one(cls) -> "Polynomial":
        return cls._trusted({(): Fraction(1)})

    @classmethod
    def monomial(cls, exponent: ExponentLike, coeff: Scalar = 1) -> "Polynomial":
        """
        @param exponent 지수 벡터.
        @param coeff 계수.
        @returns coeff · x^exponent.
        """
        return cls({tuple(_exponent(exponent)): coeff})

    @classmethod
    def variable(cls, i: int) -> "Polynomial":
        """x_i (1-based)"""
        return cls.monomial((0,) * (i - 1) + (1,))

    # ------------------------------------------------------------------
    # 조회
    # ------------------------------------------------------------------
    def raw_terms(self) -> Dict[Exponent, Fraction]:
        """내부 dict 사본."""
        return dict(self._terms)

    def items(self) -> List[Tuple[WeakComposition, Fraction]]:
        """
        @returns (지수, 계수) 목록, tail-lex 내림차순.
        """
        return [(WeakComposition(e), c) for e, c in self.sorted_raw_items()]

    def sorted_raw_items(self) -> List[Tuple[Exponent, Fraction]]:
        return sorted(self._terms.items(), key=lambda item: tail_lex_key(item[0]), reverse=True)

    def coefficient(self, exponent: ExponentLike) -> Fraction:
        return self._terms.get(_exponent(exponent), Fraction(0))

    def support(self) -> Set[WeakComposition]:
        return {WeakComposition(e) for e in self._terms}

    def support_exponents(self) -> Set[Exponent]:
        return set(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Tuple[Exponent, Fraction]]:
        return iter(self.sorted_raw_items())

    def is_nonnegative_integral(self) -> bool:
        return all(c.denominator == 1 and c > 0 for c in self._terms.values())

    def degrees(self) -> Set[int]:
        return {sum(e) for e in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> int:
        return max(self.degrees(), default=0)

    def variable_span(self) -> int:
        """
        @returns 등장하는 가장 큰 변수 번호 (상수면 0).
        """
        return max((len(e) for e in self._terms), default=0)

    def max_exponent(self) -> int:
        return max((max(e, default=0) for e in self._terms), default=0)

    # ------------------------------------------------------------------
    # 산술
    # ------------------------------------------------------------------
    def __add__(self, other: Union["Polynomial", Scalar]) -> "Polynomial":
        other = _coerce(other)
        if not other._terms:
            return self
        terms = dict(self._terms)
        for e, c in other._terms.items():
            value = terms.get(e, Fraction(0)) + c
            if value:
                terms[e] = value
            else:
                terms.pop(e, None)
        return Polynomial._trusted(terms)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._trusted({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: Union["Polynomial", Scalar]) -> "Polynomial":
        return self + (-_coerce(other))

    def __rsub__(self, other: Scalar) -> "Polynomial":
        return _coerce(other) - self

    def scale(self, factor: Scalar) -> "Polynomial":
        factor = Fraction(factor)
        if factor == 0:
            return Polynomial.zero()
        return Polynomial._trusted({e: c * factor for e, c in self._terms.items()})

    def __mul__(self, other: Union["Polynomial", Scalar]) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return self.scale(other)
        terms: Dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                length = max(len(e1), len(e2))
                exponent = tuple(
                    (e1[k] if k < len(e1) else 0) + (e2[k] if k < len(e2) else 0) for k in range(length)
                )
                terms[exponent] = terms.get(exponent, Fraction(0)) + c1 * c2
            check_term_limit(len(terms))
        return Polynomial._trusted({e: c for e, c in terms.items() if c})

    __rmul__ = __mul__

    # ------------------------------------------------------------------
    # 비교/직렬화
    # ------------------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = _coerce(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"Polynomial({self.to_text()})"

    def to_json(self) -> Dict[str, list]:
        """
        @returns {"terms": [{"exp": [...], "coeff": "p/q"}]} tail-lex 내림차순.
        """
        return {
            "terms": [{"exp": list(e), "coeff": format_rational(c)} for e, c in self.sorted_raw_items()]
        }

    @classmethod
    def from_json(cls, payload: Mapping[str, Iterable[Mapping[str, object]]]) -> "Polynomial":
        """
        @param payload 다항식 JSON.
        @returns 복원된 Polynomial.
        """
        try:
            return cls({tuple(term["exp"]): Fraction(str(term["coeff"])) for term in payload["terms"]})
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise InvalidInput(f"malformed polynomial JSON: {exc}") from exc

    def to_text(self) -> str:
        """
        사람이 읽는 표기. 항은 x1이 가장 큰 자리인 사전식 내림차순으로 나열한다.

        @returns "x1^2 + x1*x2 + x1*x3" 형태의 문자열.
        """
        if not self._terms:
            return "0"
        parts: List[str] = []
        for e, c in sorted(self._terms.items(), key=lambda item: item[0], reverse=True):
            monomial = "*".join(
                f"x{i}" if power == 1 else f"x{i}^{power}" for i, power in enumerate(e, start=1) if power
            )
            magnitude = abs(c)
            if not monomial:
                body = format_rational(magnitude)
            elif magnitude == 1:
                body = monomial
            else:
                body = f"{format_rational(magnitude)}*{monomial}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


def _coerce(value: Union[Polynomial, Scalar]) -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    return Polynomial({(): value}) if value else Polynomial.zero()


def format_rational(value: Fraction) -> str:
    """
    @param value 유리수.
    @returns 정수면 "p", 아니면 기약분수 "p/q" (분모 양수).
    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
