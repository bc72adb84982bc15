from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Mapping, Tuple, Union

from schublas.core.domain.permutation import Permutation
from schublas.core.domain.polynomial import format_rational
from schublas.core.domain.weak_composition import WeakComposition, tail_lex_key

BasisIndex = Union[Permutation, WeakComposition]


class BasisKind(str, Enum):
    """전개 대상 기저."""

    SCHUBERT = "schubert"
    KEY = "key"
    TOP_LASCOUX = "toplascoux"


def index_exponent(index: BasisIndex) -> Tuple[int, ...]:
    """
    정렬용 지수. 순열은 역전 코드로 비교한다.

    @param index 기저 인덱스.
    @returns 정규화된 지수 튜플.
    """
    if isinstance(index, Permutation):
        return index.lehmer_code()
    return index.entries


@dataclass(frozen=True)
class BasisExpansion:
    """기저 인덱스 → 0이 아닌 유리수 계수."""

    kind: BasisKind
    terms: Tuple[Tuple[BasisIndex, Fraction], ...] = ()

    @classmethod
    def from_mapping(cls, kind: BasisKind, terms: Mapping[BasisIndex, Fraction]) -> "BasisExpansion":
        """
        @param kind 기저 종류.
        @param terms 인덱스 → 계수 (0은 버린다).
        @returns tail-lex 내림차순으로 정렬된 전개.
        """
        ordered = sorted(
            ((index, Fraction(coeff)) for index, coeff in terms.items() if coeff),
            key=lambda item: tail_lex_key(index_exponent(item[0])),
            reverse=True,
        )
        return cls(BasisKind(kind), tuple(ordered))

    def as_dict(self) -> Dict[BasisIndex, Fraction]:
        return dict(self.terms)

    def coefficient(self, index: BasisIndex) -> Fraction:
        return self.as_dict().get(index, Fraction(0))

    def indices(self) -> List[BasisIndex]:
        return [index for index, _ in self.terms]

    def is_nonnegative_integral(self) -> bool:
        return all(coeff.denominator == 1 and coeff > 0 for _, coeff in self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def to_json(self) -> Dict[str, object]:
        """
        @returns {"basis": ..., "terms": [{"index": [...], "coeff": "p/q"}]}.
        """
        return {
            "basis": self.kind.value,
            "terms": [
                {
                    "index": list(index.images if isinstance(index, Permutation) else index.entries),
                    "coeff": format_rational(coeff),
                }
                for index, coeff in self.terms
            ],
        }

    def to_text(self) -> str:
        """
        @returns "S[2,4,3,1] + 2*S[...]" 형태. 키는 K(...), top Lascoux는 L(...).
        """
        if not self.terms:
            return "0"
        symbol = {BasisKind.SCHUBERT: "S", BasisKind.KEY: "K", BasisKind.TOP_LASCOUX: "L"}[self.kind]
        parts: List[str] = []
        for index, coeff in self.terms:
            if isinstance(index, Permutation):
                label = f"{symbol}[{index.to_text()}]"
            else:
                label = f"{symbol}({index.to_text()})"
            magnitude = abs(coeff)
            body = label if magnitude == 1 else f"{format_rational(magnitude)}*{label}"
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(parts)
