from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from schublas.core.common.errors import ResourceLimit, ZeroPolynomial
from schublas.core.common.linear_algebra import in_convex_hull
from schublas.core.config.engine_config import current_config
from schublas.core.domain.polynomial import Polynomial
from schublas.core.domain.weak_composition import WeakComposition

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SnpResult:
    """SNP 판정 결과. 실패하면 지지집합 밖의 껍질 안 격자점을 담는다."""

    saturated: bool
    witness: Optional[WeakComposition] = None
    candidates: int = 0

    def to_json(self) -> Dict[str, object]:
        return {
            "saturated": self.saturated,
            "witness": list(self.witness.entries) if self.witness is not None else None,
            "candidates": self.candidates,
        }

    def to_text(self) -> str:
        if self.saturated:
            return "true"
        return f"false witness={self.witness.to_text() if self.witness is not None else ''}"


def _candidate_points(lows: Sequence[int], highs: Sequence[int], degree: Optional[int]):
    ranges = [range(low, high + 1) for low, high in zip(lows, highs)]
    for point in itertools.product(*ranges):
        if degree is None or sum(point) == degree:
            yield point


def snp_check(f: Polynomial, box_limit: Optional[int] = None) -> SnpResult:
    """
    supp(f)의 볼록 껍질 안 모든 격자점이 supp(f)에 있는지 판정한다.
    후보는 지지집합의 경계 상자 안 격자점이고, f가 동차면 차수 초평면으로 제한한다.

    @param f 0이 아닌 다항식.
    @param box_limit 후보 상자 크기 상한 (기본값: 활성 설정의 step_limit).
    @returns SnpResult.
    """
    if f.is_zero():
        raise ZeroPolynomial("SNP is undefined for the zero polynomial")
    limit = box_limit or current_config().step_limit
    dimension = f.variable_span()
    points: List[Tuple[int, ...]] = sorted(e + (0,) * (dimension - len(e)) for e in f.support_exponents())
    lows = [min(point[d] for point in points) for d in range(dimension)]
    highs = [max(point[d] for point in points) for d in range(dimension)]
    box = 1
    for low, high in zip(lows, highs):
        box *= high - low + 1
    if box > limit:
        raise ResourceLimit("snp_box", limit, box)
    degree = next(iter(f.degrees())) if f.is_homogeneous() else None
    support = set(points)
    tested = 0
    for point in _candidate_points(lows, highs, degree):
        if point in support:
            continue
        tested += 1
        if in_convex_hull(point, points):
            logger.debug("SNP fails at %s after %d hull tests", point, tested)
            return SnpResult(False, WeakComposition(point), tested)
    return SnpResult(True, None, tested)
