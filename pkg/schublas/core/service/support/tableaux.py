from __future__ import annotations

import itertools
import logging
from typing import Dict, List, Optional, Set, Tuple

from schublas.core.common.errors import InvalidInput, NotSnowy
from schublas.core.domain.diagram import Cell, Diagram
from schublas.core.domain.perfect_tableau import PerfectTableau
from schublas.core.domain.permutation import Permutation
from schublas.core.domain.weak_composition import WeakComposition
from schublas.core.service.combinat.diagrams import rothe_diagram, snow_diagram
from schublas.core.service.combinat.standardization import check_box, standardize

logger = logging.getLogger(__name__)


def column_fillings(rows: List[int]) -> List[Tuple[int, ...]]:
    """
    한 열의 강증가 깃발 채우기: k번째 셀(행 rows[k])의 값 ≤ rows[k].

    @param rows 위에서 아래 순의 행 번호.
    @returns 가능한 값 튜플 목록 (사전식).
    """
    found: List[Tuple[int, ...]] = []
    chosen: List[int] = []

    def extend(k: int, floor: int) -> None:
        if k == len(rows):
            found.append(tuple(chosen))
            return
        for value in range(floor + 1, rows[k] + 1):
            chosen.append(value)
            extend(k + 1, value)
            chosen.pop()

    extend(0, 0)
    return found


def enumerate_perfect_tableaux(
    diagram: Diagram, weight: Optional[WeakComposition] = None
) -> List[PerfectTableau]:
    """
    PerfectTab↓(D, γ). 조건이 열마다 독립이라 열별 채우기의 곱으로 만든다.

    @param diagram 다이어그램 (레이블 무시).
    @param weight 주어지면 이 가중치의 타블로만.
    @returns 완전 타블로 목록.
    """
    shape = diagram.unlabeled()
    columns = sorted({c for _, c in shape.cells})
    per_column = [(c, shape.column(c), column_fillings(shape.column(c))) for c in columns]
    tableaux: List[PerfectTableau] = []
    for choice in itertools.product(*(fills for _, _, fills in per_column)):
        filling: Dict[Cell, int] = {}
        for (c, rows, _), values in zip(per_column, choice):
            filling.update({(r, c): value for r, value in zip(rows, values)})
        tableau = PerfectTableau.from_mapping(shape, filling)
        if weight is None or tableau.weight() == weight:
            tableaux.append(tableau)
    logger.debug("enumerated %d perfect tableaux on %d cells", len(tableaux), len(shape))
    return tableaux


def count_perfect_tableaux(diagram: Diagram) -> int:
    """열별 채우기 수의 곱."""
    shape = diagram.unlabeled()
    total = 1
    for c in {col for _, col in shape.cells}:
        total *= len(column_fillings(shape.column(c)))
    return total


def schubert_support(w: Permutation) -> Set[WeakComposition]:
    """{wt(T) : T ∈ PerfectTab↓(RD(w))}."""
    return {tableau.weight() for tableau in enumerate_perfect_tableaux(rothe_diagram(w))}


def top_lascoux_support(alpha: WeakComposition) -> Set[WeakComposition]:
    """{wt(T) : T ∈ PerfectTab↓(snow(D(α)))}, 레이블은 지운다."""
    if not alpha.is_snowy():
        raise NotSnowy("top Lascoux supports are indexed by snowy compositions", datum=alpha.entries)
    return {tableau.weight() for tableau in enumerate_perfect_tableaux(snow_diagram(alpha).unlabeled())}


def tableau_bijection(tableau: PerfectTableau, alpha: WeakComposition, m: int, n: int) -> PerfectTableau:
    """
    RD(std_{m,n}(α)) 위의 완전 타블로를 snow(D(α)) 위의 타블로로 옮긴다.
    n×m 상자에서 180° 회전하고 i를 n+1−i로 바꾼 뒤, snow 다이어그램의 각 열 c를
    [n]에서 그 열에 없는 수로 위에서부터 오름차순으로 채운다.

    @param tableau RD(std_{m,n}(α)) 위의 완전 타블로.
    @param alpha 눈송이 약합성.
    @param m 성분 상한.
    @param n 지지집합 상한.
    @returns 가중치가 r_{m,n}(wt(T)) 인 snow(D(α)) 위의 완전 타블로.
    """
    check_box(alpha, m, n)
    if not tableau.shape.fits_in(n, m):
        raise InvalidInput(f"tableau does not fit the {n}x{m} box", datum=tableau.to_json())
    rotated: Dict[int, Set[int]] = {c: set() for c in range(1, m + 1)}
    for (r, c), value in tableau.filling:
        if value > n:
            raise InvalidInput("tableau entry exceeds n", datum=value)
        rotated[m + 1 - c].add(n + 1 - value)
    target = snow_diagram(alpha).unlabeled()
    filling: Dict[Cell, int] = {}
    for c in range(1, m + 1):
        rows = target.column(c)
        values = sorted(set(range(1, n + 1)) - rotated[c])
        if len(rows) != len(values):
            raise InvalidInput(f"column {c} of the snow diagram cannot take the complement fill", datum=values)
        filling.update({(r, c): value for r, value in zip(rows, values)})
    image = PerfectTableau.from_mapping(target, filling)
    if not image.is_perfect():
        raise InvalidInput("complement fill violates the flag or column condition", datum=image.to_json())
    return image


def standardized_rothe_diagram(alpha: WeakComposition, m: int, n: int) -> Diagram:
    return rothe_diagram(standardize(alpha, m, n))
