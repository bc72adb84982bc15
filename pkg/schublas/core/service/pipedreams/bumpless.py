from __future__ import annotations

import logging
from typing import Dict, List, Optional

from schublas.core.common.errors import InvalidInput, InvalidSubgrid, NotSnowy
from schublas.core.domain.permutation import Permutation
from schublas.core.domain.pipe_grid import PipeBoundary, PipeGrid
from schublas.core.domain.polynomial import Polynomial
from schublas.core.domain.tile import E, Tile
from schublas.core.domain.weak_composition import WeakComposition
from schublas.core.service.pipedreams.enumerator import enumerate_grids
from schublas.core.service.pipedreams.tracing import trace_pipes, validate_grid
from schublas.core.service.polynomial.operators import pi_hat

logger = logging.getLogger(__name__)


def enumerate_bpd(w: Permutation, size: Optional[int] = None) -> List[PipeGrid]:
    """
    축약 BPD: 행 r 오른쪽으로 나가는 파이프는 열 w(r) 아래에서 들어온다.

    @param w 순열.
    @param size 격자 크기 n (기본값 len(w)).
    @returns n×n 격자 목록 (정규 순서).
    """
    size = len(w) if size is None else size
    return enumerate_grids(size, size, PipeBoundary.bottom_to_right(w, size))


def _row_counts(grid: PipeGrid, blank: bool) -> WeakComposition:
    return WeakComposition(
        tuple(grid.count_in_row(r, lambda tile: (tile is Tile.BLANK) == blank) for r in range(1, grid.rows + 1))
    )


def blank_weight(grid: PipeGrid) -> WeakComposition:
    """행별 빈 타일 수."""
    return _row_counts(grid, blank=True)


def nonblank_weight(grid: PipeGrid) -> WeakComposition:
    """행별 빈 타일이 아닌 타일 수."""
    return _row_counts(grid, blank=False)


def bpd_polynomial(w: Permutation) -> Polynomial:
    """
    Σ_{D ∈ BPD(w)} x^{wt_▢(D)}.

    @param w 순열.
    @returns schubert(w)와 같아야 하는 다항식.
    """
    terms: Dict[tuple, int] = {}
    for grid in enumerate_bpd(w):
        exponent = blank_weight(grid).entries
        terms[exponent] = terms.get(exponent, 0) + 1
    return Polynomial(terms)


def ltbpd_shape(alpha: WeakComposition) -> tuple:
    """
    @param alpha 눈송이 약합성.
    @returns (n, m) = (len(α), max(α)).
    """
    return len(alpha), alpha.max_entry


def enumerate_ltbpd(alpha: WeakComposition) -> List[PipeGrid]:
    """
    LTBPD: α_i > 0 인 행 i 왼쪽으로 들어와 열 α_i 위로 나가는 n×m 축약 격자.

    @param alpha 눈송이 약합성. 영합성이면 빈 격자 하나.
    @returns 격자 목록 (정규 순서).
    """
    if not alpha.is_snowy():
        raise NotSnowy("left-to-top pipedreams are indexed by snowy compositions", datum=alpha.entries)
    n, m = ltbpd_shape(alpha)
    return enumerate_grids(n, m, PipeBoundary.left_to_top(alpha))


def ltbpd_polynomial(alpha: WeakComposition) -> Polynomial:
    """
    Σ_{D ∈ LTBPD(α)} x^{wt_⊡(D)}.

    @param alpha 눈송이 약합성.
    @returns top_lascoux(α)와 같아야 하는 다항식.
    """
    terms: Dict[tuple, int] = {}
    for grid in enumerate_ltbpd(alpha):
        exponent = nonblank_weight(grid).entries
        terms[exponent] = terms.get(exponent, 0) + 1
    return Polynomial(terms)


def rotate_bpd(grid: PipeGrid, m: int, n: int) -> PipeGrid:
    """
    왼쪽 위 n×m 부분격자를 180° 회전한다 (두 엘보는 서로 바뀐다).
    회전 뒤 부분격자의 오른쪽 변으로 나가던 파이프는 왼쪽으로 들어오고,
    아래 변으로 들어오던 파이프는 위로 나간다. 파이프 번호는 들어오는 행이다.

    @param grid std_{m,n}(α) 의 BPD.
    @param m 열 수.
    @param n 행 수.
    @returns α 의 LTBPD.
    """
    if n > grid.rows or m > grid.cols or n < 0 or m < 0:
        raise InvalidSubgrid(f"{n}x{m} subgrid does not fit a {grid.rows}x{grid.cols} grid", datum=(n, m))
    tiles = tuple(
        tuple(grid.tile(n + 1 - r, m + 1 - c).rotated() for c in range(1, m + 1)) for r in range(1, n + 1)
    )
    rows_in = [r for r in range(1, n + 1) if m and E in grid.tile(n + 1 - r, m).edges]
    trace = trace_pipes(tiles, [("left", r, r) for r in rows_in])
    if any(side != "top" for side, _ in trace.exits.values()):
        raise InvalidSubgrid("rotated subgrid routes a pipe to the right edge", datum=trace.exits)
    try:
        boundary = PipeBoundary(left=tuple((r, r) for r in rows_in), top=tuple((c, r) for r, (_, c) in trace.exits.items()))
    except InvalidInput as exc:
        raise InvalidSubgrid("rotated subgrid has an inconsistent boundary", datum=exc.datum) from exc
    rotated = PipeGrid(n, m, tiles, boundary)
    validate_grid(rotated)
    return rotated


def ltbpd_composition(grid: PipeGrid) -> WeakComposition:
    """
    @param grid LTBPD.
    @returns 경계에서 읽은 α (α_i = 파이프 i가 나가는 열).
    """
    exits = {pipe: c for c, pipe in grid.boundary.top}
    return WeakComposition(tuple(exits.get(r, 0) for r in range(1, grid.rows + 1)))


def ltbpd_inductive_step(alpha: WeakComposition, i: int) -> bool:
    """
    α_i < α_{i+1} 일 때 π̂_i(Σ_{LTBPD(s_iα)}) = Σ_{LTBPD(α)} 인지 확인한다.

    @param alpha 눈송이 약합성.
    @param i 상승 위치.
    @returns 두 합이 같으면 True.
    """
    if not alpha.at(i) < alpha.at(i + 1):
        raise InvalidInput(f"position {i} is not an ascent", datum=alpha.entries)
    return pi_hat(ltbpd_polynomial(alpha.swap(i)), i) == ltbpd_polynomial(alpha)
