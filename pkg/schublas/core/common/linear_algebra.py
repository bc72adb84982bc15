from __future__ import annotations

import logging
from fractions import Fraction
from typing import List, Optional, Sequence

logger = logging.getLogger(__name__)

Vector = List[Fraction]
Matrix = List[List[Fraction]]


def solve_linear_system(matrix: Sequence[Sequence[object]], rhs: Sequence[object]) -> Optional[Vector]:
    """
    유리수 가우스 소거. 자유변수는 0으로 둔다.

    @param matrix m×k 계수 행렬.
    @param rhs 길이 m 우변.
    @returns 해 벡터, 해가 없으면 None.
    """
    rows = [[Fraction(value) for value in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    width = len(rows[0]) - 1 if rows else 0
    pivots: List[int] = []
    r = 0
    for col in range(width):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        lead = rows[r][col]
        rows[r] = [value / lead for value in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                factor = rows[i][col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    if any(all(value == 0 for value in row[:-1]) and row[-1] != 0 for row in rows):
        return None
    solution = [Fraction(0)] * width
    for i, col in enumerate(pivots):
        solution[col] = rows[i][-1]
    return solution


class PhaseOneSimplex:
    """
    Ax = b, x ≥ 0 의 실현 가능성을 인공변수 합 최소화로 판정한다.
    진입/이탈 변수는 Bland 규칙(가장 작은 번호)으로 골라 순환하지 않는다.
    """

    def __init__(self, matrix: Sequence[Sequence[object]], rhs: Sequence[object]) -> None:
        """
        @param matrix m×k 제약 행렬.
        @param rhs 길이 m 우변.
        @returns None
        """
        self.m = len(rhs)
        self.k = len(matrix[0]) if matrix else 0
        self.rows: Matrix = []
        self.rhs: Vector = []
        for i, (row, b) in enumerate(zip(matrix, rhs)):
            sign = -1 if Fraction(b) < 0 else 1
            artificial = [Fraction(1 if j == i else 0) for j in range(self.m)]
            self.rows.append([sign * Fraction(value) for value in row] + artificial)
            self.rhs.append(sign * Fraction(b))
        self.basis = [self.k + i for i in range(self.m)]
        self.cost = [Fraction(0)] * self.k + [Fraction(1)] * self.m
        self.pivots = 0

    def _reduced_cost(self, j: int) -> Fraction:
        return self.cost[j] - sum((self.cost[self.basis[i]] * self.rows[i][j] for i in range(self.m)), Fraction(0))

    def _pivot(self, i: int, j: int) -> None:
        lead = self.rows[i][j]
        self.rows[i] = [value / lead for value in self.rows[i]]
        self.rhs[i] /= lead
        for other in range(self.m):
            if other != i and self.rows[other][j] != 0:
                factor = self.rows[other][j]
                self.rows[other] = [a - factor * b for a, b in zip(self.rows[other], self.rows[i])]
                self.rhs[other] -= factor * self.rhs[i]
        self.basis[i] = j
        self.pivots += 1

    def _step(self) -> bool:
        in_basis = set(self.basis)
        entering = next(
            (j for j in range(self.k + self.m) if j not in in_basis and self._reduced_cost(j) < 0),
            None,
        )
        if entering is None:
            return False
        candidates = [
            (self.rhs[i] / self.rows[i][entering], self.basis[i], i)
            for i in range(self.m)
            if self.rows[i][entering] > 0
        ]
        if not candidates:
            return False
        _, _, leaving = min(candidates)
        self._pivot(leaving, entering)
        return True

    def solve(self) -> Optional[Vector]:
        """
        @returns 실현 가능한 x (길이 k), 불가능하면 None.
        """
        while self._step():
            pass
        residual = sum((self.rhs[i] for i in range(self.m) if self.basis[i] >= self.k), Fraction(0))
        logger.debug("phase-one simplex finished after %d pivots, residual=%s", self.pivots, residual)
        if residual != 0:
            return None
        solution = [Fraction(0)] * self.k
        for i, var in enumerate(self.basis):
            if var < self.k:
                solution[var] = self.rhs[i]
        return solution


def in_convex_hull(point: Sequence[int], points: Sequence[Sequence[int]]) -> bool:
    """
    point가 points의 볼록 결합인지 판정한다 (λ ≥ 0, Σλ = 1, Σλ_j p_j = point).

    @param point 후보 격자점.
    @param points 같은 차원의 점 목록.
    @returns 볼록 껍질에 속하면 True.
    """
    if not points:
        return False
    dimension = len(point)
    matrix = [[Fraction(p[d]) for p in points] for d in range(dimension)]
    matrix.append([Fraction(1)] * len(points))
    rhs = [Fraction(value) for value in point] + [Fraction(1)]
    return PhaseOneSimplex(matrix, rhs).solve() is not None
