from __future__ import annotations

import itertools
import logging
from fractions import Fraction
from typing import Dict, List, Set, Tuple, Union

from schublas.core.common.errors import InvalidCode, NotInImage, NotInSpan, ResourceLimit
from schublas.core.common.linear_algebra import solve_linear_system
from schublas.core.config.engine_config import current_config
from schublas.core.domain.basis_expansion import BasisExpansion, BasisIndex, BasisKind
from schublas.core.domain.polynomial import Polynomial
from schublas.core.domain.weak_composition import WeakComposition, tail_lex_key
from schublas.core.service.bases.recursions import key, schubert, top_lascoux
from schublas.core.service.combinat.codes import code_to_perm, rajcode_inverse
from schublas.core.service.polynomial.operators import leading_term

logger = logging.getLogger(__name__)


class _KeyLeadingTermMismatch(Exception):
    """κ_α 의 tail-lex 선도항이 계수 1의 x^α 가 아닌 경우."""


def basis_polynomial(kind: Union[BasisKind, str], index: BasisIndex) -> Polynomial:
    """
    @param kind 기저 종류.
    @param index 순열 또는 약합성.
    @returns 해당 기저 다항식.
    """
    kind = BasisKind(kind)
    if kind is BasisKind.SCHUBERT:
        return schubert(index)  # type: ignore[arg-type]
    if kind is BasisKind.KEY:
        return key(index)  # type: ignore[arg-type]
    return top_lascoux(index)  # type: ignore[arg-type]


def _invert_leading(kind: BasisKind, exponent: WeakComposition) -> Tuple[BasisIndex, Polynomial]:
    try:
        if kind is BasisKind.SCHUBERT:
            index: BasisIndex = code_to_perm(exponent)
            return index, schubert(index)
        if kind is BasisKind.TOP_LASCOUX:
            index = rajcode_inverse(exponent)
            return index, top_lascoux(index)
    except (InvalidCode, NotInImage) as exc:
        raise NotInSpan(f"{exponent.entries} is not a leading exponent of the {kind.value} basis", datum=exc.datum) from exc
    basis = key(exponent)
    lead, coeff = leading_term(basis)
    if lead != exponent or coeff != 1:
        raise _KeyLeadingTermMismatch(exponent.entries)
    return exponent, basis


def expand_in_basis(f: Polynomial, kind: Union[BasisKind, str]) -> BasisExpansion:
    """
    선도항 탐욕 전개: 잔차의 tail-lex 최대 지수에서 기저 인덱스를 복원해 빼는 일을 반복한다.

    @param f 다항식.
    @param kind 기저 종류.
    @returns 잔차가 0이 될 때까지 모은 전개.
    """
    kind = BasisKind(kind)
    limit = current_config().step_limit
    residual = f
    terms: Dict[BasisIndex, Fraction] = {}
    previous = None
    steps = 0
    while not residual.is_zero():
        steps += 1
        if steps > limit:
            raise ResourceLimit("step_limit", limit, steps)
        exponent, coeff = leading_term(residual)
        if previous is not None and tail_lex_key(exponent.entries) >= tail_lex_key(previous.entries):
            raise NotInSpan("leading exponent failed to decrease", datum=exponent.entries)
        try:
            index, basis = _invert_leading(kind, exponent)
        except _KeyLeadingTermMismatch:
            logger.warning("key polynomial %s does not lead with its index; solving linearly", exponent.entries)
            return solve_key_expansion(f)
        residual = residual - basis.scale(coeff)
        terms[index] = terms.get(index, Fraction(0)) + coeff
        previous = exponent
    logger.debug("%s expansion finished in %d steps with %d terms", kind.value, steps, len(terms))
    return BasisExpansion.from_mapping(kind, terms)


def _compositions(size: int, length: int) -> List[WeakComposition]:
    found: List[WeakComposition] = []
    for bars in itertools.combinations(range(size + length - 1), length - 1):
        parts, last = [], -1
        for bar in bars + (size + length - 1,):
            parts.append(bar - last - 1)
            last = bar
        found.append(WeakComposition(tuple(parts)))
    return found


def solve_key_expansion(f: Polynomial) -> BasisExpansion:
    """
    차수와 변수 범위로 제한한 모든 κ_α 에 대해 정확한 선형 방정식을 푼다.

    @param f 다항식.
    @returns key 기저 전개. 해가 없으면 NotInSpan.
    """
    span = max(f.variable_span(), 1)
    candidates: List[WeakComposition] = []
    for degree in sorted(f.degrees()):
        candidates.extend(_compositions(degree, span))
    polynomials = [key(alpha) for alpha in candidates]
    monomials: Set[Tuple[int, ...]] = set(f.support_exponents())
    for poly in polynomials:
        monomials |= poly.support_exponents()
    rows = sorted(monomials)
    matrix = [[poly.coefficient(row) for poly in polynomials] for row in rows]
    solution = solve_linear_system(matrix, [f.coefficient(row) for row in rows])
    if solution is None:
        raise NotInSpan("polynomial is not in the span of the key basis")
    return BasisExpansion.from_mapping(BasisKind.KEY, dict(zip(candidates, solution)))


def reconstruct(expansion: BasisExpansion) -> Polynomial:
    """Σ coeff · basis(index)."""
    total = Polynomial.zero()
    for index, coeff in expansion.terms:
        total = total + basis_polynomial(expansion.kind, index).scale(coeff)
    return total
