from __future__ import annotations

from typing import Any, Callable, Dict, Iterable, List, Sequence

from schublas.core.common.schema_validation import (
    validate_expansion_output,
    validate_grid_output,
    validate_polynomial_output,
    validate_report_output,
    validate_series_output,
    validate_support_output,
)
from schublas.core.common.serialization import dumps, format_int_list
from schublas.core.domain.basis_expansion import BasisExpansion
from schublas.core.domain.pipe_grid import PipeGrid
from schublas.core.domain.polynomial import Polynomial
from schublas.core.domain.verification_report import VerificationReport
from schublas.core.domain.weak_composition import WeakComposition, tail_lex_key
from schublas.core.service.bases import TransferStep
from schublas.core.service.support import SnpResult


def _checked(payload: Any, validator: Callable[[Any], None]) -> str:
    validator(payload)
    return dumps(payload)


def render_polynomial(f: Polynomial, fmt: str) -> str:
    """
    @param f 출력할 다항식.
    @param fmt json 또는 text.
    @returns 출력 문자열.
    """
    if fmt == "text":
        return f.to_text()
    return _checked(f.to_json(), validate_polynomial_output)


def render_expansion(expansion: BasisExpansion, fmt: str) -> str:
    if fmt == "text":
        return expansion.to_text()
    return _checked(expansion.to_json(), validate_expansion_output)


def render_grids(grids: Sequence[PipeGrid], fmt: str, ascii_only: bool = False) -> str:
    """
    격자 목록 출력. 텍스트이거나 --render ascii 면 빈 줄로 구분한 ASCII 격자.

    @param grids 정렬된 격자 목록.
    @param fmt json 또는 text.
    @param ascii_only True면 형식과 무관하게 ASCII로 출력.
    @returns 출력 문자열.
    """
    if fmt == "text" or ascii_only:
        return "\n\n".join(grid.render_ascii() for grid in grids)
    payloads: List[Dict[str, object]] = []
    for grid in grids:
        payload = grid.to_json()
        validate_grid_output(payload)
        payloads.append(payload)
    return dumps({"count": len(payloads), "grids": payloads})


def render_support(support: Iterable[WeakComposition], fmt: str) -> str:
    ordered = sorted(support, key=lambda alpha: tail_lex_key(alpha.entries), reverse=True)
    if fmt == "text":
        return "\n".join(alpha.to_text() for alpha in ordered)
    return _checked({"support": [list(alpha.entries) for alpha in ordered]}, validate_support_output)


def render_snp(result: SnpResult, fmt: str) -> str:
    if fmt == "text":
        return result.to_text()
    return dumps(result.to_json())


def render_series(coefficients: Sequence[int], fmt: str) -> str:
    """
    @param coefficients q^0 부터의 계수.
    @param fmt json 또는 text.
    @returns "1, 1, 2, 4" 또는 JSON.
    """
    if fmt == "text":
        return ", ".join(str(value) for value in coefficients)
    payload = {"max_degree": len(coefficients) - 1, "coefficients": list(coefficients)}
    return _checked(payload, validate_series_output)


def render_chain(steps: Sequence[TransferStep], fmt: str) -> str:
    if fmt == "text":
        return "\n".join(step.to_text() for step in steps)
    return dumps({"steps": [step.to_json() for step in steps]})


def render_report(report: VerificationReport, fmt: str) -> str:
    if fmt == "text":
        return report.to_text()
    return _checked(report.to_json(), validate_report_output)


def render_permutation(values: Iterable[int], fmt: str) -> str:
    listed = list(values)
    if fmt == "text":
        return format_int_list(listed)
    return dumps({"permutation": listed})
