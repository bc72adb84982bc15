from typing import Any, Dict, List

from schublas.core.common.errors import SchemaError

_RATIONAL_CHARS = set("-0123456789/")


def validate_polynomial_output(payload: Dict[str, Any]) -> None:
    """
    @param payload 다항식 JSON.
    @returns None
    """
    _require_fields(payload, ["terms"])
    _require_types(payload["terms"], list, "terms")
    for term in payload["terms"]:
        _require_fields(term, ["exp", "coeff"])
        _require_int_list(term["exp"], "exp")
        _require_rational(term["coeff"], "coeff")


def validate_expansion_output(payload: Dict[str, Any]) -> None:
    """
    @param payload 기저 전개 JSON.
    @returns None
    """
    _require_fields(payload, ["basis", "terms"])
    if payload["basis"] not in ("schubert", "key", "toplascoux"):
        raise SchemaError(f"Field basis has unknown value {payload['basis']!r}")
    _require_types(payload["terms"], list, "terms")
    for term in payload["terms"]:
        _require_fields(term, ["index", "coeff"])
        _require_int_list(term["index"], "index")
        _require_rational(term["coeff"], "coeff")


def validate_grid_output(payload: Dict[str, Any]) -> None:
    """
    @param payload 파이프 격자 JSON.
    @returns None
    """
    _require_fields(payload, ["rows", "cols", "tiles", "boundary"])
    _require_types(payload["rows"], int, "rows")
    _require_types(payload["cols"], int, "cols")
    _require_types(payload["tiles"], list, "tiles")
    _require_types(payload["boundary"], dict, "boundary")
    if len(payload["tiles"]) != payload["rows"]:
        raise SchemaError("Field tiles should hold one string per row")
    for row in payload["tiles"]:
        _require_types(row, str, "tiles")
        if len(row) != payload["cols"] or not set(row) <= set(".+rj-|"):
            raise SchemaError(f"Field tiles has malformed row {row!r}")
    _require_fields(payload["boundary"], ["bottom", "left", "top", "right"])


def validate_report_output(payload: Dict[str, Any]) -> None:
    """
    @param payload 검증 리포트 JSON.
    @returns None
    """
    _require_fields(payload, ["suite", "passed", "check_count", "failure_count", "digest", "checks"])
    _require_types(payload["passed"], bool, "passed")
    _require_types(payload["checks"], list, "checks")
    for check in payload["checks"]:
        _require_fields(check, ["name", "passed", "detail"])


def _require_fields(payload: Dict[str, Any], fields: List[str]) -> None:
    """
    @param payload 점검 대상 JSON.
    @param fields 필수 필드 목록.
    @returns None
    """
    if not isinstance(payload, dict):
        raise SchemaError(f"Expected an object, got {type(payload).__name__}")
    missing = [field for field in fields if field not in payload]
    if missing:
        raise SchemaError(f"Missing fields: {missing}")


def _require_types(value: Any, expected_type: type, field_name: str) -> None:
    """
    @param value 점검 대상 값.
    @param expected_type 기대 타입.
    @param field_name 필드 이름.
    @returns None
    """
    if not isinstance(value, expected_type):
        raise SchemaError(f"Field {field_name} should be {expected_type.__name__}")


def _require_int_list(value: Any, field_name: str) -> None:
    _require_types(value, list, field_name)
    if not all(isinstance(item, int) and not isinstance(item, bool) for item in value):
        raise SchemaError(f"Field {field_name} should hold integers")


def _require_rational(value: Any, field_name: str) -> None:
    _require_types(value, str, field_name)
    if not value or not set(value) <= _RATIONAL_CHARS or value.count("/") > 1:
        raise SchemaError(f"Field {field_name} should be a rational 'p' or 'p/q'")


def validate_support_output(payload: Dict[str, Any]) -> None:
    """
    @param payload 지지집합 JSON.
    @returns None
    """
    _require_fields(payload, ["support"])
    _require_types(payload["support"], list, "support")
    for exponent in payload["support"]:
        _require_int_list(exponent, "support")


def validate_series_output(payload: Dict[str, Any]) -> None:
    _require_fields(payload, ["max_degree", "coefficients"])
    _require_types(payload["max_degree"], int, "max_degree")
    _require_int_list(payload["coefficients"], "coefficients")
    if len(payload["coefficients"]) != payload["max_degree"] + 1:
        raise SchemaError("Field coefficients should hold max_degree + 1 values")
