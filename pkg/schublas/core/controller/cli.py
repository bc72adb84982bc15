"""
schublas 명령행 진입점.

하위 명령마다 서비스 하나를 호출하고, 결과를 serializers로 출력한다.
종료 코드: 0 성공, 1 검증 실패, 2 사용/설정/입력 오류, 3 자원 한도 초과.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence

from schublas.core.common.errors import InvalidInput, ResourceLimit, SchublasError
from schublas.core.common.serialization import loads, parse_composition, parse_permutation
from schublas.core.config import EngineConfig, build_config, config_from_env, configure, load_engine_config
from schublas.core.controller import serializers
from schublas.core.domain.basis_expansion import BasisKind
from schublas.core.domain.polynomial import Polynomial
from schublas.core.service.bases import (
    key,
    reset_caches,
    reverse_key,
    schubert,
    top_lascoux,
    top_lascoux_via_reverse,
    transfer_chain,
)
from schublas.core.service.combinat import standardize
from schublas.core.service.expansion import (
    expand_in_basis,
    hilbert_coefficients,
    key_expand_top_lascoux,
    schubert_product,
    top_lascoux_product,
    verify_structure_theorem,
)
from schublas.core.service.pipedreams import enumerate_bpd, enumerate_ltbpd, ltbpd_polynomial
from schublas.core.service.support import schubert_support, snp_check, top_lascoux_support
from schublas.core.service.verification import SUITES, VerificationService
from schublas.settings import configure_logging

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


class CommandResult:
    """하위 명령의 출력 문자열과 종료 코드."""

    def __init__(self, output: str, exit_code: int = EXIT_OK) -> None:
        self.output = output
        self.exit_code = exit_code


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "text"], default=None, help="출력 형식")
    common.add_argument("--config", default=None, help="JSON 엔진 설정 파일")
    common.add_argument("--threads", type=int, default=None, help="스윕 병렬도")
    common.add_argument("--log-format", choices=["text", "json"], default=None, help="로그 형식")
    common.add_argument("--log-level", default=None, help="로그 레벨")
    return common


def build_parser() -> argparse.ArgumentParser:
    """
    @returns 모든 하위 명령이 등록된 파서.
    """
    common = _common_flags()
    parser = argparse.ArgumentParser(prog="schublas", description="Schubert, key, top Lascoux 다항식 계산기")
    commands = parser.add_subparsers(dest="command", required=True)

    def command(name: str, help_text: str) -> argparse.ArgumentParser:
        return commands.add_parser(name, parents=[common], help=help_text)

    sub = command("schubert", "Schubert 다항식")
    sub.add_argument("--perm", required=True)

    sub = command("key", "key 다항식")
    sub.add_argument("--comp", required=True)

    sub = command("toplascoux", "top Lascoux 다항식")
    sub.add_argument("--comp", required=True)
    sub.add_argument("--method", choices=["recursive", "bpd", "reverse"], default="recursive")
    sub.add_argument("--m", type=int, default=None)
    sub.add_argument("--n", type=int, default=None)

    sub = command("bpd", "bumpless pipe dream 열거")
    sub.add_argument("--perm", required=True)
    sub.add_argument("--size", type=int, default=None)
    sub.add_argument("--render", choices=["ascii"], default=None)

    sub = command("ltbpd", "left-top bumpless pipe dream 열거")
    sub.add_argument("--comp", required=True)
    sub.add_argument("--render", choices=["ascii"], default=None)

    sub = command("support", "완전 타블로로 구한 지지집합")
    target = sub.add_mutually_exclusive_group(required=True)
    target.add_argument("--schubert", metavar="PERM")
    target.add_argument("--toplascoux", metavar="COMP")

    sub = command("snp", "saturated Newton polytope 판정")
    sub.add_argument("--input", required=True, help="다항식 JSON 파일")

    sub = command("product", "기저 원소 곱의 전개")
    sub.add_argument("--basis", choices=[kind.value for kind in BasisKind], required=True)
    sub.add_argument("--left", required=True)
    sub.add_argument("--right", required=True)

    sub = command("structconst", "top Lascoux 구조 상수와 Schubert 구조 상수 대조")
    sub.add_argument("--alpha", required=True)
    sub.add_argument("--gamma", required=True)
    sub.add_argument("--m1", type=int, required=True)
    sub.add_argument("--m2", type=int, required=True)
    sub.add_argument("--n", type=int, required=True)

    sub = command("keyexpand", "top Lascoux 다항식의 key 전개")
    sub.add_argument("--comp", required=True)
    sub.add_argument("--m", type=int, required=True)
    sub.add_argument("--n", type=int, required=True)

    sub = command("hilbert", "눈송이 약합성의 Hilbert 급수")
    sub.add_argument("--max-degree", type=int, required=True)

    sub = command("verify", "예제 재현과 정리 검증")
    sub.add_argument("--suite", choices=[*SUITES, "all"], default="all")
    sub.add_argument("--max-n", type=int, default=4)
    sub.add_argument("--cases", type=int, default=1000, help="무작위 연산자 검사 횟수")

    sub = command("chain", "전이 사슬")
    sub.add_argument("--comp", required=True)
    sub.add_argument("--m", type=int, required=True)
    sub.add_argument("--n", type=int, required=True)

    sub = command("reversekey", "r_{m,n}(key)")
    sub.add_argument("--comp", required=True)
    sub.add_argument("--m", type=int, required=True)
    sub.add_argument("--n", type=int, required=True)

    sub = command("std", "표준화 std_{m,n}")
    sub.add_argument("--comp", required=True)
    sub.add_argument("--m", type=int, required=True)
    sub.add_argument("--n", type=int, required=True)
    return parser


def resolve_config(args: argparse.Namespace) -> EngineConfig:
    """
    기본값 < 환경변수 < --config 파일 < 명령행 플래그 순서로 설정을 합친다.

    @param args 파싱된 인자.
    @returns 검증된 EngineConfig.
    """
    config = config_from_env()
    if args.config:
        config = load_engine_config(args.config, base=config)
    overrides: Dict[str, object] = {}
    if args.format:
        overrides["output_format"] = args.format
    if args.threads is not None:
        overrides["parallelism"] = args.threads
    if overrides:
        config = build_config(**{**config.model_dump(), **overrides})
    return config


# ----------------------------------------------------------------------
# 하위 명령
# ----------------------------------------------------------------------
def _schubert(args: argparse.Namespace, fmt: str) -> CommandResult:
    return CommandResult(serializers.render_polynomial(schubert(parse_permutation(args.perm)), fmt))


def _key(args: argparse.Namespace, fmt: str) -> CommandResult:
    return CommandResult(serializers.render_polynomial(key(parse_composition(args.comp)), fmt))


def _toplascoux(args: argparse.Namespace, fmt: str) -> CommandResult:
    alpha = parse_composition(args.comp)
    if args.method == "bpd":
        value = ltbpd_polynomial(alpha)
    elif args.method == "reverse":
        m = args.m if args.m is not None else alpha.max_entry
        n = args.n if args.n is not None else len(alpha)
        value = top_lascoux_via_reverse(alpha, m, n)
    else:
        value = top_lascoux(alpha)
    return CommandResult(serializers.render_polynomial(value, fmt))


def _bpd(args: argparse.Namespace, fmt: str) -> CommandResult:
    grids = enumerate_bpd(parse_permutation(args.perm), args.size)
    return CommandResult(serializers.render_grids(grids, fmt, ascii_only=args.render == "ascii"))


def _ltbpd(args: argparse.Namespace, fmt: str) -> CommandResult:
    grids = enumerate_ltbpd(parse_composition(args.comp))
    return CommandResult(serializers.render_grids(grids, fmt, ascii_only=args.render == "ascii"))


def _support(args: argparse.Namespace, fmt: str) -> CommandResult:
    if args.schubert is not None:
        found = schubert_support(parse_permutation(args.schubert))
    else:
        found = top_lascoux_support(parse_composition(args.toplascoux))
    return CommandResult(serializers.render_support(found, fmt))


def _snp(args: argparse.Namespace, fmt: str) -> CommandResult:
    try:
        raw = Path(args.input).read_bytes()
    except OSError as exc:
        raise InvalidInput(f"cannot read --input: {exc}", datum=args.input) from exc
    f = Polynomial.from_json(loads(raw))
    return CommandResult(serializers.render_snp(snp_check(f), fmt))


def _product(args: argparse.Namespace, fmt: str) -> CommandResult:
    kind = BasisKind(args.basis)
    if kind == BasisKind.SCHUBERT:
        expansion = schubert_product(parse_permutation(args.left), parse_permutation(args.right))
    elif kind == BasisKind.TOP_LASCOUX:
        expansion = top_lascoux_product(parse_composition(args.left), parse_composition(args.right))
    else:
        product = key(parse_composition(args.left)) * key(parse_composition(args.right))
        expansion = expand_in_basis(product, BasisKind.KEY)
    return CommandResult(serializers.render_expansion(expansion, fmt))


def _structconst(args: argparse.Namespace, fmt: str) -> CommandResult:
    report = verify_structure_theorem(
        parse_composition(args.alpha), parse_composition(args.gamma), args.m1, args.m2, args.n
    )
    return CommandResult(
        serializers.render_report(report, fmt), EXIT_OK if report.passed else EXIT_VERIFICATION_FAILED
    )


def _keyexpand(args: argparse.Namespace, fmt: str) -> CommandResult:
    expansion = key_expand_top_lascoux(parse_composition(args.comp), args.m, args.n)
    return CommandResult(serializers.render_expansion(expansion, fmt))


def _hilbert(args: argparse.Namespace, fmt: str) -> CommandResult:
    if args.max_degree < 0:
        raise InvalidInput("--max-degree must be non-negative", datum=args.max_degree)
    return CommandResult(serializers.render_series(hilbert_coefficients(args.max_degree), fmt))


def _verify(args: argparse.Namespace, fmt: str) -> CommandResult:
    if args.cases < 0:
        raise InvalidInput("--cases must be non-negative", datum=args.cases)
    report = VerificationService(random_cases=args.cases).run_suite(args.suite, args.max_n)
    return CommandResult(
        serializers.render_report(report, fmt), EXIT_OK if report.passed else EXIT_VERIFICATION_FAILED
    )


def _chain(args: argparse.Namespace, fmt: str) -> CommandResult:
    steps = transfer_chain(parse_composition(args.comp), args.m, args.n)
    return CommandResult(serializers.render_chain(steps, fmt))


def _reversekey(args: argparse.Namespace, fmt: str) -> CommandResult:
    value = reverse_key(parse_composition(args.comp), args.m, args.n)
    return CommandResult(serializers.render_polynomial(value, fmt))


def _std(args: argparse.Namespace, fmt: str) -> CommandResult:
    w = standardize(parse_composition(args.comp), args.m, args.n)
    return CommandResult(serializers.render_permutation(w.one_line(len(w)), fmt))


HANDLERS: Dict[str, Callable[[argparse.Namespace, str], CommandResult]] = {
    "schubert": _schubert,
    "key": _key,
    "toplascoux": _toplascoux,
    "bpd": _bpd,
    "ltbpd": _ltbpd,
    "support": _support,
    "snp": _snp,
    "product": _product,
    "structconst": _structconst,
    "keyexpand": _keyexpand,
    "hilbert": _hilbert,
    "verify": _verify,
    "chain": _chain,
    "reversekey": _reversekey,
    "std": _std,
}


def run_cli(argv: Optional[Sequence[str]] = None) -> int:
    """
    @param argv 명령행 인자 (기본값: sys.argv[1:]).
    @returns 종료 코드.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        configure_logging(level=args.log_level, log_format=args.log_format)
        config = resolve_config(args)
        configure(config)
        reset_caches()
        logger.debug("running %s with %s", args.command, config.model_dump())
        result = HANDLERS[args.command](args, config.output_format)
    except ResourceLimit as exc:
        print(f"{exc.name}: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except SchublasError as exc:
        print(f"{exc.name}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"InvalidInput: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(result.output)
    return result.exit_code


def main(argv: Optional[List[str]] = None) -> None:
    sys.exit(run_cli(argv))
