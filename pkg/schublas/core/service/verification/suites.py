from __future__ import annotations

import itertools
import logging
import random
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple, TypeVar

from schublas.core.common.errors import InvalidInput, ResourceLimit, SchublasError
from schublas.core.config.engine_config import EngineConfig, current_config
from schublas.core.domain.basis_expansion import BasisKind
from schublas.core.domain.permutation import Permutation
from schublas.core.domain.pipe_grid import PipeBoundary, PipeGrid
from schublas.core.domain.polynomial import Polynomial
from schublas.core.domain.verification_report import VerificationReport
from schublas.core.domain.weak_composition import WeakComposition
from schublas.core.repository import worked_examples as examples
from schublas.core.service.bases import (
    key,
    resolve_in_order,
    schubert,
    schubert_via_top_lascoux,
    top_lascoux,
    top_lascoux_via_reverse,
    transfer_chain,
)
from schublas.core.service.combinat import (
    coinversion_rajcode,
    raj,
    reverse_complement,
    rothe_diagram,
    snow_diagram,
    standardize,
)
from schublas.core.service.expansion import (
    enumerate_snowy_by_raj,
    expand_in_basis,
    hilbert_coefficients,
    key_expand_top_lascoux,
    schubert_key_expansion,
    schubert_product,
    top_lascoux_product,
    verify_reverse_key,
    verify_structure_corollary,
    verify_structure_theorem,
)
from schublas.core.service.pipedreams import (
    blank_weight,
    bpd_polynomial,
    enumerate_bpd,
    enumerate_ltbpd,
    is_valid_grid,
    ltbpd_composition,
    ltbpd_inductive_step,
    ltbpd_polynomial,
    nonblank_weight,
    rotate_bpd,
    validate_grid,
)
from schublas.core.service.polynomial import (
    demazure_pi,
    divided_difference,
    pi_hat,
    pi_hat_via_pi,
    reverse_complement_poly,
)
from schublas.core.service.support import (
    count_perfect_tableaux,
    enumerate_perfect_tableaux,
    schubert_support,
    snp_check,
    standardized_rothe_diagram,
    tableau_bijection,
    top_lascoux_support,
)

logger = logging.getLogger(__name__)

SUITES = ("examples", "operators", "bpd", "support", "structure", "hilbert")
Record = Tuple[str, bool, str]
T = TypeVar("T")
SAMPLED_SIZE = 5
SAMPLED_COUNT = 12


def permutations_up_to(k: int) -> List[Permutation]:
    """
    @param k 최대 크기.
    @returns S_k 의 모든 원소 (중복 없이, 사전식).
    """
    return sorted({Permutation(values) for values in itertools.permutations(range(1, k + 1))}, key=lambda w: w.one_line(k))


def snowy_box(bound: int) -> List[WeakComposition]:
    """
    @param bound 성분 상한이자 길이 상한.
    @returns supp ⊆ [bound], max ≤ bound 인 눈송이 약합성 (사전식).
    """
    found = {
        WeakComposition(values)
        for values in itertools.product(range(bound + 1), repeat=bound)
        if WeakComposition(values).is_snowy()
    }
    return sorted(found, key=lambda alpha: alpha.padded(bound))


def _random_polynomial(rng: random.Random, variables: int = 4, exponent: int = 3, terms: int = 4) -> Polynomial:
    mapping: Dict[Tuple[int, ...], int] = {}
    for _ in range(rng.randint(1, terms)):
        key_ = tuple(rng.randint(0, exponent) for _ in range(variables))
        mapping[key_] = rng.choice([-3, -2, -1, 1, 2, 3])
    return Polynomial(mapping)


def _random_box_polynomial(rng: random.Random, m: int, n: int, terms: int = 4) -> Polynomial:
    mapping: Dict[Tuple[int, ...], int] = {}
    for _ in range(rng.randint(1, terms)):
        mapping[tuple(rng.randint(0, m) for _ in range(n))] = rng.choice([-2, -1, 1, 2])
    return Polynomial(mapping)


def _commute_records(case: Tuple[Polynomial, int, int]) -> List[Record]:
    f, m, n = case
    label = f"m={m} n={n} f={f.to_text()}"

    def r(g: Polynomial) -> Polynomial:
        return reverse_complement_poly(g, m, n)

    records: List[Record] = []
    for i in range(1, n):
        records.append((f"r d_{i} = pi_hat_{n - i} r", r(divided_difference(f, i)) == pi_hat(r(f), n - i), label))
        records.append((f"r pi_{i} = pi_{n - i} r", r(demazure_pi(f, i)) == demazure_pi(r(f), n - i), label))
        records.append((f"r pi_hat_{i} = d_{n - i} r", r(pi_hat(f, i)) == divided_difference(r(f), n - i), label))
    return records


def _confluence_records(case: Tuple[Any, List[int], str]) -> List[Record]:
    index, order, kind = case
    expected = {"schubert": schubert, "key": key, "toplascoux": top_lascoux}[kind](index)
    return [(f"{kind} confluence {index!r} order={order}", resolve_in_order(index, order, kind) == expected, "")]


class VerificationService:
    """예제 재현과 정리 검증 묶음을 실행한다. 불일치는 모아서 보고한다."""

    def __init__(self, config: Optional[EngineConfig] = None, random_cases: int = 1000, seed: int = 20240101) -> None:
        """
        @param config 엔진 설정 (기본값: 활성 설정).
        @param random_cases 무작위 연산자 검사 횟수.
        @param seed 난수 시드.
        @returns None
        """
        self.config = config or current_config()
        self.random_cases = random_cases
        self.seed = seed

    # ------------------------------------------------------------------
    # 공통
    # ------------------------------------------------------------------
    def _sweep(self, report: VerificationReport, items: Sequence[T], check: Callable[[T], List[Record]]) -> None:
        """
        항목별 검사를 스레드 풀에서 돌리고 입력 순서대로 기록한다.

        @param report 기록할 리포트.
        @param items 검사 대상.
        @param check 항목 → 기록 목록.
        @returns None
        """

        def guarded(item: T) -> List[Record]:
            try:
                return check(item)
            except ResourceLimit:
                raise
            except (SchublasError, AssertionError) as exc:
                return [(f"{report.suite} {item!r}", False, f"{type(exc).__name__}: {exc}")]

        workers = self.config.thread_count()
        if workers == 1 or len(items) < 2:
            batches: Iterable[List[Record]] = map(guarded, items)
            for records in batches:
                for name, passed, detail in records:
                    report.record(name, passed, detail)
            return
        with ThreadPoolExecutor(max_workers=workers) as executor:
            for records in executor.map(guarded, items):
                for name, passed, detail in records:
                    report.record(name, passed, detail)

    def run_suite(self, name: str, max_n: int = 4) -> VerificationReport:
        """
        @param name examples, operators, bpd, support, structure, hilbert, all 중 하나.
        @param max_n 순열 크기와 합성 상자의 상한.
        @returns 검증 리포트.
        """
        if name == "all":
            report = VerificationReport(suite="all")
            for suite in SUITES:
                report.extend(self.run_suite(suite, max_n))
            return report
        if name not in SUITES:
            raise InvalidInput(f"unknown suite {name!r}", datum=name)
        if max_n < 1:
            raise InvalidInput("max-n must be positive", datum=max_n)
        logger.info("running verification suite %s (max_n=%d)", name, max_n)
        report = getattr(self, f"_suite_{name}")(max_n)
        logger.info(
            "suite %s finished: %d checks, %d failures", name, len(report.checks), len(report.failures)
        )
        return report

    # ------------------------------------------------------------------
    # examples
    # ------------------------------------------------------------------
    def _suite_examples(self, max_n: int) -> VerificationReport:
        report = VerificationReport(suite="examples")
        for w, expected in examples.SCHUBERT_VALUES.items():
            value = schubert(w)
            report.record(f"schubert [{w.to_text()}]", value == expected, value.to_text())
            report.record(f"bpd_polynomial [{w.to_text()}]", bpd_polynomial(w) == expected, "")
            report.record(
                f"schubert_via_top_lascoux [{w.to_text()}]", schubert_via_top_lascoux(w) == expected, ""
            )
        report.record(
            "schubert text [2,1,4,3]",
            schubert(Permutation.of(2, 1, 4, 3)).to_text() == "x1^2 + x1*x2 + x1*x3",
            schubert(Permutation.of(2, 1, 4, 3)).to_text(),
        )
        for alpha, expected in examples.TOP_LASCOUX_VALUES.items():
            n, m = len(alpha), alpha.max_entry
            report.record(f"top_lascoux recursive ({alpha.to_text()})", top_lascoux(alpha) == expected, "")
            report.record(f"top_lascoux bpd ({alpha.to_text()})", ltbpd_polynomial(alpha) == expected, "")
            report.record(
                f"top_lascoux reverse ({alpha.to_text()})", top_lascoux_via_reverse(alpha, m, n) == expected, ""
            )
        for (alpha, m, n), expected in examples.STANDARDIZATIONS:
            value = standardize(alpha, m, n)
            report.record(f"std_{m},{n} ({alpha.to_text()})", value == expected, value.to_text())
        for w, count in examples.BPD_COUNTS.items():
            found = len(enumerate_bpd(w))
            report.record(f"bpd count [{w.to_text()}]", found == count, f"{found}")
        for alpha, count in examples.LTBPD_COUNTS.items():
            found = len(enumerate_ltbpd(alpha))
            report.record(f"ltbpd count ({alpha.to_text()})", found == count, f"{found}")
        rothe = PipeGrid.from_rows(
            examples.ROTHE_BPD_2143, PipeBoundary.bottom_to_right(Permutation.of(2, 1, 4, 3), 4)
        )
        validate_grid(rothe)
        report.record("rothe bpd blank weight", blank_weight(rothe) == WeakComposition.of(1, 0, 1, 0), "")
        alpha = WeakComposition.of(0, 3, 0, 2)
        rotated = sorted(
            (rotate_bpd(grid, 3, 4) for grid in enumerate_bpd(Permutation.of(2, 4, 1, 5, 3))),
            key=PipeGrid.sort_key,
        )
        report.record("rotate_bpd [2,4,1,5,3] -> (0,3,0,2)", rotated == enumerate_ltbpd(alpha), f"{len(rotated)}")
        report.record(
            "reverse transfer (2,0,4,0,1)",
            reverse_complement_poly(top_lascoux(WeakComposition.of(2, 0, 4, 0, 1)), 4, 5)
            == schubert(Permutation.of(4, 5, 1, 6, 3, 2)),
            "",
        )
        self._record_products(report)
        for w, expected in examples.SCHUBERT_SUPPORT.items():
            report.record(f"schubert support [{w.to_text()}]", schubert_support(w) == expected, "")
            report.record(
                f"perfect tableaux RD([{w.to_text()}])",
                len(enumerate_perfect_tableaux(rothe_diagram(w))) == examples.PERFECT_TABLEAU_COUNTS["rothe_31524"],
                "",
            )
        for alpha, expected in examples.TOP_LASCOUX_SUPPORT.items():
            report.record(f"top lascoux support ({alpha.to_text()})", top_lascoux_support(alpha) == expected, "")
            report.record(
                f"perfect tableaux snow({alpha.to_text()})",
                len(enumerate_perfect_tableaux(snow_diagram(alpha))) == examples.PERFECT_TABLEAU_COUNTS["snow_042"],
                "",
            )
        sample = examples.TABLEAU_BIJECTION
        image = tableau_bijection(sample["source"], sample["alpha"], sample["m"], sample["n"])
        report.record("tableau bijection worked example", image == sample["target"], "")
        chain = examples.TRANSFER_CHAIN
        steps = transfer_chain(chain["alpha"], chain["m"], chain["n"])
        report.record(
            "transfer chain (2,0,4,0,1)",
            [step.composition for step in steps] == chain["compositions"]
            and [step.permutation for step in steps] == chain["permutations"]
            and [step.pi_hat_index for step in steps[1:]] == chain["pi_hat"]
            and [step.divided_difference_index for step in steps[1:]] == chain["divided_difference"],
            "",
        )
        report.record("raj (2,0,4,0,1)", raj(WeakComposition.of(2, 0, 4, 0, 1)) == 11, "")
        report.record(
            "coinversion rajcode (3,0,1,4,6,0,2)",
            coinversion_rajcode(WeakComposition.of(3, 0, 1, 4, 6, 0, 2)) == WeakComposition.of(5, 4, 4, 5, 6, 1, 2),
            "",
        )
        missing = snp_check(Polynomial({(2,): 1, (0, 2): 1}))
        report.record("snp x1^2 + x2^2", not missing.saturated and missing.witness == WeakComposition.of(1, 1), "")
        prefix = hilbert_coefficients(len(examples.HILBERT_PREFIX) - 1)
        report.record("hilbert prefix", prefix == examples.HILBERT_PREFIX, ", ".join(map(str, prefix)))
        return report

    def _record_products(self, report: VerificationReport) -> None:
        product = examples.SCHUBERT_PRODUCT
        c = schubert_product(product["left"], product["right"])
        report.record(
            "schubert product [1,4,2,3]*[2,1,4,3]",
            sorted(c.indices(), key=lambda w: w.images) == sorted(product["terms"], key=lambda w: w.images)
            and all(coeff == 1 for _, coeff in c.terms),
            c.to_text(),
        )
        product = examples.TOP_LASCOUX_PRODUCT
        d = top_lascoux_product(product["left"], product["right"])
        report.record(
            "top lascoux product (2,3,1,4)*(2,1,4,3)",
            set(d.indices()) == set(product["terms"]) and all(coeff == 1 for _, coeff in d.terms),
            d.to_text(),
        )
        delta, w = product["witness"]
        report.record(
            "structure constant d[(8,6,5,7)] = c[[2,4,3,1]]",
            standardize(delta, product["m1"] + product["m2"], product["n"]) == w
            and d.coefficient(delta) == c.coefficient(w) == 1,
            "",
        )

    # ------------------------------------------------------------------
    # operators
    # ------------------------------------------------------------------
    def _suite_operators(self, max_n: int) -> VerificationReport:
        report = VerificationReport(suite="operators")
        rng = random.Random(self.seed)
        cases = [(_random_polynomial(rng), rng.randint(1, 3), rng.randint(1, 3)) for _ in range(self.random_cases)]

        def relations(case: Tuple[Polynomial, int, int]) -> List[Record]:
            f, i, j = case
            label = f"i={i} f={f.to_text()}"
            records = [
                ("d_i d_i = 0", divided_difference(divided_difference(f, i), i).is_zero(), label),
                ("pi_i pi_i = pi_i", demazure_pi(demazure_pi(f, i), i) == demazure_pi(f, i), label),
                ("pi_hat forms agree", pi_hat(f, i) == pi_hat_via_pi(f, i), label),
                (
                    "braid d_i d_i+1 d_i",
                    divided_difference(divided_difference(divided_difference(f, i), i + 1), i)
                    == divided_difference(divided_difference(divided_difference(f, i + 1), i), i + 1),
                    label,
                ),
            ]
            far = i + 1 + j
            records.append(
                (
                    "commute d_i d_j",
                    divided_difference(divided_difference(f, i), far)
                    == divided_difference(divided_difference(f, far), i),
                    f"{label} j={far}",
                )
            )
            m = f.max_exponent()
            n = f.variable_span()
            records.append(("r_{m,n} involution", reverse_complement_poly(reverse_complement_poly(f, m, n), m, n) == f, label))
            return records

        self._sweep(report, cases, relations)
        bound = min(3, max_n)
        boxed: List[Tuple[Polynomial, int, int]] = [
            (Polynomial.monomial(values), m, n)
            for m in range(1, bound + 1)
            for n in range(1, bound + 1)
            for values in itertools.product(range(m + 1), repeat=n)
        ]
        for _ in range(self.random_cases):
            m, n = rng.randint(1, 5), rng.randint(2, 5)
            boxed.append((_random_box_polynomial(rng, m, n), m, n))
        self._sweep(report, boxed, _commute_records)
        for m in range(1, bound + 1):
            for n in range(1, bound + 1):
                report.extend(verify_reverse_key(m, n))
        self._sweep(report, self._confluence_cases(rng, max_n), _confluence_records)
        return report

    def _confluence_cases(self, rng: random.Random, max_n: int) -> List[Tuple[Any, List[int], str]]:
        """
        @param rng 순서를 뽑을 난수 생성기.
        @param max_n 순열 크기 상한.
        @returns (인덱스, 상승 선택 순서, 종류) 목록.
        """
        bound = min(3, max_n)
        indices: List[Tuple[Any, str]] = [(w, "schubert") for w in permutations_up_to(min(4, max_n))]
        indices += [
            (WeakComposition(values), "key") for values in itertools.product(range(bound + 1), repeat=bound)
        ]
        indices += [(alpha, "toplascoux") for alpha in snowy_box(bound)]
        return [(index, [rng.randint(0, 3) for _ in range(4)], kind) for index, kind in indices]

    # ------------------------------------------------------------------
    # bpd
    # ------------------------------------------------------------------
    def _suite_bpd(self, max_n: int) -> VerificationReport:
        report = VerificationReport(suite="bpd")

        def lls(w: Permutation) -> List[Record]:
            grids = enumerate_bpd(w)
            return [
                (f"bpd formula [{w.to_text()}]", bpd_polynomial(w) == schubert(w), f"{len(grids)} grids"),
                (f"bpd grids valid [{w.to_text()}]", all(is_valid_grid(grid) for grid in grids), ""),
            ]

        permutations = permutations_up_to(max_n)
        if max_n < SAMPLED_SIZE:
            rng = random.Random(self.seed)
            permutations += rng.sample(permutations_up_to(SAMPLED_SIZE), SAMPLED_COUNT)
        self._sweep(report, permutations, lls)
        snowy = snowy_box(min(3, max_n))

        def ltbpd(alpha: WeakComposition) -> List[Record]:
            n, m = len(alpha), alpha.max_entry
            grids = enumerate_ltbpd(alpha)
            for grid in grids:
                validate_grid(grid)
            value = top_lascoux(alpha)
            records: List[Record] = [
                (f"ltbpd formula ({alpha.to_text()})", ltbpd_polynomial(alpha) == value, f"{len(grids)} grids"),
                (f"reverse transfer ({alpha.to_text()})", top_lascoux_via_reverse(alpha, m, n) == value, ""),
            ]
            if not alpha.is_zero():
                records.append(
                    (
                        f"ltbpd boundary ({alpha.to_text()})",
                        all(ltbpd_composition(grid) == alpha for grid in grids),
                        "",
                    )
                )
                w = standardize(alpha, m, n)
                bpds = enumerate_bpd(w, max(len(w), m, n))
                rotated = [rotate_bpd(grid, m, n) for grid in bpds]
                keys = sorted(grid.sort_key() for grid in rotated)
                records.append(
                    (
                        f"rotate_bpd bijection ({alpha.to_text()})",
                        keys == [grid.sort_key() for grid in grids] and len(set(keys)) == len(keys),
                        f"{len(bpds)} -> {len(grids)}",
                    )
                )
                transfer = all(
                    nonblank_weight(image).padded(n)
                    == tuple(m - blank_weight(grid).padded(max(grid.rows, n))[n - 1 - i] for i in range(n))
                    for grid, image in zip(bpds, rotated)
                )
                records.append((f"rotate_bpd weight transfer ({alpha.to_text()})", transfer, ""))
            for i in range(1, len(alpha)):
                if alpha.at(i) < alpha.at(i + 1):
                    records.append(
                        (f"ltbpd inductive step ({alpha.to_text()}) i={i}", ltbpd_inductive_step(alpha, i), "")
                    )
            return records

        self._sweep(report, snowy, ltbpd)
        return report

    # ------------------------------------------------------------------
    # support
    # ------------------------------------------------------------------
    def _suite_support(self, max_n: int) -> VerificationReport:
        report = VerificationReport(suite="support")

        def schubert_checks(w: Permutation) -> List[Record]:
            value = schubert(w)
            diagram = rothe_diagram(w)
            return [
                (f"ARY support [{w.to_text()}]", schubert_support(w) == value.support(), ""),
                (
                    f"column independence RD([{w.to_text()}])",
                    count_perfect_tableaux(diagram) == len(enumerate_perfect_tableaux(diagram)),
                    "",
                ),
                (f"SNP schubert [{w.to_text()}]", snp_check(value).saturated, ""),
            ]

        self._sweep(report, permutations_up_to(max_n), schubert_checks)

        def lascoux_checks(alpha: WeakComposition) -> List[Record]:
            value = top_lascoux(alpha)
            records: List[Record] = [
                (f"top lascoux support ({alpha.to_text()})", top_lascoux_support(alpha) == value.support(), ""),
                (f"SNP top lascoux ({alpha.to_text()})", snp_check(value).saturated, ""),
            ]
            if alpha.is_zero():
                return records
            n, m = len(alpha), alpha.max_entry
            sources = enumerate_perfect_tableaux(standardized_rothe_diagram(alpha, m, n))
            targets = enumerate_perfect_tableaux(snow_diagram(alpha))
            images = [tableau_bijection(tableau, alpha, m, n) for tableau in sources]
            weights = all(
                image.weight() == reverse_complement(tableau.weight(), m, n) for tableau, image in zip(sources, images)
            )
            records.append(
                (
                    f"tableau bijection ({alpha.to_text()})",
                    len(set(images)) == len(images) and set(images) == set(targets) and weights,
                    f"{len(sources)} -> {len(targets)}",
                )
            )
            f = value
            records.append(
                (
                    f"SNP invariant under r ({alpha.to_text()})",
                    snp_check(reverse_complement_poly(f, m, n)).saturated == snp_check(f).saturated,
                    "",
                )
            )
            return records

        self._sweep(report, snowy_box(min(3, max_n)), lascoux_checks)
        return report

    # ------------------------------------------------------------------
    # structure
    # ------------------------------------------------------------------
    def _suite_structure(self, max_n: int) -> VerificationReport:
        report = VerificationReport(suite="structure")
        bound = min(3, max_n)
        snowy = snowy_box(bound)
        boxes = [
            (alpha, m, n)
            for alpha in snowy
            for m in range(bound, bound + 3)
            for n in range(bound, bound + 3)
        ]

        def transfer(item: Tuple[WeakComposition, int, int]) -> List[Record]:
            alpha, m, n = item
            label = f"({alpha.to_text()}) m={m} n={n}"
            transfer_chain(alpha, m, n)
            return [(f"reverse transfer {label}", top_lascoux_via_reverse(alpha, m, n) == top_lascoux(alpha), "")]

        self._sweep(report, boxes, transfer)
        pairs = [(alpha, gamma) for alpha in snowy_box(min(2, max_n)) for gamma in snowy_box(min(2, max_n))]

        def theorem(pair: Tuple[WeakComposition, WeakComposition]) -> List[Record]:
            alpha, gamma = pair
            n = max(len(alpha), len(gamma))
            result = verify_structure_theorem(alpha, gamma, alpha.max_entry, gamma.max_entry, n)
            return [(check.name, check.passed, check.detail) for check in result.checks]

        self._sweep(report, pairs, theorem)

        def key_cross_check(alpha: WeakComposition) -> List[Record]:
            expansion = key_expand_top_lascoux(alpha, alpha.max_entry, len(alpha))
            return [(f"key expansion ({alpha.to_text()})", expansion.is_nonnegative_integral(), expansion.to_text())]

        self._sweep(report, snowy, key_cross_check)
        small = permutations_up_to(min(3, max_n))
        size = min(3, max_n)

        def corollary(pair: Tuple[Permutation, Permutation]) -> List[Record]:
            u, v = pair
            result = verify_structure_corollary(u, v, size)
            records = [(check.name, check.passed, check.detail) for check in result.checks]
            expansion = schubert_key_expansion(u)
            records.append((f"schubert key expansion [{u.to_text()}]", expansion.is_nonnegative_integral(), ""))
            return records

        self._sweep(report, [(u, v) for u in small for v in small], corollary)

        def round_trip(w: Permutation) -> List[Record]:
            expansion = expand_in_basis(schubert(w), BasisKind.SCHUBERT)
            return [(f"schubert round trip [{w.to_text()}]", expansion.as_dict() == {w: 1}, "")]

        self._sweep(report, small, round_trip)
        return report

    # ------------------------------------------------------------------
    # hilbert
    # ------------------------------------------------------------------
    def _suite_hilbert(self, max_n: int) -> VerificationReport:
        report = VerificationReport(suite="hilbert")
        coefficients = hilbert_coefficients(10)

        def degree(d: int) -> List[Record]:
            count = len(enumerate_snowy_by_raj(d))
            return [(f"hilbert q^{d}", coefficients[d] == count, f"series={coefficients[d]} snowy={count}")]

        self._sweep(report, list(range(11)), degree)
        return report


def run_suite(name: str, max_n: int = 4, config: Optional[EngineConfig] = None) -> VerificationReport:
    """
    @param name 검증 묶음 이름.
    @param max_n 상한.
    @param config 엔진 설정.
    @returns 검증 리포트.
    """
    return VerificationService(config=config).run_suite(name, max_n)
