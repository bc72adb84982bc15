import unittest
from unittest.mock import patch

from schublas.core.common.errors import InvalidInput, ResourceLimit
from schublas.core.config import build_config
from schublas.core.domain import WeakComposition
from schublas.core.service.verification import VerificationService, permutations_up_to, run_suite, snowy_box


class HelperTests(unittest.TestCase):
    def test_permutations_up_to(self) -> None:
        self.assertEqual(len(permutations_up_to(3)), 6)
        self.assertEqual(len(permutations_up_to(4)), 24)

    def test_snowy_box(self) -> None:
        """
        2×2 상자의 눈송이 약합성을 검증합니다.

        @returns {None} 테스트만 수행합니다.
        """
        self.assertEqual(
            set(snowy_box(2)),
            {
                WeakComposition(),
                WeakComposition.of(1),
                WeakComposition.of(2),
                WeakComposition.of(0, 1),
                WeakComposition.of(0, 2),
                WeakComposition.of(1, 2),
                WeakComposition.of(2, 1),
            },
        )


class VerificationServiceTests(unittest.TestCase):
    def test_examples_suite(self) -> None:
        """
        예제 재현 묶음이 모두 통과하는지 검증합니다.

        @returns {None} 테스트만 수행합니다.
        """
        report = run_suite("examples")
        self.assertTrue(report.passed, report.to_text())
        self.assertEqual(report.suite, "examples")

    def test_hilbert_suite(self) -> None:
        report = run_suite("hilbert")
        self.assertTrue(report.passed)
        self.assertEqual(len(report.checks), 11)
        self.assertEqual(report.to_json()["check_count"], 11)

    def test_small_operator_sweep(self) -> None:
        """
        작은 무작위 연산자 묶음이 병렬/직렬 모두 같은 결과를 내는지 검증합니다.

        @returns {None} 테스트만 수행합니다.
        """
        serial = VerificationService(config=build_config(parallelism=1), random_cases=20).run_suite("operators", 2)
        threaded = VerificationService(config=build_config(parallelism=4), random_cases=20).run_suite("operators", 2)
        self.assertTrue(serial.passed, serial.to_text())
        self.assertEqual(serial.digest(), threaded.digest())

    def test_bad_arguments(self) -> None:
        with self.assertRaises(InvalidInput):
            run_suite("nonsense")
        with self.assertRaises(InvalidInput):
            run_suite("hilbert", 0)

    def test_operator_families(self) -> None:
        """
        연산자 묶음이 모든 m, n ≤ 2 상자와 상승 순서 무관성을 검사하는지 검증합니다.

        @returns {None} 테스트만 수행합니다.
        """
        report = VerificationService(config=build_config(parallelism=1), random_cases=5).run_suite("operators", 2)
        self.assertTrue(report.passed, report.to_text())
        names = [check.name for check in report.checks]
        self.assertEqual(sum(name.startswith("reverse_key m=") for name in names), 2 + 4 + 3 + 9)
        self.assertEqual(sum(" confluence " in name for name in names), 2 + 9 + 7)
        self.assertTrue(any(name.startswith("r d_1 = pi_hat_1 r") for name in names))

    def test_bpd_suite(self) -> None:
        """
        S_3 전체와 S_5 표본의 BPD 식, 3×3 상자의 LTBPD 검사를 검증합니다.

        @returns {None} 테스트만 수행합니다.
        """
        report = run_suite("bpd", 3)
        self.assertTrue(report.passed, report.to_text())
        names = [check.name for check in report.checks]
        self.assertEqual(sum(name.startswith("bpd formula") for name in names), 6 + 12)
        self.assertEqual(sum(name.startswith("bpd grids valid") for name in names), 6 + 12)
        self.assertEqual(sum(name.startswith("ltbpd formula") for name in names), 34)
        self.assertEqual(sum(name.startswith("ltbpd boundary") for name in names), 33)
        self.assertEqual(sum(name.startswith("ltbpd inductive step") for name in names), 30)
        self.assertEqual(len(report.checks), 233)

    def test_support_suite(self) -> None:
        report = run_suite("support", 3)
        self.assertTrue(report.passed, report.to_text())
        names = [check.name for check in report.checks]
        self.assertEqual(sum(name.startswith("ARY support") for name in names), 6)
        self.assertEqual(sum(name.startswith("tableau bijection") for name in names), 33)
        self.assertEqual(len(report.checks), 6 * 3 + 33 * 4 + 2)

    def test_structure_suite(self) -> None:
        """
        역보수 전달, 구조 상수 정리, key 전개 묶음을 검증합니다.

        @returns {None} 테스트만 수행합니다.
        """
        report = run_suite("structure", 3)
        self.assertTrue(report.passed, report.to_text())
        names = [check.name for check in report.checks]
        self.assertEqual(sum(name.startswith("reverse transfer") for name in names), 34 * 9)
        self.assertEqual(sum(name.startswith("key expansion") for name in names), 34)
        self.assertEqual(sum(name.startswith("schubert key expansion") for name in names), 36)
        self.assertEqual(sum(name.startswith("schubert round trip") for name in names), 6)
        self.assertTrue(any(name.startswith("structure ") for name in names))
        self.assertTrue(any(name.startswith("corollary ") for name in names))

    def test_resource_limit_is_not_a_failed_check(self) -> None:
        """
        스윕 안의 ResourceLimit 은 실패 기록이 아니라 그대로 올라가는지 검증합니다.

        @returns {None} 테스트만 수행합니다.
        """
        target = "schublas.core.service.verification.suites.enumerate_snowy_by_raj"
        for parallelism in (1, 4):
            service = VerificationService(config=build_config(parallelism=parallelism))
            with patch(target, side_effect=ResourceLimit("step_limit", 1, 2)):
                with self.assertRaises(ResourceLimit):
                    service.run_suite("hilbert")
        with patch(target, side_effect=InvalidInput("broken")):
            report = VerificationService(config=build_config(parallelism=1)).run_suite("hilbert")
        self.assertFalse(report.passed)
        self.assertEqual(len(report.failures), 11)


if __name__ == "__main__":
    unittest.main()
