import itertools
import unittest

from schublas.core.common.errors import NotSnowy
from schublas.core.domain import Permutation, Polynomial, WeakComposition
from schublas.core.repository.worked_examples import SCHUBERT_VALUES, TOP_LASCOUX_VALUES, TRANSFER_CHAIN
from schublas.core.service.bases import (
    key,
    resolve_in_order,
    reset_caches,
    reverse_key,
    reverse_key_matches,
    schubert,
    schubert_via_top_lascoux,
    top_lascoux,
    top_lascoux_via_reverse,
    transfer_chain,
)
from schublas.core.service.bases.recursions import SCHUBERT_CACHE
from schublas.core.service.combinat import invcode, raj

X1 = Polynomial.variable(1)
X2 = Polynomial.variable(2)
X3 = Polynomial.variable(3)


class SchubertTests(unittest.TestCase):
    def test_small_values(self) -> None:
        """
        작은 순열의 Schubert 다항식을 검증합니다.

        @returns {None} 테스트만 수행합니다.
        """
        self.assertEqual(schubert(Permutation.identity()), Polynomial.one())
        self.assertEqual(schubert(Permutation.of(2, 1)), X1)
        self.assertEqual(schubert(Permutation.of(1, 3, 2)), X1 + X2)
        self.assertEqual(schubert(Permutation.of(2, 3, 1)), X1 * X2)
        self.assertEqual(schubert(Permutation.of(3, 1, 2)), X1 * X1)
        self.assertEqual(schubert(Permutation.of(3, 2, 1)), X1 * X1 * X2)
        for w, expected in SCHUBERT_VALUES.items():
            self.assertEqual(schubert(w), expected)

    def test_degree_and_positivity(self) -> None:
        """
        S_5 전체에서 차수가 |invcode| 이고 계수가 음이 아닌 정수인지 검증합니다.

        @returns {None} 테스트만 수행합니다.
        """
        for values in itertools.permutations(range(1, 6)):
            w = Permutation(values)
            length = sum(1 for a, b in itertools.combinations(values, 2) if a > b)
            with self.subTest(w=w):
                f = schubert(w)
                self.assertEqual(invcode(w).size, length)
                self.assertEqual(f.degrees(), {length})
                self.assertTrue(f.is_nonnegative_integral())

    def test_confluence(self) -> None:
        """
        상승을 푸는 순서가 결과에 영향을 주지 않는지 검증합니다.

        @returns {None} 테스트만 수행합니다.
        """
        for w in (Permutation.of(1, 4, 3, 2), Permutation.of(2, 4, 1, 3), Permutation.of(1, 3, 4, 2)):
            for order in ([0], [1], [1, 0], [2, 1, 0]):
                self.assertEqual(resolve_in_order(w, order, "schubert"), schubert(w))

    def test_cache_reuse(self) -> None:
        """
        같은 순열을 다시 계산하면 캐시가 히트되는지 검증합니다.

        @returns {None} 테스트만 수행합니다.
        """
        reset_caches()
        w = Permutation.of(1, 4, 3, 2)
        schubert(w)
        self.assertGreater(SCHUBERT_CACHE.misses, 0)
        self.assertEqual(SCHUBERT_CACHE.hits, 0)
        schubert(w)
        self.assertEqual(SCHUBERT_CACHE.hits, 1)


class KeyTests(unittest.TestCase):
    def test_small_values(self) -> None:
        """
        key 다항식 예제를 검증합니다.

        @returns {None} 테스트만 수행합니다.
        """
        self.assertEqual(key(WeakComposition.of(2, 1)), X1 * X1 * X2)
        self.assertEqual(key(WeakComposition.of(0, 1)), X1 + X2)
        self.assertEqual(key(WeakComposition.of(2, 0, 1)), X1 * X1 * X2 + X1 * X1 * X3)

    def test_confluence(self) -> None:
        alpha = WeakComposition.of(0, 1, 0, 2)
        for order in ([0], [1], [2, 0]):
            self.assertEqual(resolve_in_order(alpha, order, "key"), key(alpha))


class TopLascouxTests(unittest.TestCase):
    def test_small_values(self) -> None:
        """
        top Lascoux 예제를 검증합니다.

        @returns {None} 테스트만 수행합니다.
        """
        self.assertEqual(top_lascoux(WeakComposition.of(0, 1)), X1 * X2)
        self.assertEqual(top_lascoux(WeakComposition.of(2, 1)), X1 * X1 * X2)
        for alpha, expected in TOP_LASCOUX_VALUES.items():
            self.assertEqual(top_lascoux(alpha), expected)
            self.assertEqual(top_lascoux(alpha).degrees(), {raj(alpha)})

    def test_not_snowy(self) -> None:
        """눈송이가 아니면 NotSnowy."""
        with self.assertRaises(NotSnowy):
            top_lascoux(WeakComposition.of(1, 1))

    def test_reverse_transfer(self) -> None:
        """
        r_{m,n}(𝔏̂_α) 경로가 재귀와 같은지, 여러 상자에서 검증합니다.

        @returns {None} 테스트만 수행합니다.
        """
        alpha = WeakComposition.of(2, 0, 4, 0, 1)
        self.assertEqual(
            top_lascoux_via_reverse(alpha, 4, 5), top_lascoux(alpha)
        )
        beta = WeakComposition.of(0, 3, 0, 2)
        for m in (3, 4):
            for n in (4, 5):
                self.assertEqual(top_lascoux_via_reverse(beta, m, n), TOP_LASCOUX_VALUES[beta])

    def test_schubert_via_top_lascoux(self) -> None:
        """
        S_3 전체와 예제에서 𝔖_w = r_{n,n}(𝔏̂_α) 를 검증합니다.

        @returns {None} 테스트만 수행합니다.
        """
        for values in itertools.permutations(range(1, 4)):
            w = Permutation(values)
            self.assertEqual(schubert_via_top_lascoux(w, 3), schubert(w))
        for w, expected in SCHUBERT_VALUES.items():
            self.assertEqual(schubert_via_top_lascoux(w), expected)


class TransferTests(unittest.TestCase):
    def test_transfer_chain(self) -> None:
        """
        전이 사슬이 예제의 합성, 순열, 연산자 순서를 재현하는지 검증합니다.

        @returns {None} 테스트만 수행합니다.
        """
        steps = transfer_chain(TRANSFER_CHAIN["alpha"], TRANSFER_CHAIN["m"], TRANSFER_CHAIN["n"])
        self.assertEqual([step.composition for step in steps], TRANSFER_CHAIN["compositions"])
        self.assertEqual([step.permutation for step in steps], TRANSFER_CHAIN["permutations"])
        self.assertIsNone(steps[0].pi_hat_index)
        self.assertEqual([step.pi_hat_index for step in steps[1:]], TRANSFER_CHAIN["pi_hat"])
        self.assertEqual(
            [step.divided_difference_index for step in steps[1:]], TRANSFER_CHAIN["divided_difference"]
        )

    def test_reverse_key(self) -> None:
        """
        r_{m,n}(κ_α) = κ_{r_{m,n}(α)} 를 검증합니다.

        @returns {None} 테스트만 수행합니다.
        """
        self.assertEqual(reverse_key(WeakComposition.of(0, 1), 1, 2), X1 + X2)
        for alpha in (WeakComposition.of(0, 2, 1), WeakComposition.of(1, 0, 2), WeakComposition.of(2)):
            self.assertTrue(reverse_key_matches(alpha, 2, 3))


if __name__ == "__main__":
    unittest.main()
