import unittest
from fractions import Fraction
from itertools import permutations

from schublas.core.common.errors import InvalidInput, NotInSpan, NotSnowy
from schublas.core.domain import Permutation, Polynomial, WeakComposition
from schublas.core.domain.basis_expansion import BasisExpansion, BasisKind
from schublas.core.repository.worked_examples import (
    HILBERT_PREFIX,
    SCHUBERT_PRODUCT,
    STANDARDIZATIONS,
    TOP_LASCOUX_PRODUCT,
)
from schublas.core.service.bases import key, schubert, top_lascoux
from schublas.core.service.combinat import standardize
from schublas.core.service.expansion import (
    destandardize,
    enumerate_snowy_by_raj,
    expand_in_basis,
    hilbert_coefficients,
    key_expand_top_lascoux,
    reconstruct,
    schubert_key_expansion,
    schubert_product,
    solve_key_expansion,
    top_lascoux_product,
    verify_structure_corollary,
    verify_structure_theorem,
)


class GreedyExpansionTests(unittest.TestCase):
    def test_schubert_basis_round_trip(self) -> None:
        """
        임의 다항식의 Schubert 전개를 다시 합치면 원래 다항식이 되는지 검증합니다.

        @returns {None} 테스트만 수행합니다.
        """
        f = Polynomial({(2,): 3, (0, 1): -1, (1, 1, 1): Fraction(1, 2)})
        expansion = expand_in_basis(f, "schubert")
        self.assertEqual(expansion.kind, BasisKind.SCHUBERT)
        self.assertEqual(reconstruct(expansion), f)

    def test_single_basis_element(self) -> None:
        w = Permutation.of(2, 4, 1, 3)
        expansion = expand_in_basis(schubert(w), BasisKind.SCHUBERT)
        self.assertEqual(expansion.as_dict(), {w: Fraction(1)})
        self.assertEqual(expansion.to_text(), "S[2,4,1,3]")

    def test_key_basis(self) -> None:
        """
        key 기저 전개를 검증합니다.

        @returns {None} 테스트만 수행합니다.
        """
        f = key(WeakComposition.of(0, 2, 1)) + key(WeakComposition.of(1)).scale(2)
        expansion = expand_in_basis(f, "key")
        self.assertEqual(
            expansion.as_dict(),
            {WeakComposition.of(0, 2, 1): Fraction(1), WeakComposition.of(1): Fraction(2)},
        )
        self.assertEqual(solve_key_expansion(f).as_dict(), expansion.as_dict())

    def test_top_lascoux_span(self) -> None:
        """
        x2 는 top Lascoux 기저의 선도항이 될 수 없어 NotInSpan 인지 검증합니다.

        @returns {None} 테스트만 수행합니다.
        """
        with self.assertRaises(NotInSpan):
            expand_in_basis(Polynomial.monomial((0, 1)), "toplascoux")
        alpha = WeakComposition.of(0, 3, 0, 2)
        self.assertEqual(expand_in_basis(top_lascoux(alpha), "toplascoux").as_dict(), {alpha: Fraction(1)})

    def test_zero_expansion(self) -> None:
        expansion = expand_in_basis(Polynomial.zero(), "key")
        self.assertEqual(len(expansion), 0)
        self.assertEqual(expansion.to_text(), "0")

    def test_unknown_basis(self) -> None:
        with self.assertRaises(ValueError):
            expand_in_basis(Polynomial.one(), "monomial")


class StructureConstantTests(unittest.TestCase):
    def test_worked_schubert_product(self) -> None:
        """
        𝔖_{1423} 𝔖_{2143} 의 Schubert 전개를 검증합니다.

        @returns {None} 테스트만 수행합니다.
        """
        expansion = schubert_product(SCHUBERT_PRODUCT["left"], SCHUBERT_PRODUCT["right"])
        self.assertEqual(set(expansion.indices()), set(SCHUBERT_PRODUCT["terms"]))
        self.assertTrue(all(coeff == 1 for _, coeff in expansion.terms))

    def test_worked_top_lascoux_product(self) -> None:
        """
        𝔏̂_{(2,3,1,4)} 𝔏̂_{(2,1,4,3)} 의 전개와 구조 정리의 증인을 검증합니다.

        @returns {None} 테스트만 수행합니다.
        """
        sample = TOP_LASCOUX_PRODUCT
        expansion = top_lascoux_product(sample["left"], sample["right"])
        self.assertEqual(set(expansion.indices()), set(sample["terms"]))
        delta, w = sample["witness"]
        self.assertEqual(standardize(delta, sample["m1"] + sample["m2"], sample["n"]), w)

    def test_top_lascoux_product_rejects_non_snowy(self) -> None:
        with self.assertRaises(NotSnowy):
            top_lascoux_product(WeakComposition.of(1, 1), WeakComposition.of(1))

    def test_structure_theorem_small(self) -> None:
        """
        작은 상자에서 top Lascoux 구조 상수가 Schubert 구조 상수와 같은지 검증합니다.

        @returns {None} 테스트만 수행합니다.
        """
        cases = [
            (WeakComposition.of(0, 1), WeakComposition.of(1), 1, 1, 2),
            (WeakComposition.of(2, 1), WeakComposition.of(0, 1), 2, 1, 2),
            (WeakComposition.of(1), WeakComposition.of(1), 1, 2, 2),
        ]
        for alpha, gamma, m1, m2, n in cases:
            report = verify_structure_theorem(alpha, gamma, m1, m2, n)
            self.assertTrue(report.passed, report.to_text())
            self.assertTrue(report.checks)

    def test_structure_corollary(self) -> None:
        """
        S_2, S_3 순열 쌍에서 따름정리를 검증합니다.

        @returns {None} 테스트만 수행합니다.
        """
        pairs = [
            (Permutation.of(2, 1), Permutation.of(2, 1), 2),
            (Permutation.of(1, 3, 2), Permutation.of(2, 1, 3), 3),
            (Permutation.of(2, 3, 1), Permutation.of(1, 3, 2), 3),
        ]
        for u, v, n in pairs:
            report = verify_structure_corollary(u, v, n)
            self.assertTrue(report.passed, report.to_text())

    def test_destandardize(self) -> None:
        """
        std_{m,n} 의 상과 상이 아닌 순열에서 역연산을 검증합니다.

        @returns {None} 테스트만 수행합니다.
        """
        for (alpha, m, n), w in STANDARDIZATIONS:
            self.assertEqual(destandardize(w, m, n), alpha)
        self.assertIsNone(destandardize(Permutation.of(1, 3, 2), 1, 2))


class KeyExpansionTests(unittest.TestCase):
    def test_schubert_key_expansion(self) -> None:
        """
        𝔖_{2143} = κ_{(1,0,1)} + κ_{(2)} 를 검증합니다.

        @returns {None} 테스트만 수행합니다.
        """
        expansion = schubert_key_expansion(Permutation.of(2, 1, 4, 3))
        self.assertEqual(
            expansion.as_dict(),
            {WeakComposition.of(1, 0, 1): Fraction(1), WeakComposition.of(2): Fraction(1)},
        )

    def test_schubert_key_expansion_is_positive(self) -> None:
        for images in permutations(range(1, 6)):
            w = Permutation(images)
            expansion = schubert_key_expansion(w)
            self.assertTrue(expansion.is_nonnegative_integral())
            self.assertEqual(reconstruct(expansion), schubert(w))

    def test_top_lascoux_key_expansion(self) -> None:
        """
        top Lascoux 의 key 전개가 Schubert key 전개의 역보수와 같은지 검증합니다.

        @returns {None} 테스트만 수행합니다.
        """
        self.assertEqual(
            key_expand_top_lascoux(WeakComposition.of(0, 1), 1, 2).as_dict(),
            {WeakComposition.of(1, 1): Fraction(1)},
        )
        expansion = key_expand_top_lascoux(WeakComposition.of(0, 3, 0, 2), 3, 4)
        self.assertEqual(reconstruct(expansion), top_lascoux(WeakComposition.of(0, 3, 0, 2)))

    def test_expansion_json(self) -> None:
        expansion = BasisExpansion.from_mapping(
            BasisKind.KEY, {WeakComposition.of(1): Fraction(1, 2), WeakComposition.of(0, 1): Fraction(-1)}
        )
        self.assertEqual(
            expansion.to_json(),
            {"basis": "key", "terms": [{"index": [0, 1], "coeff": "-1"}, {"index": [1], "coeff": "1/2"}]},
        )
        self.assertEqual(expansion.to_text(), "-K(0,1) + 1/2*K(1)")


class HilbertTests(unittest.TestCase):
    def test_prefix(self) -> None:
        """
        급수 앞부분 1, 1, 2, 4 를 검증합니다.

        @returns {None} 테스트만 수행합니다.
        """
        self.assertEqual(hilbert_coefficients(3), HILBERT_PREFIX)
        self.assertEqual(hilbert_coefficients(0), [1])

    def test_counts_match_enumeration(self) -> None:
        """
        rajcode 크기별 눈송이 약합성 개수가 급수 계수와 같은지 검증합니다.

        @returns {None} 테스트만 수행합니다.
        """
        coefficients = hilbert_coefficients(7)
        for degree, expected in enumerate(coefficients):
            self.assertEqual(len(enumerate_snowy_by_raj(degree)), expected)

    def test_degree_three(self) -> None:
        self.assertEqual(
            enumerate_snowy_by_raj(3),
            {
                WeakComposition.of(3),
                WeakComposition.of(0, 2),
                WeakComposition.of(2, 1),
                WeakComposition.of(0, 0, 1),
            },
        )

    def test_negative_degree(self) -> None:
        with self.assertRaises(InvalidInput):
            hilbert_coefficients(-1)
        with self.assertRaises(InvalidInput):
            enumerate_snowy_by_raj(-1)


if __name__ == "__main__":
    unittest.main()
