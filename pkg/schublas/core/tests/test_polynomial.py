import itertools
import random
import unittest
from fractions import Fraction

from schublas.core.common.errors import InvalidInput, OutOfRange, ResourceLimit, ZeroPolynomial
from schublas.core.config import build_config, config_from_env, configure
from schublas.core.domain import Polynomial, WeakComposition
from schublas.core.domain.polynomial import format_rational
from schublas.core.service.polynomial import (
    demazure_pi,
    divided_difference,
    leading_exponent,
    leading_term,
    pi_hat,
    pi_hat_via_pi,
    reverse_complement_poly,
)

X1 = Polynomial.variable(1)
X2 = Polynomial.variable(2)
X3 = Polynomial.variable(3)


class PolynomialTests(unittest.TestCase):
    def test_normalization(self) -> None:
        """
        뒤쪽 0 지수와 0 계수가 정규화되는지 검증합니다.

        @returns {None} 테스트만 수행합니다.
        """
        self.assertEqual(Polynomial({(1, 0, 0): 2}), Polynomial({(1,): 2}))
        self.assertTrue(Polynomial({(1,): 0}).is_zero())
        self.assertEqual(X1 - X1, Polynomial.zero())
        with self.assertRaises(InvalidInput):
            Polynomial({(-1,): 1})

    def test_arithmetic(self) -> None:
        """
        덧셈, 곱셈, 스칼라 배를 검증합니다.

        @returns {None} 테스트만 수행합니다.
        """
        f = (X1 + X2) * (X1 + X3)
        self.assertEqual(f.coefficient((1, 1)), 1)
        self.assertEqual(f.coefficient((2,)), 1)
        self.assertEqual(len(f), 4)
        self.assertEqual((X1 * 2).coefficient((1,)), 2)
        self.assertEqual(X1.scale(Fraction(1, 3)).coefficient((1,)), Fraction(1, 3))
        self.assertTrue(f.is_homogeneous())
        self.assertEqual(f.degree(), 2)
        self.assertEqual(f.variable_span(), 3)

    def test_text_format(self) -> None:
        """
        텍스트 출력 형식을 검증합니다.

        @returns {None} 테스트만 수행합니다.
        """
        f = Polynomial({(2,): 1, (1, 1): 1, (1, 0, 1): 1})
        self.assertEqual(f.to_text(), "x1^2 + x1*x2 + x1*x3")
        self.assertEqual(Polynomial({(1,): Fraction(-1, 2), (): 3}).to_text(), "-1/2*x1 + 3")
        self.assertEqual(Polynomial.zero().to_text(), "0")
        self.assertEqual(format_rational(Fraction(-3, 6)), "-1/2")

    def test_json_order(self) -> None:
        """JSON 항 순서는 tail-lex 내림차순."""
        f = Polynomial({(2,): 1, (1, 1): 1, (1, 0, 1): 1})
        exponents = [term["exp"] for term in f.to_json()["terms"]]
        self.assertEqual(exponents, [[1, 0, 1], [1, 1], [2]])
        self.assertEqual(Polynomial.from_json(f.to_json()), f)

    def test_term_limit(self) -> None:
        """
        항 개수 한도가 ResourceLimit으로 보고되는지 검증합니다.

        @returns {None} 테스트만 수행합니다.
        """
        previous = configure(build_config(term_limit=3))
        try:
            with self.assertRaises(ResourceLimit) as context:
                (X1 + X2) * (X1 + X3)
            self.assertEqual(context.exception.limit_name, "term_limit")
        finally:
            configure(config_from_env())
        self.assertIsNotNone(previous)


class OperatorTests(unittest.TestCase):
    def test_divided_difference(self) -> None:
        """
        ∂_i 의 기본 값을 검증합니다.

        @returns {None} 테스트만 수행합니다.
        """
        self.assertEqual(divided_difference(X1, 1), Polynomial.one())
        self.assertEqual(divided_difference(X1 * X1, 1), X1 + X2)
        self.assertTrue(divided_difference(X1, 2).is_zero())
        self.assertTrue(divided_difference(X1 * X2, 1).is_zero())

    def test_demazure_operators(self) -> None:
        """
        π_i 와 π̂_i 의 값과 두 정의의 일치를 검증합니다.

        @returns {None} 테스트만 수행합니다.
        """
        self.assertEqual(demazure_pi(X1, 1), X1 + X2)
        self.assertEqual(pi_hat(X1, 1), X1 * X2)
        self.assertTrue(pi_hat(X1 * X2, 1).is_zero())
        self.assertEqual(pi_hat(X1 * X1, 1), X1 * X1 * X2 + X1 * X2 * X2)
        f = X1 * X1 * X3 + X2 * 3
        for i in (1, 2, 3):
            self.assertEqual(pi_hat(f, i), pi_hat_via_pi(f, i))

    def test_operator_relations(self) -> None:
        """
        ∂_i²=0, π_i²=π_i, 땋임 관계를 검증합니다.

        @returns {None} 테스트만 수행합니다.
        """
        f = X1 * X1 * X1 * X2 + X2 * X3 * X3 + X1 * 5
        for i in (1, 2):
            self.assertTrue(divided_difference(divided_difference(f, i), i).is_zero())
            self.assertEqual(demazure_pi(demazure_pi(f, i), i), demazure_pi(f, i))
        left = divided_difference(divided_difference(divided_difference(f, 1), 2), 1)
        right = divided_difference(divided_difference(divided_difference(f, 2), 1), 2)
        self.assertEqual(left, right)
        self.assertEqual(
            divided_difference(divided_difference(f, 1), 3), divided_difference(divided_difference(f, 3), 1)
        )

    def test_reverse_complement(self) -> None:
        """
        r_{m,n} 의 값, 대합성, 범위 오류를 검증합니다.

        @returns {None} 테스트만 수행합니다.
        """
        self.assertEqual(reverse_complement_poly(X1 * X1 * X2, 2, 2), X1)
        f = X1 * X2 + X2 * X2 * 3
        self.assertEqual(reverse_complement_poly(reverse_complement_poly(f, 2, 3), 2, 3), f)
        with self.assertRaises(OutOfRange):
            reverse_complement_poly(X1 * X1 * X1, 2, 2)
        with self.assertRaises(OutOfRange):
            reverse_complement_poly(X3, 2, 2)

    def test_commute_operators(self) -> None:
        """
        r∘∂_i = π̂_{n−i}∘r 등 세 교환 관계를 m, n ≤ 3 인 모든 상자의 단항식과
        m, n ≤ 5 인 무작위 다항식에서 검증합니다.

        @returns {None} 테스트만 수행합니다.
        """
        cases = [
            (Polynomial.monomial(values), m, n)
            for m in range(1, 4)
            for n in range(1, 4)
            for values in itertools.product(range(m + 1), repeat=n)
        ]
        rng = random.Random(7)
        for _ in range(60):
            m, n = rng.randint(1, 5), rng.randint(2, 5)
            terms = {tuple(rng.randint(0, m) for _ in range(n)): rng.choice([-2, -1, 1, 2]) for _ in range(3)}
            cases.append((Polynomial(terms), m, n))
        for f, m, n in cases:
            r_f = reverse_complement_poly(f, m, n)
            for i in range(1, n):
                with self.subTest(f=f.to_text(), m=m, n=n, i=i):
                    self.assertEqual(reverse_complement_poly(divided_difference(f, i), m, n), pi_hat(r_f, n - i))
                    self.assertEqual(reverse_complement_poly(demazure_pi(f, i), m, n), demazure_pi(r_f, n - i))
                    self.assertEqual(reverse_complement_poly(pi_hat(f, i), m, n), divided_difference(r_f, n - i))

    def test_leading_term(self) -> None:
        f = Polynomial({(2,): 1, (1, 1): 1, (1, 0, 1): 4})
        self.assertEqual(leading_exponent(f), WeakComposition.of(1, 0, 1))
        self.assertEqual(leading_term(f), (WeakComposition.of(1, 0, 1), Fraction(4)))
        with self.assertRaises(ZeroPolynomial):
            leading_exponent(Polynomial.zero())


if __name__ == "__main__":
    unittest.main()
