import unittest
from fractions import Fraction

from schublas.core.common.linear_algebra import PhaseOneSimplex, in_convex_hull, solve_linear_system


class LinearSystemTests(unittest.TestCase):
    def test_unique_solution(self) -> None:
        """
        정확한 유리수 해를 검증합니다.

        @returns {None} 테스트만 수행합니다.
        """
        self.assertEqual(solve_linear_system([[1, 1], [1, -1]], [3, 1]), [Fraction(2), Fraction(1)])
        self.assertEqual(solve_linear_system([[2]], [1]), [Fraction(1, 2)])

    def test_inconsistent(self) -> None:
        self.assertIsNone(solve_linear_system([[1, 1], [2, 2]], [1, 3]))

    def test_free_variable_is_zero(self) -> None:
        self.assertEqual(solve_linear_system([[1, 1]], [4]), [Fraction(4), Fraction(0)])


class ConvexHullTests(unittest.TestCase):
    def test_midpoint(self) -> None:
        """
        선분의 중점과 바깥 점을 판정합니다.

        @returns {None} 테스트만 수행합니다.
        """
        self.assertTrue(in_convex_hull((1, 1), [(2, 0), (0, 2)]))
        self.assertFalse(in_convex_hull((1, 0), [(2, 0), (0, 2)]))
        self.assertFalse(in_convex_hull((0, 0), []))

    def test_triangle_interior(self) -> None:
        triangle = [(0, 0, 3), (3, 0, 0), (0, 3, 0)]
        self.assertTrue(in_convex_hull((1, 1, 1), triangle))
        self.assertFalse(in_convex_hull((2, 2, 0), [(0, 0, 4), (4, 0, 0)]))

    def test_negative_rhs(self) -> None:
        solution = PhaseOneSimplex([[1, -1]], [-2]).solve()
        self.assertIsNotNone(solution)
        self.assertEqual(solution[0] - solution[1], -2)
        self.assertTrue(all(value >= 0 for value in solution))


if __name__ == "__main__":
    unittest.main()
