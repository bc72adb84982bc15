from __future__ import annotations

from fractions import Fraction
from typing import Dict, Tuple

from schublas.core.common.errors import InvalidInput, OutOfRange, ZeroPolynomial
from schublas.core.domain.polynomial import Exponent, Polynomial, check_term_limit
from schublas.core.domain.weak_composition import WeakComposition, normalize_exponent, tail_lex_key


def _require_index(i: int) -> None:
    if i < 1:
        raise InvalidInput("operator index must be a positive integer", datum=i)


def _with_pair(exponent: Exponent, i: int, a: int, b: int) -> Exponent:
    length = max(len(exponent), i + 1)
    values = list(exponent) + [0] * (length - len(exponent))
    values[i - 1] = a
    values[i] = b
    return normalize_exponent(tuple(values))


def _accumulate(terms: Dict[Exponent, Fraction], exponent: Exponent, coeff: Fraction) -> None:
    value = terms.get(exponent, Fraction(0)) + coeff
    if value:
        terms[exponent] = value
    else:
        terms.pop(exponent, None)


def divided_difference(f: Polynomial, i: int) -> Polynomial:
    """
    ∂_i f = (f − s_i f) / (x_i − x_{i+1}).
    단항식 x_i^a x_{i+1}^b 마다 닫힌 꼴을 쓴다:
    a > b 이면 Σ_{k<a−b} x_i^{a−1−k} x_{i+1}^{b+k}, a < b 이면 그 부호를 바꾼 대칭형, a = b 이면 0.

    @param f 다항식.
    @param i 1-based 변수 번호.
    @returns ∂_i f.
    """
    _require_index(i)
    terms: Dict[Exponent, Fraction] = {}
    for exponent, coeff in f.raw_terms().items():
        a = exponent[i - 1] if i - 1 < len(exponent) else 0
        b = exponent[i] if i < len(exponent) else 0
        if a == b:
            continue
        high, low, sign = (a, b, coeff) if a > b else (b, a, -coeff)
        for k in range(high - low):
            _accumulate(terms, _with_pair(exponent, i, high - 1 - k, low + k), sign)
        check_term_limit(len(terms))
    return Polynomial._trusted(terms)


def demazure_pi(f: Polynomial, i: int) -> Polynomial:
    """π_i f = ∂_i(x_i f)."""
    _require_index(i)
    return divided_difference(Polynomial.variable(i) * f, i)


def pi_hat(f: Polynomial, i: int) -> Polynomial:
    """π̂_i f = x_i x_{i+1} ∂_i f."""
    _require_index(i)
    return Polynomial.variable(i) * Polynomial.variable(i + 1) * divided_difference(f, i)


def pi_hat_via_pi(f: Polynomial, i: int) -> Polynomial:
    """π̂_i f = π_i(x_{i+1} f). pi_hat와 같은 값을 내는 두 번째 경로."""
    _require_index(i)
    return demazure_pi(Polynomial.variable(i + 1) * f, i)


def reverse_complement_poly(f: Polynomial, m: int, n: int) -> Polynomial:
    """
    r_{m,n}(f) = x_1^m ⋯ x_n^m f(x_n^{-1}, …, x_1^{-1}).

    @param f 모든 지수가 supp ⊆ [n], max ≤ m 인 다항식.
    @param m 지수 상한.
    @param n 변수 개수.
    @returns x^α ↦ x^{(m−α_n, …, m−α_1)} 의 선형 확장.
    """
    if m < 0 or n < 0:
        raise OutOfRange(f"box bounds must be non-negative (m={m}, n={n})")
    terms: Dict[Exponent, Fraction] = {}
    for exponent, coeff in f.raw_terms().items():
        if len(exponent) > n or max(exponent, default=0) > m:
            raise OutOfRange(f"monomial does not fit the {m}x{n} box", datum=exponent)
        padded = exponent + (0,) * (n - len(exponent))
        terms[normalize_exponent(tuple(m - value for value in reversed(padded)))] = coeff
    return Polynomial._trusted(terms)


def leading_exponent(f: Polynomial) -> WeakComposition:
    """
    @param f 0이 아닌 다항식.
    @returns tail-lex 최대 지수.
    """
    if f.is_zero():
        raise ZeroPolynomial("leading exponent of the zero polynomial is undefined")
    return WeakComposition(max(f.support_exponents(), key=tail_lex_key))


def leading_term(f: Polynomial) -> Tuple[WeakComposition, Fraction]:
    exponent = leading_exponent(f)
    return exponent, f.coefficient(exponent)
