"""Independent oracles the tests freeze expected values from.

These deliberately avoid the package's series kernel where possible:
the pentagonal expansion is a direct lattice sum, the product oracle a
naive convolution over plain lists, the Gaussian binomial a quotient of
factorial polynomials evaluated through Fraction arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List


def pentagonal_coeffs(order: int) -> List[Fraction]:
    """Coefficients of prod_{n>=1} (1 - q^n) via the pentagonal lattice sum."""
    out = [Fraction(0)] * (order + 1)
    k = 0
    while True:
        exps = [k * (3 * k - 1) // 2, k * (3 * k + 1) // 2]
        if k == 0:
            exps = [0]
        placed = False
        for e in exps:
            if e <= order:
                out[e] += Fraction(-1) ** k
                placed = True
        if not placed and k > 0:
            break
        k += 1
    return out


def convolve(a: List[Fraction], b: List[Fraction]) -> List[Fraction]:
    """Plain-list Cauchy product truncated to the shorter input."""
    n = min(len(a), len(b))
    out = [Fraction(0)] * n
    for i in range(n):
        for j in range(n - i):
            out[i + j] += a[i] * b[j]
    return out


def poly_mul(a: List[Fraction], b: List[Fraction]) -> List[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def poly_divide_exact(num: List[Fraction], den: List[Fraction]) -> List[Fraction]:
    """Exact polynomial long division (remainder must vanish)."""
    num = list(num)
    den = list(den)
    while den and den[-1] == 0:
        den.pop()
    out = [Fraction(0)] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        coeff = num[i + len(den) - 1] / den[-1]
        out[i] = coeff
        for j, d in enumerate(den):
            num[i + j] -= coeff * d
    assert all(c == 0 for c in num), "division was not exact"
    return out


def one_minus_q_pow(e: int) -> List[Fraction]:
    out = [Fraction(0)] * (e + 1)
    out[0] = Fraction(1)
    out[e] = Fraction(-1)
    return out


def gaussian_binomial_poly(n_top: int, n_bottom: int) -> List[Fraction]:
    """[n_top, n_bottom] as (q)_N / ((q)_n (q)_{N-n}) by exact division."""
    if n_bottom < 0 or n_bottom > n_top:
        return [Fraction(0)]
    num = [Fraction(1)]
    for k in range(n_top - n_bottom + 1, n_top + 1):
        num = poly_mul(num, one_minus_q_pow(k))
    den = [Fraction(1)]
    for k in range(1, n_bottom + 1):
        den = poly_mul(den, one_minus_q_pow(k))
    return poly_divide_exact(num, den)
