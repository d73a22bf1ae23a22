from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qlab.rational import rat
from qlab.series import (
    PoleInTermRangeError,
    QMonomial,
    QSeries,
    ZeroConstantTermError,
    div_poch,
    geometric_fraction,
    phi_series,
    poch,
    pochhammer,
    q_binomial,
    series_add,
    series_inverse,
    series_mul,
)

from _oracles import gaussian_binomial_poly, pentagonal_coeffs

T = 15

small_rats = st.fractions(min_value=-3, max_value=3, max_denominator=5).map(
    lambda f: rat(f.numerator, f.denominator)
)
series_st = st.lists(small_rats, min_size=T + 1, max_size=T + 1).map(QSeries)


def qs(*coeffs) -> QSeries:
    return QSeries([rat(c) for c in coeffs])


def from_fractions(coeffs) -> QSeries:
    return QSeries([rat(c.numerator, c.denominator) for c in coeffs])


# -- addition -----------------------------------------------------------


def test_add_cancellation():
    assert qs(1, 1) + qs(1, -1) == qs(2, 0)


def test_add_identity():
    y = qs(3, -2, 5)
    assert QSeries.zero(2) + y == y


def test_add_pentagonal_negation_is_zero():
    euler = from_fractions(pentagonal_coeffs(5))
    assert (euler + (-euler)).is_zero()


# -- multiplication ------------------------------------------------------


def test_mul_geometric_telescope():
    t = 9
    geo = QSeries([rat(1)] * (t + 1))
    assert qs(*([1, -1] + [0] * (t - 1))) * geo == QSeries.one(t)


def test_mul_identity():
    y = qs(2, 0, -7, 1)
    assert QSeries.one(3) * y == y


def test_mul_by_inverse_of_small_product():
    x = poch(1, 1, 2, 20)  # (1-q)(1-q^2)
    assert x * x.inverse() == QSeries.one(20)


def test_mismatched_orders_truncate_to_min():
    a = QSeries.one(10)
    b = qs(1, 2, 3)
    assert (a + b).order == 2
    assert (a * b).order == 2


# -- inversion ------------------------------------------------------------


def test_inverse_geometric():
    inv = qs(1, -1, 0, 0).inverse()
    assert inv == qs(1, 1, 1, 1)


def test_inverse_of_one():
    assert QSeries.one(8).inverse() == QSeries.one(8)


def test_inverse_of_qq2_multiplies_back():
    x = qs(1, -1, -1, 1, *([0] * 17))  # (q;q)_2 to q^20
    assert x * x.inverse() == QSeries.one(20)


def test_inverse_needs_nonzero_constant():
    with pytest.raises(ZeroConstantTermError):
        qs(0, 1).inverse()


# -- Pochhammer -----------------------------------------------------------


def test_pochhammer_empty_product():
    assert pochhammer(QMonomial(rat(5, 7), 3), 0, 10) == QSeries.one(10)


def test_pochhammer_q_two_factors():
    assert pochhammer(QMonomial(rat(1), 1), 2, 6) == qs(1, -1, -1, 1, 0, 0, 0)


def test_pochhammer_infinite_matches_pentagonal_oracle():
    expected = from_fractions(pentagonal_coeffs(7))
    assert pochhammer(QMonomial(rat(1), 1), None, 7) == expected
    assert poch(1, 1, None, 30) == from_fractions(pentagonal_coeffs(30))


@settings(max_examples=40, deadline=None)
@given(small_rats, st.integers(0, 6), st.integers(0, 6))
def test_pochhammer_cocycle(x, n, m):
    # (x)_n * (x q^n)_{n+m-n} = (x)_{n+m}
    order = 12
    left = poch(x, 0, n, order) * poch(x, n, m, order)
    assert left == poch(x, 0, n + m, order)


def test_div_poch_roundtrip():
    s = poch(rat(2, 3), 1, 4, 18)
    assert div_poch(s, rat(2, 3), 1, 4) == QSeries.one(18)


# -- Gaussian binomials ----------------------------------------------------


def test_q_binomial_smallest():
    assert q_binomial(2, 1, 5) == qs(1, 1, 0, 0, 0, 0)


def test_q_binomial_4_2_against_product_oracle():
    expected = from_fractions(gaussian_binomial_poly(4, 2))
    assert q_binomial(4, 2, 10) == expected
    assert q_binomial(4, 2, 10) == qs(1, 1, 2, 1, 1, 0, 0, 0, 0, 0, 0)


def test_q_binomial_out_of_range_is_zero():
    assert q_binomial(3, 5, 10).is_zero()
    assert q_binomial(3, -1, 10).is_zero()


@pytest.mark.parametrize("n_top", range(0, 9))
def test_q_binomial_properties(n_top):
    order = 40
    for n_bot in range(0, n_top + 1):
        poly = q_binomial(n_top, n_bot, order)
        # symmetry
        assert poly == q_binomial(n_top, n_top - n_bot, order)
        # non-negative integer coefficients, degree n(N-n)
        degree = max((k for k, c in enumerate(poly.coeffs) if c != 0), default=0)
        assert degree == n_bot * (n_top - n_bot)
        assert all(c >= 0 and c.denominator == 1 for c in poly.coeffs)
        # both Pascal recurrences
        if 0 < n_bot < n_top:
            first = q_binomial(n_top - 1, n_bot - 1, order) + q_binomial(
                n_top - 1, n_bot, order
            ).shift(n_bot)
            second = q_binomial(n_top - 1, n_bot - 1, order).shift(
                n_top - n_bot
            ) + q_binomial(n_top - 1, n_bot, order)
            assert poly == first
            assert poly == second


# -- generic hypergeometric summation ---------------------------------------


def test_phi_series_trivial():
    assert phi_series([], [], QMonomial(rat(0), 0), None, 10) == QSeries.one(10)


def test_phi_series_chu_vandermonde_instance():
    # the denominator-cleared instance: for M >= 0,
    # sum_{j=0}^{M} (d/c)_j q^j (q)_M (cq)_{M-j} c^j / ((q)_j (q)_{M-j} (cq)_M)
    # = (dq)_M / (cq)_M
    order = 30
    c, d = rat(3, 5), rat(-2, 7)
    for m_top in range(0, 5):
        total = QSeries.zero(order)
        for j in range(0, m_top + 1):
            t = poch(d / c, 0, j, order) * poch(1, 1, m_top, order)
            t = t * poch(c, 1, m_top - j, order)
            t = t.scale(c**j).shift(j)
            t = div_poch(t, 1, 1, j)
            t = div_poch(t, 1, 1, m_top - j)
            t = div_poch(t, c, 1, m_top)
            total = total + t
        expected = div_poch(poch(d, 1, m_top, order), c, 1, m_top)
        assert total == expected, f"mismatch at M={m_top}"


def test_phi_series_heine_pair_with_monomial_argument():
    # 2phi1(alpha, beta; gamma; z) with z = (1/2) q: both routes agree
    order = 30
    alpha, beta, gamma = rat(1, 2), rat(1, 3), rat(1, 5)
    z = QMonomial(rat(1, 2), 1)
    left = phi_series(
        [QMonomial(alpha, 0), QMonomial(beta, 0)], [QMonomial(gamma, 0)], z, None, order
    )
    # (beta)_inf (alpha z)_inf / ((gamma)_inf (z)_inf)
    #   * 2phi1(gamma/beta, z; alpha z; beta), with tail in the scalar argument
    prefactor = poch(beta, 0, None, order) * poch(alpha * z.coeff, z.exp, None, order)
    prefactor = div_poch(prefactor, gamma, 0, None)
    prefactor = div_poch(prefactor, z.coeff, z.exp, None)
    # inner parameters (z)_n and (alpha z)_n carry q: build term-by-term
    total = QSeries.zero(order)
    term = QSeries.one(order)
    total = total + term
    for n in range(1, order + 2):
        term = term.mul_binomial(gamma / beta, n - 1)
        term = term.mul_binomial(z.coeff, z.exp + n - 1)
        term = term.div_binomial(alpha * z.coeff, z.exp + n - 1)
        term = term.div_binomial(1, n)
        term = term.scale(beta)
        if n <= order:
            total = total + term
    from qlab.series import geometric_tail

    right = prefactor * (total + term.scale(geometric_tail(beta, 0)))
    assert left == right


def test_phi_series_pole_detection():
    with pytest.raises(PoleInTermRangeError):
        phi_series(
            [QMonomial(rat(1, 2), 1)],
            [QMonomial(rat(1), 0)],
            QMonomial(rat(1), 1),
            None,
            10,
        )


def test_phi_series_scalar_argument_needs_explicit_terms():
    with pytest.raises(ValueError):
        phi_series([QMonomial(rat(1, 2), 0)], [], QMonomial(rat(1, 3), 0), None, 10)


# -- ring laws (property suite) ---------------------------------------------


@settings(max_examples=60, deadline=None)
@given(series_st, series_st)
def test_mul_commutative(x, y):
    assert series_mul(x, y) == series_mul(y, x)


@settings(max_examples=40, deadline=None)
@given(series_st, series_st, series_st)
def test_mul_associative(x, y, z):
    assert (x * y) * z == x * (y * z)


@settings(max_examples=40, deadline=None)
@given(series_st, series_st, series_st)
def test_distributive(x, y, z):
    assert x * (y + z) == x * y + x * z
    assert series_add(x, y) * z == x * z + y * z


@settings(max_examples=40, deadline=None)
@given(series_st)
def test_inverse_roundtrip(x):
    if x.constant_term == 0:
        with pytest.raises(ZeroConstantTermError):
            series_inverse(x)
    else:
        assert x * series_inverse(x) == QSeries.one(T)


# -- misc helpers ------------------------------------------------------------


def test_geometric_fraction_forms():
    assert geometric_fraction(rat(1, 2), 2, 8)[2] == rat(1, 2)
    assert geometric_fraction(rat(1, 2), 2, 8)[4] == rat(1, 4)
    assert geometric_fraction(rat(1, 3), 0, 4) == QSeries.constant(rat(1, 2), 4)


def test_shift_and_scale():
    s = qs(1, 2, 3)
    assert s.shift(1) == qs(0, 1, 2)
    assert s.scale(rat(1, 2)) == qs(Fraction(1, 2), 1, Fraction(3, 2))
