"""First odd rank and crank moments: bivariate routes and closed forms.

The bivariate finite crank generating function is the product
(q)_N / ((zq)_N (q/z)_N); the rank one is the sum
sum_{n=0}^{N} [N,n] (q)_n q^{n^2} / ((zq)_n (q/z)_n).  Applying z d/dz,
keeping the positive z-powers and setting z = 1 turns either into the
generating function of its first positive-k moment; R33 and R34 check
those pipelines against the closed-form single sums, and R35 holds the
difference whose coefficients are scanned (not asserted) for
non-negativity.
"""

from __future__ import annotations

from ..laurent import LaurentZQSeries
from ..series import QSeries, div_poch, poch, q_binomial
from .common import truncating_sum
from .model import FINITE, Identity


def crank_bivariate(N: int, order: int) -> LaurentZQSeries:
    """(q)_N / ((zq)_N (q/z)_N) as a Laurent-in-z series."""
    f = LaurentZQSeries.from_q_series(poch(1, 1, N, order))
    for k in range(1, min(N, order) + 1):
        f = f.div_binomial(1, 1, k).div_binomial(1, -1, k)
    return f


def rank_bivariate(N: int, order: int) -> LaurentZQSeries:
    """sum_{n=0}^{N} [N,n] (q)_n q^{n^2} / ((zq)_n (q/z)_n)."""
    total = LaurentZQSeries.zero(order)
    for n in range(0, N + 1):
        if n * n > order:
            break
        base = (q_binomial(N, n, order) * poch(1, 1, n, order)).shift(n * n)
        t = LaurentZQSeries.from_q_series(base)
        for k in range(1, min(n, order) + 1):
            t = t.div_binomial(1, 1, k).div_binomial(1, -1, k)
        total = total + t
    return total


def first_moment_extraction(f: LaurentZQSeries) -> QSeries:
    """z d/dz, positive z-part, z = 1: the sum_k k * (z^k count) series."""
    return f.z_derivative().positive_z_part().set_z_one()


def crank_moment_finite(N: int, order: int) -> QSeries:
    """Closed form: sum_{n=1}^{N} [N,n] (-1)^{n+1} (q)_n q^{n(n+1)/2}
    / ((q)_{n+N} (1-q^n))."""
    total = QSeries.zero(order)
    for n in range(1, N + 1):
        e = n * (n + 1) // 2
        if e > order:
            break
        t = q_binomial(N, n, order) * poch(1, 1, n, order)
        t = t.scale((-1) ** (n + 1)).shift(e)
        t = div_poch(t, 1, 1, n + N)
        t = t.div_binomial(1, n)
        total = total + t
    return total


def rank_moment_finite(N: int, order: int) -> QSeries:
    """Closed form: sum_{n=1}^{N} [N,n] (-1)^{n+1} (q)_n q^{n(3n+1)/2}
    / ((q)_{n+N} (1-q^n))."""
    total = QSeries.zero(order)
    for n in range(1, N + 1):
        e = n * (3 * n + 1) // 2
        if e > order:
            break
        t = q_binomial(N, n, order) * poch(1, 1, n, order)
        t = t.scale((-1) ** (n + 1)).shift(e)
        t = div_poch(t, 1, 1, n + N)
        t = t.div_binomial(1, n)
        total = total + t
    return total


def moment_difference_finite(N: int, order: int) -> QSeries:
    """sum_{n=1}^{N} [N,n] (-1)^{n+1} (q)_n q^{n(n+1)/2} (1 - q^{n^2})
    / ((q)_{n+N} (1-q^n)); the crank-minus-rank moment difference."""
    total = QSeries.zero(order)
    for n in range(1, N + 1):
        e = n * (n + 1) // 2
        if e > order:
            break
        t = q_binomial(N, n, order) * poch(1, 1, n, order)
        t = t.scale((-1) ** (n + 1)).shift(e).mul_binomial(1, n * n)
        t = div_poch(t, 1, 1, n + N)
        t = t.div_binomial(1, n)
        total = total + t
    return total


def crank_moment_infinite(order: int) -> QSeries:
    """(1/(q)_inf) sum_{n>=1} (-1)^{n+1} q^{n(n+1)/2} / (1-q^n)."""

    def term(n):
        t = QSeries.monomial((-1) ** (n + 1), n * (n + 1) // 2, order)
        return t.div_binomial(1, n)

    total = truncating_sum(order, 1, lambda n: n * (n + 1) // 2, term)
    return div_poch(total, 1, 1, None)


def crank_moment_infinite_positive_form(order: int) -> QSeries:
    """sum_{k>=0} k q^{k^2} / (q)_k^2, the other stated form of the same series."""

    def term(k):
        t = QSeries.monomial(k, k * k, order)
        t = div_poch(t, 1, 1, k)
        return div_poch(t, 1, 1, k)

    return truncating_sum(order, 1, lambda k: k * k, term)


def rank_moment_infinite(order: int) -> QSeries:
    """(1/(q)_inf) sum_{n>=1} (-1)^{n+1} q^{n(3n+1)/2} / (1-q^n)."""

    def term(n):
        t = QSeries.monomial((-1) ** (n + 1), n * (3 * n + 1) // 2, order)
        return t.div_binomial(1, n)

    total = truncating_sum(order, 1, lambda n: n * (3 * n + 1) // 2, term)
    return div_poch(total, 1, 1, None)


def _r33() -> Identity:
    def lhs(env, N, T):
        return first_moment_extraction(crank_bivariate(N, T))

    def rhs(env, N, T):
        return crank_moment_finite(N, T)

    return Identity(
        id="R33",
        title="finite first positive crank moment: extraction vs closed form",
        statement=(
            "z d/dz -> positive z-part -> z=1 applied to (q)_N/((zq)_N (q/z)_N) "
            "= sum_{n=1}^{N} [N,n] (-1)^{n+1} (q)_n q^{n(n+1)/2} / ((q)_{n+N}(1-q^n))"
        ),
        params=(),
        kind=FINITE,
        sides=(("lhs", lhs), ("rhs", rhs)),
    )


def _r34() -> Identity:
    def lhs(env, N, T):
        return first_moment_extraction(rank_bivariate(N, T))

    def rhs(env, N, T):
        return rank_moment_finite(N, T)

    return Identity(
        id="R34",
        title="finite first positive rank moment: extraction vs closed form",
        statement=(
            "z d/dz -> positive z-part -> z=1 applied to "
            "sum_{n=0}^{N} [N,n] (q)_n q^{n^2}/((zq)_n (q/z)_n) "
            "= sum_{n=1}^{N} [N,n] (-1)^{n+1} (q)_n q^{n(3n+1)/2} / ((q)_{n+N}(1-q^n))"
        ),
        params=(),
        kind=FINITE,
        sides=(("lhs", lhs), ("rhs", rhs)),
    )


def _r35() -> Identity:
    def lhs(env, N, T):
        return crank_moment_finite(N, T) - rank_moment_finite(N, T)

    def rhs(env, N, T):
        return moment_difference_finite(N, T)

    return Identity(
        id="R35",
        title="crank-minus-rank moment difference (positivity scan target)",
        statement=(
            "C1(q,N) - R1(q,N) = sum_{n=1}^{N} [N,n] (-1)^{n+1} (q)_n "
            "q^{n(n+1)/2} (1-q^{n^2}) / ((q)_{n+N}(1-q^n)); "
            "coefficients observed non-negative, reported rather than asserted"
        ),
        params=(),
        kind=FINITE,
        sides=(("lhs", lhs), ("rhs", rhs)),
        scan_only=True,
    )


def entries() -> list:
    return [_r33(), _r34(), _r35()]
