"""The four-parameter sum transformation, its finite form and corollaries.

Sides whose terms keep a nonzero q^0 coefficient for every summation
index (so the sum never truncates on its own) are computed as the first
T+1 terms plus an exact geometric tail: past index T every Pochhammer
prefactor is frozen modulo q^(T+1), leaving a scalar geometric series
that is summed in closed form.  Sampling stays inside the stated
convergence regions so those closed forms are the values of the sums.
"""

from __future__ import annotations

from ..rational import ONE
from ..series import (
    QSeries,
    div_poch,
    geometric_fraction,
    geometric_tail,
    poch,
    q_binomial,
)
from .common import (
    all_nonzero,
    distinct,
    domain_all,
    inside_unit,
    nonzero,
    not_one,
    rules,
    truncating_sum,
)
from .model import FINITE, INFINITE, Identity, ParamEnv


def _ad_not_one(env: ParamEnv):
    if env.get("a") * env.get("d") == 1:
        return "a*d = 1: (ad)_m in a denominator vanishes and ad/(1-ad) has a pole"
    return None


def _ad_not_b(env: ParamEnv):
    if env.get("a") * env.get("d") == env.get("b"):
        return "a*d = b: the prefactor denominator (ad - b) vanishes"
    return None


def _quotient_sum_lhs(env: ParamEnv, c_factor, T: int) -> QSeries:
    """sum_{n>=1} (b/a)_n a^n / ((1 - c_factor*q^n) (b)_n) with its tail."""
    a, b = env.get("a"), env.get("b")
    total = QSeries.zero(T)
    base = QSeries.one(T)  # (b/a)_n / (b)_n, updated incrementally
    a_pow = ONE
    for n in range(1, T + 1):
        base = base.mul_binomial(b / a, n - 1).div_binomial(b, n - 1)
        a_pow = a_pow * a
        total = total + base.scale(a_pow).div_binomial(c_factor, n)
    stable = base.mul_binomial(b / a, T).div_binomial(b, T)
    return total + stable.scale(geometric_tail(a, T + 1))


def _r01() -> Identity:
    def lhs(env, N, T):
        return _quotient_sum_lhs(env, 1, T)

    def rhs(env, N, T):
        a, b = env.get("a"), env.get("b")
        total = QSeries.zero(T)
        for m in range(1, T + 1):
            total = total + QSeries.constant(a**m - b**m, T).div_binomial(1, m)
        tail = geometric_tail(a, T + 1) - geometric_tail(b, T + 1)
        return total + QSeries.constant(tail, T)

    return Identity(
        id="R01",
        title="Ramanujan's quotient-Pochhammer sum",
        statement=(
            "sum_{n>=1} (b/a)_n a^n / ((1-q^n)(b)_n) "
            "= sum_{m>=1} (a^m - b^m)/(1-q^m)"
        ),
        params=("a", "b"),
        kind=INFINITE,
        sides=(("lhs", lhs), ("rhs", rhs)),
        constraint=rules(
            nonzero("a", "the quotient argument b/a is undefined"),
            not_one("a", "the geometric tail in a diverges"),
            not_one("b", "(b)_n in a denominator vanishes, as does the tail in b"),
        ),
        domain=domain_all(inside_unit("a", "b"), all_nonzero("a")),
    )


def _r02() -> Identity:
    def lhs(env, N, T):
        return _quotient_sum_lhs(env, env.get("c"), T)

    def rhs(env, N, T):
        a, b, c = env.get("a"), env.get("b"), env.get("c")

        def term(m):
            bracket = geometric_fraction(a, m, T) - geometric_fraction(b, m, T)
            t = poch(b / c, 0, m, T).scale(c**m)
            return div_poch(t, b, 0, m) * bracket

        return truncating_sum(T, 0, lambda m: m, term)

    def rhs_nested(env, N, T):
        a, b, c = env.get("a"), env.get("b"), env.get("c")
        g_const = a / (ONE - a) - b / (ONE - b)

        def inner(n):
            # g_n = sum_{m>=1} (a^m - b^m) / (1 - c q^{m+n})
            g = QSeries.zero(T)
            m_top = max(T - n, 0)
            for m in range(1, m_top + 1):
                g = g + QSeries.constant(a**m - b**m, T).div_binomial(c, m + n)
            tail = geometric_tail(a, m_top + 1) - geometric_tail(b, m_top + 1)
            return g + QSeries.constant(tail, T)

        total = QSeries.zero(T)
        base = QSeries.one(T)  # (c)_n / (q)_n
        ratio = b / c
        r_pow = ONE
        for n in range(0, T + 1):
            if n > 0:
                base = base.mul_binomial(c, n - 1).div_binomial(1, n)
                r_pow = r_pow * ratio
            total = total + base.scale(r_pow) * inner(n)
        stable = base.mul_binomial(c, T).div_binomial(1, T + 1)
        tail = stable.scale(geometric_tail(ratio, T + 1) * g_const)
        total = total + tail
        prefactor = div_poch(poch(b / c, 0, None, T), b, 0, None)
        return prefactor * total

    return Identity(
        id="R02",
        title="three-parameter extension of R01 (two equivalent right sides)",
        statement=(
            "sum_{n>=1} (b/a)_n a^n / ((1-c q^n)(b)_n) "
            "= sum_{m>=0} (b/c)_m c^m/(b)_m (a q^m/(1-a q^m) - b q^m/(1-b q^m)) "
            "= (b/c)_inf/(b)_inf sum_{n>=0} (c)_n (b/c)^n/(q)_n "
            "sum_{m>=1} (a^m - b^m)/(1 - c q^{m+n})"
        ),
        params=("a", "b", "c"),
        kind=INFINITE,
        sides=(("lhs", lhs), ("rhs", rhs), ("rhs_nested", rhs_nested)),
        constraint=rules(
            nonzero("a", "the quotient argument b/a is undefined"),
            nonzero("c", "the quotient argument b/c is undefined"),
            not_one("a", "the geometric tail in a diverges"),
            not_one("b", "(b)_n in a denominator vanishes"),
            distinct("b", "c", "the outer geometric tail in b/c diverges"),
        ),
        domain=domain_all(
            inside_unit("a", "b"),
            all_nonzero("a", "c"),
            lambda env: abs(env.get("b")) < abs(env.get("c")),
        ),
    )


def _r03() -> Identity:
    def lhs(env, N, T):
        a, b, c = env.get("a"), env.get("b"), env.get("c")
        total = QSeries.zero(T)
        for n in range(1, N + 1):
            t = q_binomial(N, n, T)
            t = t * poch(b / a, 0, n, T)
            t = t * poch(1, 1, n, T)
            t = t * poch(a, 0, N - n, T)
            t = t.scale(a**n).div_binomial(c, n)
            t = div_poch(t, b, 0, n)
            total = total + t
        return div_poch(total, a, 0, N)

    def rhs(env, N, T):
        a, b, c = env.get("a"), env.get("b"), env.get("c")
        total = QSeries.zero(T)
        for n in range(1, N + 1):
            bracket = geometric_fraction(a, n - 1, T) - geometric_fraction(b, n - 1, T)
            t = q_binomial(N, n, T)
            t = t * poch(b / c, 0, n - 1, T)
            t = t * poch(1, 1, n, T)
            t = t * poch(c, 1, N - n, T)
            t = t.scale(c ** (n - 1))
            t = div_poch(t, b, 0, n - 1)
            total = total + t * bracket
        return div_poch(total, c, 1, N)

    return Identity(
        id="R03",
        title="finite three-parameter transformation",
        statement=(
            "sum_{n=1}^{N} [N,n] (b/a)_n (q)_n (a)_{N-n} a^n / ((1-c q^n)(b)_n (a)_N) "
            "= sum_{n=1}^{N} [N,n] (b/c)_{n-1} (q)_n (cq)_{N-n} c^{n-1} / ((b)_{n-1} (cq)_N) "
            "* (a q^{n-1}/(1-a q^{n-1}) - b q^{n-1}/(1-b q^{n-1}))"
        ),
        params=("a", "b", "c"),
        kind=FINITE,
        sides=(("lhs", lhs), ("rhs", rhs)),
        constraint=rules(
            nonzero("a", "the quotient argument b/a is undefined"),
            nonzero("c", "the quotient argument b/c is undefined"),
            not_one("a", "(a)_N in a denominator vanishes"),
            not_one("b", "(b)_n in a denominator vanishes"),
        ),
        domain=all_nonzero("a", "b", "c"),
    )


def _r04() -> Identity:
    def lhs(env, N, T):
        a, b, c, d = env.get("a"), env.get("b"), env.get("c"), env.get("d")
        ad = a * d
        total = QSeries.zero(T)
        base = QSeries.one(T)  # (b/a)_n (c/d)_n / ((b)_n (cq)_n)
        ad_pow = ONE
        for n in range(1, T + 1):
            base = (
                base.mul_binomial(b / a, n - 1)
                .mul_binomial(c / d, n - 1)
                .div_binomial(b, n - 1)
                .div_binomial(c, n)
            )
            ad_pow = ad_pow * ad
            total = total + base.scale(ad_pow)
        stable = (
            base.mul_binomial(b / a, T)
            .mul_binomial(c / d, T)
            .div_binomial(b, T)
        )
        return total + stable.scale(geometric_tail(ad, T + 1))

    def rhs(env, N, T):
        a, b, c, d = env.get("a"), env.get("b"), env.get("c"), env.get("d")
        ad = a * d
        prefactor = (a - b) * (d - c) / (ad - b)

        def term(m):
            bracket = geometric_fraction(ad, m, T) - geometric_fraction(b, m, T)
            t = poch(a, 0, m, T) * poch(b * d / c, 0, m, T)
            t = t.scale(c**m)
            t = div_poch(t, b, 0, m)
            t = div_poch(t, ad, 0, m)
            return t * bracket

        return truncating_sum(T, 0, lambda m: m, term).scale(prefactor)

    return Identity(
        id="R04",
        title="infinite four-parameter transformation",
        statement=(
            "sum_{n>=1} (b/a)_n (c/d)_n (ad)^n / ((b)_n (cq)_n) "
            "= (a-b)(d-c)/(ad-b) sum_{m>=0} (a)_m (bd/c)_m c^m / ((b)_m (ad)_m) "
            "* (ad q^m/(1-ad q^m) - b q^m/(1-b q^m))"
        ),
        params=("a", "b", "c", "d"),
        kind=INFINITE,
        sides=(("lhs", lhs), ("rhs", rhs)),
        constraint=rules(
            nonzero("a", "the quotient argument b/a is undefined"),
            nonzero("d", "the quotient argument c/d is undefined"),
            nonzero("c", "the quotient argument bd/c is undefined"),
            not_one("b", "(b)_n in a denominator vanishes"),
            _ad_not_one,
            _ad_not_b,
        ),
        domain=domain_all(
            all_nonzero("a", "c", "d"),
            lambda env: abs(env.get("a") * env.get("d")) < 1,
        ),
    )


def _r05() -> Identity:
    def lhs(env, N, T):
        a, b, c, d = env.get("a"), env.get("b"), env.get("c"), env.get("d")
        ad = a * d
        total = QSeries.zero(T)
        for n in range(1, N + 1):
            t = q_binomial(N, n, T)
            t = t * poch(1, 1, n, T)
            t = t * poch(b / a, 0, n, T)
            t = t * poch(c / d, 0, n, T)
            t = t * poch(ad, 0, N - n, T)
            t = t.scale(ad**n)
            t = div_poch(t, b, 0, n)
            t = div_poch(t, c, 1, n)
            total = total + t
        return div_poch(total, ad, 0, N)

    def rhs(env, N, T):
        a, b, c, d = env.get("a"), env.get("b"), env.get("c"), env.get("d")
        ad = a * d
        prefactor = (a - b) * (d - c) / (ad - b)
        total = QSeries.zero(T)
        for n in range(1, N + 1):
            bracket = geometric_fraction(ad, n - 1, T) - geometric_fraction(b, n - 1, T)
            t = q_binomial(N, n, T)
            t = t * poch(a, 0, n - 1, T)
            t = t * poch(b * d / c, 0, n - 1, T)
            t = t * poch(1, 1, n, T)
            t = t * poch(c, 1, N - n, T)
            t = t.scale(c ** (n - 1))
            t = div_poch(t, b, 0, n - 1)
            t = div_poch(t, ad, 0, n - 1)
            total = total + t * bracket
        return div_poch(total, c, 1, N).scale(prefactor)

    return Identity(
        id="R05",
        title="finite four-parameter transformation",
        statement=(
            "sum_{n=1}^{N} [N,n] (q)_n (b/a)_n (c/d)_n (ad)_{N-n} (ad)^n "
            "/ ((b)_n (cq)_n (ad)_N) "
            "= (a-b)(d-c)/(ad-b) sum_{n=1}^{N} [N,n] (a)_{n-1} (bd/c)_{n-1} (q)_n "
            "(cq)_{N-n} c^{n-1} / ((b)_{n-1} (cq)_N (ad)_{n-1}) "
            "* (ad q^{n-1}/(1-ad q^{n-1}) - b q^{n-1}/(1-b q^{n-1}))"
        ),
        params=("a", "b", "c", "d"),
        kind=FINITE,
        sides=(("lhs", lhs), ("rhs", rhs)),
        constraint=rules(
            nonzero("a", "the quotient argument b/a is undefined"),
            nonzero("d", "the quotient argument c/d is undefined"),
            nonzero("c", "the quotient argument bd/c is undefined"),
            not_one("b", "(b)_n in a denominator vanishes"),
            _ad_not_one,
            _ad_not_b,
        ),
        domain=all_nonzero("a", "b", "c", "d"),
    )


def _r06() -> Identity:
    def lhs(env, N, T):
        z, c, d = env.get("z"), env.get("c"), env.get("d")
        total = QSeries.zero(T)
        for n in range(1, N + 1):
            e = n * (n + 1) // 2
            if e > T:
                break
            t = q_binomial(N, n, T)
            t = t * poch(1, 1, n, T)
            t = t * poch(c / d, 0, n, T)
            t = t.scale((-z * d) ** n).shift(e)
            t = div_poch(t, z, 1, n)
            t = div_poch(t, c, 1, n)
            total = total + t
        return total

    def rhs(env, N, T):
        z, c, d = env.get("z"), env.get("c"), env.get("d")
        total = QSeries.zero(T)
        for n in range(1, N + 1):
            t = q_binomial(N, n, T)
            t = t * poch(1, 1, n, T)
            t = t * poch(z * d / c, 1, n - 1, T)
            t = t * poch(c, 1, N - n, T)
            t = t.scale(c**n).shift(n)
            t = div_poch(t, z, 1, n)
            total = total + t
        return div_poch(total, c, 1, N).scale(z / c * (c - d))

    return Identity(
        id="R06",
        title="finite transformation with triangular-number exponents",
        statement=(
            "sum_{n=1}^{N} [N,n] (q)_n (c/d)_n (-zd)^n q^{n(n+1)/2} / ((zq)_n (cq)_n) "
            "= (z/c)(c-d) sum_{n=1}^{N} [N,n] (q)_n (zdq/c)_{n-1} (cq)_{N-n} (cq)^n "
            "/ ((zq)_n (cq)_N)"
        ),
        params=("z", "c", "d"),
        kind=FINITE,
        sides=(("lhs", lhs), ("rhs", rhs)),
        constraint=rules(
            nonzero("c", "the prefactor z/c and the argument zdq/c are undefined"),
            nonzero("d", "the quotient argument c/d is undefined"),
        ),
        domain=all_nonzero("z", "c", "d"),
    )


def _r07() -> Identity:
    def lhs(env, N, T):
        z, c = env.get("z"), env.get("c")
        total = QSeries.zero(T)
        for n in range(1, N + 1):
            if n * n > T:
                break
            t = q_binomial(N, n, T)
            t = t * poch(1, 1, n, T)
            t = t.scale((z * c) ** n).shift(n * n)
            t = div_poch(t, z, 1, n)
            t = div_poch(t, c, 1, n)
            total = total + t
        return total

    def rhs(env, N, T):
        z, c = env.get("z"), env.get("c")
        total = QSeries.zero(T)
        for n in range(1, N + 1):
            t = q_binomial(N, n, T)
            t = t * poch(1, 1, n, T)
            t = t * poch(c, 1, N - n, T)
            t = t.scale(c**n).shift(n)
            t = div_poch(t, z, 1, n)
            total = total + t
        return div_poch(total, c, 1, N).scale(z)

    return Identity(
        id="R07",
        title="finite transformation with square exponents",
        statement=(
            "sum_{n=1}^{N} [N,n] (q)_n (zc)^n q^{n^2} / ((zq)_n (cq)_n) "
            "= z sum_{n=1}^{N} [N,n] (q)_n (cq)_{N-n} (cq)^n / ((zq)_n (cq)_N)"
        ),
        params=("z", "c"),
        kind=FINITE,
        sides=(("lhs", lhs), ("rhs", rhs)),
        domain=all_nonzero("z", "c"),
    )


def _r08() -> Identity:
    def lhs(env, N, T):
        z = env.get("z")
        total = QSeries.zero(T)
        for n in range(1, N + 1):
            if n * n > T:
                break
            t = q_binomial(N, n, T)
            t = t * poch(1, 1, n, T)
            t = t.shift(n * n)
            t = div_poch(t, z, 1, n)
            t = div_poch(t, 1 / z, 1, n)
            total = total + t
        return total

    def rhs(env, N, T):
        z = env.get("z")
        total = QSeries.zero(T)
        for n in range(1, N + 1):
            t = q_binomial(N, n, T)
            t = t * poch(1, 1, n, T)
            t = t * poch(1 / z, 1, N - n, T)
            t = t.scale((1 / z) ** n).shift(n)
            t = div_poch(t, z, 1, n)
            total = total + t
        return div_poch(total, 1 / z, 1, N).scale(z)

    return Identity(
        id="R08",
        title="finite rank-style sum at reciprocal parameters",
        statement=(
            "sum_{n=1}^{N} [N,n] (q)_n q^{n^2} / ((zq)_n (q/z)_n) "
            "= z sum_{n=1}^{N} [N,n] (q)_n (q/z)_{N-n} (q/z)^n / ((zq)_n (q/z)_N)"
        ),
        params=("z",),
        kind=FINITE,
        sides=(("lhs", lhs), ("rhs", rhs)),
        constraint=rules(nonzero("z", "the reciprocal argument q/z is undefined")),
        domain=all_nonzero("z"),
    )


def _r09() -> Identity:
    def lhs(env, N, T):
        z, c = env.get("z"), env.get("c")

        def term(n):
            t = QSeries.monomial((z * c) ** n, n * n, T)
            t = div_poch(t, z, 1, n)
            return div_poch(t, c, 1, n)

        return truncating_sum(T, 1, lambda n: n * n, term)

    def rhs(env, N, T):
        z, c = env.get("z"), env.get("c")

        def term(n):
            return div_poch(QSeries.monomial(c**n, n, T), z, 1, n)

        return truncating_sum(T, 1, lambda n: n, term).scale(z)

    return Identity(
        id="R09",
        title="Andrews' square-exponent sum identity",
        statement=(
            "sum_{n>=1} z^n c^n q^{n^2} / ((zq)_n (cq)_n) "
            "= z sum_{n>=1} (cq)^n / (zq)_n"
        ),
        params=("z", "c"),
        kind=INFINITE,
        sides=(("lhs", lhs), ("rhs", rhs)),
        domain=all_nonzero("z", "c"),
    )


def entries() -> list:
    return [_r01(), _r02(), _r03(), _r04(), _r05(), _r06(), _r07(), _r08(), _r09()]
