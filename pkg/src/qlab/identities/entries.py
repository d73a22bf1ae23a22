"""Finite analogues of the five classical notebook entries and their limits.

R10-R14 are the cutoff-N forms; R15-R19 the corresponding limits as N
grows.  The finite forms recover the infinite ones coefficient-by-
coefficient, which the stabilization tests exercise separately.
"""

from __future__ import annotations

from ..rational import ONE
from ..series import (
    QSeries,
    arithmetic_geometric_tail,
    div_poch,
    geometric_fraction,
    geometric_fraction_squared,
    geometric_tail,
    poch,
    q_binomial,
)
from .common import all_nonzero, domain_all, inside_unit, nonzero, not_one, rules, truncating_sum
from .four_parameter import _r01
from .model import FINITE, INFINITE, Identity


def _r10() -> Identity:
    def lhs(env, N, T):
        a, b = env.get("a"), env.get("b")
        total = QSeries.zero(T)
        for n in range(0, N + 1):
            e = n * (n + 1) // 2
            if e > T:
                break
            t = q_binomial(N, n, T)
            t = t * poch(-b / a, 0, n, T)
            t = t.scale(a**n).shift(e)
            t = div_poch(t, b, 1, n)
            total = total + t
        return total

    def rhs(env, N, T):
        a, b = env.get("a"), env.get("b")
        total = QSeries.zero(T)
        for n in range(0, N + 1):
            t = q_binomial(N, n, T)
            t = t * poch(-a / b, 0, n, T)
            t = t * poch(b, 1, N - n, T)
            t = t.scale(b**n).shift(n)
            total = total + t
        return div_poch(total, b, 1, N)

    return Identity(
        id="R10",
        title="finite form of notebook entry 1",
        statement=(
            "sum_{n=0}^{N} [N,n] (-b/a)_n a^n q^{n(n+1)/2} / (bq)_n "
            "= sum_{n=0}^{N} [N,n] (-a/b)_n (bq)_{N-n} (bq)^n / (bq)_N"
        ),
        params=("a", "b"),
        kind=FINITE,
        sides=(("lhs", lhs), ("rhs", rhs)),
        constraint=rules(
            nonzero("a", "the quotient argument -b/a is undefined"),
            nonzero("b", "the quotient argument -a/b is undefined"),
        ),
        domain=all_nonzero("a", "b"),
    )


def _r11() -> Identity:
    def lhs(env, N, T):
        a = env.get("a")
        total = QSeries.zero(T)
        for n in range(1, N + 1):
            if n * n > T:
                break
            t = q_binomial(N, n, T).scale(n * a**n).shift(n * n)
            t = div_poch(t, a, 1, n)
            total = total + t
        return total * poch(a, 1, N, T)

    def rhs(env, N, T):
        a = env.get("a")
        total = QSeries.zero(T)
        for n in range(1, N + 1):
            e = n * (n + 1) // 2
            if e > T:
                break
            t = q_binomial(N, n, T)
            t = t * poch(1, 1, n, T)
            t = t.scale((-1) ** (n - 1) * a**n).shift(e)
            t = t.div_binomial(1, n)
            total = total + t
        return total

    return Identity(
        id="R11",
        title="finite form of notebook entry 2",
        statement=(
            "(aq)_N sum_{n=1}^{N} [N,n] n a^n q^{n^2} / (aq)_n "
            "= sum_{n=1}^{N} [N,n] (q)_n (-1)^{n-1} a^n q^{n(n+1)/2} / (1-q^n)"
        ),
        params=("a",),
        kind=FINITE,
        sides=(("lhs", lhs), ("rhs", rhs)),
        domain=all_nonzero("a"),
    )


def _r12() -> Identity:
    def lhs(env, N, T):
        a, b = env.get("a"), env.get("b")
        total = QSeries.zero(T)
        for n in range(1, N + 1):
            t = q_binomial(N, n, T)
            t = t * poch(1, 1, n, T)
            t = t * poch(b / a, 0, n, T)
            t = t * poch(a, 0, N - n, T)
            t = t.scale(a**n)
            t = t.div_binomial(1, n)
            t = div_poch(t, b, 0, n)
            total = total + t
        return div_poch(total, a, 0, N)

    def rhs(env, N, T):
        a, b = env.get("a"), env.get("b")
        total = QSeries.zero(T)
        for m in range(1, T + 1):
            # (1 - q^{mN})/(1 - q^m) = 1 + q^m + ... + q^{m(N-1)}
            t = QSeries.constant(a**m - b**m, T)
            t = t.div_binomial(1, m).mul_binomial(1, m * N)
            total = total + t
        tail = geometric_tail(a, T + 1) - geometric_tail(b, T + 1)
        return total + QSeries.constant(tail, T)

    return Identity(
        id="R12",
        title="finite form of notebook entry 3",
        statement=(
            "sum_{n=1}^{N} [N,n] (q)_n (b/a)_n (a)_{N-n} a^n / ((b)_n (1-q^n)(a)_N) "
            "= sum_{m>=1} (a^m - b^m)(1 - q^{mN}) / (1-q^m)"
        ),
        params=("a", "b"),
        kind=FINITE,
        sides=(("lhs", lhs), ("rhs", rhs)),
        constraint=rules(
            nonzero("a", "the quotient argument b/a is undefined"),
            not_one("a", "(a)_N in a denominator vanishes and the tail diverges"),
            not_one("b", "(b)_n in a denominator vanishes and the tail diverges"),
        ),
        domain=domain_all(inside_unit("a", "b"), all_nonzero("a")),
    )


def _r13() -> Identity:
    def lhs(env, N, T):
        a = env.get("a")
        total = QSeries.zero(T)
        for n in range(1, N + 1):
            e = n * (n + 1) // 2
            if e > T:
                break
            t = q_binomial(N, n, T)
            t = t * poch(1, 1, n, T)
            t = t.scale((-1) ** (n - 1) * a**n).shift(e)
            t = t.div_binomial(1, n)
            t = div_poch(t, a, 1, n)
            total = total + t
        return total

    def rhs(env, N, T):
        a = env.get("a")
        total = QSeries.zero(T)
        for n in range(1, N + 1):
            total = total + geometric_fraction(a, n, T)
        return total

    return Identity(
        id="R13",
        title="finite form of notebook entry 4",
        statement=(
            "sum_{n=1}^{N} [N,n] (-1)^{n-1} a^n q^{n(n+1)/2} (q)_n / ((1-q^n)(aq)_n) "
            "= sum_{n=1}^{N} a q^n / (1 - a q^n)"
        ),
        params=("a",),
        kind=FINITE,
        sides=(("lhs", lhs), ("rhs", rhs)),
        domain=all_nonzero("a"),
    )


def _r14() -> Identity:
    def lhs(env, N, T):
        a = env.get("a")
        total = QSeries.zero(T)
        for n in range(1, N + 1):
            t = q_binomial(N, n, T)
            t = t * poch(1, 1, n, T)
            t = t * poch(1, 1, n - 1, T)
            t = t * poch(a, 0, N - n, T)
            t = t.scale(a**n)
            t = t.div_binomial(1, n)
            t = div_poch(t, a, 0, n)
            total = total + t
        return div_poch(total, a, 0, N)

    def rhs(env, N, T):
        a = env.get("a")
        total = QSeries.zero(T)
        for n in range(1, N + 1):
            total = total + geometric_fraction_squared(a, n - 1, T)
        return total

    return Identity(
        id="R14",
        title="finite form of notebook entry 5",
        statement=(
            "sum_{n=1}^{N} [N,n] (q)_n (q)_{n-1} (a)_{N-n} a^n / ((a)_n (1-q^n)(a)_N) "
            "= sum_{n=1}^{N} a q^{n-1} / (1 - a q^{n-1})^2"
        ),
        params=("a",),
        kind=FINITE,
        sides=(("lhs", lhs), ("rhs", rhs)),
        constraint=rules(
            not_one("a", "(a)_n in a denominator vanishes and a/(1-a)^2 has a pole"),
        ),
        domain=all_nonzero("a"),
    )


def _r15() -> Identity:
    def lhs(env, N, T):
        a, b = env.get("a"), env.get("b")
        return poch(-a, 1, None, T) * div_poch(QSeries.one(T), b, 1, None)

    def rhs(env, N, T):
        a, b = env.get("a"), env.get("b")

        def term(n):
            t = poch(-b / a, 0, n, T).scale(a**n).shift(n * (n + 1) // 2)
            t = div_poch(t, 1, 1, n)
            return div_poch(t, b, 1, n)

        return truncating_sum(T, 0, lambda n: n * (n + 1) // 2, term)

    return Identity(
        id="R15",
        title="notebook entry 1 (product form)",
        statement=(
            "(-aq)_inf / (bq)_inf "
            "= sum_{n>=0} (-b/a)_n a^n q^{n(n+1)/2} / ((q)_n (bq)_n)"
        ),
        params=("a", "b"),
        kind=INFINITE,
        sides=(("lhs", lhs), ("rhs", rhs)),
        constraint=rules(nonzero("a", "the quotient argument -b/a is undefined")),
        domain=all_nonzero("a", "b"),
    )


def _r16() -> Identity:
    def lhs(env, N, T):
        a = env.get("a")

        def term(n):
            t = QSeries.monomial(n * a**n, n * n, T)
            t = div_poch(t, 1, 1, n)
            return div_poch(t, a, 1, n)

        total = truncating_sum(T, 1, lambda n: n * n, term)
        return total * poch(a, 1, None, T)

    def rhs(env, N, T):
        a = env.get("a")

        def term(n):
            t = QSeries.monomial((-1) ** (n - 1) * a**n, n * (n + 1) // 2, T)
            return t.div_binomial(1, n)

        return truncating_sum(T, 1, lambda n: n * (n + 1) // 2, term)

    return Identity(
        id="R16",
        title="notebook entry 2 (weighted square exponents)",
        statement=(
            "(aq)_inf sum_{n>=1} n a^n q^{n^2} / ((q)_n (aq)_n) "
            "= sum_{n>=1} (-1)^{n-1} a^n q^{n(n+1)/2} / (1-q^n)"
        ),
        params=("a",),
        kind=INFINITE,
        sides=(("lhs", lhs), ("rhs", rhs)),
        domain=all_nonzero("a"),
    )


def _r17() -> Identity:
    base = _r01()
    return Identity(
        id="R17",
        title="notebook entry 3 (limit of the finite form)",
        statement=base.statement,
        params=base.params,
        kind=INFINITE,
        sides=base.sides,
        constraint=base.constraint,
        domain=base.domain,
    )


def _r18() -> Identity:
    def lhs(env, N, T):
        a = env.get("a")

        def term(n):
            t = QSeries.monomial((-1) ** (n - 1) * a**n, n * (n + 1) // 2, T)
            t = t.div_binomial(1, n)
            return div_poch(t, a, 1, n)

        return truncating_sum(T, 1, lambda n: n * (n + 1) // 2, term)

    def rhs(env, N, T):
        a = env.get("a")

        def term(n):
            return QSeries.monomial(a**n, n, T).div_binomial(1, n)

        return truncating_sum(T, 1, lambda n: n, term)

    return Identity(
        id="R18",
        title="notebook entry 4 (divisor-type right side)",
        statement=(
            "sum_{n>=1} (-1)^{n-1} a^n q^{n(n+1)/2} / ((1-q^n)(aq)_n) "
            "= sum_{n>=1} a^n q^n / (1-q^n)"
        ),
        params=("a",),
        kind=INFINITE,
        sides=(("lhs", lhs), ("rhs", rhs)),
        domain=all_nonzero("a"),
    )


def _r19() -> Identity:
    def lhs(env, N, T):
        a = env.get("a")
        total = QSeries.zero(T)
        base = QSeries.one(T)  # (q)_{n-1} / (a)_n
        a_pow = ONE
        for n in range(1, T + 1):
            if n > 1:
                base = base.mul_binomial(1, n - 1)
            base = base.div_binomial(a, n - 1)
            a_pow = a_pow * a
            total = total + base.scale(a_pow).div_binomial(1, n)
        stable = base.mul_binomial(1, T).div_binomial(a, T)
        return total + stable.scale(geometric_tail(a, T + 1))

    def rhs(env, N, T):
        a = env.get("a")
        total = QSeries.zero(T)
        for m in range(1, T + 1):
            total = total + QSeries.constant(m * a**m, T).div_binomial(1, m)
        return total + QSeries.constant(arithmetic_geometric_tail(a, T + 1), T)

    return Identity(
        id="R19",
        title="notebook entry 5 (Lambert-type right side)",
        statement=(
            "sum_{n>=1} (q)_{n-1} a^n / ((1-q^n)(a)_n) = sum_{m>=1} m a^m / (1-q^m)"
        ),
        params=("a",),
        kind=INFINITE,
        sides=(("lhs", lhs), ("rhs", rhs)),
        constraint=rules(
            not_one("a", "(a)_n in a denominator vanishes and the tails diverge"),
        ),
        domain=domain_all(inside_unit("a"), all_nonzero("a")),
    )


def entries() -> list:
    return [_r10(), _r11(), _r12(), _r13(), _r14(), _r15(), _r16(), _r17(), _r18(), _r19()]
