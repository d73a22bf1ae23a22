"""The finite sum of a 2-phi-1 and the two lemmas feeding it.

The right side of the harmonic-sum lemma and of the main theorem carry
an infinite-product prefactor and an inner 2-phi-1 whose argument rides
on q^k, so every sum here truncates on its own.
"""

from __future__ import annotations

from ..series import QMonomial, QSeries, div_poch, geometric_fraction, phi_series, poch, q_binomial
from .common import all_nonzero, distinct, domain_all, nonzero, rules
from .model import FINITE, Identity


def _harmonic_partial(n: int, T: int) -> QSeries:
    """sum_{k=1}^{n} q^k / (1 - q^k)."""
    total = QSeries.zero(T)
    for k in range(1, min(n, T) + 1):
        total = total + geometric_fraction(1, k, T)
    return total


def _phi_block_rhs(env, N: int, T: int) -> QSeries:
    """(c/d)_inf (dq)_inf / ((q)_N (cq)_inf (dq^{N+1})_inf)
    * sum_{k=1}^{N} [N,k] d^k q^{k(k+1)} / ((dq)_k (1-q^k))
      * 2phi1(dq, dq^{N+1}; dq^{k+1}; (c/d) q^k)."""
    c, d = env.get("c"), env.get("d")
    total = QSeries.zero(T)
    for k in range(1, N + 1):
        e = k * (k + 1)
        if e > T:
            break
        inner = phi_series(
            [QMonomial(d, 1), QMonomial(d, N + 1)],
            [QMonomial(d, k + 1)],
            QMonomial(c / d, k),
            None,
            T,
        )
        t = q_binomial(N, k, T).scale(d**k).shift(e)
        t = div_poch(t, d, 1, k)
        t = t.div_binomial(1, k)
        total = total + t * inner
    prefactor = poch(c / d, 0, None, T) * poch(d, 1, None, T)
    prefactor = div_poch(prefactor, 1, 1, N)
    prefactor = div_poch(prefactor, c, 1, None)
    prefactor = div_poch(prefactor, d, N + 1, None)
    return prefactor * total


def _r20() -> Identity:
    def lhs(env, N, T):
        c, d = env.get("c"), env.get("d")
        total = QSeries.zero(T)
        for n in range(1, N + 1):
            e = n * (n + 1) // 2
            if e > T:
                break
            t = poch(c / d, 0, n, T)
            t = t.scale((-1) ** (n - 1) * d**n).shift(e)
            t = div_poch(t, 1, 1, n)
            t = div_poch(t, 1, 1, N - n)
            t = div_poch(t, c, 1, n)
            total = total + t * _harmonic_partial(n, T)
        return total

    return Identity(
        id="R20",
        title="harmonic-weighted sum as a 2-phi-1 block",
        statement=(
            "sum_{n=1}^{N} (-1)^{n-1} (c/d)_n d^n q^{n(n+1)/2} "
            "/ ((q)_n (q)_{N-n} (cq)_n) * sum_{k=1}^{n} q^k/(1-q^k) "
            "= (c/d)_inf (dq)_inf / ((q)_N (cq)_inf (dq^{N+1})_inf) "
            "* sum_{k=1}^{N} [N,k] d^k q^{k(k+1)} / ((dq)_k (1-q^k)) "
            "* 2phi1(dq, dq^{N+1}; dq^{k+1}; (c/d) q^k)"
        ),
        params=("c", "d"),
        kind=FINITE,
        sides=(("lhs", lhs), ("rhs", _phi_block_rhs)),
        constraint=rules(nonzero("d", "the quotient argument c/d is undefined")),
        domain=all_nonzero("c", "d"),
    )


def _r21() -> Identity:
    def lhs(env, N, T):
        c, d = env.get("c"), env.get("d")
        total = QSeries.zero(T)
        for n in range(1, N + 1):
            e = n * (n + 1) // 2
            if e > T:
                break
            t = q_binomial(N, n, T) * poch(c / d, 0, n, T)
            t = t.scale((-1) ** (n - 1) * d**n).shift(e)
            t = div_poch(t, c, 1, n)
            total = total + t
        return total

    def rhs(env, N, T):
        c, d = env.get("c"), env.get("d")
        ratio = div_poch(poch(d, 1, N, T), c, 1, N)
        return QSeries.one(T) - ratio

    return Identity(
        id="R21",
        title="telescoping Pochhammer-ratio lemma",
        statement=(
            "sum_{n=1}^{N} [N,n] (c/d)_n d^n (-1)^{n-1} q^{n(n+1)/2} / (cq)_n "
            "= 1 - (dq)_N / (cq)_N"
        ),
        params=("c", "d"),
        kind=FINITE,
        sides=(("lhs", lhs), ("rhs", rhs)),
        constraint=rules(nonzero("d", "the quotient argument c/d is undefined")),
        domain=all_nonzero("c", "d"),
    )


def _r22() -> Identity:
    def lhs(env, N, T):
        c, d = env.get("c"), env.get("d")
        total = QSeries.zero(T)
        for n in range(1, N + 1):
            e = n * (n + 1) // 2
            if e > T:
                break
            t = poch(c / d, 0, n, T)
            t = t.scale((-1) ** (n - 1) * n * d**n).shift(e)
            t = div_poch(t, 1, 1, n)
            t = div_poch(t, 1, 1, N - n)
            t = div_poch(t, c, 1, n)
            total = total + t
        return total + _phi_block_rhs(env, N, T)

    def rhs(env, N, T):
        c, d = env.get("c"), env.get("d")
        ratio = div_poch(poch(d, 1, N, T), c, 1, N)
        head = (QSeries.one(T) - ratio) * div_poch(QSeries.one(T), 1, 1, N)
        head = head.scale(c / (c - d))
        total = QSeries.zero(T)
        for k in range(1, N + 1):
            if k > T:
                break
            t = poch(c / d, 1, k, T) * poch(d, 1, N - k, T)
            t = t.scale(d**k).shift(k)
            t = div_poch(t, 1, 1, k)
            t = div_poch(t, 1, 1, N - k)
            t = t.div_binomial(1, k)
            total = total + t
        return head + div_poch(total, c, 1, N)

    return Identity(
        id="R22",
        title="closed form for the n-weighted sum plus its 2-phi-1 block",
        statement=(
            "sum_{n=1}^{N} n (-1)^{n-1} (c/d)_n d^n q^{n(n+1)/2} "
            "/ ((q)_n (q)_{N-n} (cq)_n) "
            "+ (c/d)_inf (dq)_inf / ((q)_N (cq)_inf (dq^{N+1})_inf) "
            "* sum_{k=1}^{N} [N,k] d^k q^{k(k+1)} / ((dq)_k (1-q^k)) "
            "* 2phi1(dq, dq^{N+1}; dq^{k+1}; (c/d) q^k) "
            "= c/((c-d)(q)_N) (1 - (dq)_N/(cq)_N) "
            "+ 1/(cq)_N sum_{k=1}^{N} (cq/d)_k (dq)_{N-k} (dq)^k "
            "/ ((q)_k (q)_{N-k} (1-q^k))"
        ),
        params=("c", "d"),
        kind=FINITE,
        sides=(("lhs", lhs), ("rhs", rhs)),
        constraint=rules(
            nonzero("d", "the quotient arguments c/d and cq/d are undefined"),
            distinct("c", "d", "the prefactor denominator (c - d) vanishes"),
        ),
        domain=domain_all(all_nonzero("c", "d")),
    )


def entries() -> list:
    return [_r20(), _r21(), _r22()]
