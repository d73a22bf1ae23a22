"""The generalized smallest-parts identity and its special cases.

R24 is the classical smallest-parts identity itself; both of its sides
are built purely from partition enumeration, with no series machinery,
so it doubles as the combinatorial anchor of the registry.
"""

from __future__ import annotations

from ..partitions import moment, partition_count, spt
from ..rational import ONE, rat
from ..series import QSeries, div_poch, poch
from .common import all_nonzero, distinct, domain_all, nonzero, not_value, rules, truncating_sum
from .model import INFINITE, Identity, ParamEnv


def n_sc_generating_function(order: int) -> QSeries:
    """sum_n N_SC(n) q^n = (1/(q)_inf) sum_{n>=1} n (-1)^{n-1} q^{n(n+1)/2}
    / ((q)_n (1 + q^n))."""

    def term(n):
        t = QSeries.monomial(rat(-1) ** (n - 1) * n, n * (n + 1) // 2, order)
        t = div_poch(t, 1, 1, n)
        return t.div_binomial(-1, n)

    total = truncating_sum(order, 1, lambda n: n * (n + 1) // 2, term)
    return div_poch(total, 1, 1, None)


def overlined_largest_series(order: int) -> QSeries:
    """sum_{n>=1} n q^n (-q)_{n-1} / (q)_n, the series counterpart of the
    overlined-largest-part statistic."""

    def term(n):
        t = poch(-1, 1, n - 1, order).scale(n).shift(n)
        return div_poch(t, 1, 1, n)

    return truncating_sum(order, 1, lambda n: n, term)


def _inner_quotient_sum(d, T: int, upper: int | None = None) -> QSeries:
    """sum over 1 <= n (<= upper) of q^n / ((1 - d q^n)(1 - q^n))."""
    total = QSeries.zero(T)
    top = T if upper is None else min(upper, T)
    for n in range(1, top + 1):
        total = total + QSeries.monomial(1, n, T).div_binomial(d, n).div_binomial(1, n)
    return total


def _poch_ratio_sum(num_c, num_e, den_c, den_e, arg_c, arg_e, T: int) -> QSeries:
    """sum_{m>=0} (num_c q^num_e)_m / ((den_c q^den_e)_m (q)_m) * (arg_c q^arg_e)^m,
    with no extra sign or q-weight (unlike the standard phi convention)."""
    if arg_e < 1:
        raise ValueError("the argument must carry a positive power of q")
    total = QSeries.one(T)
    term = QSeries.one(T)
    m = 1
    while m * arg_e <= T:
        term = term.mul_binomial(num_c, num_e + m - 1)
        term = term.div_binomial(den_c, den_e + m - 1)
        term = term.div_binomial(1, m)
        term = term.scale(arg_c).shift(arg_e)
        total = total + term
        m += 1
    return total


def _r23() -> Identity:
    def lhs(env, N, T):
        d = env.get("d")

        def term(n):
            t = poch(1 / d, 1, n - 1, T)
            t = t.scale(n * (-d) ** (n - 1)).shift(n * (n + 1) // 2)
            t = div_poch(t, 1, 1, n)
            return div_poch(t, 1, 1, n)

        total = truncating_sum(T, 1, lambda n: n * (n + 1) // 2, term)
        return div_poch(total, 1, 1, None)

    def rhs(env, N, T):
        d = env.get("d")

        def first(n):
            t = poch(d, 1, n - 1, T).scale(n).shift(n)
            return div_poch(t, 1, 1, n)

        head = div_poch(truncating_sum(T, 1, lambda n: n, first), 1, 1, None)

        def second(j):
            t = QSeries.monomial(1, j * j, T)
            t = div_poch(t, 1, 1, j)
            t = div_poch(t, 1, 1, j)
            return t * _inner_quotient_sum(d, T, j)

        tail = truncating_sum(T, 1, lambda j: j * j + 1, second)
        tail = tail * poch(d, 1, None, T)
        return head - div_poch(tail, 1, 1, None)

    return Identity(
        id="R23",
        title="one-parameter extension of the smallest-parts identity",
        statement=(
            "(1/(q)_inf) sum_{n>=1} n (-d)^{n-1} (q/d)_{n-1} q^{n(n+1)/2} / (q)_n^2 "
            "= (1/(q)_inf) sum_{n>=1} n q^n (dq)_{n-1} / (q)_n "
            "- ((dq)_inf/(q)_inf) sum_{j>=1} q^{j^2}/(q)_j^2 "
            "sum_{n=1}^{j} q^n / ((1-d q^n)(1-q^n))"
        ),
        params=("d",),
        kind=INFINITE,
        sides=(("lhs", lhs), ("rhs", rhs)),
        constraint=rules(nonzero("d", "the quotient argument q/d is undefined")),
        domain=all_nonzero("d"),
    )


def _r24() -> Identity:
    def lhs(env, N, T):
        coeffs = [rat(0)] * (T + 1)
        for n in range(1, T + 1):
            coeffs[n] = rat(spt(n))
        return QSeries(coeffs)

    def rhs(env, N, T):
        coeffs = [rat(0)] * (T + 1)
        for n in range(1, T + 1):
            coeffs[n] = rat(n) * partition_count(n) - rat(moment("rank", 2, n, False), 2)
        return QSeries(coeffs)

    return Identity(
        id="R24",
        title="smallest-parts identity, checked by pure enumeration",
        statement="spt(n) = n p(n) - (1/2) N_2(n), from brute-force partitions only",
        params=(),
        kind=INFINITE,
        sides=(("lhs", lhs), ("rhs", rhs)),
    )


def _r25() -> Identity:
    def lhs(env, N, T):
        def term(n):
            t = poch(-1, 1, n - 1, T).scale(n).shift(n * (n + 1) // 2)
            t = div_poch(t, 1, 1, n)
            return div_poch(t, 1, 1, n)

        return truncating_sum(T, 1, lambda n: n * (n + 1) // 2, term)

    def rhs(env, N, T):
        head = overlined_largest_series(T)

        def second(j):
            t = QSeries.monomial(1, j * j, T)
            t = div_poch(t, 1, 1, j)
            t = div_poch(t, 1, 1, j)
            inner = QSeries.zero(T)
            for n in range(1, min(j, T) + 1):
                inner = inner + QSeries.monomial(1, n, T).div_binomial(1, 2 * n)
            return t * inner

        tail = truncating_sum(T, 1, lambda j: j * j + 1, second)
        return head - poch(-1, 1, None, T) * tail

    return Identity(
        id="R25",
        title="smallest-parts extension at parameter -1 (overpartition form)",
        statement=(
            "sum_{n>=1} n (-q)_{n-1} q^{n(n+1)/2} / (q)_n^2 "
            "= sum_{n>=1} n q^n (-q)_{n-1} / (q)_n "
            "- (-q)_inf sum_{j>=1} q^{j^2}/(q)_j^2 sum_{n=1}^{j} q^n/(1-q^{2n})"
        ),
        params=(),
        kind=INFINITE,
        sides=(("lhs", lhs), ("rhs", rhs)),
    )


def _r26() -> Identity:
    def lhs(env, N, T):
        d = env.get("d")

        def div_even_poch(t, n):
            # divide by (q^2; q^2)_n
            for k in range(1, n + 1):
                t = t.div_binomial(1, 2 * k)
            return t

        def first(n):
            t = poch(-1 / d, 0, n, T)
            t = t.scale(rat(-1) ** (n - 1) * n * d**n).shift(n * (n + 1) // 2)
            return div_even_poch(t, n)

        head = truncating_sum(T, 1, lambda n: n * (n + 1) // 2, first)

        def second(k):
            inner = _poch_ratio_sum(d, 1, d, k + 1, -1 / d, k, T)
            t = QSeries.monomial(d**k, k * (k + 1), T)
            t = div_poch(t, 1, 1, k)
            t = div_poch(t, d, 1, k)
            t = t.div_binomial(1, k)
            return t * inner

        block = truncating_sum(T, 1, lambda k: k * (k + 1), second)
        prefactor = poch(-1 / d, 0, None, T) * poch(d, 1, None, T)
        prefactor = div_poch(prefactor, -1, 1, None)
        return head + prefactor * block

    def rhs(env, N, T):
        d = env.get("d")
        ratio = div_poch(poch(d, 1, None, T), -1, 1, None)
        head = (QSeries.one(T) - ratio).scale(ONE / (ONE + d))

        def term(n):
            t = poch(-1 / d, 1, n, T).scale(d**n).shift(n)
            t = div_poch(t, 1, 1, n)
            return t.div_binomial(1, n)

        tail = truncating_sum(T, 1, lambda n: n, term)
        return head + ratio * tail

    return Identity(
        id="R26",
        title="one-parameter extension of the self-conjugate weighted count",
        statement=(
            "sum_{n>=1} n (-1)^{n-1} (-1/d)_n d^n q^{n(n+1)/2} / (q^2;q^2)_n "
            "+ ((-1/d)_inf (dq)_inf/(-q)_inf) sum_{k>=1} d^k q^{k(k+1)} "
            "/ ((q)_k (dq)_k (1-q^k)) sum_{n>=0} (dq)_n (-q^k/d)^n / ((dq^{k+1})_n (q)_n) "
            "= (1/(1+d)) (1 - (dq)_inf/(-q)_inf) "
            "+ ((dq)_inf/(-q)_inf) sum_{n>=1} (-q/d)_n (dq)^n / ((q)_n (1-q^n))"
        ),
        params=("d",),
        kind=INFINITE,
        sides=(("lhs", lhs), ("rhs", rhs)),
        constraint=rules(
            nonzero("d", "the quotient argument -1/d is undefined"),
            not_value("d", rat(-1), "the prefactor 1/(1+d) has a pole"),
        ),
        domain=all_nonzero("d"),
    )


def _r27() -> Identity:
    def lhs(env, N, T):
        head = poch(1, 1, None, T) * n_sc_generating_function(T)

        def term(n):
            bracket = div_poch(poch(-1, 1, n, T), 1, 1, n) - QSeries.one(T)
            t = QSeries.monomial(1, n * (n + 1) // 2, T)
            t = t.div_binomial(1, n)
            t = div_poch(t, 1, 1, n)
            return t * bracket

        tail = truncating_sum(T, 1, lambda n: n * (n + 1) // 2, term)
        ratio = div_poch(poch(1, 1, None, T), -1, 1, None)
        return head + ratio.scale(rat(1, 2)) * tail

    def rhs(env, N, T):
        ratio = div_poch(poch(1, 1, None, T), -1, 1, None)

        def term(n):
            t = poch(-1, 1, n, T).shift(n)
            t = div_poch(t, 1, 1, n)
            return t.div_binomial(1, n)

        tail = truncating_sum(T, 1, lambda n: n, term)
        return (
            QSeries.constant(rat(1, 4), T)
            - ratio.scale(rat(1, 4))
            + ratio.scale(rat(1, 2)) * tail
        )

    return Identity(
        id="R27",
        title="self-conjugate weighted count identity",
        statement=(
            "(q)_inf sum_n N_SC(n) q^n + (1/2) ((q)_inf/(-q)_inf) "
            "sum_{n>=1} q^{n(n+1)/2} ((-q)_n/(q)_n - 1) / ((1-q^n)(q)_n) "
            "= 1/4 - (1/4)(q)_inf/(-q)_inf "
            "+ (1/2)((q)_inf/(-q)_inf) sum_{n>=1} (-q)_n q^n / ((q)_n (1-q^n))"
        ),
        params=(),
        kind=INFINITE,
        sides=(("lhs", lhs), ("rhs", rhs)),
    )


def _r28() -> Identity:
    def lhs(env, N, T):
        d = env.get("d")

        def first(n):
            t = QSeries.monomial(rat(-1) ** (n - 1) * n * d**n, n * (n + 1) // 2, T)
            return div_poch(t, 1, 1, n)

        head = div_poch(
            truncating_sum(T, 1, lambda n: n * (n + 1) // 2, first), d, 1, None
        )

        def second(n):
            t = QSeries.monomial(d**n, n * (n + 1), T)
            t = div_poch(t, 1, 1, n)
            t = div_poch(t, d, 1, n)
            return t.div_binomial(1, n)

        return head + truncating_sum(T, 1, lambda n: n * (n + 1), second)

    def rhs(env, N, T):
        d = env.get("d")

        def term(n):
            t = QSeries.monomial(d**n, n, T)
            t = div_poch(t, 1, 1, n)
            return t.div_binomial(1, n)

        return truncating_sum(T, 1, lambda n: n, term)

    return Identity(
        id="R28",
        title="companion identity with the (cq)_n column removed",
        statement=(
            "(1/(dq)_inf) sum_{n>=1} n (-1)^{n-1} d^n q^{n(n+1)/2} / (q)_n "
            "+ sum_{n>=1} d^n q^{n(n+1)} / ((q)_n (dq)_n (1-q^n)) "
            "= sum_{n>=1} (dq)^n / ((q)_n (1-q^n))"
        ),
        params=("d",),
        kind=INFINITE,
        sides=(("lhs", lhs), ("rhs", rhs)),
        domain=all_nonzero("d"),
    )


def _specialize_r28(identity_id: str, title: str, statement: str, value) -> Identity:
    base = _r28()
    fixed = ParamEnv(d=value)

    def lhs(env, N, T):
        return base.side("lhs")(fixed, N, T)

    def rhs(env, N, T):
        return base.side("rhs")(fixed, N, T)

    return Identity(
        id=identity_id,
        title=title,
        statement=statement,
        params=(),
        kind=INFINITE,
        sides=(("lhs", lhs), ("rhs", rhs)),
    )


def _r29() -> Identity:
    return _specialize_r28(
        "R29",
        "companion identity at parameter 1",
        "(1/(q)_inf) sum n (-1)^{n-1} q^{n(n+1)/2}/(q)_n "
        "+ sum q^{n(n+1)}/((q)_n^2 (1-q^n)) = sum q^n/((q)_n (1-q^n))",
        rat(1),
    )


def _r30() -> Identity:
    def lhs(env, N, T):
        def first(n):
            return div_poch(QSeries.monomial(n, n * (n + 1) // 2, T), 1, 1, n)

        head = div_poch(
            truncating_sum(T, 1, lambda n: n * (n + 1) // 2, first), -1, 1, None
        ).scale(-1)

        def second(n):
            t = QSeries.monomial(rat(-1) ** n, n * (n + 1), T)
            for k in range(1, n + 1):
                t = t.div_binomial(1, 2 * k)
            return t.div_binomial(1, n)

        return head + truncating_sum(T, 1, lambda n: n * (n + 1), second)

    def rhs(env, N, T):
        def term(n):
            t = QSeries.monomial(rat(-1) ** n, n, T)
            t = div_poch(t, 1, 1, n)
            return t.div_binomial(1, n)

        return truncating_sum(T, 1, lambda n: n, term)

    return Identity(
        id="R30",
        title="companion identity at parameter -1 (distinct-parts form)",
        statement=(
            "(-1/(-q)_inf) sum_{n>=1} n q^{n(n+1)/2}/(q)_n "
            "+ sum_{n>=1} (-1)^n q^{n(n+1)} / ((q^2;q^2)_n (1-q^n)) "
            "= sum_{n>=1} (-q)^n / ((q)_n (1-q^n))"
        ),
        params=(),
        kind=INFINITE,
        sides=(("lhs", lhs), ("rhs", rhs)),
    )


def _r31() -> Identity:
    def lhs(env, N, T):
        c = env.get("c")

        def first(n):
            t = QSeries.monomial(n * c**n, n * n, T)
            t = div_poch(t, 1, 1, n)
            return div_poch(t, c, 1, n)

        head = truncating_sum(T, 1, lambda n: n * n, first)

        def second(k):
            inner = QSeries.zero(T)
            j = 0
            while (j + k) * (j + k) <= T:
                t = QSeries.monomial(c**j, (j + k) * (j + k), T)
                t = div_poch(t, c, 1, j + k)
                t = div_poch(t, 1, 1, j)
                inner = inner + t
                j += 1
            t = QSeries.monomial((-c) ** k, k * (k + 1) // 2, T)
            t = div_poch(t, 1, 1, k)
            t = t.div_binomial(1, k)
            return t * inner

        block = truncating_sum(T, 1, lambda k: k * (k + 1) // 2 + k * k, second)
        return head - block

    def rhs(env, N, T):
        c = env.get("c")
        inv_cq = div_poch(QSeries.one(T), c, 1, None)

        def term(k):
            t = QSeries.monomial((-c) ** k, k * (k + 3) // 2, T)
            t = div_poch(t, 1, 1, k)
            return t.div_binomial(1, k)

        tail = truncating_sum(T, 1, lambda k: k * (k + 3) // 2, term)
        return inv_cq - QSeries.one(T) - inv_cq * tail

    return Identity(
        id="R31",
        title="limit form with the second parameter sent to zero",
        statement=(
            "sum_{n>=0} n c^n q^{n^2} / ((q)_n (cq)_n) "
            "- sum_{k>=1} (-c)^k q^{k(k+1)/2} / ((q)_k (1-q^k)) "
            "sum_{j>=0} c^j q^{(j+k)^2} / ((cq)_{j+k} (q)_j) "
            "= 1/(cq)_inf - 1 - (1/(cq)_inf) sum_{k>=1} (-c)^k q^{k(k+3)/2} "
            "/ ((q)_k (1-q^k))"
        ),
        params=("c",),
        kind=INFINITE,
        sides=(("lhs", lhs), ("rhs", rhs)),
        domain=all_nonzero("c"),
    )


def _r32() -> Identity:
    def lhs(env, N, T):
        c, d = env.get("c"), env.get("d")

        def first(n):
            t = poch(c / d, 0, n, T)
            t = t.scale(rat(-1) ** (n - 1) * n * d**n).shift(n * (n + 1) // 2)
            t = div_poch(t, 1, 1, n)
            return div_poch(t, c, 1, n)

        head = div_poch(
            truncating_sum(T, 1, lambda n: n * (n + 1) // 2, first), 1, 1, None
        )

        def second(k):
            inner = _poch_ratio_sum(d, 1, d, k + 1, c / d, k, T)
            t = QSeries.monomial(d**k, k * (k + 1), T)
            t = div_poch(t, d, 1, k)
            t = div_poch(t, 1, 1, k)
            t = t.div_binomial(1, k)
            return t * inner

        block = truncating_sum(T, 1, lambda k: k * (k + 1), second)
        prefactor = poch(c / d, 0, None, T) * poch(d, 1, None, T)
        prefactor = div_poch(prefactor, 1, 1, None)
        prefactor = div_poch(prefactor, c, 1, None)
        return head + prefactor * block

    def rhs(env, N, T):
        c, d = env.get("c"), env.get("d")
        ratio = div_poch(poch(d, 1, None, T), c, 1, None)
        head = QSeries.one(T) - ratio
        head = div_poch(head, 1, 1, None).scale(c / (c - d))

        def term(k):
            t = poch(c / d, 1, k, T).scale(d**k).shift(k)
            t = div_poch(t, 1, 1, k)
            return t.div_binomial(1, k)

        tail = truncating_sum(T, 1, lambda k: k, term)
        tail = ratio * div_poch(tail, 1, 1, None)
        return head + tail

    return Identity(
        id="R32",
        title="limit of the 2-phi-1 block theorem as the cutoff grows",
        statement=(
            "(1/(q)_inf) sum_{n>=1} n (-1)^{n-1} (c/d)_n d^n q^{n(n+1)/2} "
            "/ ((q)_n (cq)_n) "
            "+ ((c/d)_inf (dq)_inf/((q)_inf (cq)_inf)) sum_{k>=1} d^k q^{k(k+1)} "
            "/ ((dq)_k (q)_k (1-q^k)) sum_{j>=0} (dq)_j (c q^k/d)^j / ((dq^{k+1})_j (q)_j) "
            "= c/((c-d)(q)_inf) (1 - (dq)_inf/(cq)_inf) "
            "+ ((dq)_inf/((cq)_inf (q)_inf)) sum_{k>=1} (cq/d)_k (dq)^k / ((q)_k (1-q^k))"
        ),
        params=("c", "d"),
        kind=INFINITE,
        sides=(("lhs", lhs), ("rhs", rhs)),
        constraint=rules(
            nonzero("d", "the quotient arguments c/d and cq/d are undefined"),
            distinct("c", "d", "the prefactor denominator (c - d) vanishes"),
        ),
        domain=domain_all(all_nonzero("c", "d")),
    )


def _r36() -> Identity:
    def lhs(env, N, T):
        def term(j):
            t = QSeries.monomial(1, j * j, T)
            t = div_poch(t, 1, 1, j)
            t = div_poch(t, 1, 1, j)
            inner = QSeries.zero(T)
            for n in range(1, min(j, T) + 1):
                inner = (
                    inner
                    + QSeries.monomial(1, n, T).div_binomial(1, n + 1).div_binomial(1, n)
                )
            return t * inner

        return truncating_sum(T, 1, lambda j: j * j + 1, term)

    def rhs(env, N, T):
        t = QSeries.monomial(1, 2, T).div_binomial(1, 1).div_binomial(1, 1)
        return div_poch(t, 1, 1, None)

    return Identity(
        id="R36",
        title="double-sum evaluation at the shift parameter q",
        statement=(
            "sum_{j>=1} q^{j^2}/(q)_j^2 sum_{n=1}^{j} q^n/((1-q^{n+1})(1-q^n)) "
            "= q^2 / ((1-q)^2 (q)_inf)"
        ),
        params=(),
        kind=INFINITE,
        sides=(("lhs", lhs), ("rhs", rhs)),
    )


def entries() -> list:
    return [
        _r23(),
        _r24(),
        _r25(),
        _r26(),
        _r27(),
        _r28(),
        _r29(),
        _r30(),
        _r31(),
        _r32(),
        _r36(),
    ]
