"""Classical transformations and summation lemmas used as prerequisites.

Entries whose statements involve Pochhammer symbols at q^{-N} (the Sears
transform and the finite Heine transform) are built here with those
factors eliminated through the inversion rule

    (q^{-N})_n / (G q^{1-N})_n = (q^{N-n+1})_n / (G^n q^n (q^{N-n}/G)_n),

applied mechanically to each side on its own, so every builder works in
non-negative powers of q.  The inversion rule itself is entry R38,
verified in the denominator-cleared polynomial form

    prod_{k=0}^{n-1} (x q^N - q^k) = (-1)^n q^{n(n-1)/2} (x q^{N-n+1})_n,

with the instances 0 <= n <= N combined through a free weight parameter.
"""

from __future__ import annotations

from ..rational import ONE, Rat, rat
from ..series import (
    QMonomial,
    QSeries,
    div_poch,
    geometric_fraction,
    geometric_tail,
    phi_series,
    poch,
    q_binomial,
)
from .common import all_nonzero, distinct, domain_all, inside_unit, nonzero, not_one, rules, truncating_sum
from .model import FINITE, INFINITE, Identity, ParamEnv


def scalar_phi_with_tail(nums: list, dens: list, z: Rat, order: int) -> QSeries:
    """sum_{n>=0} prod_i (u_i)_n / (prod_j (v_j)_n (q)_n) * z^n for scalar
    parameters, exactly: the first order+1 terms plus the geometric tail
    (past n = order every Pochhammer is frozen modulo q^{order+1})."""
    total = QSeries.zero(order)
    term = QSeries.one(order)
    total = total + term
    for n in range(1, order + 2):
        for u in nums:
            term = term.mul_binomial(u, n - 1)
        for v in dens:
            term = term.div_binomial(v, n - 1)
        term = term.div_binomial(1, n)
        term = term.scale(z)
        if n <= order:
            total = total + term
    return total + term.scale(geometric_tail(z, 0))


def _r37() -> Identity:
    def _phi43_sum(uppers, lowers, g, N, T):
        # sum_{n=0}^{N} prod(uppers)_n (q^{N-n+1})_n
        #   / (prod(lowers)_n (q)_n (q^{N-n}/g)_n g^n)
        total = QSeries.zero(T)
        for n in range(0, N + 1):
            t = QSeries.one(T)
            for u in uppers:
                t = t * poch(u, 0, n, T)
            t = t * poch(1, N - n + 1, n, T)
            for v in lowers:
                t = div_poch(t, v, 0, n)
            t = div_poch(t, 1, 1, n)
            t = div_poch(t, 1 / g, N - n, n)
            t = t.scale((ONE / g) ** n)
            total = total + t
        return total

    def lhs(env, N, T):
        A, B, C = env.get("a"), env.get("b"), env.get("c")
        D, E = env.get("d"), env.get("z")
        g = A * B * C / (D * E)
        return _phi43_sum((A, B, C), (D, E), g, N, T)

    def rhs(env, N, T):
        A, B, C = env.get("a"), env.get("b"), env.get("c")
        D, E = env.get("d"), env.get("z")
        g = A * B * C / (D * E)
        g2 = A / E
        de_bc = D * E / (B * C)
        inner = _phi43_sum((A, D / B, D / C), (D, de_bc), g2, N, T)
        prefactor = poch(E / A, 0, N, T) * poch(de_bc, 0, N, T)
        prefactor = div_poch(prefactor, E, 0, N)
        prefactor = div_poch(prefactor, ONE / g, 0, N)
        return prefactor * inner

    return Identity(
        id="R37",
        title="Sears transformation of a terminating balanced 4-phi-3",
        statement=(
            "4phi3[q^{-N}, A, B, C; D, E, ABCq^{1-N}/(DE); q, q] "
            "= (E/A)_N (DE/BC)_N / ((E)_N (DE/(ABC))_N) "
            "* 4phi3[q^{-N}, A, D/B, D/C; D, DE/(BC), Aq^{1-N}/E; q, q], "
            "with the q^{-N} factors eliminated via the inversion rule"
        ),
        params=("a", "b", "c", "d", "z"),
        kind=FINITE,
        sides=(("lhs", lhs), ("rhs", rhs)),
        constraint=rules(
            nonzero("a", "the balancing ratio needs A != 0"),
            nonzero("b", "the balancing ratio needs B != 0"),
            nonzero("c", "the balancing ratio needs C != 0"),
            nonzero("d", "the balancing ratio needs D != 0"),
            nonzero("z", "the balancing ratio needs E != 0"),
            not_one("d", "(D)_n in a denominator vanishes"),
            not_one("z", "(E)_N in a denominator vanishes"),
            _sears_g_not_one,
            _sears_g2_not_one,
            _sears_debc_not_one,
        ),
        domain=all_nonzero("a", "b", "c", "d", "z"),
    )


def _sears_g_not_one(env: ParamEnv):
    if env.get("a") * env.get("b") * env.get("c") == env.get("d") * env.get("z"):
        return "ABC = DE: the balanced-column factor (1 - DE/(ABC)) vanishes"
    return None


def _sears_g2_not_one(env: ParamEnv):
    if env.get("a") == env.get("z"):
        return "A = E: the rewritten lower column (q^{N-n} E/A)_n hits a zero factor"
    return None


def _sears_debc_not_one(env: ParamEnv):
    if env.get("d") * env.get("z") == env.get("b") * env.get("c"):
        return "DE = BC: (DE/(BC))_n in a denominator vanishes"
    return None


def _r38() -> Identity:
    def lhs(env, N, T):
        w, x = env.get("a"), env.get("b")
        total = QSeries.zero(T)
        for n in range(0, N + 1):
            t = QSeries.one(T)
            for k in range(0, n):
                t = t * (QSeries.monomial(x, N, T) - QSeries.monomial(1, k, T))
            total = total + t.scale(w**n)
        return total

    def rhs(env, N, T):
        w, x = env.get("a"), env.get("b")
        total = QSeries.zero(T)
        for n in range(0, N + 1):
            t = poch(x, N - n + 1, n, T)
            t = t.scale(rat(-1) ** n * w**n).shift(n * (n - 1) // 2)
            total = total + t
        return total

    return Identity(
        id="R38",
        title="Pochhammer inversion rule, in denominator-cleared form",
        statement=(
            "prod_{k=0}^{n-1} (x q^N - q^k) = (-1)^n q^{n(n-1)/2} (x q^{N-n+1})_n "
            "for 0 <= n <= N, instances combined with weight w^n"
        ),
        params=("a", "b"),
        kind=FINITE,
        sides=(("lhs", lhs), ("rhs", rhs)),
        domain=all_nonzero("a", "b"),
    )


def _r39() -> Identity:
    def lhs(env, N, T):
        a, b, c, t_par = env.get("a"), env.get("b"), env.get("c"), env.get("d")
        total = QSeries.zero(T)
        for n in range(0, N + 1):
            t = poch(a, 0, n, T) * poch(b, 0, n, T)
            t = t * poch(1, N - n + 1, n, T)
            t = t.scale(t_par**n)
            t = div_poch(t, c, 0, n)
            t = div_poch(t, 1, 1, n)
            t = div_poch(t, t_par, N - n, n)
            total = total + t
        return total

    def rhs(env, N, T):
        a, b, c, t_par = env.get("a"), env.get("b"), env.get("c"), env.get("d")
        total = QSeries.zero(T)
        for n in range(0, N + 1):
            t = poch(a * b * t_par / c, 0, n, T) * poch(b, 0, n, T)
            t = t * poch(1, N - n + 1, n, T)
            t = t.scale((c / b) ** n)
            t = div_poch(t, b * t_par, 0, n)
            t = div_poch(t, 1, 1, n)
            t = div_poch(t, c / b, N - n, n)
            total = total + t
        prefactor = poch(c / b, 0, N, T) * poch(b * t_par, 0, N, T)
        prefactor = div_poch(prefactor, c, 0, N)
        prefactor = div_poch(prefactor, t_par, 0, N)
        return prefactor * total

    return Identity(
        id="R39",
        title="finite Heine transformation of a terminating 3-phi-2",
        statement=(
            "sum_{n=0}^{N} (q^{-N})_n (a)_n (b)_n q^n / ((c)_n (q^{1-N}/t)_n (q)_n) "
            "= (c/b)_N (bt)_N / ((c)_N (t)_N) "
            "* sum_{n=0}^{N} (q^{-N})_n (abt/c)_n (b)_n q^n "
            "/ ((bq^{1-N}/c)_n (bt)_n (q)_n), "
            "with the q^{-N} factors eliminated via the inversion rule"
        ),
        params=("a", "b", "c", "d"),
        kind=FINITE,
        sides=(("lhs", lhs), ("rhs", rhs)),
        constraint=rules(
            nonzero("b", "the ratio c/b is undefined"),
            nonzero("c", "the ratio b/c is undefined"),
            nonzero("d", "the rewritten lower column (t q^{N-n})_n needs t != 0"),
            not_one("c", "(c)_n in a denominator vanishes"),
            not_one("d", "(t)_N and (t q^{N-n})_n in denominators vanish"),
            _r39_bt_not_one,
            distinct("b", "c", "the rewritten lower column (q^{N-n} c/b)_n hits a zero factor"),
        ),
        domain=all_nonzero("a", "b", "c", "d"),
    )


def _r39_bt_not_one(env: ParamEnv):
    if env.get("b") * env.get("d") == 1:
        return "b*t = 1: (bt)_n in a denominator vanishes"
    return None


def _r40() -> Identity:
    def lhs(env, N, T):
        alpha, beta, gamma, z = env.get("a"), env.get("b"), env.get("c"), env.get("d")
        return scalar_phi_with_tail([alpha, beta], [gamma], z, T)

    def rhs(env, N, T):
        alpha, beta, gamma, z = env.get("a"), env.get("b"), env.get("c"), env.get("d")
        inner = scalar_phi_with_tail([gamma / beta, z], [alpha * z], beta, T)
        prefactor = poch(beta, 0, None, T) * poch(alpha * z, 0, None, T)
        prefactor = div_poch(prefactor, gamma, 0, None)
        prefactor = div_poch(prefactor, z, 0, None)
        return prefactor * inner

    return Identity(
        id="R40",
        title="Heine transformation of a 2-phi-1",
        statement=(
            "2phi1(alpha, beta; gamma; z) = (beta)_inf (alpha z)_inf "
            "/ ((gamma)_inf (z)_inf) * 2phi1(gamma/beta, z; alpha z; beta)"
        ),
        params=("a", "b", "c", "d"),
        kind=INFINITE,
        sides=(("lhs", lhs), ("rhs", rhs)),
        constraint=rules(
            nonzero("b", "the ratio gamma/beta is undefined"),
            not_one("b", "the transformed series' geometric tail diverges at beta = 1"),
            not_one("c", "(gamma)_n in a denominator vanishes"),
            not_one("d", "(z)_inf in a denominator vanishes and the tail diverges"),
            _r40_alpha_z_not_one,
        ),
        domain=domain_all(
            inside_unit("b", "d"),
            all_nonzero("b"),
            lambda env: abs(env.get("c")) < abs(env.get("b")),
        ),
    )


def _r40_alpha_z_not_one(env: ParamEnv):
    if env.get("a") * env.get("d") == 1:
        return "alpha*z = 1: (alpha z)_n in a denominator vanishes"
    return None


def _r41() -> Identity:
    def lhs(env, N, T):
        alpha, beta, gamma, z = env.get("a"), env.get("b"), env.get("c"), env.get("d")
        return scalar_phi_with_tail([alpha, beta], [gamma], z, T)

    def rhs(env, N, T):
        alpha, beta, gamma, z = env.get("a"), env.get("b"), env.get("c"), env.get("d")
        inner = phi_series(
            [QMonomial(alpha, 0), QMonomial(gamma / beta, 0)],
            [QMonomial(gamma, 0), QMonomial(alpha * z, 0)],
            QMonomial(beta * z, 0),
            None,
            T,
        )
        prefactor = div_poch(poch(alpha * z, 0, None, T), z, 0, None)
        return prefactor * inner

    return Identity(
        id="R41",
        title="Jackson transformation of a 2-phi-1 into a 2-phi-2",
        statement=(
            "sum_{n>=0} (alpha)_n (beta)_n z^n / ((gamma)_n (q)_n) "
            "= ((alpha z)_inf/(z)_inf) sum_{n>=0} (alpha)_n (gamma/beta)_n "
            "(-beta z)^n q^{n(n-1)/2} / ((gamma)_n (alpha z)_n (q)_n)"
        ),
        params=("a", "b", "c", "d"),
        kind=INFINITE,
        sides=(("lhs", lhs), ("rhs", rhs)),
        constraint=rules(
            nonzero("b", "the ratio gamma/beta is undefined"),
            not_one("c", "(gamma)_n in a denominator vanishes"),
            not_one("d", "(z)_inf in a denominator vanishes and the tail diverges"),
            _r40_alpha_z_not_one,
        ),
        domain=domain_all(inside_unit("d"), all_nonzero("b", "d")),
    )


def _r42() -> Identity:
    def lhs(env, N, T):
        total = QSeries.zero(T)
        for k in range(1, min(N, T) + 1):
            total = total + geometric_fraction(1, k, T)
        return total

    def rhs(env, N, T):
        total = QSeries.zero(T)
        for k in range(1, N + 1):
            e = k * (k + 1) // 2
            if e > T:
                break
            t = q_binomial(N, k, T).scale(rat(-1) ** (k - 1)).shift(e)
            total = total + t.div_binomial(1, k)
        return total

    return Identity(
        id="R42",
        title="van Hamme's alternating harmonic identity",
        statement=(
            "sum_{k=1}^{n} q^k/(1-q^k) "
            "= sum_{k=1}^{n} [n,k] (-1)^{k-1} q^{k(k+1)/2} / (1-q^k)"
        ),
        params=(),
        kind=FINITE,
        sides=(("lhs", lhs), ("rhs", rhs)),
    )


def _r43() -> Identity:
    def lhs(env, N, T):
        x = env.get("a")
        total = QSeries.zero(T)
        for k in range(1, min(N, T) + 1):
            total = total + geometric_fraction(1, k, T)
        for k in range(1, min(N - 1, T) + 1):
            total = total - geometric_fraction(x, k, T)
        return total

    def rhs(env, N, T):
        x = env.get("a")
        head = QSeries.constant(x / (ONE - x), T)
        total = QSeries.zero(T)
        for k in range(1, N + 1):
            t = q_binomial(N, k, T)
            t = t * poch(1 / x, 1, k, T)
            t = t * poch(x, 0, N - k, T)
            t = t.scale(x**k)
            t = t.div_binomial(1, k)
            total = total + t
        return head - div_poch(total, x, 0, N)

    return Identity(
        id="R43",
        title="weighted harmonic-difference summation",
        statement=(
            "sum_{k=1}^{n} q^k/(1-q^k) - sum_{k=1}^{n-1} x q^k/(1-x q^k) "
            "= x/(1-x) - (1/(x)_n) sum_{k=1}^{n} [n,k] (q/x)_k (x)_{n-k} x^k / (1-q^k)"
        ),
        params=("a",),
        kind=FINITE,
        sides=(("lhs", lhs), ("rhs", rhs)),
        constraint=rules(
            nonzero("a", "the quotient argument q/x is undefined"),
            not_one("a", "(x)_n in a denominator vanishes and x/(1-x) has a pole"),
        ),
        domain=all_nonzero("a"),
    )


def _r44() -> Identity:
    def lhs(env, N, T):
        d = env.get("d")
        total = QSeries.zero(T)
        for n in range(1, T + 1):
            total = total + QSeries.monomial(1, n, T).div_binomial(d, n).div_binomial(1, n)
        return total

    def rhs(env, N, T):
        d = env.get("d")

        def term(n):
            t = poch(1, n + 1, None, T).scale(n).shift(n)
            return div_poch(t, d, n, None)

        return truncating_sum(T, 1, lambda n: n, term)

    return Identity(
        id="R44",
        title="Uchimura-type divisor sum generalization",
        statement=(
            "sum_{n>=1} q^n / ((1-d q^n)(1-q^n)) "
            "= sum_{n>=1} n q^n (q^{n+1})_inf / (d q^n)_inf"
        ),
        params=("d",),
        kind=INFINITE,
        sides=(("lhs", lhs), ("rhs", rhs)),
    )


def _r45() -> Identity:
    def lhs(env, N, T):
        d = env.get("d")

        def term(k):
            t = poch(1 / d, 1, k - 1, T).scale(d ** (k - 1)).shift(k)
            return div_poch(t, 1, 1, k)

        return truncating_sum(T, 1, lambda k: k, term)

    def rhs(env, N, T):
        d = env.get("d")
        ratio = div_poch(poch(1, 1, None, T), d, 1, None)
        return (QSeries.one(T) - ratio).scale(ONE / (ONE - d))

    return Identity(
        id="R45",
        title="auxiliary quotient-sum evaluation",
        statement=(
            "sum_{k>=1} d^{k-1} (q/d)_{k-1} q^k / (q)_k "
            "= (1/(1-d)) (1 - (q)_inf/(dq)_inf)"
        ),
        params=("d",),
        kind=INFINITE,
        sides=(("lhs", lhs), ("rhs", rhs)),
        constraint=rules(
            nonzero("d", "the quotient argument q/d is undefined"),
            not_one("d", "the prefactor 1/(1-d) has a pole"),
        ),
        domain=all_nonzero("d"),
    )


def entries() -> list:
    return [_r37(), _r38(), _r39(), _r40(), _r41(), _r42(), _r43(), _r44(), _r45()]
