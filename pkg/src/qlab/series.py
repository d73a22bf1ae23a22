"""Exact truncated formal power series in q.

A QSeries holds the coefficients of q^0 .. q^T for a fixed truncation
order T; all arithmetic is exact over arbitrary-precision rationals.
Binary operations on series of different truncation orders first
truncate to the shorter one, and equality means coefficient-wise
equality up to the common order.

Multiplication and division by a single Pochhammer factor (1 - c*q^e)
have dedicated O(T) paths; q-Pochhammer symbols, Gaussian binomials and
the generic basic hypergeometric summation loop are built on top of
them.  Values are immutable and safe to share between workers.
"""

from __future__ import annotations

from typing import Callable, Iterable, NamedTuple, Optional, Sequence, Union

from .rational import ONE, ZERO, Rat, rat


class ZeroConstantTermError(ZeroDivisionError):
    """Inversion of a series whose constant term is zero."""


class PoleInTermRangeError(ZeroDivisionError):
    """A hypergeometric denominator factor vanishes inside the summed range."""


class QMonomial(NamedTuple):
    """coefficient * q^exponent, the argument form of Pochhammer factors."""

    coeff: Rat
    exp: int


Scalar = Union[int, Rat]


class QSeries:
    """Truncated power series sum_{n=0}^{T} coeffs[n] * q^n."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Rat]):
        c = tuple(coeffs)
        if not c:
            raise ValueError("a series needs at least the q^0 coefficient")
        self._coeffs = c

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "QSeries":
        return cls([ZERO] * (order + 1))

    @classmethod
    def one(cls, order: int) -> "QSeries":
        return cls.constant(ONE, order)

    @classmethod
    def constant(cls, value: Scalar, order: int) -> "QSeries":
        c = [ZERO] * (order + 1)
        c[0] = rat(1) * value
        return cls(c)

    @classmethod
    def monomial(cls, coeff: Scalar, exp: int, order: int) -> "QSeries":
        if exp < 0:
            raise ValueError("q-exponent must be non-negative")
        c = [ZERO] * (order + 1)
        if exp <= order:
            c[exp] = rat(1) * coeff
        return cls(c)

    # -- basic accessors ----------------------------------------------

    @property
    def order(self) -> int:
        """Highest q-exponent carried exactly (the truncation order T)."""
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    def __getitem__(self, n: int) -> Rat:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient q^{n} outside truncation order {self.order}")
        return self._coeffs[n]

    @property
    def constant_term(self) -> Rat:
        return self._coeffs[0]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self._coeffs)

    def truncate(self, order: int) -> "QSeries":
        if order < 0:
            raise ValueError("truncation order must be non-negative")
        if order >= self.order:
            return self
        return QSeries(self._coeffs[: order + 1])

    # -- ring operations ----------------------------------------------

    def _common(self, other: "QSeries") -> int:
        return min(self.order, other.order)

    def __add__(self, other: "QSeries") -> "QSeries":
        if not isinstance(other, QSeries):
            return NotImplemented
        t = self._common(other)
        a, b = self._coeffs, other._coeffs
        return QSeries([a[n] + b[n] for n in range(t + 1)])

    def __sub__(self, other: "QSeries") -> "QSeries":
        if not isinstance(other, QSeries):
            return NotImplemented
        t = self._common(other)
        a, b = self._coeffs, other._coeffs
        return QSeries([a[n] - b[n] for n in range(t + 1)])

    def __neg__(self) -> "QSeries":
        return QSeries([-c for c in self._coeffs])

    def __mul__(self, other: Union["QSeries", Scalar]) -> "QSeries":
        if isinstance(other, QSeries):
            t = self._common(other)
            a, b = self._coeffs, other._coeffs
            out = [ZERO] * (t + 1)
            for i in range(t + 1):
                ai = a[i]
                if ai == 0:
                    continue
                for j in range(t + 1 - i):
                    bj = b[j]
                    if bj != 0:
                        out[i + j] += ai * bj
            return QSeries(out)
        return self.scale(other)

    def __rmul__(self, other: Scalar) -> "QSeries":
        return self.scale(other)

    def __pow__(self, n: int) -> "QSeries":
        if n < 0:
            return self.inverse() ** (-n)
        result = QSeries.one(self.order)
        for _ in range(n):
            result = result * self
        return result

    def scale(self, value: Scalar) -> "QSeries":
        return QSeries([c * value for c in self._coeffs])

    def shift(self, exp: int) -> "QSeries":
        """Multiply by q^exp, keeping the truncation order."""
        if exp < 0:
            raise ValueError("q-exponent must be non-negative")
        t = self.order
        out = [ZERO] * (t + 1)
        for n in range(t + 1 - exp):
            out[n + exp] = self._coeffs[n]
        return QSeries(out)

    def inverse(self) -> "QSeries":
        """Multiplicative inverse: self * self.inverse() == 1 up to T."""
        c0 = self._coeffs[0]
        if c0 == 0:
            raise ZeroConstantTermError("cannot invert a series with zero constant term")
        t = self.order
        inv0 = ONE / c0
        out = [ZERO] * (t + 1)
        out[0] = inv0
        a = self._coeffs
        for n in range(1, t + 1):
            acc = ZERO
            for j in range(1, n + 1):
                aj = a[j]
                if aj != 0:
                    acc += aj * out[n - j]
            out[n] = -inv0 * acc
        return QSeries(out)

    # -- single-factor fast paths --------------------------------------

    def mul_binomial(self, coeff: Scalar, exp: int) -> "QSeries":
        """self * (1 - coeff*q^exp) in O(T)."""
        if coeff == 0 or exp > self.order:
            return self
        if exp < 0:
            raise ValueError("q-exponent must be non-negative")
        a = self._coeffs
        t = self.order
        if exp == 0:
            factor = ONE - rat(1) * coeff
            return self.scale(factor)
        out = list(a)
        for n in range(exp, t + 1):
            out[n] = out[n] - coeff * a[n - exp]
        return QSeries(out)

    def div_binomial(self, coeff: Scalar, exp: int) -> "QSeries":
        """self / (1 - coeff*q^exp) in O(T)."""
        if coeff == 0 or exp > self.order:
            return self
        if exp < 0:
            raise ValueError("q-exponent must be non-negative")
        t = self.order
        if exp == 0:
            factor = ONE - rat(1) * coeff
            if factor == 0:
                raise ZeroConstantTermError("division by (1 - c) with c = 1")
            return self.scale(ONE / factor)
        out = list(self._coeffs)
        for n in range(exp, t + 1):
            out[n] = out[n] + coeff * out[n - exp]
        return QSeries(out)

    # -- comparison & display -------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        t = self._common(other)
        return all(self._coeffs[n] == other._coeffs[n] for n in range(t + 1))

    def __ne__(self, other: object) -> bool:
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    __hash__ = None  # equality is up-to-common-order, not hashable

    def first_difference(self, other: "QSeries") -> Optional[int]:
        """Lowest order where the two series disagree, or None."""
        t = self._common(other)
        for n in range(t + 1):
            if self._coeffs[n] != other._coeffs[n]:
                return n
        return None

    def __repr__(self) -> str:
        terms = []
        for n, c in enumerate(self._coeffs):
            if c == 0:
                continue
            if n == 0:
                terms.append(str(c))
            elif n == 1:
                terms.append(f"({c})*q")
            else:
                terms.append(f"({c})*q^{n}")
            if len(terms) >= 6:
                terms.append("...")
                break
        body = " + ".join(terms) if terms else "0"
        return f"QSeries({body} + O(q^{self.order + 1}))"


# -- spec-facing operation names ----------------------------------------


def series_add(x: QSeries, y: QSeries) -> QSeries:
    return x + y


def series_mul(x: QSeries, y: QSeries) -> QSeries:
    return x * y


def series_inverse(x: QSeries) -> QSeries:
    return x.inverse()


# -- q-Pochhammer symbols -------------------------------------------------


def poch(coeff: Scalar, exp: int, n: Optional[int], order: int) -> QSeries:
    """(c*q^e; q)_n = prod_{k=0}^{n-1} (1 - c*q^{e+k}), truncated at `order`.

    n = None means the infinite product; factors with e+k > order are
    identically 1 + O(q^{order+1}) and are skipped either way.
    """
    if exp < 0:
        raise ValueError("q-exponent must be non-negative")
    if n is not None and n < 0:
        raise ValueError("Pochhammer length must be non-negative")
    result = QSeries.one(order)
    k = 0
    while (n is None or k < n) and exp + k <= order:
        result = result.mul_binomial(coeff, exp + k)
        k += 1
    return result


def div_poch(s: QSeries, coeff: Scalar, exp: int, n: Optional[int]) -> QSeries:
    """s / (c*q^e; q)_n, with the same truncation conventions as poch."""
    if exp < 0:
        raise ValueError("q-exponent must be non-negative")
    order = s.order
    k = 0
    while (n is None or k < n) and exp + k <= order:
        s = s.div_binomial(coeff, exp + k)
        k += 1
    return s


def poch_step(coeff: Scalar, exp: int, step: int, n: Optional[int], order: int) -> QSeries:
    """prod_{k=0}^{n-1} (1 - c*q^{e+k*step}); base-q^step Pochhammer."""
    if step <= 0:
        raise ValueError("step must be positive")
    result = QSeries.one(order)
    k = 0
    while (n is None or k < n) and exp + k * step <= order:
        result = result.mul_binomial(coeff, exp + k * step)
        k += 1
    return result


def pochhammer(x: QMonomial, n: Optional[int], order: int) -> QSeries:
    """(x; q)_n for a monomial argument x = coeff*q^exp."""
    return poch(x.coeff, x.exp, n, order)


# -- Gaussian binomials ---------------------------------------------------

_QBIN_CACHE: dict = {}


def _qbin_poly(N: int, n: int) -> tuple:
    """Integer coefficient tuple of the Gaussian binomial [N, n]."""
    if n < 0 or n > N:
        return (0,)
    if n == 0 or n == N:
        return (1,)
    key = (N, n)
    cached = _QBIN_CACHE.get(key)
    if cached is not None:
        return cached
    # Pascal recurrence [N, n] = [N-1, n-1] + q^n * [N-1, n]
    left = _qbin_poly(N - 1, n - 1)
    right = _qbin_poly(N - 1, n)
    size = max(len(left), n + len(right))
    out = [0] * size
    for i, v in enumerate(left):
        out[i] += v
    for i, v in enumerate(right):
        out[i + n] += v
    result = tuple(out)
    _QBIN_CACHE[key] = result
    return result


def q_binomial(N: int, n: int, order: int) -> QSeries:
    """The Gaussian binomial [N, n] as an exact polynomial, truncated.

    Computed by the Pascal recurrence (never series division), so the
    coefficients are non-negative integers; [N, n] = 0 outside 0 <= n <= N.
    """
    poly = _qbin_poly(N, n)
    c = [ZERO] * (order + 1)
    for i, v in enumerate(poly):
        if i > order:
            break
        c[i] = rat(v)
    return QSeries(c)


# -- generic basic hypergeometric summation --------------------------------


def phi_series(
    numerators: Sequence[QMonomial],
    denominators: Sequence[QMonomial],
    argument: QMonomial,
    terms: Optional[int],
    order: int,
) -> QSeries:
    """Truncated basic hypergeometric sum in the standard convention:

        sum_k  prod_i (num_i; q)_k / (prod_j (den_j; q)_k (q; q)_k)
               * [(-1)^k q^(k(k-1)/2)]^(1+s-r) * argument^k

    with r = len(numerators), s = len(denominators).  When terms is
    None the summation stops once the minimal q-order of the general
    term exceeds the truncation order; that needs a growing term order,
    i.e. argument.exp >= 1 or s >= r.
    """
    r, s = len(numerators), len(denominators)
    weight = 1 + s - r
    if weight < 0:
        raise ValueError("series with r > s + 1 are not used by this laboratory")
    if terms is None and argument.exp < 1 and weight < 1 and argument.coeff != 0:
        raise ValueError(
            "automatic termination needs a term order that grows with k; "
            "pass an explicit term count"
        )

    total = QSeries.one(order)  # k = 0 term
    term = QSeries.one(order)
    k = 1
    while True:
        if terms is not None and k > terms:
            break
        min_order = k * argument.exp
        if weight > 0:
            min_order += weight * (k * (k - 1)) // 2
        if terms is None and min_order > order:
            break
        if argument.coeff == 0:
            break
        # term_k = term_{k-1} * prod(1 - num*q^{k-1}) / prod(1 - den*q^{k-1})
        #          / (1 - q^k) * argument * [(-1) q^{k-1}]^weight
        for mono in numerators:
            term = term.mul_binomial(mono.coeff, mono.exp + k - 1)
        for mono in denominators:
            if mono.exp + k - 1 == 0 and mono.coeff == 1:
                raise PoleInTermRangeError(
                    f"denominator factor (1 - q^0) vanishes at k = {k}"
                )
            term = term.div_binomial(mono.coeff, mono.exp + k - 1)
        term = term.div_binomial(1, k)
        term = term.scale(argument.coeff).shift(argument.exp)
        if weight > 0:
            w_coeff = rat(-1) ** weight
            term = term.scale(w_coeff).shift(weight * (k - 1))
        total = total + term
        k += 1
    return total


# -- small closed forms used by identity builders ---------------------------


def geometric_fraction(coeff: Scalar, exp: int, order: int) -> QSeries:
    """c*q^e / (1 - c*q^e) exactly; a constant series when e = 0 (needs c != 1)."""
    if exp < 0:
        raise ValueError("q-exponent must be non-negative")
    if exp == 0:
        denom = ONE - rat(1) * coeff
        if denom == 0:
            raise ZeroConstantTermError("x/(1-x) undefined at x = 1")
        return QSeries.constant(coeff / denom, order)
    c = [ZERO] * (order + 1)
    power = ONE
    for i in range(1, order // exp + 1):
        power = power * coeff
        c[i * exp] = power
    return QSeries(c)


def geometric_fraction_squared(coeff: Scalar, exp: int, order: int) -> QSeries:
    """c*q^e / (1 - c*q^e)^2 = sum_{i>=1} i c^i q^{ie} (constant for e = 0)."""
    if exp < 0:
        raise ValueError("q-exponent must be non-negative")
    if exp == 0:
        denom = ONE - rat(1) * coeff
        if denom == 0:
            raise ZeroConstantTermError("x/(1-x)^2 undefined at x = 1")
        return QSeries.constant(coeff / (denom * denom), order)
    c = [ZERO] * (order + 1)
    power = ONE
    for i in range(1, order // exp + 1):
        power = power * coeff
        c[i * exp] = i * power
    return QSeries(c)


def geometric_tail(x: Rat, start: int) -> Rat:
    """sum_{n >= start} x^n = x^start / (1 - x); needs x != 1."""
    denom = ONE - x
    if denom == 0:
        raise ZeroConstantTermError("geometric tail diverges at ratio 1")
    return x**start / denom


def arithmetic_geometric_tail(x: Rat, start: int) -> Rat:
    """sum_{n >= start} n * x^n; needs x != 1."""
    denom = ONE - x
    if denom == 0:
        raise ZeroConstantTermError("geometric tail diverges at ratio 1")
    return x**start * (rat(start) / denom + x / (denom * denom))
