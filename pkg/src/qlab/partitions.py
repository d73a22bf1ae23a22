"""Brute-force partition enumeration and derived statistics.

Everything here is computed by direct enumeration, deliberately free of
generating functions, so these values can serve as independent oracles
for the series side.  Feasible at desk scale (n up to roughly 40).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterator, Optional, Tuple


class EmptyPartitionError(ValueError):
    """Rank and crank are undefined for the empty partition."""


class AnomalousInputError(ValueError):
    """Statistic not defined at this argument (crank convention at n = 1)."""


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive integers."""

    parts: Tuple[int, ...]

    def __post_init__(self):
        for i, p in enumerate(self.parts):
            if p < 1:
                raise ValueError("parts must be positive")
            if i and self.parts[i - 1] < p:
                raise ValueError("parts must be weakly decreasing")

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def num_parts(self) -> int:
        return len(self.parts)

    @property
    def largest(self) -> int:
        return self.parts[0] if self.parts else 0

    @property
    def smallest(self) -> int:
        return self.parts[-1] if self.parts else 0

    def has_distinct_parts(self) -> bool:
        return len(set(self.parts)) == len(self.parts)


@dataclass(frozen=True)
class SPartitionTriple:
    """Vector partition (pi1, pi2, pi3) with pi1 nonempty into distinct parts
    and smallest-part constraint s(pi1) <= min(s(pi2), s(pi3)), where the
    smallest part of an empty partition counts as +infinity."""

    pi1: Partition
    pi2: Partition
    pi3: Partition
    weight: int

    def __post_init__(self):
        if not self.pi1.parts:
            raise ValueError("pi1 must be nonempty")
        if not self.pi1.has_distinct_parts():
            raise ValueError("pi1 must have distinct parts")
        s1 = self.pi1.smallest
        for other in (self.pi2, self.pi3):
            if other.parts and other.smallest < s1:
                raise ValueError("smallest-part constraint violated")
        if self.weight != (-1) ** (self.pi1.num_parts - 1):
            raise ValueError("weight must be (-1)^(#pi1 - 1)")

    @property
    def n(self) -> int:
        return self.pi1.n + self.pi2.n + self.pi3.n


@dataclass(frozen=True)
class StatisticTable:
    """Integer-valued statistic values indexed by n."""

    statistic: str
    values: Dict[int, int]
    params: Dict[str, object] = field(default_factory=dict)


def partition_tuples(
    n: int, max_part: Optional[int] = None, min_part: int = 1
) -> Iterator[Tuple[int, ...]]:
    """All partitions of n with parts in [min_part, max_part], as tuples,
    in descending lexicographic order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    top = n if max_part is None else min(max_part, n)

    def gen(remaining: int, cap: int) -> Iterator[Tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(cap, remaining), min_part - 1, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return gen(n, top)


def distinct_partition_tuples(
    n: int, max_part: Optional[int] = None
) -> Iterator[Tuple[int, ...]]:
    """Partitions of n into distinct parts, descending lexicographic order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    top = n if max_part is None else min(max_part, n)

    def gen(remaining: int, cap: int) -> Iterator[Tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(cap, remaining), 0, -1):
            for rest in gen(remaining - first, first - 1):
                yield (first,) + rest

    return gen(n, top)


def enumerate_partitions(n: int, max_part: Optional[int] = None) -> Iterator[Partition]:
    """Each partition of n with largest part <= max_part, exactly once."""
    for parts in partition_tuples(n, max_part):
        yield Partition(parts)


def partition_count(n: int, max_part: Optional[int] = None) -> int:
    """p(n), or the restricted count p(n, N) when max_part = N."""
    return sum(1 for _ in partition_tuples(n, max_part))


def spt(n: int, max_part: Optional[int] = None) -> int:
    """Total multiplicity of the smallest part over the counted partitions."""
    if n < 1:
        raise ValueError("n must be positive")
    total = 0
    for parts in partition_tuples(n, max_part):
        smallest = parts[-1]
        total += parts.count(smallest)
    return total


def rank(p: Partition) -> int:
    """Dyson's rank: largest part minus number of parts."""
    if not p.parts:
        raise EmptyPartitionError("rank of the empty partition")
    return p.parts[0] - len(p.parts)


def crank(p: Partition) -> int:
    """Dyson's crank: the largest part if there are no ones, otherwise
    mu - omega with omega the number of ones and mu the number of parts
    exceeding omega."""
    if not p.parts:
        raise EmptyPartitionError("crank of the empty partition")
    omega = p.parts.count(1)
    if omega == 0:
        return p.parts[0]
    mu = sum(1 for part in p.parts if part > omega)
    return mu - omega


def _statistic(kind: str):
    if kind == "rank":
        return rank
    if kind == "crank":
        return crank
    raise ValueError(f"unknown statistic kind: {kind!r}")


def moment(kind: str, j: int, n: int, positive_only: bool) -> int:
    """sum_k k^j N(k, n) (rank) or k^j M(k, n) (crank), over k >= 1 when
    positive_only, else over all k."""
    if n < 1:
        raise ValueError("n must be positive")
    if j < 0:
        raise ValueError("moment order must be non-negative")
    stat = _statistic(kind)
    total = 0
    for parts in partition_tuples(n):
        k = stat(Partition(parts))
        if positive_only and k < 1:
            continue
        total += k**j
    return total


def ospt(n: int) -> int:
    """First positive crank moment minus first positive rank moment.

    n = 1 is excluded: the combinatorial crank of (1) is -1 while the
    generating-function convention assigns M(-1,1) = M(1,1) = 1 and
    M(0,1) = -1, so the two sides of any crank comparison disagree there.
    """
    if n < 2:
        raise AnomalousInputError("ospt is handled only for n >= 2")
    return moment("crank", 1, n, True) - moment("rank", 1, n, True)


def self_conjugate_s_partitions(n: int) -> Iterator[SPartitionTriple]:
    """Triples (pi1, pi2, pi2) of total size n satisfying the S-constraint."""
    if n < 1:
        raise ValueError("n must be positive")
    for m1 in range(1, n + 1):
        rest = n - m1
        if rest % 2:
            continue
        m2 = rest // 2
        for parts1 in distinct_partition_tuples(m1):
            s1 = parts1[-1]
            pi1 = Partition(parts1)
            weight = (-1) ** (len(parts1) - 1)
            for parts2 in partition_tuples(m2, min_part=s1):
                pi2 = Partition(parts2)
                yield SPartitionTriple(pi1, pi2, pi2, weight)


def n_sc(n: int) -> int:
    """Weighted count of self-conjugate S-partitions of n."""
    return sum(t.weight for t in self_conjugate_s_partitions(n))


def overlined_largest_sum(n: int) -> int:
    """Over all overpartitions of n whose largest part is overlined, the sum
    of largest parts, each overpartition contributing its largest part once.

    An overpartition may overline the final occurrence of any part value,
    so a partition with v distinct values yields 2^(v-1) overpartitions
    with the largest value overlined.
    """
    if n < 1:
        raise ValueError("n must be positive")
    total = 0
    for parts in partition_tuples(n):
        values = len(set(parts))
        total += parts[0] * 2 ** (values - 1)
    return total


_TABLE_STATS = (
    "p",
    "p_restricted",
    "spt",
    "spt_restricted",
    "rank_moment",
    "crank_moment",
    "ospt",
    "n_sc",
    "overlined_largest_sum",
)


def statistic_table(
    statistic: str,
    max_n: int,
    max_part: Optional[int] = None,
    j: int = 1,
    positive_only: bool = True,
) -> StatisticTable:
    """Tabulate one of the named partition statistics for 1 <= n <= max_n."""
    if statistic not in _TABLE_STATS:
        raise ValueError(
            f"unknown statistic {statistic!r}; choose from {', '.join(_TABLE_STATS)}"
        )
    values: Dict[int, int] = {}
    params: Dict[str, object] = {}
    for n in range(1, max_n + 1):
        if statistic == "p":
            values[n] = partition_count(n)
        elif statistic == "p_restricted":
            values[n] = partition_count(n, max_part)
        elif statistic == "spt":
            values[n] = spt(n)
        elif statistic == "spt_restricted":
            values[n] = spt(n, max_part)
        elif statistic == "rank_moment":
            values[n] = moment("rank", j, n, positive_only)
        elif statistic == "crank_moment":
            values[n] = moment("crank", j, n, positive_only)
        elif statistic == "ospt":
            if n >= 2:
                values[n] = ospt(n)
        elif statistic == "n_sc":
            values[n] = n_sc(n)
        elif statistic == "overlined_largest_sum":
            values[n] = overlined_largest_sum(n)
    if statistic in ("p_restricted", "spt_restricted"):
        params["max_part"] = max_part
    if statistic in ("rank_moment", "crank_moment"):
        params["j"] = j
        params["positive_only"] = positive_only
    return StatisticTable(statistic, values, params)
