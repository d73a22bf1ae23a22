import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qlab.partitions import (
    AnomalousInputError,
    EmptyPartitionError,
    Partition,
    SPartitionTriple,
    crank,
    enumerate_partitions,
    moment,
    n_sc,
    ospt,
    overlined_largest_sum,
    partition_count,
    rank,
    self_conjugate_s_partitions,
    spt,
    statistic_table,
)


def test_enumerate_zero_gives_empty_partition():
    assert [p.parts for p in enumerate_partitions(0)] == [()]


def test_enumerate_four_unbounded():
    listed = [p.parts for p in enumerate_partitions(4)]
    assert listed == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_enumerate_four_bounded():
    listed = [p.parts for p in enumerate_partitions(4, max_part=2)]
    assert listed == [(2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))


def test_spt_values():
    assert spt(1) == 1
    assert spt(4) == 10
    assert spt(4, max_part=2) == 8


def test_rank_and_crank_examples():
    assert rank(Partition((3, 1))) == 1
    assert crank(Partition((4,))) == 4
    assert crank(Partition((2, 1, 1))) == -2
    with pytest.raises(EmptyPartitionError):
        rank(Partition(()))
    with pytest.raises(EmptyPartitionError):
        crank(Partition(()))


def test_moments():
    # ranks of the partitions of 4 are 3, 1, 0, -1, -3
    assert moment("rank", 2, 4, positive_only=False) == 20
    # zeroth moment counts partitions
    for n in (3, 5, 8):
        assert moment("rank", 0, n, positive_only=False) == partition_count(n)
        assert moment("crank", 0, n, positive_only=False) == partition_count(n)
    # cranks of the partitions of 4 are 4, 2, 0, -2, -4: positive first moment 6
    assert moment("crank", 1, 4, positive_only=True) == 6


def test_ospt_values():
    assert ospt(2) == 1
    assert ospt(3) == 1
    assert ospt(4) > 0
    with pytest.raises(AnomalousInputError):
        ospt(1)


def test_s_partition_conventions():
    # the single triple of size 1: ((1), empty, empty), weight +1
    triples = list(self_conjugate_s_partitions(1))
    assert len(triples) == 1
    assert triples[0].pi1.parts == (1,) and triples[0].weight == 1
    assert n_sc(1) == 1
    assert n_sc(2) == 1
    with pytest.raises(ValueError):
        SPartitionTriple(Partition(()), Partition(()), Partition(()), 1)
    with pytest.raises(ValueError):
        # smallest part of pi2 below smallest of pi1
        SPartitionTriple(Partition((2,)), Partition((1,)), Partition((1,)), 1)


def test_overlined_largest_sum_values():
    assert overlined_largest_sum(1) == 1
    assert overlined_largest_sum(4) == 17


def test_statistic_table_dispatch():
    table = statistic_table("spt", 6)
    assert table.values[4] == 10
    table = statistic_table("ospt", 4)
    assert 1 not in table.values and table.values[2] == 1
    with pytest.raises(ValueError):
        statistic_table("nope", 5)


# -- structural invariants ----------------------------------------------------


@pytest.mark.parametrize("n", range(1, 16))
def test_rank_and_crank_counts_sum_to_p(n):
    assert moment("rank", 0, n, False) == partition_count(n)
    assert moment("crank", 0, n, False) == partition_count(n)


@pytest.mark.parametrize("n", range(1, 16))
def test_rank_symmetry_and_vanishing_odd_moments(n):
    counts = {}
    for p in enumerate_partitions(n):
        k = rank(p)
        counts[k] = counts.get(k, 0) + 1
    for k, c in counts.items():
        assert counts.get(-k, 0) == c
    assert moment("rank", 1, n, positive_only=False) == 0


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 12), st.integers(1, 14))
def test_restricted_count_monotone_and_stabilizing(n, bound):
    assert partition_count(n, bound) <= partition_count(n, bound + 1)
    if bound >= n:
        assert partition_count(n, bound) == partition_count(n)
        assert spt(n, bound) == spt(n)


def test_n_sc_matches_series_coefficients():
    from qlab.identities.spt_family import n_sc_generating_function

    series = n_sc_generating_function(12)
    for n in range(1, 13):
        assert n_sc(n) == series[n], f"n_sc mismatch at n={n}"


def test_overlined_largest_matches_series_coefficients():
    from qlab.identities.spt_family import overlined_largest_series

    series = overlined_largest_series(20)
    for n in range(1, 21):
        assert overlined_largest_sum(n) == series[n]
