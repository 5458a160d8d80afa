"""Plain partition machinery: counting, conjugation, rim, statistics."""

import pytest
from hypothesis import given
import hypothesis.strategies as st

from copa.errors import InvalidPartitionError
from copa.partitions import (
    as_partition,
    conjugate,
    diversity,
    divisor_count,
    divisor_count_in_class,
    enumerate_partitions,
    enumerate_restricted,
    format_partition,
    parse_partition,
    partition_count,
    partition_statistics,
    perimeter,
    rim_cells,
)

from oracles import brute_partition_count, brute_partitions

partitions = st.lists(st.integers(1, 30), max_size=12).map(
    lambda xs: tuple(sorted(xs, reverse=True))
)


def test_partition_count_against_dp():
    for n in range(121):
        assert partition_count(n) == brute_partition_count(n)


def test_partition_count_known_values():
    assert partition_count(12) == 77
    assert partition_count(100) == 190569292
    with pytest.raises(InvalidPartitionError):
        partition_count(-3)


def test_enumerate_partitions_complete():
    for n in range(13):
        listed = list(enumerate_partitions(n))
        assert len(listed) == partition_count(n)
        assert set(listed) == set(brute_partitions(n))
        assert len(set(listed)) == len(listed)


def test_as_partition_validates():
    assert as_partition([5, 3, 1]) == (5, 3, 1)
    assert as_partition(()) == ()
    with pytest.raises(InvalidPartitionError):
        as_partition([1, 5, 3])  # ordering is the caller's job
    with pytest.raises(InvalidPartitionError):
        as_partition([2, -1])
    with pytest.raises(InvalidPartitionError):
        as_partition([2, 0])
    assert as_partition([2, 0], allow_zero_parts=True) == (2, 0)


def test_conjugate_example():
    assert conjugate((5, 5, 4, 4, 4, 2, 2)) == (7, 7, 5, 5, 2)
    assert conjugate(()) == ()
    with pytest.raises(InvalidPartitionError):
        conjugate((3, 0))


@given(partitions)
def test_conjugate_involution(parts):
    assert conjugate(conjugate(parts)) == parts
    assert sum(conjugate(parts)) == sum(parts)


def test_rim_cells_frozen():
    assert rim_cells((8, 6, 5, 5, 3, 3)) == [
        (1, 8), (1, 7), (1, 6),
        (2, 6), (2, 5),
        (3, 5),
        (4, 5), (4, 4), (4, 3),
        (5, 3),
        (6, 3), (6, 2), (6, 1),
    ]
    assert rim_cells(()) == []
    assert rim_cells((1,)) == [(1, 1)]


def test_rim_length_is_perimeter():
    # perimeter = largest part + number of parts - 1
    for n in range(1, 13):
        for parts in enumerate_partitions(n):
            assert perimeter(parts) == parts[0] + len(parts) - 1
            assert len(rim_cells(parts)) == perimeter(parts)


def test_diversity():
    assert diversity(()) == 0
    assert diversity((5, 5, 3, 1, 1, 1)) == 3


def test_statistics_small_values():
    s3 = partition_statistics(3)
    assert (s3.total_parts, s3.sum_largest_parts, s3.sum_perimeters) == (6, 6, 9)
    assert (s3.parts_of_size_one, s3.diversity_sum, s3.spt) == (4, 4, 5)
    s4 = partition_statistics(4)
    assert (s4.total_parts, s4.sum_largest_parts, s4.sum_perimeters) == (12, 12, 19)
    assert (s4.parts_of_size_one, s4.diversity_sum, s4.spt) == (7, 7, 10)


def test_statistics_identities():
    """Conjugation swaps part count with largest part, and the perimeter
    of each partition is largest + count - 1."""
    for n in range(1, 41):
        s = partition_statistics(n)
        assert s.total_parts == s.sum_largest_parts
        assert s.sum_perimeters == s.total_parts + s.sum_largest_parts - partition_count(n)
        assert s.total_parts == sum(
            divisor_count(k) * partition_count(n - k) for k in range(1, n + 1)
        )


def test_ones_count_equals_diversity_sum():
    for n in range(1, 31):
        s = partition_statistics(n)
        assert s.parts_of_size_one == s.diversity_sum


def test_enumerate_restricted_congruence_class():
    listed = list(enumerate_restricted(12, 1, 4))
    assert sorted(listed) == sorted(
        [(9, 1, 1, 1), (5, 5, 1, 1), (5, 1, 1, 1, 1, 1, 1, 1), (1,) * 12]
    )
    # parts congruent to 3 mod 4 and at least 3
    assert set(enumerate_restricted(12, 3, 4, min_part=3)) == {(3, 3, 3, 3)}
    assert list(enumerate_restricted(0, 1, 2)) == [()]
    assert list(enumerate_restricted(2, 1, 2)) == [(1, 1)]


def test_enumerate_restricted_fixed_length_with_zeros():
    listed = set(
        enumerate_restricted(2, 0, 1, min_part=0, exact_num_parts=3, allow_zero_parts=True)
    )
    assert listed == {(2, 0, 0), (1, 1, 0)}
    # residue equal to the modulus names the class of multiples
    assert set(enumerate_restricted(6, 2, 2, min_part=2)) == {(6,), (4, 2), (2, 2, 2)}


def test_divisor_counts():
    assert divisor_count(6) == 4
    assert divisor_count(1) == 1
    assert divisor_count_in_class(12, 1, 2) == 2  # 1, 3
    assert divisor_count_in_class(12, 0, 2) == 4  # 2, 4, 6, 12


def test_format_and_parse():
    assert format_partition((9, 5, 5, 5, 5, 1, 1, 1)) == "[9,5,5,5,5,1,1,1]"
    assert format_partition(()) == "[]"
    assert parse_partition("[9,5,5,5,5,1,1,1]") == (9, 5, 5, 5, 5, 1, 1, 1)
    assert parse_partition("[]") == ()
    with pytest.raises(InvalidPartitionError):
        parse_partition("9,5")


@given(partitions)
def test_format_parse_round_trip(parts):
    assert parse_partition(format_partition(parts)) == parts
