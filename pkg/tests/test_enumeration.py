"""Enumeration order, refined counts, closed forms, crank tallies."""

import pytest

from copa.copartitions import to_json
from copa.enumeration import (
    count_copartitions,
    count_formula,
    count_refined,
    crank_tally,
    enumerate_copartitions,
)
from copa.errors import NoClosedFormError
from copa.partitions import partition_count

from oracles import brute_copartition_count, brute_copartitions

GOLDEN_134_12 = [
    '{"a":1,"b":3,"m":4,"ground":[],"sky":[3,3,3,3]}',
    '{"a":1,"b":3,"m":4,"ground":[5],"sky":[3]}',
    '{"a":1,"b":3,"m":4,"ground":[1],"sky":[7]}',
    '{"a":1,"b":3,"m":4,"ground":[9,1,1,1],"sky":[]}',
    '{"a":1,"b":3,"m":4,"ground":[5,5,1,1],"sky":[]}',
    '{"a":1,"b":3,"m":4,"ground":[5,1,1,1,1,1,1,1],"sky":[]}',
    '{"a":1,"b":3,"m":4,"ground":[1,1,1,1,1,1,1,1,1,1,1,1],"sky":[]}',
]


def test_golden_order():
    """The enumeration order is part of the output contract: blocks by
    ascending (ground count, sky count), canonical order inside."""
    listed = [to_json(c) for c in enumerate_copartitions((1, 3, 4), 12)]
    assert listed == GOLDEN_134_12


def test_enumeration_is_deterministic():
    a = list(enumerate_copartitions((2, 3, 5), 17))
    b = list(enumerate_copartitions((2, 3, 5), 17))
    assert a == b


def test_enumeration_against_brute_force():
    for params in ((1, 1, 2), (1, 3, 4), (0, 1, 2), (2, 0, 3), (0, 0, 1), (2, 2, 2)):
        for n in range(13):
            mine = [(c.ground, c.sky) for c in enumerate_copartitions(params, n)]
            assert len(set(mine)) == len(mine)
            assert set(mine) == brute_copartitions(*params, n), (params, n)


def test_refined_count_frozen():
    rc = count_refined((1, 1, 2), 4)
    assert rc.table == {(0, 2): 1, (0, 4): 1, (1, 1): 1, (2, 0): 1, (4, 0): 1}
    assert sum(rc.table.values()) == count_copartitions((1, 1, 2), 4) == 5


def test_counting_methods_agree():
    for params in ((1, 3, 4), (1, 1, 2), (2, 3, 5)):
        for n in range(26):
            by_enum = count_copartitions(params, n, method="enum")
            by_series = count_copartitions(params, n, method="series")
            assert by_enum == by_series == count_copartitions(params, n)


def test_count_negative_size_is_zero():
    assert count_copartitions((1, 1, 2), -1) == 0


def test_closed_forms_against_brute_force():
    for params in ((1, 1, 1), (0, 1, 1), (0, 0, 1), (0, 1, 2), (0, 2, 3), (2, 0, 3)):
        for n in range(16):
            assert count_formula(params, n) == brute_copartition_count(*params, n)


def test_partial_sum_family():
    # one congruence-free family counts by partial sums of p
    for n in range(41):
        expect = sum(partition_count(k) for k in range(n + 1))
        assert count_formula((1, 1, 1), n) == expect
    assert count_formula((1, 1, 1), 3) == 7


def test_zero_zero_one_identity():
    """Counts for both classes zero (modulus 1) follow the perimeter
    identity, except that n = 0 has no objects at all."""
    assert count_formula((0, 0, 1), 0) == 0
    for n in range(1, 31):
        both = count_formula((0, 0, 1), n)
        one = count_formula((0, 1, 1), n)
        assert both == 2 * one - partition_count(n)
    assert count_formula((0, 0, 1), 3) == 9
    assert count_formula((0, 1, 1), 2) == 3


def test_no_closed_form():
    with pytest.raises(NoClosedFormError):
        count_formula((1, 2, 4), 10)
    with pytest.raises(NoClosedFormError):
        count_formula((0, 0, 2), 10)


def test_crank_tally_examples():
    t = crank_tally((1, 1, 2), 4, 5)
    assert t.counts == {0: 1, 1: 1, 2: 1, 3: 1, 4: 1}
    assert t.total == 5
    empty = crank_tally((1, 1, 2), 0, 5)
    assert empty.counts == {0: 1, 1: 0, 2: 0, 3: 0, 4: 0}
    assert empty.total == 1


def test_crank_values_frozen():
    cranks = sorted(c.crank for c in enumerate_copartitions((1, 1, 2), 4))
    assert cranks == [-4, -2, 0, 2, 4]
