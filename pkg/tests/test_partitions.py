from hypothesis import given, strategies as st

from wreathdesign.partitions import (
    add_at,
    componentwise_sum,
    conjugate,
    dominated_by,
    enumerate_partitions,
    format_partition,
    is_partition,
    make_partition,
    part,
    partition_count,
    union,
)

partitions = st.lists(st.integers(1, 6), max_size=6).map(make_partition)


def test_make_partition_sorts_and_drops_zeros():
    assert make_partition([1, 0, 3, 1]) == (3, 1, 1)
    assert make_partition([]) == ()


def test_make_partition_rejects_negative():
    try:
        make_partition([2, -1])
    except ValueError:
        return
    raise AssertionError("negative part accepted")


def test_conjugate_examples():
    assert conjugate((3, 1, 1)) == (3, 1, 1)
    assert conjugate((2, 2)) == (2, 2)
    assert conjugate((4, 1)) == (2, 1, 1, 1)
    assert conjugate(()) == ()


def test_dominance_examples():
    assert dominated_by((1, 1, 1), (3,))
    assert not dominated_by((3,), (2, 1))
    assert not dominated_by((3, 3), (4, 1, 1)) and not dominated_by((4, 1, 1), (3, 3))
    # sizes may differ: prefix sums only
    assert dominated_by((1,), (2, 1))


def test_counts_match_pentagonal_recurrence():
    for n in range(16):
        ps = enumerate_partitions(n)
        assert len(ps) == partition_count(n)
        assert len(set(ps)) == len(ps)
        assert all(is_partition(p) and sum(p) == n for p in ps)


def test_enumeration_order_starts_with_one_row():
    assert enumerate_partitions(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))


def test_add_at_and_part():
    assert add_at((3, 1), 2, 3) == (4, 3)
    assert add_at((3, 1), 3, 2) == (3, 2, 1)
    assert part((3, 1), 1) == 3 and part((3, 1), 5) == 0


def test_union_and_sum():
    assert union((3, 1), (2,)) == (3, 2, 1)
    assert componentwise_sum((3, 1), (2, 2, 1)) == (5, 3, 1)


def test_format():
    assert format_partition((3, 1, 1)) == "3,1^2"
    assert format_partition(()) == "0"


@given(partitions)
def test_conjugate_is_involution(p):
    assert conjugate(conjugate(p)) == p
    assert sum(conjugate(p)) == sum(p)


@given(partitions, partitions)
def test_dominance_reverses_under_conjugation(p, q):
    if sum(p) == sum(q):
        assert dominated_by(p, q) == dominated_by(conjugate(q), conjugate(p))


@given(partitions, partitions, partitions)
def test_dominance_is_transitive(p, q, s):
    if dominated_by(p, q) and dominated_by(q, s):
        assert dominated_by(p, s)


@given(partitions, st.integers(1, 5))
def test_adding_a_part_raises_prefix_sums(p, k):
    assert dominated_by(p, union(p, (k,)))
