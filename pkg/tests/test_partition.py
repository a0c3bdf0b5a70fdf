import pytest
from hypothesis import given
from hypothesis import strategies as st

from schurbound.core.partition import (
    Partition,
    RankedShape,
    cover_indices,
    covers,
    dominates,
    down_covers,
    gamma_elements,
    make_partition,
    max_element,
    min_element,
    parse_partition,
)
from schurbound.exceptions import (
    NotACover,
    NotWeaklyDecreasing,
    PartitionError,
    PartitionParseError,
    RankExceeded,
    SizeMismatch,
)


def P(*parts):
    return Partition(tuple(parts))


partitions_strategy = st.lists(st.integers(min_value=1, max_value=12), max_size=8).map(
    lambda parts: Partition(tuple(sorted(parts, reverse=True)))
)


# --- Construction and parsing ---
def test_make_partition_strips_trailing_zeros():
    assert make_partition((4, 1, 1, 1, 0, 0)) == P(4, 1, 1, 1)


def test_make_partition_empty():
    empty = make_partition(())
    assert empty == Partition()
    assert empty.size == 0 and empty.length == 0


def test_make_partition_rejects_increase():
    with pytest.raises(NotWeaklyDecreasing):
        make_partition((1, 2))


def test_make_partition_rejects_inner_zero_and_negatives():
    with pytest.raises(NotWeaklyDecreasing):
        make_partition((2, 0, 1))
    with pytest.raises(PartitionError):
        make_partition((2, -1))


def test_partition_constructor_validates():
    with pytest.raises(NotWeaklyDecreasing):
        P(1, 3)
    with pytest.raises(PartitionError):
        P(2, 0)


def test_partition_derived_fields():
    lam = P(4, 1, 1, 1)
    assert lam.size == 7
    assert lam.length == 4
    assert lam.largest == 4
    assert lam.part(1) == 4 and lam.part(5) == 0
    assert str(lam) == "4,1,1,1"
    assert lam.compact() == "4111"
    assert P(12, 3).compact() is None


@pytest.mark.parametrize(
    "text, expected",
    [
        ("4,1,1,1", (4, 1, 1, 1)),
        ("4111", (4, 1, 1, 1)),
        ("7", (7,)),
        ("12,3", (12, 3)),
        ("12,", (12,)),
        (" (3, 2, 0) ", (3, 2)),
        ("", ()),
    ],
)
def test_parse_partition(text, expected):
    assert parse_partition(text) == Partition(expected)


@pytest.mark.parametrize("text", ["10", "4a1", "1,x", "-1", "²", "4,²", "٣"])
def test_parse_partition_rejects(text):
    with pytest.raises(PartitionParseError):
        parse_partition(text)


def test_parse_partition_compact_must_decrease():
    with pytest.raises(NotWeaklyDecreasing):
        parse_partition("12")


@given(partitions_strategy)
def test_printed_partition_reparses(lam):
    assert parse_partition(str(lam)) == lam
    if lam.compact():
        assert parse_partition(lam.compact()) == lam


def test_single_large_part_prints_with_trailing_comma():
    assert str(P(11)) == "11,"
    assert str(P(10)) == "10,"
    assert str(P(9)) == "9"
    assert str(P(11, 1)) == "11,1"
    assert parse_partition(str(P(11))) == P(11)
    assert parse_partition(str(P(10))) == P(10)


@pytest.mark.parametrize("raw", [(2.7, 1.2), (2.0,), ("3", "1"), (None,)])
def test_non_integer_parts_are_rejected(raw):
    with pytest.raises(PartitionError):
        make_partition(raw)
    with pytest.raises(PartitionError):
        Partition(raw)


def test_ranked_shape_bounds_largest_part():
    assert RankedShape(P(3, 1), 3).size == 4
    with pytest.raises(RankExceeded):
        RankedShape(P(4, 1), 3)
    assert RankedShape(P(4, 1), 3, checked=False).rank == 3


# --- Dominance ---
def test_par5_is_a_total_order():
    chain = [P(5), P(4, 1), P(3, 2), P(3, 1, 1), P(2, 2, 1), P(2, 1, 1, 1), P(1, 1, 1, 1, 1)]
    for upper_index, upper in enumerate(chain):
        for lower in chain[upper_index + 1:]:
            assert dominates(upper, lower)
            assert not dominates(lower, upper)


def test_3111_and_222_are_incomparable():
    assert not dominates(P(3, 1, 1, 1), P(2, 2, 2))
    assert not dominates(P(2, 2, 2), P(3, 1, 1, 1))


def test_dominates_is_reflexive_and_checks_size():
    assert dominates(P(4, 1), P(4, 1))
    with pytest.raises(SizeMismatch):
        dominates(P(4, 1), P(4))


@pytest.mark.parametrize("n", range(1, 11))
def test_dominance_partial_order_axioms(n):
    elements = gamma_elements(n, n)
    for a in elements:
        assert dominates(a, a)
        for b in elements:
            if dominates(a, b) and dominates(b, a):
                assert a == b
    for a in elements:
        for b in elements:
            if not dominates(a, b):
                continue
            for c in elements:
                if dominates(b, c):
                    assert dominates(a, c)


def test_dominates_agrees_with_brute_force(oracle):
    for n in range(1, 9):
        universe = oracle.partitions(n)
        for a in universe:
            for b in universe:
                assert dominates(Partition(a), Partition(b)) == oracle.dominates(a, b)


# --- Covers ---
def test_covers_examples():
    assert covers(P(4, 2), P(4, 1, 1))
    assert covers(P(4, 2), P(3, 3))
    assert not covers(P(4, 2, 1), P(3, 2, 2))
    assert covers(P(4, 2, 1), P(3, 3, 1))
    assert covers(P(3, 3, 1), P(3, 2, 2))
    assert not covers(P(4, 2), P(4, 2))


def test_covers_checks_size():
    with pytest.raises(SizeMismatch):
        covers(P(3), P(2))


def test_cover_indices():
    assert cover_indices(P(4, 2, 1), P(3, 3, 1)) == (1, 2)
    assert cover_indices(P(2), P(1, 1)) == (1, 2)
    assert cover_indices(P(3, 2, 1, 1), P(2, 2, 2, 1)) == (1, 3)
    with pytest.raises(NotACover):
        cover_indices(P(4, 2, 1), P(3, 2, 2))


@pytest.mark.parametrize("n", range(1, 11))
def test_covers_match_brute_force(oracle, n):
    universe = oracle.partitions(n)
    for a in universe:
        for b in universe:
            assert covers(Partition(a), Partition(b)) == oracle.covers(a, b, universe), (a, b)


def test_down_covers_examples():
    assert set(down_covers(P(4, 2), 6)) == {P(4, 1, 1), P(3, 3)}
    assert set(down_covers(P(4, 2, 1), 7)) == {P(4, 1, 1, 1), P(3, 3, 1)}
    assert down_covers(P(1, 1, 1, 1), 4) == []
    assert down_covers(P(4, 2, 1), 7) == [P(4, 1, 1, 1), P(3, 3, 1)]


def test_down_covers_requires_rank():
    with pytest.raises(RankExceeded):
        down_covers(P(4, 2), 3)


@pytest.mark.parametrize("n", range(1, 11))
def test_down_covers_complete(n):
    elements = gamma_elements(n, n)
    for lam in elements:
        expected = {mu for mu in elements if covers(lam, mu)}
        assert set(down_covers(lam, n)) == expected


@pytest.mark.parametrize("n", range(2, 11))
def test_cover_changes_length_by_at_most_one(n):
    for lam in gamma_elements(n, n):
        for mu in down_covers(lam, n):
            assert mu.length - lam.length in (0, 1)
            i, j = cover_indices(lam, mu)
            dropped = j == mu.length and mu.part(j) == 1
            assert (mu.length == lam.length + 1) == dropped


# --- Enumeration and extremal elements ---
def test_gamma_elements_par5_order():
    assert gamma_elements(5, 5) == [
        P(5), P(4, 1), P(3, 2), P(3, 1, 1), P(2, 2, 1), P(2, 1, 1, 1), P(1, 1, 1, 1, 1)
    ]


def test_gamma_elements_bounded_rank():
    assert gamma_elements(7, 2) == [
        P(2, 2, 2, 1), P(2, 2, 1, 1, 1), P(2, 1, 1, 1, 1, 1), P(1, 1, 1, 1, 1, 1, 1)
    ]
    assert gamma_elements(1, 4) == [P(1)]


def test_gamma_elements_matches_brute_force(oracle):
    for n in range(1, 11):
        for r in range(1, n + 1):
            expected = [Partition(p) for p in oracle.partitions(n) if p[0] <= r]
            assert gamma_elements(n, r) == expected


def test_extremal_elements():
    assert max_element(7, 3) == P(3, 3, 1)
    assert max_element(6, 3) == P(3, 3)
    assert max_element(5, 7) == P(5)
    assert min_element(4) == P(1, 1, 1, 1)


def test_extremal_elements_bound_gamma():
    for n in range(1, 11):
        for r in range(1, n + 1):
            top, bottom = max_element(n, r), min_element(n)
            for lam in gamma_elements(n, r):
                assert dominates(top, lam)
                assert dominates(lam, bottom)
