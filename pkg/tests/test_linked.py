from math import factorial

from hypothesis import given
from hypothesis import strategies as st
import pytest

from treelike.errors import (
    IndexOutOfRange,
    InvalidPartition,
    NotADestination,
    NotALegalDestination,
    NotNearlyDisjoint,
    UnknownPredicate,
)
from treelike.linked import (
    LinkedPartition,
    TypeBLinkedPartition,
    blocks,
    classify,
    enumerate_lp,
    enumerate_lpb,
    from_blocks,
    make_lp,
    make_lpb,
    maximal_good_path,
    maximal_path,
    subset_member,
)

FIG5 = make_lp(11, [(1, 2), (1, 3), (4, 5), (1, 6), (6, 8), (7, 9), (9, 10)])
FIG7 = make_lpb(
    10,
    [-7, -4, -2, -1, 3, 5, 6, 8, 9, 10],
    [(-7, -4), (-7, -2), (-7, 5), (-4, -1), (-2, 3), (-2, 8), (3, 6), (8, 9)],
)


def test_classify_plain():
    c = classify(FIG5)
    assert {v for v, k in c.items() if k == "origin"} == {1, 4, 7}
    assert {v for v, k in c.items() if k == "transient"} == {6, 9}
    assert {v for v, k in c.items() if k == "singleton"} == {11}
    assert {v for v, k in c.items() if k == "destination"} == {2, 3, 5, 8, 10}


def test_classify_no_arcs():
    c = classify(make_lp(3, []))
    assert set(c.values()) == {"singleton"}


def test_classify_signed():
    c = classify(FIG7)
    assert {v for v, k in c.items() if k == "origin"} == {-7}
    assert {v for v, k in c.items() if k == "singleton"} == {10}
    assert {v for v, k in c.items() if k == "transient"} == {-4, -2, 3, 8}
    assert {v for v, k in c.items() if k == "destination"} == {-1, 5, 6, 9}
    assert FIG7.os == 2


def test_in_degree_violation():
    with pytest.raises(InvalidPartition):
        make_lp(3, [(1, 3), (2, 3)])


def test_blocks_of_figure():
    assert blocks(FIG5) == [
        (1, 2, 3, 6), (4, 5), (6, 8), (7, 9), (9, 10), (11,)
    ]


def test_blocks_round_trip():
    for tau in enumerate_lp(5):
        assert from_blocks(blocks(tau), 5) == tau


def test_from_blocks_simple():
    assert from_blocks([{1}, {2}], 2).arcs == frozenset()


def test_from_blocks_rejects_shared_minimum():
    with pytest.raises(NotNearlyDisjoint):
        from_blocks([{1, 2}, {1, 3}], 3)


def test_from_blocks_rejects_gap():
    from treelike.errors import CoverageGap
    with pytest.raises(CoverageGap):
        from_blocks([{1, 2}], 3)


def test_maximal_path():
    assert maximal_path(FIG5, 8) == (1, 6, 8)
    assert maximal_path(FIG5, 2) == (1, 2)
    assert maximal_path(FIG5, 10) == (7, 9, 10)
    with pytest.raises(NotADestination):
        maximal_path(FIG5, 6)


def test_legal_destinations():
    assert FIG7.legal_destinations == frozenset({6, 9})
    assert make_lpb(2, [-2, 1], []).legal_destinations == frozenset()


def test_vertex_one_never_legal():
    for tau in enumerate_lpb(4):
        assert 1 not in tau.legal_destinations
        assert -1 not in tau.legal_destinations


def test_maximal_good_path():
    assert maximal_good_path(FIG7, 6) == (-2, 3, 6)
    # extension continues through every endpoint of absolute value below 9
    assert maximal_good_path(FIG7, 9) == (-7, -2, 8, 9)
    with pytest.raises(NotALegalDestination):
        maximal_good_path(FIG7, 5)


def test_enumeration_counts():
    assert len(list(enumerate_lp(0))) == 1
    for n in range(0, 7):
        assert sum(1 for _ in enumerate_lp(n)) == factorial(n)
    for n in range(0, 5):
        assert sum(1 for _ in enumerate_lpb(n)) == 2**n * factorial(n)


def test_enumeration_distinct():
    seen = set(tau.sort_key() for tau in enumerate_lp(5))
    assert len(seen) == factorial(5)
    seen_b = set(tau.sort_key() for tau in enumerate_lpb(4))
    assert len(seen_b) == 2**4 * factorial(4)


def test_lpb_smallest():
    taus = list(enumerate_lpb(1))
    assert sorted(t.vertices for t in taus) == [(-1,), (1,)]
    assert all(t.os == 1 for t in taus)


def test_json_round_trip():
    assert LinkedPartition.from_json(FIG5.to_json()) == FIG5
    assert TypeBLinkedPartition.from_json(FIG7.to_json()) == FIG7


def test_make_lpb_checks_vertex_set():
    with pytest.raises(InvalidPartition):
        make_lpb(2, [1, 2, -2], [])
    with pytest.raises(InvalidPartition):
        make_lpb(2, [2, -1], [])  # not sorted


def test_subset_examples_plain():
    members = [tau for tau in enumerate_lp(3) if subset_member(tau, "L_ni", 3)]
    assert len(members) == 1
    assert members[0].arcs == frozenset({(1, 3)})
    assert (members[0].one, members[0].os) == (1, 2)

    m = [tau for tau in enumerate_lp(3) if subset_member(tau, "M_ni", 3)]
    assert sorted(sorted(t.arcs) for t in m) == [[(1, 2), (1, 3)], [(1, 3)]]


def test_subset_examples_signed():
    x22 = [t for t in enumerate_lpb(2) if subset_member(t, "X_ni", 2)]
    assert len(x22) == 1
    assert x22[0].vertices == (-2, 1) and not x22[0].arcs
    assert x22[0].os == 2

    assert not any(subset_member(t, "Y_ni", 2) for t in enumerate_lpb(2))


def test_subset_errors():
    tau = make_lp(4, [])
    with pytest.raises(UnknownPredicate):
        subset_member(tau, "nope", 3)
    with pytest.raises(UnknownPredicate):
        subset_member(tau, "X_ni", 3)  # signed predicate on a plain partition
    with pytest.raises(IndexOutOfRange):
        subset_member(tau, "L_ni", 2)
    with pytest.raises(IndexOutOfRange):
        subset_member(tau, "L_ni", 5)


@given(st.integers(2, 6), st.data())
def test_arc_choices_give_valid_partitions(n, data):
    # random in-neighbor choices always build a valid partition
    choices = [data.draw(st.integers(0, j - 1)) for j in range(2, n + 1)]
    arcs = [(c, j) for j, c in zip(range(2, n + 1), choices) if c]
    tau = make_lp(n, arcs)
    kinds = classify(tau)
    assert len(kinds) == n
    assert sum(1 for k in kinds.values() if k in ("destination", "transient")) == len(
        tau.arcs
    )
