from math import factorial

import pytest

from treelike.alternative import (
    AlternativeTableau,
    TypeBAlternativeTableau,
    enumerate_at_oracle,
    is_star,
    is_symmetric_at,
    make_at,
    make_atb,
    reflect_at,
    stats_at,
    stats_atb,
    validate_at,
    validate_atb,
)
from treelike.errors import NonexistentCell, SizeTooLargeForOracle

FIG3 = ("WWSWSSWSWS", [(3, 4, "U"), (5, 7, "L"), (6, 9, "U"), (8, 9, "L")])
FIG5 = (
    "SWWSWSSWSWS",
    [(1, 2, "U"), (1, 3, "U"), (1, 8, "U"), (4, 5, "U"),
     (6, 8, "L"), (7, 10, "U"), (9, 10, "L")],
)
FIG6 = (
    "WWSWSWWSWS",
    [(-7, 9, "U"), (-4, 7, "L"), (-2, 6, "U"), (-2, 9, "L"),
     (-1, 4, "L"), (3, 6, "L"), (5, 7, "L"), (8, 9, "L")],
)


def test_validate_empty():
    assert validate_at(make_at("", [])).ok


def test_validate_figure():
    assert validate_at(make_at(*FIG3)).ok
    assert validate_at(make_at(*FIG5)).ok
    assert validate_atb(make_atb(*FIG6)).ok


def test_validate_rejects_pointed_cell():
    t = make_at("SSWW", [(1, 3, "L"), (2, 3, "U")])
    report = validate_at(t)
    assert not report.ok
    assert "up arrow at (2, 3)" in report.problems[0]


def test_validate_left_arrow_zone():
    # cell (1, 3) sits geometrically left of (1, 2), so the left arrow sees it
    t = make_at("SWW", [(1, 2, "L"), (1, 3, "U")])
    assert not validate_at(t).ok


def test_arrow_outside_diagram():
    with pytest.raises(NonexistentCell):
        make_at("SW", [(2, 1, "L")])
    with pytest.raises(NonexistentCell):
        make_atb("SW", [(-2, 1, "L")])


def test_stats_star_figure():
    s = stats_at(make_at(*FIG5))
    # corner (7, 8) is empty, so one non-occupied corner survives
    assert (s.urr, s.top, s.noc) == (4, 3, 1)


def test_stats_plain_figure():
    s = stats_at(make_at(*FIG3))
    assert (s.urr, s.noc) == (3, 1)


def test_stats_type_b_figure():
    s = stats_atb(make_atb(*FIG6))
    assert s.urr == 2
    assert (s.noc_diag, s.noc_off, s.noc) == (1, 2, 3)


def test_stats_empty():
    s = stats_at(make_at("", []))
    assert (s.urr, s.top, s.noc) == (0, 0, 0)
    sb = stats_atb(make_atb("", []))
    assert (sb.urr, sb.noc) == (0, 0)


def test_type_b_unrestricted_includes_cell_less_rows():
    # row 10 of the figure has no cells; it still counts as unrestricted
    t = make_atb(*FIG6)
    sh = t.shifted
    assert 10 in sh.sub.rows and sh.row_cells(10) == ()
    assert t.stats.urr == 2  # rows -7 and 10


def test_is_star():
    assert is_star(make_at(*FIG5))
    assert not is_star(make_at(*FIG3))  # columns 1 and 2 are empty
    assert is_star(make_at("", []))
    assert is_star(make_at("S", []))  # no columns at all


def test_reflection():
    assert is_symmetric_at(make_at("", []))
    t = make_at("SSWW", [(1, 3, "L")])
    assert reflect_at(t) == make_at("SSWW", [(2, 4, "U")])
    assert not is_symmetric_at(t)
    both = make_at("SSWW", [(1, 3, "L"), (2, 4, "U")])
    assert is_symmetric_at(both)


def test_reflect_involution_preserves_arrow_count():
    for t in enumerate_at_oracle(3, "plain"):
        r = reflect_at(t)
        assert validate_at(r).ok
        assert reflect_at(r) == t
        assert len(r.arrows) == len(t.arrows)


def test_oracle_counts_plain():
    for n in range(0, 5):
        assert sum(1 for _ in enumerate_at_oracle(n, "plain")) == factorial(n + 1)


def test_oracle_counts_star():
    for n in range(1, 6):
        assert sum(1 for _ in enumerate_at_oracle(n, "star")) == factorial(n)


def test_oracle_counts_type_b():
    for n in range(0, 6):
        assert sum(1 for _ in enumerate_at_oracle(n, "typeB")) == 2**n * factorial(n)


def test_oracle_counts_symmetric():
    for m, size in enumerate((0, 2, 4, 6, 8)):
        count = sum(1 for _ in enumerate_at_oracle(size, "symmetric"))
        assert count == 2**m * factorial(m)


def test_oracle_objects_are_valid():
    for t in enumerate_at_oracle(4, "plain"):
        assert validate_at(t).ok
    for t in enumerate_at_oracle(4, "typeB"):
        assert validate_atb(t).ok
    for t in enumerate_at_oracle(6, "symmetric"):
        assert validate_at(t).ok and is_symmetric_at(t)


def test_star_top_row_has_no_left_arrow():
    for t in enumerate_at_oracle(4, "star"):
        assert validate_at(t).ok and is_star(t)
        rows = t.diagram.rows
        if rows:
            assert all(not (i == rows[0] and k == "L") for i, _, k in t.arrows)


def test_type_b_diagonal_corner_needs_leading_w():
    for t in enumerate_at_oracle(4, "typeB"):
        if t.stats.noc_diag:
            assert t.sub.word[0] == "W"


def test_oracle_bounds():
    with pytest.raises(SizeTooLargeForOracle):
        list(enumerate_at_oracle(6, "plain"))
    with pytest.raises(ValueError):
        list(enumerate_at_oracle(3, "symmetric"))
    with pytest.raises(ValueError):
        list(enumerate_at_oracle(3, "nope"))


def test_oracle_canonical_order():
    keys = [t.sort_key() for t in enumerate_at_oracle(3, "plain")]
    assert keys == sorted(keys)
    assert len(set(keys)) == len(keys)


def test_json_round_trip():
    t = make_at(*FIG5)
    assert AlternativeTableau.from_json(t.to_json()) == t
    b = make_atb(*FIG6)
    data = b.to_json()
    assert data["shifted"] is True
    assert TypeBAlternativeTableau.from_json(data) == b
