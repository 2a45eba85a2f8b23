from hypothesis import given
from hypothesis import strategies as st
import pytest

from treelike.diagrams import (
    FerrersDiagram,
    ShiftedDiagram,
    corners,
    parse_border,
    shift,
    transpose,
    word_from_row_lengths,
)
from treelike.errors import InvalidCharacter, NonexistentCell

words = st.text(alphabet="SW", min_size=0, max_size=12)


def test_parse_empty():
    d = parse_border("")
    assert d.size == 0
    assert d.rows == () and d.cols == ()
    assert d.cells == ()


def test_parse_single_cell():
    d = parse_border("SW")
    assert d.rows == (1,) and d.cols == (2,)
    assert d.cells == ((1, 2),)


def test_parse_large_labelling():
    d = parse_border("SWWSWSSWSWSW")
    assert d.rows == (1, 4, 6, 7, 9, 11)
    assert d.cols == (2, 3, 5, 8, 10, 12)
    assert d.row_lengths == (6, 4, 3, 3, 2, 1)


def test_parse_rejects_bad_characters():
    with pytest.raises(InvalidCharacter):
        parse_border("SWX")


def test_round_trip_via_json():
    d = parse_border("SWWS")
    assert FerrersDiagram.from_json(d.to_json()) == d


def test_corners():
    assert corners(parse_border("SSWW")) == [(2, 3)]
    assert corners(parse_border("SWSW")) == [(1, 2), (3, 4)]
    assert corners(parse_border("")) == []


def test_transpose_examples():
    assert transpose(parse_border("SW")).word == "SW"
    assert transpose(parse_border("SSWW")).word == "SSWW"
    assert transpose(parse_border("SWW")).word == "SSW"


def test_empty_rows_and_columns():
    d = parse_border("WWS")  # two empty columns, one empty row
    assert d.is_empty_col(1) and d.is_empty_col(2)
    assert d.is_empty_row(3)
    assert d.cells == ()


def test_require_cell():
    d = parse_border("SW")
    d.require_cell(1, 2)
    with pytest.raises(NonexistentCell):
        d.require_cell(2, 1)


@given(words)
def test_label_partition(word):
    d = parse_border(word)
    assert len(d.rows) + len(d.cols) == len(word)
    assert set(d.rows) | set(d.cols) == set(range(1, len(word) + 1))


@given(words)
def test_cell_count_both_ways(word):
    d = parse_border(word)
    by_rows = sum(d.row_length(i) for i in d.rows)
    by_cols = sum(d.col_height(j) for j in d.cols)
    assert by_rows == by_cols == len(d.cells)


@given(words)
def test_corner_characterization(word):
    # corners are exactly the cells last in their row and last in their column
    d = parse_border(word)
    expected = set()
    for i, j in d.cells:
        last_in_row = not any(jj < j and d.has_cell(i, jj) for jj in d.cols)
        last_in_col = not any(ii > i and d.has_cell(ii, j) for ii in d.rows)
        if last_in_row and last_in_col:
            expected.add((i, j))
    assert set(d.corners) == expected


@given(words)
def test_transpose_involution(word):
    d = parse_border(word)
    t = d.transpose()
    assert t.transpose() == d
    assert len(t.cells) == len(d.cells)
    assert len(t.corners) == len(d.corners)


@given(words)
def test_transpose_cell_map(word):
    d = parse_border(word)
    m = d.size
    t = d.transpose()
    assert {(m + 1 - j, m + 1 - i) for i, j in d.cells} == set(t.cells)


def test_shift_of_figure_diagram():
    sh = shift(parse_border("WWSWSWWSWS"))
    assert sh.added_rows == (-9, -7, -6, -4, -2, -1)
    assert sh.diagonal_cells == ((-9, 9), (-7, 7), (-6, 6), (-4, 4), (-2, 2), (-1, 1))
    assert sh.diagonal_corner == (-1, 1)
    assert set(sh.corners) == {(-1, 1), (3, 4), (5, 6), (8, 9)}


def test_shift_single_cell():
    sh = shift(parse_border("SW"))
    assert sh.added_rows == (-2,)
    assert sh.row_cells(-2) == ((-2, 2),)
    assert sh.diagonal_corner is None


def test_shift_single_column_word():
    sh = shift(parse_border("W"))
    assert sh.added_rows == (-1,)
    assert sh.diagonal_corner == (-1, 1)
    assert sh.has_cell(-1, 1)


@given(words)
def test_shift_one_added_row_per_column(word):
    sh = shift(parse_border(word))
    assert len(sh.added_rows) == len(sh.sub.cols)
    for j in sh.sub.cols:
        want = sum(1 for j2 in sh.sub.cols if j2 >= j)
        assert len(sh.row_cells(-j)) == want


@given(words)
def test_shift_at_most_one_diagonal_corner(word):
    # every diagonal cell except possibly (-1, 1) has a cell below it
    sh = shift(parse_border(word))
    for i, j in sh.diagonal_cells:
        below = [
            r for r in sh.all_rows if r > i and sh.has_cell(r, j)
        ]
        if (i, j) != (-1, 1):
            assert below, (word, i, j)


def test_word_from_row_lengths():
    assert word_from_row_lengths([4, 3, 1, 0], 6) == "WWSWSWWSWS"
    assert word_from_row_lengths([], 0) == ""
    assert word_from_row_lengths([0], 0) == "S"
    assert word_from_row_lengths([2, 2], 2) == "SSWW"
