"""Tree-like tableaux: validation, statistics, reflection, brute-force oracles.

A tree-like tableau is a pointed filling of a diagram without empty rows or
columns: the top-left cell holds the root point, every other point has a
point strictly above it in its column or strictly to its left in its row
(but not both), and every row and column holds at least one point.  Its
size is its number of points, one less than the diagram size.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, product

from .diagrams import SOUTH, WEST, Cell, FerrersDiagram, parse_border
from .errors import InvalidTableau, SizeTooLargeForOracle, ValidationReport

DEFAULT_ORACLE_BOUND = 5
DEFAULT_SYM_ORACLE_BOUND = 9  # tableau size, odd


@dataclass(frozen=True)
class TableauStats:
    top: int
    left: int
    noc: int
    oc: int


@dataclass(frozen=True)
class TreeLikeTableau:
    diagram: FerrersDiagram
    points: frozenset[Cell]

    @property
    def size(self) -> int:
        return len(self.points)

    @cached_property
    def root(self) -> Cell:
        """Top-left cell: smallest row label, largest column label."""
        return (self.diagram.rows[0], self.diagram.cols_left_to_right[0])

    @cached_property
    def stats(self) -> TableauStats:
        first_row = self.diagram.rows[0]
        last_col = self.diagram.cols_left_to_right[0]
        top = sum(1 for (i, _) in self.points if i == first_row) - 1
        left = sum(1 for (_, j) in self.points if j == last_col) - 1
        oc = sum(1 for c in self.diagram.corners if c in self.points)
        noc = len(self.diagram.corners) - oc
        return TableauStats(top=top, left=left, noc=noc, oc=oc)

    def sort_key(self):
        return (self.diagram.word, tuple(sorted(self.points)))

    def to_json(self) -> dict:
        return {
            "border": self.diagram.word,
            "points": [list(p) for p in sorted(self.points)],
        }

    @staticmethod
    def from_json(data: dict) -> "TreeLikeTableau":
        return make_tlt(data["border"], [tuple(p) for p in data["points"]])


def make_tlt(border: str, points) -> TreeLikeTableau:
    diagram = parse_border(border)
    pts = frozenset(tuple(p) for p in points)
    for i, j in pts:
        diagram.require_cell(i, j)
    return TreeLikeTableau(diagram, pts)


def validate_tlt(t: TreeLikeTableau) -> ValidationReport:
    """Check all defining conditions, reporting every violation."""
    d = t.diagram
    for i, j in t.points:
        d.require_cell(i, j)
    problems: list[str] = []
    w = d.word
    if not w or w[0] != SOUTH or w[-1] != WEST:
        problems.append("shape: diagram has an empty row or empty column")
        return ValidationReport(False, tuple(problems))

    root = t.root
    if root not in t.points:
        problems.append(f"condition1: root cell {root} is not pointed")

    rows_of_col: dict[int, list[int]] = {}
    cols_of_row: dict[int, list[int]] = {}
    for i, j in t.points:
        rows_of_col.setdefault(j, []).append(i)
        cols_of_row.setdefault(i, []).append(j)

    for i, j in sorted(t.points):
        if (i, j) == root:
            continue
        above = any(r < i for r in rows_of_col[j])
        left = any(c > j for c in cols_of_row[i])
        if above and left:
            problems.append(f"condition2: point ({i}, {j}) has a point above and to its left")
        elif not above and not left:
            problems.append(f"condition2: point ({i}, {j}) has no point above nor to its left")

    for i in d.rows:
        if i not in cols_of_row:
            problems.append(f"condition3: row {i} has no point")
    for j in d.cols:
        if j not in rows_of_col:
            problems.append(f"condition3: column {j} has no point")

    if len(t.points) != d.size - 1:
        problems.append(
            f"size: expected {d.size - 1} points for a diagram of size {d.size}, "
            f"got {len(t.points)}"
        )
    return ValidationReport(not problems, tuple(problems))


def stats_tlt(t: TreeLikeTableau, check: bool = True) -> TableauStats:
    if check:
        report = validate_tlt(t)
        if not report.ok:
            raise InvalidTableau("; ".join(report.problems))
    return t.stats


def reflect_tlt(t: TreeLikeTableau) -> TreeLikeTableau:
    """Reflection across the main diagonal: cell (i, j) -> (m+1-j, m+1-i)."""
    m = t.diagram.size
    points = frozenset((m + 1 - j, m + 1 - i) for i, j in t.points)
    return TreeLikeTableau(t.diagram.transpose(), points)


def is_symmetric_tlt(t: TreeLikeTableau) -> bool:
    return reflect_tlt(t) == t


def _valid_tlt_words(n: int):
    """Border words of tableau-size-n diagrams: length n+1, start S, end W."""
    if n < 1:
        return
    for middle in product((SOUTH, WEST), repeat=n - 1):
        yield SOUTH + "".join(middle) + WEST


def _point_sets_for_word(word: str):
    """Backtrack over point placements on one diagram.

    Cells are visited in row-major geometric order, so the above/left
    existence tests only look at already decided cells; row and column
    coverage is pruned at the last cell of each row and column.
    """
    d = parse_border(word)
    cells = d.cells
    target = d.size - 1
    if target < 0 or len(cells) < target:
        return
    heights = {j: d.col_height(j) for j in d.cols}
    lengths = {i: d.row_length(i) for i in d.rows}
    flags = []
    seen_in_col: dict[int, int] = {j: 0 for j in d.cols}
    seen_in_row: dict[int, int] = {i: 0 for i in d.rows}
    for i, j in cells:
        seen_in_row[i] += 1
        seen_in_col[j] += 1
        flags.append(
            (i, j, seen_in_row[i] == lengths[i], seen_in_col[j] == heights[j])
        )

    row_pts = {i: 0 for i in d.rows}
    col_pts = {j: 0 for j in d.cols}
    acc: list[Cell] = []

    def walk(k: int):
        placed = len(acc)
        if k == len(cells):
            if placed == target:
                yield frozenset(acc)
            return
        if placed + (len(cells) - k) < target:
            return
        i, j, last_in_row, last_in_col = flags[k]
        is_root = k == 0
        can_place = placed < target and (
            is_root or (bool(row_pts[i]) != bool(col_pts[j]))
        )
        if can_place:
            acc.append((i, j))
            row_pts[i] += 1
            col_pts[j] += 1
            yield from walk(k + 1)
            acc.pop()
            row_pts[i] -= 1
            col_pts[j] -= 1
        can_skip = not is_root
        if last_in_row and not row_pts[i]:
            can_skip = False
        if last_in_col and not col_pts[j]:
            can_skip = False
        if can_skip:
            yield from walk(k + 1)

    yield from walk(0)


def enumerate_tlt_oracle(n: int, bound: int = DEFAULT_ORACLE_BOUND):
    """Every tree-like tableau of size ``n``, in canonical order
    (lexicographic on border word, then sorted point list)."""
    if n > bound:
        raise SizeTooLargeForOracle(f"size {n} beyond oracle bound {bound}")
    for word in _valid_tlt_words(n):
        d = parse_border(word)
        found = [TreeLikeTableau(d, pts) for pts in _point_sets_for_word(word)]
        yield from sorted(found, key=lambda t: tuple(sorted(t.points)))


def _self_conjugate_words(length: int):
    """Self-conjugate border words starting with S, in lexicographic order."""
    assert length % 2 == 0
    half = length // 2
    if half == 0:
        yield ""
        return
    for middle in product((SOUTH, WEST), repeat=half - 1):
        first = SOUTH + "".join(middle)
        second = "".join(WEST if ch == SOUTH else SOUTH for ch in reversed(first))
        yield first + second


def enumerate_sym_tlt_oracle(size: int, bound: int = DEFAULT_SYM_ORACLE_BOUND):
    """Every symmetric tree-like tableau of odd size ``size``.

    Point sets are chosen on the closed lower-left half of a self-conjugate
    diagram and mirrored; each candidate is validated in full.
    """
    if size % 2 == 0:
        raise ValueError("symmetric tree-like tableaux have odd size")
    if size > bound:
        raise SizeTooLargeForOracle(f"size {size} beyond oracle bound {bound}")
    for word in _self_conjugate_words(size + 1):
        d = parse_border(word)
        rows = d.rows
        cols = d.cols_left_to_right
        diag = [
            (rows[k], cols[k])
            for k in range(len(rows))
            if d.row_lengths[k] >= k + 1
        ]
        below = [
            (rows[r], cols[c])
            for r in range(len(rows))
            for c in range(min(d.row_lengths[r], r))
        ]
        found = []
        for npairs in range(len(below) + 1):
            ndiag = size - 2 * npairs
            if ndiag < 0 or ndiag > len(diag):
                continue
            m = d.size
            for half in combinations(below, npairs):
                mirrored = tuple((m + 1 - j, m + 1 - i) for i, j in half)
                for on_diag in combinations(diag, ndiag):
                    pts = frozenset(half + mirrored + on_diag)
                    t = TreeLikeTableau(d, pts)
                    if validate_tlt(t).ok:
                        found.append(t)
        yield from sorted(found, key=lambda t: tuple(sorted(t.points)))
