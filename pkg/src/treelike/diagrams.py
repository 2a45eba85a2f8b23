"""Ferrers diagrams and shifted Ferrers diagrams encoded by border words.

The canonical encoding of a diagram is the word of its south-east border,
read from the north-east end down to the south-west end.  The step at
1-based position ``k`` carries label ``k``; an ``S`` step is the right edge
of row ``k`` and a ``W`` step is the bottom edge of column ``k``.  Row
labels increase from top to bottom, column labels decrease from left to
right, and the cell ``(i, j)`` (row ``i``, column ``j``) exists exactly
when ``i`` is a row label, ``j`` is a column label and ``i < j``.

Empty rows (trailing ``S`` steps) and empty columns (leading ``W`` steps)
are legal at this level; family validators restrict them where needed.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from functools import cached_property, lru_cache

from .errors import InvalidCharacter, NonexistentCell

Cell = tuple[int, int]

SOUTH = "S"
WEST = "W"


@dataclass(frozen=True)
class FerrersDiagram:
    """A Ferrers diagram, possibly with empty rows and columns."""

    word: str

    def __post_init__(self) -> None:
        bad = set(self.word) - {SOUTH, WEST}
        if bad:
            raise InvalidCharacter(
                f"border word may only contain 'S' and 'W', got {sorted(bad)!r}"
            )

    @property
    def size(self) -> int:
        return len(self.word)

    @cached_property
    def rows(self) -> tuple[int, ...]:
        """Row labels in increasing order (top to bottom)."""
        return tuple(k for k, ch in enumerate(self.word, 1) if ch == SOUTH)

    @cached_property
    def cols(self) -> tuple[int, ...]:
        """Column labels in increasing order."""
        return tuple(k for k, ch in enumerate(self.word, 1) if ch == WEST)

    @cached_property
    def row_set(self) -> frozenset[int]:
        return frozenset(self.rows)

    @cached_property
    def col_set(self) -> frozenset[int]:
        return frozenset(self.cols)

    @cached_property
    def cols_left_to_right(self) -> tuple[int, ...]:
        """Column labels in geometric order: decreasing from left to right."""
        return tuple(reversed(self.cols))

    @cached_property
    def row_position(self) -> dict[int, int]:
        """Row label -> 1-based geometric row index (top to bottom)."""
        return {lab: k for k, lab in enumerate(self.rows, 1)}

    @cached_property
    def col_position(self) -> dict[int, int]:
        """Column label -> 1-based geometric column index (left to right)."""
        return {lab: k for k, lab in enumerate(self.cols_left_to_right, 1)}

    def has_cell(self, i: int, j: int) -> bool:
        return i in self.row_set and j in self.col_set and i < j

    def require_cell(self, i: int, j: int) -> None:
        if not self.has_cell(i, j):
            raise NonexistentCell(f"cell ({i}, {j}) is not in diagram {self.word!r}")

    def row_length(self, i: int) -> int:
        """Number of cells in row ``i``: columns with label greater than ``i``."""
        return len(self.cols) - bisect_right(self.cols, i)

    def col_height(self, j: int) -> int:
        """Number of cells in column ``j``: rows with label smaller than ``j``."""
        return bisect_left(self.rows, j)

    @cached_property
    def row_lengths(self) -> tuple[int, ...]:
        """Cell counts per geometric row, top to bottom (weakly decreasing)."""
        return tuple(self.row_length(i) for i in self.rows)

    def is_empty_row(self, i: int) -> bool:
        return i in self.row_set and self.row_length(i) == 0

    def is_empty_col(self, j: int) -> bool:
        return j in self.col_set and self.col_height(j) == 0

    @cached_property
    def cells(self) -> tuple[Cell, ...]:
        """All cells in row-major geometric order (top-to-bottom, left-to-right)."""
        out: list[Cell] = []
        for i in self.rows:
            for j in self.cols_left_to_right:
                if j <= i:
                    break
                out.append((i, j))
        return tuple(out)

    @property
    def n_cells(self) -> int:
        return len(self.cells)

    @cached_property
    def corners(self) -> tuple[Cell, ...]:
        """Cells whose bottom and right edges are border edges.

        These are exactly the cells ``(k, k+1)`` at SW factors of the word.
        """
        w = self.word
        return tuple(
            (k, k + 1)
            for k in range(1, len(w))
            if w[k - 1] == SOUTH and w[k] == WEST
        )

    def transpose(self) -> "FerrersDiagram":
        """Reflection across the main diagonal: reverse the word swapping S and W."""
        flipped = "".join(WEST if ch == SOUTH else SOUTH for ch in reversed(self.word))
        return parse_border(flipped)

    def is_self_conjugate(self) -> bool:
        return self.transpose().word == self.word

    def to_json(self) -> dict:
        return {"border": self.word}

    @staticmethod
    def from_json(data: dict) -> "FerrersDiagram":
        return parse_border(data["border"])


@lru_cache(maxsize=None)
def parse_border(word: str) -> FerrersDiagram:
    """Parse a border word into a (cached, immutable) diagram."""
    return FerrersDiagram(word)


def corners(diagram: FerrersDiagram) -> list[Cell]:
    return list(diagram.corners)


def transpose(diagram: FerrersDiagram) -> FerrersDiagram:
    return diagram.transpose()


@dataclass(frozen=True)
class ShiftedDiagram:
    """A Ferrers diagram with one staircase row added above per column.

    For each column ``j`` of the subdiagram there is an added row labeled
    ``-j`` whose cells are ``(-j, j')`` for column labels ``j' >= j``; its
    rightmost cell ``(-j, j)`` is the diagonal cell of that row.  Added rows
    sit above the subdiagram, shortest on top, so row labels still increase
    from top to bottom when read as signed integers.
    """

    sub: FerrersDiagram

    @property
    def size(self) -> int:
        return self.sub.size

    @cached_property
    def added_rows(self) -> tuple[int, ...]:
        """Labels of the added rows, top to bottom."""
        return tuple(-j for j in self.sub.cols_left_to_right)

    @cached_property
    def all_rows(self) -> tuple[int, ...]:
        """All row labels (added then original), top to bottom."""
        return self.added_rows + self.sub.rows

    @cached_property
    def row_position(self) -> dict[int, int]:
        return {lab: k for k, lab in enumerate(self.all_rows, 1)}

    def has_cell(self, i: int, j: int) -> bool:
        if i > 0:
            return self.sub.has_cell(i, j)
        if i == 0:
            return False
        return -i in self.sub.col_set and j in self.sub.col_set and j >= -i

    def require_cell(self, i: int, j: int) -> None:
        if not self.has_cell(i, j):
            raise NonexistentCell(
                f"cell ({i}, {j}) is not in shifted diagram over {self.sub.word!r}"
            )

    def is_diagonal(self, i: int, j: int) -> bool:
        return i < 0 and j == -i and self.has_cell(i, j)

    @cached_property
    def diagonal_cells(self) -> tuple[Cell, ...]:
        """Diagonal cells, top to bottom."""
        return tuple((-j, j) for j in self.sub.cols_left_to_right)

    @cached_property
    def diagonal_corner(self) -> Cell | None:
        """The one possible diagonal corner, ``(-1, 1)``.

        Present exactly when step 1 of the subdiagram word is W: then column
        1 exists, has no subdiagram cells below, and row ``-1`` is the lowest
        added row.  Any other diagonal cell has a cell below it.
        """
        return (-1, 1) if self.sub.word[:1] == WEST else None

    @cached_property
    def corners(self) -> tuple[Cell, ...]:
        """The diagonal corner (if any) followed by the subdiagram corners."""
        base = self.sub.corners
        diag = self.diagonal_corner
        return ((diag,) + base) if diag is not None else base

    def row_cells(self, i: int) -> tuple[Cell, ...]:
        """Cells of row ``i`` in geometric order (left to right)."""
        if i > 0:
            return tuple((i, j) for j in self.sub.cols_left_to_right if j > i)
        return tuple((i, j) for j in self.sub.cols_left_to_right if j >= -i)

    @cached_property
    def cells(self) -> tuple[Cell, ...]:
        """All cells in row-major geometric order."""
        out: list[Cell] = []
        for i in self.all_rows:
            out.extend(self.row_cells(i))
        return tuple(out)

    def to_json(self) -> dict:
        return {"border": self.sub.word, "shifted": True}


def shift(diagram: FerrersDiagram) -> ShiftedDiagram:
    return ShiftedDiagram(diagram)


def word_from_row_lengths(lengths: list[int] | tuple[int, ...], ncols: int) -> str:
    """Border word of the shape with the given geometric row lengths.

    ``lengths`` are weakly decreasing cell counts, top to bottom, and may
    end in zeros (empty rows).  ``ncols`` fixes the number of column labels;
    columns beyond the first row's extent are empty and contribute the
    leading W steps.
    """
    first = lengths[0] if lengths else 0
    if first > ncols:
        raise ValueError("first row longer than the number of columns")
    parts = [WEST * (ncols - first)]
    for k, cur in enumerate(lengths):
        nxt = lengths[k + 1] if k + 1 < len(lengths) else 0
        if nxt > cur:
            raise ValueError("row lengths must be weakly decreasing")
        parts.append(SOUTH + WEST * (cur - nxt))
    return "".join(parts)
