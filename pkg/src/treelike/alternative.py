"""Alternative tableaux and their star, symmetric and type-B variants.

An alternative tableau is a partial filling of a diagram with left and up
arrows such that every cell an arrow points at is empty: a left arrow sees
the cells to its left in its row (larger column labels), an up arrow the
cells above it in its column (smaller row labels).  The type-B variant
lives on a shifted diagram, keeps its diagonal cells empty, and empties
row ``-i`` whenever column ``i`` holds an up arrow.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product

from .diagrams import (
    SOUTH,
    WEST,
    Cell,
    FerrersDiagram,
    ShiftedDiagram,
    parse_border,
    shift,
)
from .errors import InvalidTableau, SizeTooLargeForOracle, ValidationReport

LEFT = "L"
UP = "U"

Arrow = tuple[int, int, str]

DEFAULT_ORACLE_BOUNDS = {"plain": 5, "star": 5, "symmetric": 10, "typeB": 5}


def _swap(kind: str) -> str:
    return UP if kind == LEFT else LEFT


@dataclass(frozen=True)
class ATStats:
    urr: int
    top: int
    noc: int


@dataclass(frozen=True)
class TypeBStats:
    urr: int
    noc_diag: int  # empty diagonal corner: 0 or 1
    noc_off: int  # empty non-diagonal corners

    @property
    def noc(self) -> int:
        return self.noc_diag + self.noc_off


@dataclass(frozen=True)
class AlternativeTableau:
    diagram: FerrersDiagram
    arrows: frozenset[Arrow]

    @property
    def size(self) -> int:
        return self.diagram.size

    @cached_property
    def arrow_at(self) -> dict[Cell, str]:
        return {(i, j): kind for i, j, kind in self.arrows}

    @cached_property
    def rows_with_left(self) -> frozenset[int]:
        return frozenset(i for i, _, kind in self.arrows if kind == LEFT)

    @cached_property
    def cols_with_up(self) -> frozenset[int]:
        return frozenset(j for _, j, kind in self.arrows if kind == UP)

    @cached_property
    def stats(self) -> ATStats:
        d = self.diagram
        urr = len(d.rows) - len(self.rows_with_left & d.row_set)
        top = 0
        if d.rows:
            first = d.rows[0]
            top = sum(1 for i, _, _ in self.arrows if i == first)
        noc = sum(1 for c in d.corners if c not in self.arrow_at)
        return ATStats(urr=urr, top=top, noc=noc)

    def sort_key(self):
        return (self.diagram.word, tuple(sorted(self.arrows)))

    def to_json(self) -> dict:
        return {
            "border": self.diagram.word,
            "arrows": [[i, j, kind] for i, j, kind in sorted(self.arrows)],
        }

    @staticmethod
    def from_json(data: dict) -> "AlternativeTableau":
        return make_at(data["border"], [tuple(a) for a in data["arrows"]])


@dataclass(frozen=True)
class TypeBAlternativeTableau:
    shifted: ShiftedDiagram
    arrows: frozenset[Arrow]

    @property
    def size(self) -> int:
        return self.shifted.size

    @property
    def sub(self) -> FerrersDiagram:
        return self.shifted.sub

    @cached_property
    def arrow_at(self) -> dict[Cell, str]:
        return {(i, j): kind for i, j, kind in self.arrows}

    @cached_property
    def rows_with_left(self) -> frozenset[int]:
        return frozenset(i for i, _, kind in self.arrows if kind == LEFT)

    @cached_property
    def cols_with_up(self) -> frozenset[int]:
        return frozenset(j for _, j, kind in self.arrows if kind == UP)

    @cached_property
    def stats(self) -> TypeBStats:
        sh = self.shifted
        urr = 0
        for i in sh.all_rows:
            if i in self.rows_with_left:
                continue
            if abs(i) in sh.sub.col_set and abs(i) in self.cols_with_up:
                continue
            urr += 1
        diag = sh.diagonal_corner
        noc_diag = 1 if diag is not None and diag not in self.arrow_at else 0
        noc_off = sum(1 for c in sh.sub.corners if c not in self.arrow_at)
        return TypeBStats(urr=urr, noc_diag=noc_diag, noc_off=noc_off)

    def sort_key(self):
        return (self.sub.word, tuple(sorted(self.arrows)))

    def to_json(self) -> dict:
        return {
            "border": self.sub.word,
            "arrows": [[i, j, kind] for i, j, kind in sorted(self.arrows)],
            "shifted": True,
        }

    @staticmethod
    def from_json(data: dict) -> "TypeBAlternativeTableau":
        return make_atb(data["border"], [tuple(a) for a in data["arrows"]])


def make_at(border: str, arrows) -> AlternativeTableau:
    diagram = parse_border(border)
    arrs = frozenset((i, j, kind) for i, j, kind in arrows)
    for i, j, kind in arrs:
        diagram.require_cell(i, j)
        if kind not in (LEFT, UP):
            raise InvalidTableau(f"unknown arrow kind {kind!r}")
    return AlternativeTableau(diagram, arrs)


def make_atb(border: str, arrows) -> TypeBAlternativeTableau:
    sh = shift(parse_border(border))
    arrs = frozenset((i, j, kind) for i, j, kind in arrows)
    for i, j, kind in arrs:
        sh.require_cell(i, j)
        if kind not in (LEFT, UP):
            raise InvalidTableau(f"unknown arrow kind {kind!r}")
    return TypeBAlternativeTableau(sh, arrs)


def validate_at(t: AlternativeTableau) -> ValidationReport:
    """Check the arrow visibility rule, stopping at the first violation."""
    d = t.diagram
    cells = {}
    for i, j, kind in sorted(t.arrows):
        d.require_cell(i, j)
        if (i, j) in cells:
            return ValidationReport(False, (f"cell ({i}, {j}) is filled twice",))
        cells[(i, j)] = kind
    occupied = t.arrow_at
    for i, j, kind in sorted(t.arrows):
        if kind == LEFT:
            for j2 in d.cols:
                if j2 > j and (i, j2) in occupied:
                    return ValidationReport(
                        False,
                        (f"left arrow at ({i}, {j}) points at non-empty ({i}, {j2})",),
                    )
        else:
            for i2 in d.rows:
                if i2 < i and (i2, j) in occupied:
                    return ValidationReport(
                        False,
                        (f"up arrow at ({i}, {j}) points at non-empty ({i2}, {j})",),
                    )
    return ValidationReport(True)


def validate_atb(t: TypeBAlternativeTableau) -> ValidationReport:
    """Check visibility, the up-arrow/negative-row rule, and empty diagonals."""
    sh = t.shifted
    cells = {}
    for i, j, kind in sorted(t.arrows):
        sh.require_cell(i, j)
        if (i, j) in cells:
            return ValidationReport(False, (f"cell ({i}, {j}) is filled twice",))
        cells[(i, j)] = kind
    occupied = t.arrow_at
    for i, j, kind in sorted(t.arrows):
        if kind == LEFT:
            for j2 in sh.sub.cols:
                if j2 > j and (i, j2) in occupied:
                    return ValidationReport(
                        False,
                        (f"left arrow at ({i}, {j}) points at non-empty ({i}, {j2})",),
                    )
        else:
            for i2 in sh.all_rows:
                if i2 >= i:
                    break
                if (i2, j) in occupied:
                    return ValidationReport(
                        False,
                        (f"up arrow at ({i}, {j}) points at non-empty ({i2}, {j})",),
                    )
    for j in sorted(t.cols_with_up):
        for cell in sh.row_cells(-j):
            if cell in occupied:
                return ValidationReport(
                    False,
                    (
                        f"column {j} has an up arrow but row {-j} is not empty "
                        f"(cell {cell})",
                    ),
                )
    for cell in sh.diagonal_cells:
        if cell in occupied:
            return ValidationReport(False, (f"diagonal cell {cell} is not empty",))
    return ValidationReport(True)


def stats_at(t: AlternativeTableau, check: bool = True) -> ATStats:
    if check:
        report = validate_at(t)
        if not report.ok:
            raise InvalidTableau("; ".join(report.problems))
    return t.stats


def stats_atb(t: TypeBAlternativeTableau, check: bool = True) -> TypeBStats:
    if check:
        report = validate_atb(t)
        if not report.ok:
            raise InvalidTableau("; ".join(report.problems))
    return t.stats


def is_star(t: AlternativeTableau) -> bool:
    """True when every column holds an up arrow (vacuous without columns)."""
    return t.cols_with_up >= t.diagram.col_set


def reflect_at(t: AlternativeTableau) -> AlternativeTableau:
    """Diagonal reflection: transpose the diagram and swap arrow kinds."""
    m = t.diagram.size
    arrows = frozenset(
        (m + 1 - j, m + 1 - i, _swap(kind)) for i, j, kind in t.arrows
    )
    return AlternativeTableau(t.diagram.transpose(), arrows)


def is_symmetric_at(t: AlternativeTableau) -> bool:
    return reflect_at(t) == t


def _at_fillings(word: str, star: bool):
    """All valid arrow assignments on one diagram, visiting cells row-major.

    Every arrow's zone lies strictly earlier in this order, so a left arrow
    is legal exactly when its row is still empty and an up arrow when its
    column is still empty.  In star mode a column must receive its up arrow
    before any other fill, which prunes the search early.
    """
    d = parse_border(word)
    cells = d.cells
    heights = {j: d.col_height(j) for j in d.cols}
    if star and any(h == 0 for h in heights.values()):
        return  # an empty column can never receive its up arrow
    seen: dict[int, int] = {j: 0 for j in d.cols}
    last_in_col = []
    for i, j in cells:
        seen[j] += 1
        last_in_col.append(seen[j] == heights[j])

    row_clean = {i: True for i in d.rows}
    col_clean = {j: True for j in d.cols}
    col_up = {j: False for j in d.cols}
    acc: list[Arrow] = []

    def place(i, j, kind):
        acc.append((i, j, kind))
        saved = (row_clean[i], col_clean[j])
        row_clean[i] = col_clean[j] = False
        return saved

    def unplace(i, j, saved):
        acc.pop()
        row_clean[i], col_clean[j] = saved

    def walk(k: int):
        if k == len(cells):
            yield frozenset(acc)
            return
        i, j = cells[k]
        closes_col = last_in_col[k]
        # empty cell
        if not (star and closes_col and not col_up[j]):
            yield from walk(k + 1)
        # left arrow: its row so far must be empty; in star mode the column
        # must already hold its up arrow, else it never can
        if row_clean[i] and not (star and not col_up[j]):
            saved = place(i, j, LEFT)
            yield from walk(k + 1)
            unplace(i, j, saved)
        # up arrow: its column so far must be empty
        if col_clean[j]:
            saved = place(i, j, UP)
            col_up[j] = True
            yield from walk(k + 1)
            col_up[j] = False
            unplace(i, j, saved)

    yield from walk(0)


def _sym_at_fillings(word: str):
    """Symmetric assignments: decide the strictly-below-diagonal cells and
    mirror them, reading reflected values for cross-diagonal visibility."""
    d = parse_border(word)
    rows = d.rows
    cols = d.cols_left_to_right
    lengths = d.row_lengths
    below = [
        (r + 1, c + 1)
        for r in range(len(rows))
        for c in range(min(lengths[r], r))
    ]
    grid: dict[tuple[int, int], str] = {}

    def val(r: int, c: int) -> str:
        if r == c:
            return ""
        if r > c:
            return grid.get((r, c), "")
        mirrored = grid.get((c, r), "")
        return _swap(mirrored) if mirrored else ""

    acc: list[Arrow] = []
    m = d.size

    def emit():
        full = list(acc)
        for i, j, kind in acc:
            full.append((m + 1 - j, m + 1 - i, _swap(kind)))
        return frozenset(full)

    def walk(k: int):
        if k == len(below):
            yield emit()
            return
        r, c = below[k]
        i, j = rows[r - 1], cols[c - 1]
        yield from walk(k + 1)  # empty
        if all(not val(r, c2) for c2 in range(1, c)):
            grid[(r, c)] = LEFT
            acc.append((i, j, LEFT))
            yield from walk(k + 1)
            acc.pop()
            del grid[(r, c)]
        if all(not val(r2, c) for r2 in range(1, r)):
            grid[(r, c)] = UP
            acc.append((i, j, UP))
            yield from walk(k + 1)
            acc.pop()
            del grid[(r, c)]

    yield from walk(0)


def _atb_fillings(word: str):
    """Type-B assignments on the shifted diagram of ``word``.

    Row-major order again puts every zone in the past; an up arrow in
    column ``j`` additionally requires the already-finished row ``-j`` to
    be empty, and later fills in a row ``-j`` cannot conflict because
    column ``j``'s fillable cells all come after row ``-j``.
    """
    sh = shift(parse_border(word))
    cells = [cell for cell in sh.cells if not sh.is_diagonal(*cell)]
    row_clean = {i: True for i in sh.all_rows}
    col_clean = {j: True for j in sh.sub.cols}
    acc: list[Arrow] = []

    def walk(k: int):
        if k == len(cells):
            yield frozenset(acc)
            return
        i, j = cells[k]
        yield from walk(k + 1)  # empty
        if row_clean[i]:
            acc.append((i, j, LEFT))
            saved = col_clean[j]
            row_clean[i] = col_clean[j] = False
            yield from walk(k + 1)
            row_clean[i], col_clean[j] = True, saved
            acc.pop()
        # row -j is fully decided before any fillable cell of column j
        if col_clean[j] and row_clean[-j]:
            acc.append((i, j, UP))
            saved = row_clean[i]
            row_clean[i] = col_clean[j] = False
            yield from walk(k + 1)
            row_clean[i], col_clean[j] = saved, True
            acc.pop()

    yield from walk(0)


def enumerate_at_oracle(n: int, variant: str = "plain", bound: int | None = None):
    """Brute-force generation per variant, in canonical order.

    ``n`` is the tableau size (diagram size; even for ``symmetric``).
    """
    if variant not in DEFAULT_ORACLE_BOUNDS:
        raise ValueError(f"unknown variant {variant!r}")
    limit = DEFAULT_ORACLE_BOUNDS[variant] if bound is None else bound
    if n > limit:
        raise SizeTooLargeForOracle(f"size {n} beyond oracle bound {limit}")
    if variant == "symmetric":
        if n % 2:
            raise ValueError("symmetric alternative tableaux have even size")
        words = _self_conjugate_at_words(n)
    else:
        words = ("".join(w) for w in product((SOUTH, WEST), repeat=n))
    for word in words:
        if variant == "symmetric":
            found = _sym_at_fillings(word)
            build = lambda arrs: AlternativeTableau(parse_border(word), arrs)
        elif variant == "typeB":
            found = _atb_fillings(word)
            build = lambda arrs: TypeBAlternativeTableau(
                shift(parse_border(word)), arrs
            )
        else:
            found = _at_fillings(word, star=(variant == "star"))
            build = lambda arrs: AlternativeTableau(parse_border(word), arrs)
        for arrs in sorted(found, key=sorted):
            yield build(arrs)


def _self_conjugate_at_words(length: int):
    """All self-conjugate words of even length, in lexicographic order."""
    assert length % 2 == 0
    half = length // 2
    if half == 0:
        yield ""
        return
    for start in product((SOUTH, WEST), repeat=half):
        first = "".join(start)
        second = "".join(WEST if ch == SOUTH else SOUTH for ch in reversed(first))
        yield first + second
