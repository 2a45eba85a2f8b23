"""The five bijections between the tableau and partition families.

* ``alpha``: size-n tree-like tableaux -> size-(n-1) alternative tableaux
  (drop the topmost row and leftmost column; labels shift down by one).
* ``beta``: size-n tree-like tableaux -> size-n alternative tableaux with
  an up arrow in every column (drop only the leftmost column).
* ``gamma``: symmetric alternative tableaux of size 2n -> type-B
  alternative tableaux of size n (keep the half on or left of the
  diagonal, re-read as a shifted diagram).
* ``phi`` / ``psi``: star alternative tableaux of size n <-> linked
  partitions of [n] (columns become backward chains of arcs).
* ``phi_b`` / ``psi_b``: type-B alternative tableaux of size n <-> signed
  linked partitions of [n].

Label bookkeeping always recomputes positions from the new border word
rather than adjusting old labels arithmetically.
"""

from __future__ import annotations

from .alternative import (
    LEFT,
    UP,
    AlternativeTableau,
    TypeBAlternativeTableau,
    is_star,
    is_symmetric_at,
    validate_at,
    validate_atb,
)
from .diagrams import (
    SOUTH,
    WEST,
    parse_border,
    shift,
    word_from_row_lengths,
)
from .errors import (
    InvalidInput,
    InvalidPartition,
    InvalidTableau,
    NotStar,
    NotSymmetric,
)
from .linked import LinkedPartition, TypeBLinkedPartition
from .tableaux import TreeLikeTableau, validate_tlt


def _swap(kind: str) -> str:
    return UP if kind == LEFT else LEFT


def _require_tlt(t: TreeLikeTableau) -> None:
    report = validate_tlt(t)
    if not report.ok:
        raise InvalidInput("; ".join(report.problems))


def _point_arrows(t: TreeLikeTableau):
    """Arrow kind for each non-root point: up when nothing is pointed above
    it in its column, left when nothing is pointed to its left in its row."""
    rows_of_col: dict[int, int] = {}
    for i, j in sorted(t.points):
        rows_of_col.setdefault(j, i)  # min row per column
    out = []
    for i, j in t.points:
        if (i, j) == t.root:
            continue
        above = rows_of_col[j] < i
        out.append((i, j, LEFT if above else UP))
    return out


def alpha(t: TreeLikeTableau, check: bool = True) -> AlternativeTableau:
    """Drop the topmost row and leftmost column after the arrow replacement."""
    if check:
        _require_tlt(t)
    m = t.diagram.size  # topmost row is 1, leftmost column is m
    arrows = frozenset(
        (i - 1, j - 1, kind)
        for i, j, kind in _point_arrows(t)
        if i != 1 and j != m
    )
    return AlternativeTableau(parse_border(t.diagram.word[1:-1]), arrows)


def alpha_inv(t: AlternativeTableau, check: bool = True) -> TreeLikeTableau:
    """Wrap a new row, column and top-left root cell around the tableau."""
    if check:
        report = validate_at(t)
        if not report.ok:
            raise InvalidInput("; ".join(report.problems))
    d = t.diagram
    m = d.size
    word = SOUTH + d.word + WEST
    points = {(1, m + 2)}
    for i in d.rows:
        if i not in t.rows_with_left:
            points.add((i + 1, m + 2))
    for j in d.cols:
        if j not in t.cols_with_up:
            points.add((1, j + 1))
    for i, j, _ in t.arrows:
        points.add((i + 1, j + 1))
    return TreeLikeTableau(parse_border(word), frozenset(points))


def beta(t: TreeLikeTableau, check: bool = True) -> AlternativeTableau:
    """Drop only the leftmost column; remaining labels are unchanged."""
    if check:
        _require_tlt(t)
    m = t.diagram.size
    arrows = frozenset(
        (i, j, kind) for i, j, kind in _point_arrows(t) if j != m
    )
    return AlternativeTableau(parse_border(t.diagram.word[:-1]), arrows)


def beta_inv(t: AlternativeTableau, check: bool = True) -> TreeLikeTableau:
    """Add a full leftmost column, pointing it at the left-arrow-free rows."""
    if not is_star(t):
        raise NotStar("every column needs an up arrow")
    if t.size == 0:
        raise InvalidInput("no tree-like tableau of size 0")
    if check:
        report = validate_at(t)
        if not report.ok:
            raise InvalidInput("; ".join(report.problems))
    d = t.diagram
    m = d.size
    word = d.word + WEST
    points = set()
    for i in d.rows:
        if i not in t.rows_with_left:
            points.add((i, m + 1))
    for i, j, _ in t.arrows:
        points.add((i, j))
    return TreeLikeTableau(parse_border(word), frozenset(points))


def gamma(t: AlternativeTableau, check: bool = True) -> TypeBAlternativeTableau:
    """Keep the cells on or left of the main diagonal of a symmetric tableau
    and re-read them as a filling of a shifted diagram."""
    if check:
        report = validate_at(t)
        if not report.ok:
            raise InvalidInput("; ".join(report.problems))
    if not is_symmetric_at(t):
        raise NotSymmetric("input is not fixed by diagonal reflection")
    d = t.diagram
    lengths = d.row_lengths
    depth = 0  # rows whose cells reach the diagonal
    while depth < len(lengths) and lengths[depth] >= depth + 1:
        depth += 1
    fword = word_from_row_lengths(lengths[depth:], depth)
    sub = parse_border(fword)
    frows = sub.rows
    fcols = sub.cols_left_to_right
    arrows = []
    for i, j, kind in t.arrows:
        r = d.row_position[i]
        c = d.col_position[j]
        if c > r:
            continue  # strictly right of the diagonal; its mirror is kept
        if c == r:
            raise InvalidTableau(f"arrow on the main diagonal at ({i}, {j})")
        lab_r = -fcols[r - 1] if r <= depth else frows[r - depth - 1]
        arrows.append((lab_r, fcols[c - 1], kind))
    return TypeBAlternativeTableau(shift(sub), frozenset(arrows))


def gamma_inv(t: TypeBAlternativeTableau, check: bool = True) -> AlternativeTableau:
    """Mirror the non-diagonal cells back across the diagonal."""
    if check:
        report = validate_atb(t)
        if not report.ok:
            raise InvalidInput("; ".join(report.problems))
    sub = t.sub
    depth = len(sub.cols)
    n = sub.size
    fcols = sub.cols_left_to_right
    frows = sub.rows
    # the symmetric diagram: the first `depth` rows extend to the mirror of
    # the corresponding column, the rest are the subdiagram rows unchanged
    lengths = [depth + sub.col_height(fcols[c]) for c in range(depth)]
    lengths.extend(sub.row_lengths)
    word = word_from_row_lengths(lengths, n)
    d = parse_border(word)
    srows = d.rows
    scols = d.cols_left_to_right
    col_pos = {lab: k for k, lab in enumerate(fcols, 1)}
    row_pos = {lab: k + depth for k, lab in enumerate(frows, 1)}
    arrows = []
    for i, j, kind in t.arrows:
        r = col_pos[-i] if i < 0 else row_pos[i]
        c = col_pos[j]
        arrows.append((srows[r - 1], scols[c - 1], kind))
        arrows.append((srows[c - 1], scols[r - 1], _swap(kind)))
    return AlternativeTableau(d, frozenset(arrows))


def _columns_of(arrows) -> dict[int, tuple[int | None, list[int]]]:
    """Per column: the up-arrow row (if any) and the left-arrow rows sorted."""
    out: dict[int, tuple[int | None, list[int]]] = {}
    for i, j, kind in sorted(arrows):
        up, lefts = out.get(j, (None, []))
        if kind == UP:
            up = i
        else:
            lefts.append(i)
        out[j] = (up, lefts)
    return out


def phi(t: AlternativeTableau, check: bool = True) -> LinkedPartition:
    """Read each column's up arrow and left arrows as a chain of arcs."""
    if check:
        report = validate_at(t)
        if not report.ok:
            raise InvalidInput("; ".join(report.problems))
    if not is_star(t):
        raise NotStar("every column needs an up arrow")
    by_col = _columns_of(t.arrows)
    arcs = []
    for j, (up, lefts) in by_col.items():
        chain = [up] + lefts + [j]
        arcs.extend(zip(chain, chain[1:]))
    return LinkedPartition(t.size, frozenset(arcs))


def psi(tau: LinkedPartition) -> AlternativeTableau:
    """Fill the destination columns along maximal paths, largest first."""
    n = tau.n
    dest = tau.destinations
    word = "".join(WEST if v in dest else SOUTH for v in range(1, n + 1))
    alive = dict(tau.pred)
    arrows = []
    for b in sorted(dest, reverse=True):
        path = [b]
        v = b
        while v in alive:
            v = alive.pop(v)
            path.append(v)
        path.reverse()
        arrows.append((path[0], b, UP))
        arrows.extend((a, b, LEFT) for a in path[1:-1])
    return AlternativeTableau(parse_border(word), frozenset(arrows))


def phi_b(t: TypeBAlternativeTableau, check: bool = True) -> TypeBLinkedPartition:
    """Chains from up-arrow columns, stars from up-arrow-free columns."""
    if check:
        report = validate_atb(t)
        if not report.ok:
            raise InvalidInput("; ".join(report.problems))
    sub = t.sub
    by_col = _columns_of(t.arrows)
    vertices = list(sub.rows)
    arcs = []
    for j in sub.cols:
        up, lefts = by_col.get(j, (None, []))
        if up is not None:
            vertices.append(j)
            chain = [up] + lefts + [j]
            arcs.extend(zip(chain, chain[1:]))
        else:
            vertices.append(-j)
            arcs.extend((-j, i) for i in lefts)
    return TypeBLinkedPartition(
        sub.size, tuple(sorted(vertices)), frozenset(arcs)
    )


def psi_b(tau: TypeBLinkedPartition) -> TypeBAlternativeTableau:
    """Fill legal-destination columns along maximal good paths, largest
    first, then place the leftover arcs as single left arrows."""
    n = tau.n
    legal = tau.legal_destinations
    col_labels = {abs(v) for v in tau.vertices if v < 0} | set(legal)
    word = "".join(WEST if k in col_labels else SOUTH for k in range(1, n + 1))
    alive = dict(tau.pred)
    arrows = []
    for b in sorted(legal, reverse=True):
        path = [b]
        v = b
        while v in alive and abs(alive[v]) < b:
            v = alive.pop(v)
            path.append(v)
        path.reverse()
        arrows.append((path[0], b, UP))
        arrows.extend((a, b, LEFT) for a in path[1:-1])
    for v, u in sorted(alive.items()):
        # leftover arcs must start negative and stay below in absolute value
        if u >= 0 or abs(v) >= abs(u):
            raise InvalidPartition(
                f"arc ({u}, {v}) cannot be placed in the shifted diagram"
            )
        arrows.append((v, -u, LEFT))
    return TypeBAlternativeTableau(
        shift(parse_border(word)), frozenset(arrows)
    )
