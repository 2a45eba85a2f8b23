"""Linked partitions and their signed (type B) variant.

A linked partition of ``[n]`` is stored by its linear representation: an
arc set on the vertices ``1..n`` in which every vertex is the right-hand
endpoint of at most one arc.  The signed variant additionally negates a
subset of the ground set; vertices are listed in increasing numeric order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product

from .errors import (
    CoverageGap,
    IndexOutOfRange,
    InvalidPartition,
    NotADestination,
    NotALegalDestination,
    NotNearlyDisjoint,
    UnknownPredicate,
)

Arc = tuple[int, int]

ORIGIN = "origin"
TRANSIENT = "transient"
SINGLETON = "singleton"
DESTINATION = "destination"


def _build_pred(vertices: tuple[int, ...], arcs: frozenset[Arc]) -> dict[int, int]:
    vset = set(vertices)
    pred: dict[int, int] = {}
    for u, v in arcs:
        if u >= v:
            raise InvalidPartition(f"arc ({u}, {v}) must go left to right")
        if u not in vset or v not in vset:
            raise InvalidPartition(f"arc ({u}, {v}) has an endpoint outside the vertex set")
        if v in pred:
            raise InvalidPartition(f"vertex {v} is the right endpoint of two arcs")
        pred[v] = u
    return pred


@dataclass(frozen=True)
class LinkedPartition:
    """Arc set on ``1..n`` with in-degree at most one."""

    n: int
    arcs: frozenset[Arc]

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(range(1, self.n + 1))

    @cached_property
    def pred(self) -> dict[int, int]:
        """Right endpoint -> left endpoint of its unique incoming arc."""
        return _build_pred(self.vertices, self.arcs)

    @cached_property
    def left_endpoints(self) -> frozenset[int]:
        return frozenset(u for u, _ in self.arcs)

    @cached_property
    def destinations(self) -> frozenset[int]:
        return frozenset(v for v in self.pred if v not in self.left_endpoints)

    @cached_property
    def os(self) -> int:
        """Origins plus singletons: exactly the vertices without an in-arc."""
        return self.n - len(self.pred)

    @cached_property
    def one(self) -> int:
        """Arcs whose left endpoint is vertex 1."""
        return sum(1 for u, _ in self.arcs if u == 1)

    def sort_key(self):
        return tuple(sorted(self.arcs))

    def to_json(self) -> dict:
        return {"n": self.n, "arcs": [list(a) for a in sorted(self.arcs)]}

    @staticmethod
    def from_json(data: dict) -> "LinkedPartition":
        return make_lp(data["n"], [tuple(a) for a in data["arcs"]])


@dataclass(frozen=True)
class TypeBLinkedPartition:
    """Signed linked partition: one of ``k``/``-k`` per ``k`` in ``[n]``."""

    n: int
    vertices: tuple[int, ...]
    arcs: frozenset[Arc]

    @cached_property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    @cached_property
    def pred(self) -> dict[int, int]:
        return _build_pred(self.vertices, self.arcs)

    @cached_property
    def left_endpoints(self) -> frozenset[int]:
        return frozenset(u for u, _ in self.arcs)

    @cached_property
    def destinations(self) -> frozenset[int]:
        return frozenset(v for v in self.pred if v not in self.left_endpoints)

    @cached_property
    def legal_destinations(self) -> frozenset[int]:
        """Destinations whose incoming arc comes from a smaller absolute value."""
        return frozenset(
            v for v in self.destinations if abs(self.pred[v]) < abs(v)
        )

    @cached_property
    def os(self) -> int:
        return self.n - len(self.pred)

    def sort_key(self):
        return (self.vertices, tuple(sorted(self.arcs)))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "vertices": list(self.vertices),
            "arcs": [list(a) for a in sorted(self.arcs)],
        }

    @staticmethod
    def from_json(data: dict) -> "TypeBLinkedPartition":
        return make_lpb(data["n"], data["vertices"], [tuple(a) for a in data["arcs"]])


def make_lp(n: int, arcs) -> LinkedPartition:
    tau = LinkedPartition(n, frozenset(tuple(a) for a in arcs))
    tau.pred  # validates endpoints and in-degree
    return tau


def make_lpb(n: int, vertices, arcs) -> TypeBLinkedPartition:
    verts = tuple(vertices)
    if tuple(sorted(verts)) != verts:
        raise InvalidPartition("vertices must be listed in increasing order")
    if sorted(abs(v) for v in verts) != list(range(1, n + 1)) or 0 in verts:
        raise InvalidPartition(f"vertex set must pick one sign of each of 1..{n}")
    tau = TypeBLinkedPartition(n, verts, frozenset(tuple(a) for a in arcs))
    tau.pred
    return tau


def classify(tau: LinkedPartition | TypeBLinkedPartition) -> dict[int, str]:
    """Partition the vertex set into origins, transients, singletons, destinations."""
    pred = tau.pred
    lefts = tau.left_endpoints
    out: dict[int, str] = {}
    for v in tau.vertices:
        has_in = v in pred
        has_out = v in lefts
        if has_in and has_out:
            out[v] = TRANSIENT
        elif has_in:
            out[v] = DESTINATION
        elif has_out:
            out[v] = ORIGIN
        else:
            out[v] = SINGLETON
    return out


def blocks(tau: LinkedPartition) -> list[tuple[int, ...]]:
    """Block view: each left endpoint with its right endpoints, plus singletons."""
    by_min: dict[int, list[int]] = {}
    for u, v in sorted(tau.arcs):
        by_min.setdefault(u, []).append(v)
    out = [(u, *sorted(vs)) for u, vs in by_min.items()]
    used = tau.left_endpoints | set(tau.pred)
    out.extend((v,) for v in tau.vertices if v not in used)
    return sorted(out)


def from_blocks(block_family, n: int) -> LinkedPartition:
    """Rebuild the arc set from a block family, validating near-disjointness."""
    blks = [tuple(sorted(b)) for b in block_family]
    seen: set[int] = set()
    for b in blks:
        if not b:
            raise CoverageGap("empty block")
        if b[0] < 1 or b[-1] > n:
            raise CoverageGap(f"block {b} leaves 1..{n}")
        seen.update(b)
    if seen != set(range(1, n + 1)):
        missing = sorted(set(range(1, n + 1)) - seen)
        raise CoverageGap(f"ground set not covered, missing {missing}")
    for p in range(len(blks)):
        for q in range(p + 1, len(blks)):
            bp, bq = blks[p], blks[q]
            for k in set(bp) & set(bq):
                cond1 = k == bp[0] and len(bp) > 1 and k != bq[0]
                cond2 = k == bq[0] and len(bq) > 1 and k != bp[0]
                if not (cond1 or cond2):
                    raise NotNearlyDisjoint(
                        f"blocks {bp} and {bq} share {k} illegally"
                    )
    arcs = []
    for b in blks:
        arcs.extend((b[0], v) for v in b[1:])
    return make_lp(n, arcs)


def maximal_path(tau: LinkedPartition, dest: int) -> tuple[int, ...]:
    """Backward chain of in-arcs from a destination to its origin."""
    if dest not in tau.destinations:
        raise NotADestination(f"vertex {dest} is not a destination")
    path = [dest]
    v = dest
    while v in tau.pred:
        v = tau.pred[v]
        path.append(v)
    return tuple(reversed(path))


def legal_destinations(tau: TypeBLinkedPartition) -> frozenset[int]:
    return tau.legal_destinations


def maximal_good_path(tau: TypeBLinkedPartition, dest: int) -> tuple[int, ...]:
    """Backward chain from a legal destination through vertices of smaller
    absolute value, extended as far as the arcs allow."""
    if dest not in tau.legal_destinations:
        raise NotALegalDestination(f"vertex {dest} is not a legal destination")
    path = [dest]
    v = dest
    while v in tau.pred and abs(tau.pred[v]) < abs(dest):
        v = tau.pred[v]
        path.append(v)
    return tuple(reversed(path))


def enumerate_lp(n: int):
    """All linked partitions of ``[n]``: each vertex j >= 2 independently
    picks an in-neighbor among 1..j-1 or none, so there are n! of them."""
    if n < 0:
        raise ValueError("n must be >= 0")
    choice_sets = [range(j) for j in range(2, n + 1)]  # 0 = no in-arc
    for choices in product(*choice_sets):
        arcs = frozenset(
            (c, j) for j, c in zip(range(2, n + 1), choices) if c
        )
        yield LinkedPartition(n, arcs)


def enumerate_lpb(n: int):
    """All signed linked partitions of ``[n]``: 2^n sign vectors, and per
    sorted vertex list every in-degree-at-most-one arc set (2^n n! total)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    for signs in product((1, -1), repeat=n):
        vertices = tuple(sorted(s * k for k, s in enumerate(signs, 1)))
        choice_sets = [range(m + 1) for m in range(1, n)]  # 0 = no in-arc
        for choices in product(*choice_sets):
            arcs = frozenset(
                (vertices[c - 1], vertices[m])
                for m, c in zip(range(1, n), choices)
                if c
            )
            yield TypeBLinkedPartition(n, vertices, arcs)


# ---------------------------------------------------------------------------
# Subset predicates used by the identity catalog.


def _is_dest(tau, v: int) -> bool:
    return v in tau.destinations


def _plain_corner_slot(tau: LinkedPartition, i: int) -> bool:
    # destination at i, none at i-1, and no arc (i-1, i)
    return (
        _is_dest(tau, i)
        and not _is_dest(tau, i - 1)
        and (i - 1, i) not in tau.arcs
    )


def _plain_dest_no_arc(tau: LinkedPartition, i: int) -> bool:
    return _is_dest(tau, i) and (i - 1, i) not in tau.arcs


def _plain_dest_pair(tau: LinkedPartition, i: int) -> bool:
    return _is_dest(tau, i - 1) and _is_dest(tau, i)


def _b_blocking_arc(tau: TypeBLinkedPartition, i: int) -> bool:
    """An arc (-i, i-1) whose right endpoint is a destination.

    Only such arcs survive every column fill and land in the cell
    (i-1, i); when i-1 has an out-arc the arc is always absorbed into a
    longer column chain and the cell stays empty, so it must not block
    corner-slot membership.
    """
    return (-i, i - 1) in tau.arcs and i - 1 in tau.destinations


def _b_corner_slot(tau: TypeBLinkedPartition, i: int) -> bool:
    cond2 = i in tau.legal_destinations or -i in tau.vertex_set
    cond3 = i - 1 in tau.vertex_set and i - 1 not in tau.legal_destinations
    cond4 = (i - 1, i) not in tau.arcs and not _b_blocking_arc(tau, i)
    return cond2 and cond3 and cond4


def _b_negated_branch(tau: TypeBLinkedPartition, i: int) -> bool:
    return -i in tau.vertex_set and _b_corner_slot(tau, i)


def _b_legal_branch(tau: TypeBLinkedPartition, i: int) -> bool:
    return i in tau.legal_destinations and _b_corner_slot(tau, i)


def _b_pair_present(tau: TypeBLinkedPartition, i: int) -> bool:
    return -i in tau.vertex_set and i - 1 in tau.vertex_set


def _b_pair_legal(tau: TypeBLinkedPartition, i: int) -> bool:
    return _b_pair_present(tau, i) and i - 1 in tau.legal_destinations


def _b_pair_arc(tau: TypeBLinkedPartition, i: int) -> bool:
    return _b_pair_present(tau, i) and _b_blocking_arc(tau, i)


def _b_negated(tau: TypeBLinkedPartition, i: int) -> bool:
    return -i in tau.vertex_set


def _b_legal_no_arc(tau: TypeBLinkedPartition, i: int) -> bool:
    return (
        i - 1 in tau.vertex_set
        and i in tau.legal_destinations
        and (i - 1, i) not in tau.arcs
    )


def _b_legal_pair(tau: TypeBLinkedPartition, i: int) -> bool:
    return _b_legal_no_arc(tau, i) and i - 1 in tau.legal_destinations


def _b_minus_one(tau: TypeBLinkedPartition, i: int | None = None) -> bool:
    return -1 in tau.vertex_set


# id -> (predicate, plain?, minimum i, takes i)
PREDICATES: dict[str, tuple] = {
    "L_ni": (_plain_corner_slot, True, 3, True),
    "M_ni": (_plain_dest_no_arc, True, 3, True),
    "N_ni": (_plain_dest_pair, True, 3, True),
    "LB_ni": (_b_corner_slot, False, 2, True),
    "X_ni": (_b_negated_branch, False, 2, True),
    "Y_ni": (_b_legal_branch, False, 2, True),
    "Z_ni": (_b_negated, False, 1, True),
    "X1": (_b_pair_present, False, 2, True),
    "X2": (_b_pair_legal, False, 2, True),
    "X3": (_b_pair_arc, False, 2, True),
    "Y1": (_b_legal_no_arc, False, 2, True),
    "Y2": (_b_legal_pair, False, 2, True),
    "LB_n1": (_b_minus_one, False, 1, False),
}


def subset_member(tau, predicate_id: str, i: int | None = None) -> bool:
    """Membership of ``tau`` in the indexed subset named by ``predicate_id``."""
    try:
        fn, plain, low, takes_i = PREDICATES[predicate_id]
    except KeyError:
        raise UnknownPredicate(f"unknown predicate {predicate_id!r}") from None
    if plain != isinstance(tau, LinkedPartition):
        kind = "plain" if plain else "signed"
        raise UnknownPredicate(f"predicate {predicate_id!r} needs a {kind} partition")
    if not takes_i:
        return fn(tau)
    if i is None or not low <= i <= tau.n:
        raise IndexOutOfRange(
            f"predicate {predicate_id!r} needs {low} <= i <= {tau.n}, got {i}"
        )
    return fn(tau, i)
