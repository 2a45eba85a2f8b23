"""Aggregation of statistics over enumerated families and identity checks.

Every family has a default generator that transports linked partitions
through the bijections (fast at every size used here) and a brute-force
oracle for small sizes; cross-equality of the two is part of the test
suite, so aggregate results rest on an independently checked chain.

Weighted sums are accumulated exactly as integer coefficient maps and
compared to the closed-form catalog with zero tolerance.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable

from .alternative import (
    AlternativeTableau,
    TypeBAlternativeTableau,
    enumerate_at_oracle,
)
from .bijections import alpha, alpha_inv, beta_inv, gamma_inv, psi, psi_b
from .errors import OutOfRange, SizeTooLargeForOracle, UnknownIdentity
from .linked import (
    LinkedPartition,
    TypeBLinkedPartition,
    enumerate_lp,
    enumerate_lpb,
    subset_member,
)
from .polynomials import BivariatePolynomial, closed_form
from .tableaux import (
    TreeLikeTableau,
    enumerate_sym_tlt_oracle,
    enumerate_tlt_oracle,
)

FAMILIES = ("tlt", "tlt-sym", "at", "at-star", "at-sym", "at-b", "lp", "lp-b")


def _check_size(family: str, size: int) -> None:
    if family not in FAMILIES:
        raise OutOfRange(f"unknown family {family!r}")
    if size < 0:
        raise OutOfRange("size must be >= 0")
    if family == "tlt" and size < 1:
        raise OutOfRange("tree-like tableaux have size >= 1")
    if family == "tlt-sym" and (size % 2 == 0 or size < 1):
        raise OutOfRange("symmetric tree-like tableaux have odd size")
    if family == "at-sym" and size % 2:
        raise OutOfRange("symmetric alternative tableaux have even size")


def transport_generate(family: str, size: int) -> Iterable:
    """Generate a family by pushing linked partitions through the bijections."""
    _check_size(family, size)
    if family == "lp":
        yield from enumerate_lp(size)
    elif family == "lp-b":
        yield from enumerate_lpb(size)
    elif family == "at-star":
        for tau in enumerate_lp(size):
            yield psi(tau)
    elif family == "tlt":
        for tau in enumerate_lp(size):
            yield beta_inv(psi(tau), check=False)
    elif family == "at":
        for tau in enumerate_lp(size + 1):
            yield alpha(beta_inv(psi(tau), check=False), check=False)
    elif family == "at-b":
        for tau in enumerate_lpb(size):
            yield psi_b(tau)
    elif family == "at-sym":
        for tau in enumerate_lpb(size // 2):
            yield gamma_inv(psi_b(tau), check=False)
    elif family == "tlt-sym":
        for tau in enumerate_lpb((size - 1) // 2):
            yield alpha_inv(gamma_inv(psi_b(tau), check=False), check=False)


def oracle_generate(family: str, size: int, bound: int | None = None) -> Iterable:
    """Generate a family by pruned brute force (small sizes only)."""
    _check_size(family, size)
    if family == "lp":
        yield from enumerate_lp(size)
    elif family == "lp-b":
        yield from enumerate_lpb(size)
    elif family == "tlt":
        yield from (
            enumerate_tlt_oracle(size) if bound is None
            else enumerate_tlt_oracle(size, bound)
        )
    elif family == "tlt-sym":
        yield from (
            enumerate_sym_tlt_oracle(size) if bound is None
            else enumerate_sym_tlt_oracle(size, bound)
        )
    else:
        variant = {
            "at": "plain", "at-star": "star", "at-sym": "symmetric", "at-b": "typeB",
        }[family]
        yield from enumerate_at_oracle(size, variant, bound)


@lru_cache(maxsize=128)
def family_objects(family: str, size: int, oracle: bool = False) -> tuple:
    """Materialized (and cached) family contents."""
    gen = oracle_generate if oracle else transport_generate
    return tuple(gen(family, size))


def sort_key(obj):
    return obj.sort_key()


def weight_exponents(family: str, obj) -> tuple[int, int]:
    """(deg_a, deg_b) of the object's weight monomial; x is carried by b."""
    if family == "tlt":
        s = obj.stats
        return (s.top, s.left)
    if family == "tlt-sym":
        left = obj.stats.left
        if left < 1:
            raise OutOfRange("weight undefined below size 3")
        return (0, left - 1)
    if family == "at":
        return (0, obj.stats.urr)
    if family == "at-star":
        s = obj.stats
        if s.urr < 1:
            raise OutOfRange("weight undefined for the empty tableau")
        return (s.top, s.urr - 1)
    if family in ("at-sym", "at-b"):
        urr = obj.stats.urr
        if urr < 1:
            raise OutOfRange("weight undefined for the empty tableau")
        return (0, urr - 1)
    if family == "lp":
        if obj.os < 1:
            raise OutOfRange("weight undefined for the empty partition")
        return (obj.one, obj.os - 1)
    if family == "lp-b":
        if obj.os < 1:
            raise OutOfRange("weight undefined for the empty partition")
        return (0, obj.os - 1)
    raise OutOfRange(f"unknown family {family!r}")


def _corner_total(obj) -> int:
    if isinstance(obj, TypeBAlternativeTableau):
        return len(obj.shifted.corners)
    if isinstance(obj, AlternativeTableau):
        return len(obj.diagram.corners)
    return len(obj.diagram.corners)


def _noc_value(obj) -> int:
    if isinstance(obj, TypeBAlternativeTableau):
        s = obj.stats
        return s.noc_diag + s.noc_off
    return obj.stats.noc


Multiplier = Callable[[object], int]


def multiplier_fn(family: str, multiplier) -> Multiplier:
    """Resolve a multiplier spec to a function object -> integer.

    Specs: "unit", "noc", "oc", "nocb" (diagonal-weighted corners of type-B
    tableaux), ("subset", predicate_id, i), and ("subset-sum", predicate_id,
    lo) which counts the indices i in lo..n with the predicate true.
    """
    if multiplier == "unit":
        return lambda obj: 1
    if multiplier == "noc":
        return _noc_value
    if multiplier == "oc":
        return lambda obj: _corner_total(obj) - _noc_value(obj)
    if multiplier == "nocb":
        if family != "at-b":
            raise OutOfRange("nocb only applies to type-B alternative tableaux")
        return lambda obj: obj.stats.noc_diag + 2 * obj.stats.noc_off
    if isinstance(multiplier, tuple) and multiplier[0] == "subset":
        _, pred, i = multiplier
        return lambda obj: 1 if subset_member(obj, pred, i) else 0
    if isinstance(multiplier, tuple) and multiplier[0] == "subset-sum":
        _, pred, lo = multiplier
        return lambda obj: sum(
            1 for i in range(lo, obj.n + 1) if subset_member(obj, pred, i)
        )
    raise OutOfRange(f"unknown multiplier {multiplier!r}")


def aggregate(
    family: str,
    size: int,
    multiplier="unit",
    *,
    weight: str = "family",
    oracle: bool = False,
    chunk_size: int | None = None,
) -> BivariatePolynomial:
    """Exact weighted sum of ``multiplier(obj) * weight(obj)`` over a family.

    ``weight="count"`` replaces the family weight by 1 (plain counting).
    ``chunk_size`` splits the stream into independently reduced chunks whose
    partial sums are merged; the result never depends on the partitioning.
    """
    objs = family_objects(family, size, oracle)
    mult = multiplier_fn(family, multiplier)
    if weight == "count":
        expo = lambda obj: (0, 0)
    else:
        expo = lambda obj: weight_exponents(family, obj)

    def reduce_chunk(chunk) -> dict:
        acc: dict[tuple[int, int], int] = {}
        for obj in chunk:
            m = mult(obj)
            if m:
                key = expo(obj)
                acc[key] = acc.get(key, 0) + m
        return acc

    if chunk_size is None:
        total = reduce_chunk(objs)
    else:
        total = {}
        for start in range(0, len(objs), chunk_size):
            for key, val in reduce_chunk(objs[start:start + chunk_size]).items():
                total[key] = total.get(key, 0) + val
    return BivariatePolynomial(total)


# ---------------------------------------------------------------------------
# Identity catalog.


@dataclass(frozen=True)
class IdentityCheck:
    ident: str
    family: str
    multiplier_for: Callable  # (n, i) -> multiplier spec
    rhs: Callable  # (n, i) -> BivariatePolynomial
    default_sizes: tuple[int, int]  # inclusive n range
    family_size: Callable  # n -> object size
    i_low: int | None = None  # per-i identities: i runs i_low..n
    weight: str = "family"


def _ident(n, i=None):
    return "unit"


_same = lambda n: n
_sym_size = lambda n: 2 * n + 1
_half_size = lambda n: n

IDENTITIES: dict[str, IdentityCheck] = {}


def _register(check: IdentityCheck) -> None:
    IDENTITIES[check.ident] = check


_register(IdentityCheck(
    "eqT", "tlt", _ident, lambda n, i=None: closed_form("eqT", n),
    (1, 8), _same))
_register(IdentityCheck(
    "eqsT", "tlt-sym", _ident, lambda n, i=None: closed_form("eqsT", n),
    (1, 6), _sym_size))
_register(IdentityCheck(
    "conj1", "tlt", lambda n, i=None: "noc",
    lambda n, i=None: closed_form("conj1", n), (3, 8), _same))
_register(IdentityCheck(
    "conj2", "tlt-sym", lambda n, i=None: "noc",
    lambda n, i=None: closed_form("conj2", n), (3, 6), _sym_size))
_register(IdentityCheck(
    "eq23", "at-star", _ident, lambda n, i=None: closed_form("eq23", n),
    (1, 8), _same))
_register(IdentityCheck(
    "eqLn", "lp", _ident, lambda n, i=None: closed_form("eqLn", n),
    (1, 8), _same))
_register(IdentityCheck(
    "eq26", "at-b", _ident, lambda n, i=None: closed_form("eq26", n),
    (1, 6), _same))
_register(IdentityCheck(
    "eqLB", "lp-b", _ident, lambda n, i=None: closed_form("eqLB", n),
    (1, 6), _same))

_register(IdentityCheck(
    "lem-M", "lp", lambda n, i: ("subset", "M_ni", i),
    lambda n, i: closed_form("lem-M", n, i), (3, 8), _same, i_low=3))
_register(IdentityCheck(
    "lem-N", "lp", lambda n, i: ("subset", "N_ni", i),
    lambda n, i: closed_form("lem-N", n, i), (3, 8), _same, i_low=3))
_register(IdentityCheck(
    "lem-L", "lp", lambda n, i: ("subset", "L_ni", i),
    lambda n, i: closed_form("lem-M", n, i) - closed_form("lem-N", n, i),
    (3, 8), _same, i_low=3))
_register(IdentityCheck(
    "lem-weightp", "lp", lambda n, i=None: ("subset-sum", "L_ni", 3),
    lambda n, i=None: closed_form("lem-weightp", n), (3, 8), _same))

_register(IdentityCheck(
    "lem-X", "lp-b", lambda n, i: ("subset", "X_ni", i),
    lambda n, i: closed_form("lem-X", n, i), (2, 6), _same, i_low=2))
_register(IdentityCheck(
    "lem-Y", "lp-b", lambda n, i: ("subset", "Y_ni", i),
    lambda n, i: closed_form("lem-Y", n, i), (2, 6), _same, i_low=2))
_register(IdentityCheck(
    "lem-X1", "lp-b", lambda n, i: ("subset", "X1", i),
    lambda n, i: closed_form("lem-X1", n), (2, 6), _same, i_low=2))
_register(IdentityCheck(
    "lem-X2", "lp-b", lambda n, i: ("subset", "X2", i),
    lambda n, i: closed_form("lem-X2", n, i), (2, 6), _same, i_low=2))
_register(IdentityCheck(
    "lem-X3", "lp-b", lambda n, i: ("subset", "X3", i),
    lambda n, i: closed_form("lem-X3", n), (2, 6), _same, i_low=2))
_register(IdentityCheck(
    "lem-Y1", "lp-b", lambda n, i: ("subset", "Y1", i),
    lambda n, i: closed_form("lem-Y1", n, i), (2, 6), _same, i_low=2))
_register(IdentityCheck(
    "lem-Y2", "lp-b", lambda n, i: ("subset", "Y2", i),
    lambda n, i: closed_form("lem-Y2", n, i), (2, 6), _same, i_low=2))
_register(IdentityCheck(
    "lem-Z", "lp-b", lambda n, i: ("subset", "Z_ni", i),
    lambda n, i: closed_form("lem-Z", n), (2, 6), _same, i_low=2))
_register(IdentityCheck(
    "lem-L1", "lp-b", lambda n, i=None: ("subset", "LB_n1", None),
    lambda n, i=None: closed_form("lem-L1", n), (1, 6), _same))
_register(IdentityCheck(
    "lem-LB", "lp-b", lambda n, i: ("subset", "LB_ni", i),
    lambda n, i: closed_form("lem-X", n, i) + closed_form("lem-Y", n, i),
    (2, 6), _same, i_low=2))

_register(IdentityCheck(
    "oc-poly", "tlt", lambda n, i=None: "oc",
    lambda n, i=None: closed_form("oc-poly", n), (1, 8), _same))
_register(IdentityCheck(
    "oc-count", "tlt", lambda n, i=None: "oc",
    lambda n, i=None: closed_form("oc-count", n), (1, 8), _same,
    weight="count"))
_register(IdentityCheck(
    "oc-sym-poly", "tlt-sym", lambda n, i=None: "oc",
    lambda n, i=None: closed_form("oc-sym-poly", n), (1, 6), _sym_size))
_register(IdentityCheck(
    "oc-sym-count", "tlt-sym", lambda n, i=None: "oc",
    lambda n, i=None: closed_form("oc-sym-count", n), (1, 6), _sym_size,
    weight="count"))


def _first_difference(lhs: BivariatePolynomial, rhs: BivariatePolynomial):
    keys = sorted(set(lhs.terms) | set(rhs.terms), reverse=True)
    for key in keys:
        a = lhs.terms.get(key, 0)
        b = rhs.terms.get(key, 0)
        if a != b:
            return {"deg_a": key[0], "deg_b": key[1], "lhs_coef": a, "rhs_coef": b}
    return None


def verify_identity(ident: str, sizes: Iterable[int] | None = None,
                    oracle: bool = False) -> list[dict]:
    """Run one catalog identity over a size range, one report row per (n, i)."""
    try:
        spec = IDENTITIES[ident]
    except KeyError:
        raise UnknownIdentity(f"unknown identity {ident!r}") from None
    if sizes is None:
        sizes = range(spec.default_sizes[0], spec.default_sizes[1] + 1)
    rows = []
    for n in sizes:
        if not spec.default_sizes[0] <= n:
            raise OutOfRange(f"identity {ident!r} needs n >= {spec.default_sizes[0]}")
        indices = [None] if spec.i_low is None else list(range(spec.i_low, n + 1))
        for i in indices:
            start = time.perf_counter()
            lhs = aggregate(
                spec.family,
                spec.family_size(n),
                spec.multiplier_for(n, i) if i is not None else spec.multiplier_for(n),
                weight=spec.weight,
                oracle=oracle,
            )
            rhs = spec.rhs(n, i) if i is not None else spec.rhs(n)
            millis = (time.perf_counter() - start) * 1000.0
            row = {
                "id": ident,
                "n": n,
                "i": i,
                "equal": lhs == rhs,
                "lhs": lhs.to_json(),
                "rhs": rhs.to_json(),
                "millis": round(millis, 3),
            }
            if not row["equal"]:
                row["first_difference"] = _first_difference(lhs, rhs)
            rows.append(row)
    return rows


def verify_all(idents: Iterable[str] | None = None,
               sizes: Iterable[int] | None = None) -> list[dict]:
    """Run the whole catalog (or a subset) at default (or given) ranges."""
    rows = []
    for ident in (idents if idents is not None else IDENTITIES):
        rows.extend(verify_identity(ident, sizes))
    return rows
