"""Exact bivariate integer polynomials and the closed-form catalog.

Polynomials live in ``Z[a, b]``; univariate polynomials in ``x`` identify
``x`` with ``b`` (degree in ``a`` is zero) and serialize with variable name
``x``.  Coefficients are Python integers, so arithmetic is exact at any
size and never wraps.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb, factorial

from .errors import OutOfRange, UnknownIdentity

Term = tuple[int, int]  # (deg_a, deg_b)


class BivariatePolynomial:
    """Sparse polynomial with exact integer coefficients.

    Immutable by convention: no public mutators, hashable, and all
    arithmetic returns new instances.  Zero coefficients are never stored.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[Term, int] | None = None):
        clean: dict[Term, int] = {}
        for (da, db), coef in (terms or {}).items():
            if coef:
                if da < 0 or db < 0:
                    raise ValueError(f"negative exponent in term ({da}, {db})")
                clean[(da, db)] = coef
        self._terms = clean

    @staticmethod
    def constant(value: int) -> "BivariatePolynomial":
        return BivariatePolynomial({(0, 0): value})

    @staticmethod
    def monomial(coef: int, deg_a: int, deg_b: int) -> "BivariatePolynomial":
        return BivariatePolynomial({(deg_a, deg_b): coef})

    @property
    def terms(self) -> dict[Term, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = BivariatePolynomial.constant(other)
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "BivariatePolynomial | int") -> "BivariatePolynomial":
        if isinstance(other, int):
            other = BivariatePolynomial.constant(other)
        out = dict(self._terms)
        for key, coef in other._terms.items():
            out[key] = out.get(key, 0) + coef
        return BivariatePolynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "BivariatePolynomial":
        return BivariatePolynomial({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "BivariatePolynomial | int") -> "BivariatePolynomial":
        if isinstance(other, int):
            other = BivariatePolynomial.constant(other)
        return self + (-other)

    def __rsub__(self, other: int) -> "BivariatePolynomial":
        return BivariatePolynomial.constant(other) - self

    def __mul__(self, other: "BivariatePolynomial | int") -> "BivariatePolynomial":
        if isinstance(other, int):
            return BivariatePolynomial({k: other * c for k, c in self._terms.items()})
        out: dict[Term, int] = {}
        for (da1, db1), c1 in self._terms.items():
            for (da2, db2), c2 in other._terms.items():
                key = (da1 + da2, db1 + db2)
                out[key] = out.get(key, 0) + c1 * c2
        return BivariatePolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "BivariatePolynomial":
        if exponent < 0:
            raise ValueError("negative exponent")
        result = ONE
        for _ in range(exponent):
            result = result * self
        return result

    def evaluate(self, a_value: int, b_value: int) -> int:
        return sum(
            coef * a_value**da * b_value**db
            for (da, db), coef in self._terms.items()
        )

    def sorted_terms(self) -> list[tuple[int, int, int]]:
        """Terms as ``[coef, deg_a, deg_b]`` sorted by (deg_a, deg_b) descending."""
        return [
            [coef, da, db]
            for (da, db), coef in sorted(self._terms.items(), reverse=True)
        ]

    def is_univariate_x(self) -> bool:
        """True when no term involves ``a`` and some term involves ``b``."""
        return bool(self._terms) and all(da == 0 for da, _ in self._terms)

    def to_json(self) -> dict:
        data: dict = {"terms": self.sorted_terms()}
        if self.is_univariate_x() and any(db for _, db in self._terms):
            data["variable"] = "x"
        return data

    @staticmethod
    def from_json(data: dict) -> "BivariatePolynomial":
        return BivariatePolynomial({(da, db): c for c, da, db in data["terms"]})

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        use_x = self.is_univariate_x()
        pieces = []
        for (da, db), coef in sorted(self._terms.items(), reverse=True):
            factors = []
            if da:
                factors.append("a" if da == 1 else f"a^{da}")
            if db:
                name = "x" if use_x else "b"
                factors.append(name if db == 1 else f"{name}^{db}")
            if not factors:
                body = str(abs(coef))
            elif abs(coef) == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(abs(coef))] + factors)
            sign = "-" if coef < 0 else "+"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"BivariatePolynomial({self._terms!r})"


ZERO = BivariatePolynomial()
ONE = BivariatePolynomial.constant(1)
A = BivariatePolynomial.monomial(1, 1, 0)
B = BivariatePolynomial.monomial(1, 0, 1)
X = B  # univariate convention: x plays the role of b


def rising_factorial(base: BivariatePolynomial, k: int) -> BivariatePolynomial:
    """``base * (base+1) * ... * (base+k-1)``, with the empty product for k=0."""
    if k < 0:
        raise OutOfRange(f"rising factorial needs k >= 0, got {k}")
    result = ONE
    for t in range(k):
        result = result * (base + t)
    return result


@lru_cache(maxsize=None)
def weight_sum_tree_like(n: int) -> BivariatePolynomial:
    """Closed form of the (a, b)-weighted count of size-n tree-like tableaux."""
    if n < 1:
        raise OutOfRange(f"need n >= 1, got {n}")
    return rising_factorial(A + B, n - 1)


@lru_cache(maxsize=None)
def weight_sum_linked(n: int) -> BivariatePolynomial:
    """Same closed form, read as the linked-partition weighted count."""
    return weight_sum_tree_like(n)


@lru_cache(maxsize=None)
def weight_sum_linked_x(n: int) -> BivariatePolynomial:
    """Univariate specialization at a = 1: ``(x+1)_{n-1}``."""
    if n < 1:
        raise OutOfRange(f"need n >= 1, got {n}")
    return rising_factorial(X + 1, n - 1)


@lru_cache(maxsize=None)
def weight_sum_symmetric(n: int) -> BivariatePolynomial:
    """Closed form ``2^n (x+1)_{n-1}`` shared by the symmetric/type-B families."""
    if n < 1:
        raise OutOfRange(f"need n >= 1, got {n}")
    return 2**n * weight_sum_linked_x(n)


def _corner_prefactor(n: int) -> BivariatePolynomial:
    # (n-2)ab + C(n-2,2)(a+b) + C(n-2,3)
    return (
        (n - 2) * A * B
        + comb(n - 2, 2) * (A + B)
        + BivariatePolynomial.constant(comb(n - 2, 3))
    )


def _noc_tree_like(n: int) -> BivariatePolynomial:
    if n < 3:
        raise OutOfRange(f"need n >= 3, got {n}")
    return _corner_prefactor(n) * weight_sum_tree_like(n - 2)


def _noc_symmetric(n: int) -> BivariatePolynomial:
    if n < 3:
        raise OutOfRange(f"need n >= 3, got {n}")
    cubic = (n - 2) * (n - 1) * (4 * n - 3)
    assert cubic % 3 == 0
    prefactor = (
        BivariatePolynomial.monomial(2 * n, 0, 2)
        + BivariatePolynomial.monomial(2 * (2 * n * n - 4 * n + 1), 0, 1)
        + BivariatePolynomial.constant(cubic // 3)
    )
    return prefactor * weight_sum_symmetric(n - 2)


def _check_i(n: int, i: int | None, low: int) -> int:
    if i is None:
        raise OutOfRange("this identity takes an index i")
    if not low <= i <= n:
        raise OutOfRange(f"need {low} <= i <= n, got i={i}, n={n}")
    return i


def _dest_inserted(n: int, i: int | None) -> BivariatePolynomial:
    i = _check_i(n, i, 3)
    return (A + (i - 3)) * weight_sum_linked(n - 1)


def _dest_pair_inserted(n: int, i: int | None) -> BivariatePolynomial:
    i = _check_i(n, i, 3)
    square = A * A + 2 * (i - 3) * A + BivariatePolynomial.constant((i - 3) ** 2)
    return square * weight_sum_linked(n - 2)


def _signed_corner_x(n: int, i: int | None) -> BivariatePolynomial:
    i = _check_i(n, i, 2)
    return 2 ** (n - 2) * (
        weight_sum_linked_x(n) - (i - 1) * weight_sum_linked_x(n - 1)
    )


def _signed_corner_y(n: int, i: int | None) -> BivariatePolynomial:
    i = _check_i(n, i, 2)
    if i == 2:
        return ZERO
    return 2 ** (n - 2) * (
        (i - 2) * weight_sum_linked_x(n - 1)
        - (i - 2) ** 2 * weight_sum_linked_x(n - 2)
    )


def _pair_present(n: int, i: int | None = None) -> BivariatePolynomial:
    if n < 2:
        raise OutOfRange(f"need n >= 2, got {n}")
    return 2 ** (n - 2) * weight_sum_linked_x(n)


def _pair_with_legal(n: int, i: int | None) -> BivariatePolynomial:
    i = _check_i(n, i, 2)
    if i == 2:
        return ZERO
    return (i - 2) * 2 ** (n - 2) * weight_sum_linked_x(n - 1)


def _pair_with_arc(n: int, i: int | None = None) -> BivariatePolynomial:
    if n < 2:
        raise OutOfRange(f"need n >= 2, got {n}")
    return 2 ** (n - 2) * weight_sum_linked_x(n - 1)


def _legal_with_neighbor(n: int, i: int | None) -> BivariatePolynomial:
    i = _check_i(n, i, 2)
    if i == 2:
        return ZERO
    return (i - 2) * 2 ** (n - 2) * weight_sum_linked_x(n - 1)


def _legal_pair(n: int, i: int | None) -> BivariatePolynomial:
    i = _check_i(n, i, 2)
    if i == 2:
        return ZERO
    return (i - 2) ** 2 * 2 ** (n - 2) * weight_sum_linked_x(n - 2)


def _negated_present(n: int, i: int | None = None) -> BivariatePolynomial:
    if n < 1:
        raise OutOfRange(f"need n >= 1, got {n}")
    return 2 ** (n - 1) * weight_sum_linked_x(n)


# Catalog: id -> (builder(n, i), takes_i).  Univariate forms use x = b.
CLOSED_FORMS: dict[str, tuple] = {
    "eqT": (lambda n, i=None: weight_sum_tree_like(n), False),
    "eqsT": (lambda n, i=None: weight_sum_symmetric(n), False),
    "conj1": (lambda n, i=None: _noc_tree_like(n), False),
    "conj2": (lambda n, i=None: _noc_symmetric(n), False),
    "eq23": (lambda n, i=None: weight_sum_tree_like(n), False),
    "eqLn": (lambda n, i=None: weight_sum_linked(n), False),
    "eq26": (lambda n, i=None: weight_sum_symmetric(n), False),
    "eqLB": (lambda n, i=None: weight_sum_symmetric(n), False),
    "lem-weightp": (lambda n, i=None: _noc_tree_like(n), False),
    "lem-M": (_dest_inserted, True),
    "lem-N": (_dest_pair_inserted, True),
    "lem-X": (_signed_corner_x, True),
    "lem-Y": (_signed_corner_y, True),
    "lem-X1": (_pair_present, False),
    "lem-X2": (_pair_with_legal, True),
    "lem-X3": (_pair_with_arc, False),
    "lem-Y1": (_legal_with_neighbor, True),
    "lem-Y2": (_legal_pair, True),
    "lem-Z": (_negated_present, False),
    "lem-L1": (_negated_present, False),
    "oc-count": (lambda n, i=None: BivariatePolynomial.constant(factorial(n)), False),
    "oc-sym-count": (
        lambda n, i=None: BivariatePolynomial.constant(2**n * factorial(n)),
        False,
    ),
    "oc-poly": (lambda n, i=None: weight_sum_tree_like(n), False),
    "oc-sym-poly": (lambda n, i=None: weight_sum_symmetric(n), False),
}


def closed_form(ident: str, n: int, i: int | None = None) -> BivariatePolynomial:
    """Evaluate a catalog entry exactly at (n, i)."""
    try:
        builder, takes_i = CLOSED_FORMS[ident]
    except KeyError:
        raise UnknownIdentity(f"unknown closed form {ident!r}") from None
    if not takes_i and i is not None:
        # i-independent right-hand sides tolerate an index for convenience
        return builder(n)
    return builder(n, i)
