"""Command-line frontend.

Commands: ``enumerate``, ``poly``, ``verify``, ``map``, ``roundtrip``,
``render``.  Exit codes: 0 success (everything verified), 1 identity or
round-trip violation, 2 usage or input error.  Output is byte-identical
across runs: objects are emitted in canonical order and JSON is dumped
with sorted keys and fixed separators.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bijections
from .alternative import (
    AlternativeTableau,
    TypeBAlternativeTableau,
    is_star,
    is_symmetric_at,
    validate_at,
    validate_atb,
)
from .diagrams import FerrersDiagram, parse_border, shift
from .errors import TreelikeError
from .linked import LinkedPartition, TypeBLinkedPartition
from .tableaux import TreeLikeTableau, validate_tlt
from .verify import (
    FAMILIES,
    IDENTITIES,
    aggregate,
    family_objects,
    verify_identity,
)

BIJECTIONS = {
    "alpha": bijections.alpha,
    "alpha-inv": bijections.alpha_inv,
    "beta": bijections.beta,
    "beta-inv": bijections.beta_inv,
    "gamma": bijections.gamma,
    "gamma-inv": bijections.gamma_inv,
    "phi": bijections.phi,
    "psi": bijections.psi,
    "phib": bijections.phi_b,
    "psib": bijections.psi_b,
}

# bijection -> (domain family, inverse name)
ROUNDTRIPS = {
    "alpha": ("tlt", "alpha-inv"),
    "beta": ("tlt", "beta-inv"),
    "gamma": ("at-sym", "gamma-inv"),
    "phi": ("at-star", "psi"),
    "phib": ("at-b", "psib"),
}


def dumps(data) -> str:
    return json.dumps(data, sort_keys=True, separators=(",", ":"))


def object_from_json(data: dict):
    """Detect the serialized kind by its fields and validate it."""
    if "points" in data:
        t = TreeLikeTableau.from_json(data)
        report = validate_tlt(t)
        if not report.ok:
            raise TreelikeError("invalid tableau: " + "; ".join(report.problems))
        return t
    if "arrows" in data and data.get("shifted"):
        t = TypeBAlternativeTableau.from_json(data)
        report = validate_atb(t)
        if not report.ok:
            raise TreelikeError("invalid tableau: " + "; ".join(report.problems))
        return t
    if "arrows" in data:
        t = AlternativeTableau.from_json(data)
        report = validate_at(t)
        if not report.ok:
            raise TreelikeError("invalid tableau: " + "; ".join(report.problems))
        return t
    if "vertices" in data:
        return TypeBLinkedPartition.from_json(data)
    if "arcs" in data:
        return LinkedPartition.from_json(data)
    if "border" in data:
        return parse_border(data["border"])
    raise TreelikeError("unrecognized object layout")


# ---------------------------------------------------------------------------
# Rendering.


def _grid_lines(row_labels, cells_of_row, symbol) -> list[str]:
    col_labels: list[int] = []
    for i in row_labels:
        for _, j in cells_of_row(i):
            if j not in col_labels:
                col_labels.append(j)
    col_labels.sort(reverse=True)
    width = max(
        [len(str(x)) for x in list(row_labels) + col_labels] or [1]
    )
    pos = {j: k for k, j in enumerate(col_labels)}
    lines = [" " * (width + 2) + " ".join(str(j).rjust(width) for j in col_labels)]
    for i in row_labels:
        row = [" " * width] * len(col_labels)
        for cell in cells_of_row(i):
            row[pos[cell[1]]] = symbol(cell).rjust(width)
        lines.append(str(i).rjust(width) + "  " + " ".join(row).rstrip())
    return lines


def render(obj) -> str:
    """Deterministic monospace picture of any serialized object."""
    if isinstance(obj, TreeLikeTableau):
        d = obj.diagram
        sym = lambda c: "•" if c in obj.points else "."
        lines = _grid_lines(
            d.rows, lambda i: [(i, j) for j in d.cols_left_to_right if j > i], sym
        )
    elif isinstance(obj, TypeBAlternativeTableau):
        sh = obj.shifted
        arrow = {"L": "<", "U": "^"}

        def sym(c):
            if c in obj.arrow_at:
                return arrow[obj.arrow_at[c]]
            return "*" if sh.is_diagonal(*c) else "."

        lines = _grid_lines(sh.all_rows, sh.row_cells, sym)
    elif isinstance(obj, AlternativeTableau):
        d = obj.diagram
        arrow = {"L": "<", "U": "^"}
        sym = lambda c: arrow.get(obj.arrow_at.get(c), ".")
        header_cols = d.cols_left_to_right
        lines = _grid_lines(
            d.rows, lambda i: [(i, j) for j in d.cols_left_to_right if j > i], sym
        )
        empties = [j for j in header_cols if d.is_empty_col(j)]
        if empties:
            lines.append("empty columns: " + " ".join(str(j) for j in empties))
    elif isinstance(obj, (LinkedPartition, TypeBLinkedPartition)):
        verts = " ".join(str(v) for v in obj.vertices)
        arcs = ", ".join(f"({u},{v})" for u, v in sorted(obj.arcs))
        lines = [verts, f"arcs: ({arcs})"]
    elif isinstance(obj, FerrersDiagram):
        lines = _grid_lines(
            obj.rows,
            lambda i: [(i, j) for j in obj.cols_left_to_right if j > i],
            lambda c: ".",
        )
    else:
        raise TreelikeError(f"cannot render {type(obj).__name__}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# Commands.


def _cmd_enumerate(args) -> int:
    objs = sorted(
        family_objects(args.family, args.size, oracle=args.oracle),
        key=lambda o: o.sort_key(),
    )
    if args.limit is not None:
        objs = objs[: args.limit]
    if args.format == "json":
        for obj in objs:
            print(dumps(obj.to_json()))
    elif args.format == "csv":
        print("index,object")
        for k, obj in enumerate(objs):
            print(f"{k},{json.dumps(dumps(obj.to_json()))}")
    else:
        for obj in objs:
            print(render(obj))
            print()
    return 0


def _cmd_poly(args) -> int:
    poly = aggregate(args.family, args.size, args.stat_spec, oracle=args.oracle)
    print(dumps(poly.to_json()))
    return 0


def _cmd_verify(args) -> int:
    idents = [args.identity] if args.identity else list(IDENTITIES)
    sizes = args.sizes
    rows = []
    for ident in idents:
        rows.extend(verify_identity(ident, sizes))
    if args.format == "csv":
        print("id,n,i,equal,millis")
        for row in rows:
            i = "" if row["i"] is None else row["i"]
            print(f"{row['id']},{row['n']},{i},{str(row['equal']).lower()},{row['millis']}")
    else:
        for row in rows:
            print(dumps(row))
    failures = [r for r in rows if not r["equal"]]
    if failures:
        for row in failures:
            print(
                f"identity {row['id']} fails at n={row['n']}"
                + (f", i={row['i']}" if row["i"] is not None else ""),
                file=sys.stderr,
            )
        return 1
    return 0


def _read_json(path: str) -> dict:
    text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    return json.loads(text)


def _cmd_map(args) -> int:
    obj = object_from_json(_read_json(args.input))
    result = BIJECTIONS[args.bijection](obj)
    print(dumps(result.to_json()))
    return 0


def _cmd_render(args) -> int:
    print(render(object_from_json(_read_json(args.input))))
    return 0


def _contracts_hold(name: str, src, image) -> bool:
    """Pointwise statistic contracts of the five bijections."""
    if name == "alpha":
        s, t = src.stats, image.stats
        return s.left == t.urr and s.noc == t.noc
    if name == "beta":
        s, t = src.stats, image.stats
        return s.left == t.urr - 1 and s.noc == t.noc and s.top == t.top
    if name == "gamma":
        s, t = src.stats, image.stats
        return s.urr == t.urr and s.noc == t.noc_diag + 2 * t.noc_off
    if name == "phi":
        s = src.stats
        dests = image.destinations
        cols = src.diagram.col_set
        unrestricted = src.diagram.row_set - src.rows_with_left
        no_in = {v for v in image.vertices if v not in image.pred}
        return (
            s.top == image.one
            and s.urr == image.os
            and cols == dests
            and unrestricted == no_in
        )
    if name == "phib":
        s = src.stats
        legal = image.legal_destinations
        cols = src.sub.col_set
        expected_cols = {abs(v) for v in image.vertices if v < 0} | set(legal)
        rows = src.sub.row_set
        expected_rows = {
            v for v in image.vertices if v > 0 and v not in legal
        }
        sh = src.shifted
        unrestricted = {
            i for i in sh.all_rows
            if i not in src.rows_with_left
            and not (abs(i) in sh.sub.col_set and abs(i) in src.cols_with_up)
        }
        no_in = {v for v in image.vertices if v not in image.pred}
        return (
            s.urr == image.os
            and cols == expected_cols
            and rows == expected_rows
            and unrestricted == no_in
        )
    raise TreelikeError(f"no contracts known for {name!r}")


def _cmd_roundtrip(args) -> int:
    name = args.bijection
    if name not in ROUNDTRIPS:
        print(f"roundtrip checks run on the forward maps: {sorted(ROUNDTRIPS)}",
              file=sys.stderr)
        return 2
    domain, inverse_name = ROUNDTRIPS[name]
    family = args.family or domain
    if family != domain:
        print(f"bijection {name} runs on family {domain}", file=sys.stderr)
        return 2
    forward = BIJECTIONS[name]
    inverse = BIJECTIONS[inverse_name]
    count = 0
    for obj in family_objects(family, args.size, oracle=args.oracle):
        image = forward(obj)
        if inverse(image) != obj:
            print(f"round-trip failed for {dumps(obj.to_json())}", file=sys.stderr)
            return 1
        if not _contracts_hold(name, obj, image):
            print(f"statistic contract failed for {dumps(obj.to_json())}",
                  file=sys.stderr)
            return 1
        count += 1
    print(f"roundtrip {name} on {family} size {args.size}: {count} objects ok")
    return 0


def _parse_sizes(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(text)]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treelike",
        description="Enumerate tableau/partition families, map between them, "
                    "and verify the identity catalog.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list a family in canonical order")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--size", required=True, type=int)
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--oracle", action="store_true",
                   help="force the brute-force generator")
    p.add_argument("--format", choices=("json", "csv", "ascii"), default="json")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("poly", help="aggregate a statistic into a polynomial")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--size", required=True, type=int)
    p.add_argument("--stat", choices=("weight", "noc", "oc", "nocb"),
                   default="weight")
    p.add_argument("--oracle", action="store_true")
    p.set_defaults(func=_cmd_poly)

    p = sub.add_parser("verify", help="check catalog identities exactly")
    p.add_argument("--identity", choices=sorted(IDENTITIES), default=None)
    p.add_argument("--sizes", type=_parse_sizes, default=None,
                   help="N or A..B (defaults to the catalog range)")
    p.add_argument("--size", dest="sizes", type=_parse_sizes,
                   help="alias for --sizes N")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("map", help="apply a bijection to a serialized object")
    p.add_argument("--bijection", required=True, choices=sorted(BIJECTIONS))
    p.add_argument("--input", required=True, help="JSON file path or - for stdin")
    p.set_defaults(func=_cmd_map)

    p = sub.add_parser("roundtrip",
                       help="check map-inverse identity and statistic contracts")
    p.add_argument("--bijection", required=True, choices=sorted(ROUNDTRIPS))
    p.add_argument("--family", default=None, choices=FAMILIES)
    p.add_argument("--size", required=True, type=int)
    p.add_argument("--oracle", action="store_true")
    p.set_defaults(func=_cmd_roundtrip)

    p = sub.add_parser("render", help="ASCII picture of a serialized object")
    p.add_argument("--input", required=True, help="JSON file path or - for stdin")
    p.set_defaults(func=_cmd_render)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    if args.command == "poly":
        args.stat_spec = "unit" if args.stat == "weight" else args.stat
    try:
        return args.func(args)
    except TreelikeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
