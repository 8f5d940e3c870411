"""Command line interface.

Subcommands operate either on a catalog ring (by name) or on a ring
loaded from a JSON spec file (by path).  Exit status: 0 on success,
1 when a verification check fails, 2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from .catalog import RING_NAMES, Catalog, default_catalog
from .errors import AvchowError
from .exprparse import parse_expression
from .poly import Polynomial
from .ringspec import (
    DegreesTable,
    LoadedRing,
    PairingTable,
    PairingVectorTable,
    RelativePairingTable,
    load_ring_spec,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2

MAP_NAMES = ("x2_tilde", "torelli")

HILBERT_SEARCH_LIMIT = 40


class UsageError(Exception):
    """Bad command line input (unknown ring, malformed value, ...)."""


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="avchow",
        description=(
            "Exact computations in finitely presented graded rings, with a "
            "built-in catalog of intersection rings of compactified moduli "
            "of abelian varieties."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def ring_option(p):
        p.add_argument(
            "--ring",
            required=True,
            metavar="RING",
            help="catalog ring name (%s) or path to a ring spec JSON file"
            % ", ".join(RING_NAMES),
        )

    p = sub.add_parser("nf", help="normal form of an expression in a ring")
    ring_option(p)
    p.add_argument("expr", metavar="EXPR", help="polynomial expression in the ring generators")

    p = sub.add_parser("degree", help="degree (integration value) of a top-degree class")
    ring_option(p)
    p.add_argument("expr", metavar="EXPR", help="homogeneous expression of top degree")

    p = sub.add_parser("hilbert", help="dimensions of the graded pieces")
    ring_option(p)
    p.add_argument("--max", type=int, default=None, metavar="D", help="largest degree to report")

    p = sub.add_parser("pairing", help="matrix of degrees of products")
    ring_option(p)
    p.add_argument("--deg", type=int, required=True, metavar="K", help="codimension of the rows")
    p.add_argument(
        "--rows",
        nargs="+",
        default=None,
        metavar="EXPR",
        help="row classes of codimension K (default: standard monomials)",
    )
    p.add_argument(
        "--cols",
        nargs="+",
        default=None,
        metavar="EXPR",
        help="column classes of complementary codimension (default: standard monomials)",
    )

    p = sub.add_parser("solve-class", help="reconstruct a class from its pairing numbers")
    ring_option(p)
    p.add_argument("--deg", type=int, required=True, metavar="K", help="codimension of the unknown class")
    p.add_argument(
        "--values",
        nargs="+",
        required=True,
        metavar="Q",
        help="pairing numbers, one per probe (rationals like 5/8; commas allowed)",
    )
    p.add_argument(
        "--probes",
        nargs="+",
        default=None,
        metavar="EXPR",
        help="probe classes of complementary codimension (default: standard monomials)",
    )

    p = sub.add_parser("push", help="pushforward of an expression along a catalog map")
    p.add_argument(
        "--map",
        required=True,
        choices=MAP_NAMES,
        help="x2_tilde: fiber integration to the genus-2 base; "
        "torelli: tabulated boundary pushforward into the genus-3 ring",
    )
    p.add_argument("expr", metavar="EXPR", help="expression in the source generators or symbols")

    p = sub.add_parser("tables", help="re-emit the catalog tables, recomputed from the rings")
    p.add_argument("--id", default=None, metavar="ID", help="emit a single table (for example 3g)")

    p = sub.add_parser("verify", help="run the stored checks and report")
    p.add_argument("--scope", default="all", metavar="S", help="all, a ring name, levels, torelli, equivalences, or table:ID")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--jobs", type=int, default=None, metavar="N", help="worker threads (default: sequential)")

    return parser


def _resolve_ring(spec: str, catalog: Catalog) -> LoadedRing:
    if spec in RING_NAMES:
        return catalog.ring(spec)
    path = Path(spec)
    if path.exists():
        try:
            return load_ring_spec(path)
        except OSError as err:
            raise UsageError(f"cannot read ring spec {spec!r}: {err}") from err
    raise UsageError(
        f"unknown ring {spec!r}: not a catalog name and not an existing file"
    )


def _parse_in_ring(loaded: LoadedRing, text: str) -> Polynomial:
    return loaded.parse(text)


def _parse_values(tokens: list[str]) -> list[Fraction]:
    values = []
    for token in tokens:
        for piece in token.split(","):
            piece = piece.strip()
            if not piece:
                continue
            try:
                values.append(Fraction(piece))
            except (ValueError, ZeroDivisionError) as err:
                raise UsageError(f"bad rational value {piece!r}") from err
    if not values:
        raise UsageError("no pairing values given")
    return values


def _require_functional(loaded: LoadedRing):
    if loaded.functional is None:
        raise UsageError(
            f"ring {loaded.name!r} has no degree normalization; "
            "degree, pairing, and solve-class need one"
        )
    return loaded.functional


def _default_basis(loaded: LoadedRing, degree: int) -> list[Polynomial]:
    basis = loaded.ring.standard_basis_polynomials(degree)
    if not basis:
        raise UsageError(f"no standard monomials in degree {degree} of {loaded.name!r}")
    return basis


def _cmd_nf(args, catalog: Catalog) -> int:
    loaded = _resolve_ring(args.ring, catalog)
    print(loaded.ring.normal_form(_parse_in_ring(loaded, args.expr)))
    return EXIT_OK


def _cmd_degree(args, catalog: Catalog) -> int:
    loaded = _resolve_ring(args.ring, catalog)
    functional = _require_functional(loaded)
    print(functional.degree(_parse_in_ring(loaded, args.expr)))
    return EXIT_OK


def _cmd_hilbert(args, catalog: Catalog) -> int:
    loaded = _resolve_ring(args.ring, catalog)
    if args.max is not None:
        dims = loaded.ring.hilbert_function(args.max)
    elif loaded.expected_hilbert is not None:
        dims = loaded.ring.hilbert_function(len(loaded.expected_hilbert) - 1)
    else:
        dims = []
        degree = 0
        while degree <= HILBERT_SEARCH_LIMIT:
            count = len(loaded.ring.standard_monomials(degree))
            if count == 0:
                break
            dims.append(count)
            degree += 1
        else:
            raise UsageError(
                f"{loaded.name!r} has standard monomials beyond degree "
                f"{HILBERT_SEARCH_LIMIT}; pass --max"
            )
    print(",".join(str(d) for d in dims))
    return EXIT_OK


def _cmd_pairing(args, catalog: Catalog) -> int:
    loaded = _resolve_ring(args.ring, catalog)
    functional = _require_functional(loaded)
    complement = functional.top_degree - args.deg
    if args.rows is None:
        rows = _default_basis(loaded, args.deg)
    else:
        rows = [_parse_in_ring(loaded, text) for text in args.rows]
    if args.cols is None:
        cols = _default_basis(loaded, complement)
    else:
        cols = [_parse_in_ring(loaded, text) for text in args.cols]
    matrix = functional.pairing_matrix(args.deg, rows, cols)
    print("rows:", "; ".join(str(r) for r in rows))
    print("cols:", "; ".join(str(c) for c in cols))
    for row in matrix:
        print(",".join(str(value) for value in row))
    return EXIT_OK


def _cmd_solve_class(args, catalog: Catalog) -> int:
    loaded = _resolve_ring(args.ring, catalog)
    functional = _require_functional(loaded)
    complement = functional.top_degree - args.deg
    if args.probes is None:
        probes = _default_basis(loaded, complement)
    else:
        probes = [_parse_in_ring(loaded, text) for text in args.probes]
    values = _parse_values(args.values)
    if len(values) != len(probes):
        raise UsageError(
            f"got {len(values)} values for {len(probes)} probes"
            + ("" if args.probes is not None else " (the default probes are the standard monomials, listed by `pairing`)")
        )
    print(functional.solve_class(args.deg, probes, values))
    return EXIT_OK


def _cmd_push(args, catalog: Catalog) -> int:
    if args.map == "x2_tilde":
        surface = catalog.fibered_surface()
        element = surface.combined.parse(args.expr)
        image = surface.relative.pushforward(element, surface.rule)
        print(image)
        return EXIT_OK
    data = catalog.torelli()
    combo = data.parse_combination(args.expr)
    print(data.push.push_combination(combo))
    return EXIT_OK


def _table_header(table_id: str, source: str) -> str:
    if source and source != f"table {table_id}":
        return f"table {table_id} ({source})"
    return f"table {table_id}"


def _format_table(catalog: Catalog, loaded: LoadedRing, table) -> list[str]:
    lines = [_table_header(table.id, table.source)]
    if isinstance(table, PairingTable):
        functional = loaded.functional
        lines.append("  rows: " + "; ".join(table.row_labels))
        lines.append("  cols: " + "; ".join(table.col_labels))
        for row in table.rows:
            values = [functional.degree(row * col) for col in table.cols]
            lines.append("  " + ",".join(str(v) for v in values))
    elif isinstance(table, DegreesTable):
        for entry in table.entries:
            if entry.checkable:
                value = loaded.functional.degree(entry.element)
                lines.append(f"  {entry.label} = {value}")
            else:
                noted = str(entry.value)
                if entry.alt_value is not None:
                    noted += f" (alternate reading {entry.alt_value})"
                lines.append(f"  {entry.label} = {noted} (recorded; not recomputed)")
    elif isinstance(table, PairingVectorTable):
        functional = loaded.functional
        lines.append("  basis: " + "; ".join(table.basis_labels))
        values = [
            functional.degree(table.class_poly * element) for element in table.basis
        ]
        lines.append("  " + ",".join(str(v * table.divide_by) for v in values))
        if table.divide_by != 1:
            lines.append(f"  (entries are {table.divide_by} times the pairing numbers)")
    elif isinstance(table, RelativePairingTable):
        surface = catalog.fibered_surface()
        lines.append("  rows: " + "; ".join(table.row_labels))
        lines.append("  cols: " + "; ".join(table.col_labels))
        for row in table.rows:
            values = [
                surface.relative.relative_degree(
                    row * col, surface.base.functional, surface.rule
                )
                for col in table.cols
            ]
            lines.append("  " + ",".join(str(v) for v in values))
    return lines


def _format_table_4a(catalog: Catalog) -> list[str]:
    data = catalog.torelli()
    raw = data.raw["table_4a"]
    lines = [_table_header("4a", raw["source"])]
    lines.append("  basis: " + "; ".join(raw["basis"]))
    basis_monomials = []
    target = data.push.target
    for label in raw["basis"]:
        ((monomial, _),) = parse_expression(label, target.gens).terms()
        basis_monomials.append(monomial)
    for row in raw["rows"]:
        half = data.push.image(row["symbol"]) / 2
        coefficients = dict(half.terms())
        values = [coefficients.get(m, Fraction(0)) for m in basis_monomials]
        lines.append(f"  {row['symbol']}: " + ",".join(str(v) for v in values))
    lines.append("  (rows list half the tabulated image)")
    return lines


def _cmd_tables(args, catalog: Catalog) -> int:
    wanted = args.id
    known = catalog.table_ids()
    if wanted is not None and wanted not in known:
        raise UsageError(f"unknown table {wanted!r}; known tables: {', '.join(known)}")
    blocks: list[tuple[str, list[str]]] = []
    for name in RING_NAMES:
        loaded = catalog.ring(name)
        for table in loaded.tables:
            blocks.append((table.id, _format_table(catalog, loaded, table)))
    blocks.append(("4a", _format_table_4a(catalog)))
    blocks.sort(key=lambda pair: pair[0])
    emitted = 0
    for table_id, lines in blocks:
        if wanted is not None and table_id != wanted:
            continue
        if emitted:
            print()
        print("\n".join(lines))
        emitted += 1
    return EXIT_OK


def _cmd_verify(args, catalog: Catalog) -> int:
    report = catalog.run_verification(args.scope, jobs=args.jobs)
    if args.format == "json":
        print(report.to_json())
    else:
        print(report.to_text())
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


_COMMANDS = {
    "nf": _cmd_nf,
    "degree": _cmd_degree,
    "hilbert": _cmd_hilbert,
    "pairing": _cmd_pairing,
    "solve-class": _cmd_solve_class,
    "push": _cmd_push,
    "tables": _cmd_tables,
    "verify": _cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    catalog = default_catalog()
    try:
        return _COMMANDS[args.command](args, catalog)
    except UsageError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except AvchowError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
