"""Command-line interface: compute, certify, sweep, roots, plot.

Instances come from a named family ("friendship:3"), from a family range
("cocktail_party:1..50", the last parameter may be a range), from an
edge-list file, or for certify from a pair of join operands with a symbolic
index ("--join H:n,H:n --range 3..20").  Sweeps run instances on a thread
pool sized by DOMPOLY_THREADS (default: CPU count) and print rows in
deterministic (family, n) order regardless of completion order.

Exit codes: 0 success, 1 usage or data error, 2 capacity exceeded, 3 solver
non-convergence, 4 oracle mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Callable, Sequence

from .complexroots import RootSet, find_roots, roots_csv
from .enumeration import default_threads, domination_polynomial
from .errors import CapacityError, NonConvergenceError, OracleMismatchError
from .formulas import (
    closed_form,
    order_of_H,
    poly_book,
    poly_cocktail,
    poly_complement_friendship,
    poly_complete,
    poly_friendship,
    poly_H,
    poly_join,
)
from .graphs import FamilySpec, build_family, parse_edge_list
from .plotting import render_scatter
from .polynomials import Poly
from .realroots import certify_cg

TOL_MIN, TOL_MAX = 1e-14, 1e-6


class _UsageError(ValueError):
    pass


# -- instance sources ------------------------------------------------------------


def _parse_range(text: str) -> list[int]:
    """Inclusive "a..b", or a single integer."""
    if ".." in text:
        lo_s, _, hi_s = text.partition("..")
        try:
            lo, hi = int(lo_s), int(hi_s)
        except ValueError:
            raise _UsageError(f"bad range {text!r}, expected a..b") from None
        if lo > hi:
            raise _UsageError(f"empty range {text!r}")
        return list(range(lo, hi + 1))
    try:
        return [int(text)]
    except ValueError:
        raise _UsageError(f"bad integer {text!r}") from None


def _parse_family_arg(text: str) -> tuple[str, tuple[int, ...], list[int]]:
    """"name:p1,...,range" -> (name, fixed params, values of the last param)."""
    name, sep, rest = text.partition(":")
    if not sep or not name or not rest:
        raise _UsageError(f"expected 'name:params', got {text!r}")
    parts = rest.split(",")
    try:
        fixed = tuple(int(p) for p in parts[:-1])
    except ValueError:
        raise _UsageError(f"non-integer parameter in {text!r}") from None
    return name, fixed, _parse_range(parts[-1])


def _apply_parity(values: list[int], odd_only: bool, even_only: bool) -> list[int]:
    if odd_only and even_only:
        raise _UsageError("--odd-only and --even-only are mutually exclusive")
    if odd_only:
        return [v for v in values if v % 2 == 1]
    if even_only:
        return [v for v in values if v % 2 == 0]
    return values


def _family_instances(args) -> list[tuple[str, int, FamilySpec]]:
    """(label, n, spec) triples for the requested family sweep."""
    name, fixed, values = _parse_family_arg(args.family)
    values = _apply_parity(values, args.odd_only, args.even_only)
    if not values:
        raise _UsageError("no instances left after parity filtering")
    return [(name, v, FamilySpec(name, fixed + (v,))) for v in values]


def _polynomial_for(spec: FamilySpec, force_enumeration: bool = False) -> Poly:
    if not force_enumeration:
        p = closed_form(spec)
        if p is not None:
            return p
    return domination_polynomial(build_family(spec))


def _edge_list_instance(path: str) -> tuple[str, int, Poly]:
    text = Path(path).read_text(encoding="utf-8")
    g = parse_edge_list(text)
    return Path(path).stem, g.n, domination_polynomial(g)


# -- join operand templates ---------------------------------------------------------

_JOIN_OPERANDS: dict[str, tuple[Callable[[int], Poly], Callable[[int], int]]] = {
    "H": (poly_H, order_of_H),
    "h_witness": (poly_H, order_of_H),
    "B": (poly_book, lambda n: 2 * n + 2),
    "book": (poly_book, lambda n: 2 * n + 2),
    "F": (poly_friendship, lambda n: 2 * n + 1),
    "friendship": (poly_friendship, lambda n: 2 * n + 1),
    "CF": (poly_complement_friendship, lambda n: 2 * n + 1),
    "complement_friendship": (poly_complement_friendship, lambda n: 2 * n + 1),
    "CP": (poly_cocktail, lambda n: 2 * n),
    "cocktail_party": (poly_cocktail, lambda n: 2 * n),
    "K": (poly_complete, lambda n: n),
    "complete": (poly_complete, lambda n: n),
}


def _parse_operand(text: str) -> tuple[str, int | None, int]:
    """"NAME:n", "NAME:n+k" or "NAME:k" -> (name, None for symbolic n, offset)."""
    name, sep, expr = text.partition(":")
    if not sep or name not in _JOIN_OPERANDS:
        known = ", ".join(sorted(_JOIN_OPERANDS))
        raise _UsageError(f"bad join operand {text!r} (families: {known})")
    expr = expr.strip()
    if expr == "n":
        return name, None, 0
    if expr.startswith("n+"):
        try:
            return name, None, int(expr[2:])
        except ValueError:
            raise _UsageError(f"bad operand index {expr!r}") from None
    try:
        return name, int(expr), 0
    except ValueError:
        raise _UsageError(f"bad operand index {expr!r} (use n, n+k, or an integer)") from None


def _join_instances(args) -> list[tuple[str, int, Poly]]:
    """(label, n, joined polynomial) for --join T1,T2 over --range."""
    if not args.range:
        raise _UsageError("--join requires --range a..b")
    ops = args.join.split(",")
    if len(ops) != 2:
        raise _UsageError("--join takes exactly two operands, e.g. H:n,H:n")
    parsed = [_parse_operand(op.strip()) for op in ops]
    values = _apply_parity(_parse_range(args.range), args.odd_only, args.even_only)
    if not values:
        raise _UsageError("no instances left after parity filtering")
    label = "+".join(op.strip() for op in ops)
    out = []
    for n in values:
        polys_orders = []
        for name, fixed, offset in parsed:
            idx = fixed if fixed is not None else n + offset
            poly_fn, order_fn = _JOIN_OPERANDS[name]
            polys_orders.append((poly_fn(idx), order_fn(idx)))
        (p1, o1), (p2, o2) = polys_orders
        out.append((label, n, poly_join(p1, o1, p2, o2)))
    return out


# -- output helpers --------------------------------------------------------------


def _write_output(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _pmap(fn, items: Sequence):
    threads = default_threads()
    if threads <= 1 or len(items) <= 1:
        return [fn(i) for i in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


# -- subcommands ------------------------------------------------------------------


def _cmd_compute(args) -> int:
    records = []
    if args.edge_list:
        label, order, p = _edge_list_instance(args.edge_list)
        records.append({"family": label, "params": [order], "coeffs": None, "_poly": p})
    else:
        for name, v, spec in _family_instances(args):
            p = _polynomial_for(spec, force_enumeration=args.oracle)
            if args.oracle:
                expected = closed_form(spec)
                if expected is not None and expected != p:
                    raise OracleMismatchError(
                        f"enumeration disagrees with the closed form for {spec}"
                    )
            records.append(
                {"family": name, "params": list(spec.params), "coeffs": None, "_poly": p}
            )
    for r in records:
        r["coeffs"] = [str(c) for c in r.pop("_poly").coeffs]
    payload = records[0] if len(records) == 1 else records
    _write_output(json.dumps(payload, indent=2) + "\n", args.out)
    return 0


def _certificate_rows(args) -> list[tuple[str, int, dict]]:
    if args.join:
        instances = _join_instances(args)
    elif args.edge_list:
        instances = [_edge_list_instance(args.edge_list)]
    else:
        instances = [
            (name, v, _polynomial_for(spec)) for name, v, spec in _family_instances(args)
        ]

    def certify(item):
        label, n, p = item
        cert = certify_cg(p)
        return (
            label,
            n,
            {
                "family": label,
                "n": n,
                "gamma": cert.gamma,
                "nonzero_real_root_count": cert.nonzero_real_root_count,
                "in_cg": cert.in_cg,
                "evidence": dict(cert.evidence),
            },
        )

    rows = _pmap(certify, instances)
    return sorted(rows, key=lambda r: (r[0], r[1]))


def _cmd_certify(args) -> int:
    rows = _certificate_rows(args)
    lines = [json.dumps(row) for _, _, row in rows]
    lines.append(json.dumps({"all_in_cg": all(row["in_cg"] for _, _, row in rows)}))
    _write_output("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_sweep(args) -> int:
    rows = _certificate_rows(args)
    lines = ["family,n,gamma,nonzero_real_root_count,in_cg"]
    for _, _, row in rows:
        lines.append(
            f"{row['family']},{row['n']},{row['gamma']},"
            f"{row['nonzero_real_root_count']},{str(row['in_cg']).lower()}"
        )
    _write_output("\n".join(lines) + "\n", args.out)
    all_in = all(row["in_cg"] for _, _, row in rows)
    print(f"all_in_cg: {str(all_in).lower()}", file=sys.stderr)
    return 0


def _root_entries(args) -> list[tuple[str, int, RootSet]]:
    if args.tol < TOL_MIN or args.tol > TOL_MAX:
        raise _UsageError(f"--tol must lie in [{TOL_MIN}, {TOL_MAX}]")
    if args.edge_list:
        instances = [_edge_list_instance(args.edge_list)]
    else:
        instances = [
            (name, v, _polynomial_for(spec)) for name, v, spec in _family_instances(args)
        ]

    def solve(item):
        label, n, p = item
        try:
            return label, n, find_roots(p, tol=args.tol, max_iter=args.max_iter)
        except NonConvergenceError as e:
            return label, n, e

    entries = _pmap(solve, instances)
    failed = [(label, n) for label, n, rs in entries if isinstance(rs, NonConvergenceError)]
    if failed:
        listing = ", ".join(f"{label}:{n}" for label, n in sorted(failed))
        raise NonConvergenceError(f"instances failed to converge: {listing}")
    return sorted(entries, key=lambda e: (e[0], e[1]))


def _cmd_roots(args) -> int:
    _write_output(roots_csv(_root_entries(args)), args.out)
    return 0


def _cmd_plot(args) -> int:
    entries = _root_entries(args)
    points = [(re, im) for _, _, rs in entries for re, im, _ in rs.roots]
    circle = (-1.0, 0.0, 1.0) if args.circle else None
    labels = sorted({label for label, _, _ in entries})
    ns = [n for _, n, _ in entries]
    title = f"{','.join(labels)} roots (n={min(ns)}..{max(ns)})" if entries else ""
    _write_output(render_scatter(points, circle=circle, title=title), args.out)
    return 0


# -- argument parsing ----------------------------------------------------------------


def _add_source_options(sub, join_ok: bool = False) -> None:
    sub.add_argument("--family", help="family instance or sweep, e.g. friendship:1..15")
    sub.add_argument("--edge-list", help="path to an edge-list file ('n m' header)")
    if join_ok:
        sub.add_argument("--join", help="two join operands, e.g. H:n+1,B:n")
        sub.add_argument("--range", help="index range a..b for --join")
    sub.add_argument("--odd-only", action="store_true", help="keep odd indices only")
    sub.add_argument("--even-only", action="store_true", help="keep even indices only")
    sub.add_argument("--out", help="write output to this path instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dompoly",
        description="Exact domination polynomials: compute, certify, locate roots, plot.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p_compute = subs.add_parser("compute", help="print the exact polynomial as JSON")
    _add_source_options(p_compute)
    p_compute.add_argument(
        "--oracle",
        action="store_true",
        help="force brute-force enumeration and cross-check the closed form",
    )
    p_compute.set_defaults(func=_cmd_compute)

    p_certify = subs.add_parser(
        "certify", help="certify absence of nonzero real roots (JSON lines)"
    )
    _add_source_options(p_certify, join_ok=True)
    p_certify.set_defaults(func=_cmd_certify)

    p_sweep = subs.add_parser("sweep", help="certification sweep as a CSV table")
    _add_source_options(p_sweep, join_ok=True)
    p_sweep.set_defaults(func=_cmd_sweep)

    p_roots = subs.add_parser("roots", help="locate complex roots (CSV)")
    _add_source_options(p_roots)
    p_roots.add_argument("--tol", type=float, default=1e-12)
    p_roots.add_argument("--max-iter", type=int, default=500)
    p_roots.set_defaults(func=_cmd_roots)

    p_plot = subs.add_parser("plot", help="render a root scatter plot (SVG)")
    _add_source_options(p_plot)
    p_plot.add_argument("--tol", type=float, default=1e-12)
    p_plot.add_argument("--max-iter", type=int, default=500)
    p_plot.add_argument(
        "--circle", action="store_true", help="overlay the unit circle centered at -1"
    )
    p_plot.set_defaults(func=_cmd_plot)
    return parser


def _validate_source(args) -> None:
    sources = [bool(args.family), bool(args.edge_list), bool(getattr(args, "join", None))]
    if sum(sources) != 1:
        raise _UsageError("exactly one of --family, --edge-list, --join is required")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _validate_source(args)
        return args.func(args)
    except _UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except CapacityError as e:
        print(f"capacity error: {e}", file=sys.stderr)
        return 2
    except NonConvergenceError as e:
        print(f"solver error: {e}", file=sys.stderr)
        return 3
    except OracleMismatchError as e:
        print(f"integrity error: {e}", file=sys.stderr)
        return 4
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


def entry_point() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry_point()
