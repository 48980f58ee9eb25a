"""Command-line front end.

Subcommands:

* ``compute``    solve the counts degree by degree; print or write the
  table together with one solve report per degree
* ``product``    expand theta_p * theta_q at the working truncation
* ``punctured``  evaluate one punctured count, or a whole degree batch
* ``verify``     run the built-in golden checks; exit 0 iff all pass
* ``export``     write just the solved table (json or csv)

Exit codes: 0 success, 1 solver or consistency failure, 2 configuration
error.  Human output uses the symbol θ and names like N_{2,4}; json and
csv output is pure ASCII.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .errors import CubicGWError, GradingError, SlabConfigError
from .exact import format_rational
from .puncture import punctured_invariant, punctured_table
from .ring import element_to_json_dict, format_element, mul, mul_basis, theta
from .seeds import (
    SlabCoefficients,
    default_slab_table,
    load_slab_file,
    seed_top,
)
from .solver import (
    compute_up_to_with_reports,
    verify_two_point_relations,
)
from .table import ConcreteMode, InvariantTable, degree_unknown_ids

EXIT_OK = 0
EXIT_SOLVER = 1
EXIT_CONFIG = 2

DEGREE1_EXPECTED = {
    "N(1,2)": Fraction(1),
    "N(2,1)": Fraction(4),
    "N3(1,2;1)": Fraction(6),
}
DEGREE2_EXPECTED = {
    "N(1,5)": Fraction(1),
    "N(2,4)": Fraction(7, 2),
    "N(3,3)": Fraction(9),
    "N(4,2)": Fraction(14),
    "N(5,1)": Fraction(25),
    "N3(1,5;2)": Fraction(30),
    "N3(2,4;2)": Fraction(42),
    "N3(3,3;2)": Fraction(54),
}
SEED_EXPECTED = {1: Fraction(4), 2: Fraction(25)}


class _ConfigError(Exception):
    """Internal: bad command-line configuration, mapped to exit code 2."""


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _non_negative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--max-degree", type=_positive_int, default=2, metavar="D",
        help="maximal curve degree to solve (default 2)",
    )
    common.add_argument(
        "--slab-file", metavar="PATH",
        help="JSON file overriding or extending the slab coefficients",
    )
    common.add_argument(
        "--triple-bound", type=_positive_int, metavar="B",
        help="triple enumeration bound (must be >= 3 * max degree)",
    )
    output = argparse.ArgumentParser(add_help=False)
    output.add_argument(
        "--format", choices=("table", "json", "csv"), default="table",
        help="output format (default table)",
    )
    output.add_argument("--output", metavar="PATH", help="write output to a file")

    parser = argparse.ArgumentParser(
        prog="cubicgw",
        description="Exact tangency curve counts for the plane relative to a smooth cubic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser(
        "compute", parents=[common, output],
        help="solve degree by degree and print the table plus solve reports",
    )
    p_compute.add_argument(
        "--dump-equations", action="store_true",
        help="also print the normalized constraint system, one equation per line",
    )
    p_compute.set_defaults(func=cmd_compute)

    p_product = sub.add_parser(
        "product", parents=[common, output],
        help="expand theta_p * theta_q at truncation bound max-degree",
    )
    p_product.add_argument("p", type=_non_negative_int)
    p_product.add_argument("q", type=_non_negative_int)
    p_product.set_defaults(func=cmd_product)

    p_punctured = sub.add_parser(
        "punctured", parents=[common, output],
        help="evaluate punctured counts",
    )
    p_punctured.add_argument(
        "query", nargs="*", type=_non_negative_int, metavar="P Q R D",
        help="single query: four non-negative integers",
    )
    p_punctured.add_argument(
        "--batch", type=_non_negative_int, metavar="D",
        help="emit every legal query of degree D instead of a single value",
    )
    p_punctured.add_argument(
        "--cap", type=_non_negative_int, default=None, metavar="C",
        help="contact-order cap for --batch (default 3 * D)",
    )
    p_punctured.add_argument(
        "--allow-offgrade", action="store_true",
        help="return 0 for tuples violating the grading instead of erroring",
    )
    p_punctured.set_defaults(func=cmd_punctured)

    p_verify = sub.add_parser(
        "verify", parents=[common],
        help="run the golden checks and report pass/fail per check",
    )
    p_verify.set_defaults(func=cmd_verify)

    p_export = sub.add_parser(
        "export", parents=[common, output],
        help="write the solved table as json or csv",
    )
    p_export.set_defaults(func=cmd_export)

    return parser


def _slab_from(args) -> SlabCoefficients:
    if args.slab_file:
        return load_slab_file(args.slab_file)
    return default_slab_table()


def _triple_bound_from(args) -> int | None:
    bound = args.triple_bound
    if bound is not None and bound < 3 * args.max_degree:
        raise _ConfigError(
            f"--triple-bound {bound} is below 3 * max degree = {3 * args.max_degree}"
        )
    return bound


def _emit(text: str, output_path: str | None) -> None:
    if output_path:
        with open(output_path, "w", encoding="utf-8") as fp:
            fp.write(text)
    else:
        sys.stdout.write(text)


def _table_lines(table: InvariantTable, reports) -> str:
    lines = []
    for report in reports:
        lines.append(
            f"# degree {report.degree}: unknowns={report.num_unknowns} "
            f"equations={report.num_equations} rank={report.rank} "
            f"consistent={'true' if report.consistent else 'false'}"
        )
        for uid in degree_unknown_ids(report.degree):
            lines.append(f"{uid.display} = {format_rational(table.value_of(uid))}")
    return "\n".join(lines) + "\n"


def cmd_compute(args) -> int:
    slab = _slab_from(args)
    bound = _triple_bound_from(args)
    table, reports = compute_up_to_with_reports(
        args.max_degree, slab, bound, keep_equations=args.dump_equations
    )
    if args.dump_equations:
        for report in reports:
            sys.stdout.write(f"# degree {report.degree} system\n")
            for eq in report.equations or ():
                sys.stdout.write(eq.text() + "\n")
    if args.format == "table":
        body = _table_lines(table, reports)
    elif args.format == "json":
        body = json.dumps(
            {
                "table": table.to_json_dict(),
                "reports": [r.to_json_dict() for r in reports],
            },
            indent=2,
        ) + "\n"
    else:
        body = table.to_csv()
    _emit(body, args.output)
    return EXIT_OK


def cmd_product(args) -> int:
    slab = _slab_from(args)
    bound = _triple_bound_from(args)
    table, _ = compute_up_to_with_reports(args.max_degree, slab, bound)
    mode = ConcreteMode(table, args.max_degree)
    element = mul_basis(args.p, args.q, mode)
    if args.format == "json":
        body = json.dumps(element_to_json_dict(element), indent=2) + "\n"
    elif args.format == "csv":
        raise _ConfigError("product output supports table or json, not csv")
    else:
        body = format_element(element) + "\n"
    _emit(body, args.output)
    return EXIT_OK


def _punctured_rows_body(rows, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(
            [
                {"p": p, "q": q, "r": r, "d": d, "value": format_rational(v)}
                for p, q, r, d, v in rows
            ],
            indent=2,
        ) + "\n"
    if fmt == "csv":
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["p", "q", "r", "d", "value"])
        for p, q, r, d, v in rows:
            writer.writerow([p, q, r, d, format_rational(v)])
        return out.getvalue()
    lines = ["p q r d value"]
    for p, q, r, d, v in rows:
        lines.append(f"{p} {q} {r} {d} {format_rational(v)}")
    return "\n".join(lines) + "\n"


def cmd_punctured(args) -> int:
    slab = _slab_from(args)
    bound = _triple_bound_from(args)
    if args.batch is not None:
        if args.query:
            raise _ConfigError("give either a single P Q R D query or --batch, not both")
        d = args.batch
        cap = args.cap if args.cap is not None else 3 * d
        depth = max(args.max_degree, d)
        table, _ = compute_up_to_with_reports(depth, slab, bound)
        rows = [(p, q, r, d, v) for p, q, r, v in punctured_table(d, table, cap)]
        _emit(_punctured_rows_body(rows, args.format), args.output)
        return EXIT_OK
    if len(args.query) != 4:
        raise _ConfigError("punctured needs four integers P Q R D (or --batch D)")
    p, q, r, d = args.query
    depth = max(args.max_degree, d)
    table, _ = compute_up_to_with_reports(depth, slab, bound)
    value = punctured_invariant(p, q, r, d, table, allow_offgrade=args.allow_offgrade)
    if args.format == "json":
        body = json.dumps(
            {"p": p, "q": q, "r": r, "d": d, "value": format_rational(value)},
            indent=2,
        ) + "\n"
    elif args.format == "csv":
        body = _punctured_rows_body([(p, q, r, d, value)], "csv")
    else:
        body = format_rational(value) + "\n"
    _emit(body, args.output)
    return EXIT_OK


def golden_checks(max_degree: int, slab: SlabCoefficients, triple_bound: int | None):
    """Run the built-in checks; yield (name, passed, detail) triples."""
    table, reports = compute_up_to_with_reports(max_degree, slab, triple_bound)
    results = []

    solved = {uid.key: value for r in reports for uid, value in r.solution.items()}
    ok = all(solved.get(k) == v for k, v in DEGREE1_EXPECTED.items())
    results.append(("degree-1 values", ok, "N_{1,2}=1, N_{2,1}=4, N_{1,2,0}^{1}=6"))

    if max_degree >= 2:
        ok = all(solved.get(k) == v for k, v in DEGREE2_EXPECTED.items())
        results.append(("degree-2 table", ok, "all eight degree-2 counts"))
        ok = verify_two_point_relations(table)
        results.append(("two-point relations", ok, "four exact degree-2 relations"))

    ok = True
    detail = []
    for d in range(1, max_degree + 1):
        top = seed_top(d, slab)
        if table.two_point_value(3 * d - 1, 1) != top:
            ok = False
        if d in SEED_EXPECTED and top != SEED_EXPECTED[d]:
            ok = False
        detail.append(f"d={d}: {format_rational(top)}")
    results.append(("seed cross-check", ok, "; ".join(detail)))

    ok = all(
        table.two_point_value(3 * d - 1, 1)
        == (3 * d - 1) ** 2 * table.two_point_value(1, 3 * d - 1)
        for d in range(1, max_degree + 1)
    )
    results.append(("scaling identity", ok, "N(3d-1,1) = (3d-1)^2 N(1,3d-1)"))

    mode = ConcreteMode(table, max_degree)
    top_index = 3 * max_degree
    ok = True
    for p in range(1, top_index + 1):
        for q in range(p, top_index + 1):
            left_inner = mul_basis(p, q, mode)
            for r in range(1, top_index + 1):
                left = mul(left_inner, theta(r, max_degree), mode)
                right = mul(theta(p, max_degree), mul_basis(q, r, mode), mode)
                if left != right:
                    ok = False
    results.append(
        ("associativity sweep", ok, f"all triples with indices <= {top_index}")
    )

    ok = True
    for p in range(0, top_index + 1):
        for q in range(p, top_index + 1):
            for s, series in mul_basis(p, q, mode).terms:
                for k in series.support():
                    if p + q - s != 3 * k:
                        ok = False
    results.append(("grading sweep", ok, f"all products with indices <= {top_index}"))

    ok = True
    for d in range(1, max_degree + 1):
        for p in range(1, 3 * d + 1):
            for q in range(1, 3 * d + 1):
                r = p + q - 3 * d
                if r < 1:
                    continue
                direct = punctured_invariant(p, q, r, d, table)
                via_ring = mul_basis(p, q, mode).coefficient(r, d)
                if direct != via_ring:
                    ok = False
    results.append(
        ("punctured coherence", ok, "ring coefficients match punctured counts")
    )
    return table, results


def cmd_verify(args) -> int:
    slab = _slab_from(args)
    bound = _triple_bound_from(args)
    table, results = golden_checks(args.max_degree, slab, bound)
    failed = 0
    for name, ok, detail in results:
        status = "PASS" if ok else "FAIL"
        if not ok:
            failed += 1
        sys.stdout.write(f"{status} {name}: {detail}\n")
    if args.max_degree > 2:
        sys.stdout.write(f"# derived values for degrees 3..{args.max_degree}\n")
        for d in range(3, args.max_degree + 1):
            for uid, value in table.entries_for_degree(d):
                sys.stdout.write(f"{uid.display} = {format_rational(value)}\n")
    sys.stdout.write(
        f"{len(results) - failed}/{len(results)} checks passed\n"
    )
    return EXIT_OK if failed == 0 else EXIT_SOLVER


def cmd_export(args) -> int:
    slab = _slab_from(args)
    bound = _triple_bound_from(args)
    table, reports = compute_up_to_with_reports(args.max_degree, slab, bound)
    if args.format == "json":
        body = table.to_json()
    elif args.format == "csv":
        body = table.to_csv()
    else:
        body = _table_lines(table, reports)
    _emit(body, args.output)
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _ConfigError as err:
        sys.stderr.write(f"error: {err}\n")
        return EXIT_CONFIG
    except SlabConfigError as err:
        sys.stderr.write(f"error: {err}\n")
        return EXIT_CONFIG
    except GradingError as err:
        sys.stderr.write(f"error: {err}\n")
        return EXIT_CONFIG
    except OSError as err:
        sys.stderr.write(f"error: {err}\n")
        return EXIT_CONFIG
    except CubicGWError as err:
        degree = getattr(err, "degree", None)
        where = f" (degree {degree})" if degree is not None else ""
        sys.stderr.write(f"error{where}: {err}\n")
        return EXIT_SOLVER


if __name__ == "__main__":
    sys.exit(main())
