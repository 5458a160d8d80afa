"""Command-line surface.

Batch-oriented: stdout carries data (plain integers, CSV, JSON, JSON
Lines), stderr carries warnings and timing, and exit codes are stable:
0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import inspect
import json
import os
import sys

from . import series as qs
from .bijections import (
    copartition_to_eo,
    copartition_to_pair,
    cp001_to_rim_cell,
    cp111_to_partition,
    eo_to_copartition,
    inverse_match_table,
    pair_to_copartition,
    partition_to_cp111,
    render_pair_merge,
    rim_cell_to_cp001,
)
from .copartitions import from_json, to_json, to_json_dict
from .diagrams import render_diagram
from .enumeration import (
    count_copartitions,
    count_formula,
    count_refined,
    crank_tally,
    enumerate_copartitions,
)
from .errors import CopaError, NoClosedFormError
from .verify import SUITES

MAX_ORDER_ENV = "COPA_MAX_ORDER"


def _capped_order(order: int) -> int:
    cap = os.environ.get(MAX_ORDER_ENV)
    if cap is not None and order > int(cap):
        print(
            f"warning: order {order} capped to {int(cap)} by {MAX_ORDER_ENV}",
            file=sys.stderr,
        )
        return int(cap)
    return order


def _params(args) -> tuple[int, int, int]:
    return (args.a, args.b, args.m)


def _cmd_count(args) -> int:
    params = _params(args)
    if (args.w is None) != (args.s is None):
        print("--w and --s must be given together", file=sys.stderr)
        return 2
    if args.w is not None:
        value = count_refined(params, args.n).table.get((args.w, args.s), 0)
        if args.crosscheck and args.a >= 1 and args.b >= 1:
            other = qs.gf_product(params, args.n).refined_coefficient(args.n, args.w, args.s)
            if other != value:
                print(
                    f"crosscheck failed: enum {value} vs series {other}", file=sys.stderr
                )
                return 1
        print(value)
        return 0
    value = count_copartitions(params, args.n, args.method)
    if args.crosscheck:
        got = {args.method: value}
        got["enum"] = count_copartitions(params, args.n, "enum")
        if not (args.a == 0 and args.b == 0):
            got["series"] = count_copartitions(params, args.n, "series")
        try:
            got["formula"] = count_formula(params, args.n)
        except NoClosedFormError:
            pass
        if len(set(got.values())) > 1:
            detail = ", ".join(f"{k}={v}" for k, v in sorted(got.items()))
            print(f"crosscheck failed: {detail}", file=sys.stderr)
            return 1
    print(value)
    return 0


def _cmd_table(args) -> int:
    params = _params(args)
    if args.refined and args.format == "csv":
        print("--refined needs --format json", file=sys.stderr)
        return 2
    ns = range(args.max_n + 1)
    if args.format == "csv":
        print("a,b,m,n,count")
        for n in ns:
            print(f"{args.a},{args.b},{args.m},{n},{count_copartitions(params, n)}")
        return 0
    rows = []
    for n in ns:
        row: dict = {"n": n, "count": count_copartitions(params, n)}
        if args.refined:
            table = count_refined(params, n).table
            row["refined"] = [
                {"w": w, "s": s, "count": c} for (w, s), c in sorted(table.items())
            ]
        rows.append(row)
    print(json.dumps({"a": args.a, "b": args.b, "m": args.m, "rows": rows}))
    return 0


_BOUND_FLAGS = (
    ("max_n", ("max_n", "max_total", "max_half"), lambda v: v),
    ("order", ("order",), lambda v: _capped_order(v)),
    ("max_k", ("max_k",), lambda v: v),
    ("s", ("scales",), lambda v: (v,)),
)


def _suite_kwargs(fn, args, strict: bool):
    accepted = inspect.signature(fn).parameters
    kwargs = {}
    for flag, names, transform in _BOUND_FLAGS:
        value = getattr(args, flag)
        if value is None:
            continue
        name = next((nm for nm in names if nm in accepted), None)
        if name is not None:
            kwargs[name] = transform(value)
        elif strict:
            return None, flag
    return kwargs, None


def _cmd_verify(args) -> int:
    if args.suite != "all" and args.suite not in SUITES:
        known = ", ".join(SUITES)
        print(f"unknown suite {args.suite!r} (known: {known}, all)", file=sys.stderr)
        return 2
    names = list(SUITES) if args.suite == "all" else [args.suite]
    reports = []
    for name in names:
        fn = SUITES[name]
        kwargs, bad = _suite_kwargs(fn, args, strict=args.suite != "all")
        if bad is not None:
            print(f"suite {name!r} does not take --{bad.replace('_', '-')}", file=sys.stderr)
            return 2
        reports.append(fn(**kwargs))
    if args.format == "json":
        print(
            json.dumps(
                [
                    {
                        "suite": r.suite,
                        "ranges": r.ranges,
                        "attempted": r.attempted,
                        "passed": r.passed,
                        "ok": r.ok,
                        "counterexample": r.counterexample,
                        "wall_time": round(r.wall_time, 3),
                    }
                    for r in reports
                ]
            )
        )
    else:
        for r in reports:
            print(r.line())
            print(f"{r.suite}: {r.wall_time:.2f}s", file=sys.stderr)
    return 0 if all(r.ok for r in reports) else 1


def _read_input(raw: str) -> str:
    return sys.stdin.read() if raw == "-" else raw


def _cmd_render(args) -> int:
    c = from_json(_read_input(args.input))
    out = render_diagram(c, args.format)
    if out and not out.endswith("\n"):
        out += "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return 0


def _cmd_enumerate(args) -> int:
    for c in enumerate_copartitions(_params(args), args.n):
        print(to_json(c))
    return 0


def _series_rows(s, refined: bool) -> list[dict]:
    if refined:
        return [
            {
                "n": n,
                "terms": [
                    {"s": xd, "w": yd, "coeff": coeff}
                    for (xd, yd), coeff in sorted(s.coefficient(n).items())
                ],
            }
            for n in range(s.order + 1)
        ]
    return [{"n": n, "coeff": s.coefficient_int(n)} for n in range(s.order + 1)]


def _cmd_series(args) -> int:
    order = _capped_order(args.order)
    kind = args.kind
    if kind in ("product", "double-sum"):
        if args.a is None or args.b is None or args.m is None:
            print(f"--kind {kind} needs --a --b --m", file=sys.stderr)
            return 2
        build = qs.gf_product if kind == "product" else qs.gf_double_sum
        s = build((args.a, args.b, args.m), order, markers=args.refined)
        print(json.dumps(_series_rows(s, args.refined)))
        return 0
    if args.refined:
        print("--refined only applies to product and double-sum", file=sys.stderr)
        return 2
    if kind == "theta":
        if args.x is None or args.y is None:
            print("--kind theta needs --x --y", file=sys.stderr)
            return 2
        s = qs.theta_f(args.x, args.y, order)
    elif kind == "rr-g":
        s = qs.rr_function("G", args.form, order)
    elif kind == "rr-h":
        s = qs.rr_function("H", args.form, order)
    elif kind == "nu":
        s = qs.mock_theta_nu(order)
    else:
        s = qs.eo_star_gf(order)
    print(json.dumps(_series_rows(s, False)))
    return 0


def _bij_pair_to_copartition(obj: dict) -> dict:
    merged, c = pair_to_copartition(
        obj["ground_source"], obj["sky_source"], (obj["a"], obj["b"], obj["m"])
    )
    inp = sum(obj["ground_source"]) + sum(obj["sky_source"])
    out = sum(merged) + c.size
    return {
        "merged": list(merged),
        "copartition": to_json_dict(c),
        "input_size": inp,
        "output_size": out,
        "size_ok": inp == out,
    }


def _bij_copartition_to_pair(obj: dict) -> dict:
    c = from_json(json.dumps(obj["copartition"]))
    merged = tuple(obj["merged"])
    table = inverse_match_table(merged, c)
    pi, lam = copartition_to_pair(merged, c)
    inp = sum(merged) + c.size
    out = sum(pi) + sum(lam)
    return {
        "ground_source": list(pi),
        "sky_source": list(lam),
        "match_table": [list(row) for row in table],
        "input_size": inp,
        "output_size": out,
        "size_ok": inp == out,
    }


def _bij_copartition_to_eo(obj: dict) -> dict:
    c = from_json(json.dumps(obj))
    e = copartition_to_eo(c)
    return {
        "partition": list(e),
        "input_size": c.size,
        "output_size": sum(e),
        "size_ok": sum(e) == 2 * c.size,
    }


def _bij_eo_to_copartition(obj: dict) -> dict:
    c = eo_to_copartition(obj["partition"])
    total = sum(obj["partition"])
    return {
        "copartition": to_json_dict(c),
        "input_size": total,
        "output_size": c.size,
        "size_ok": total == 2 * c.size,
    }


def _bij_partition_to_cp111(obj: dict) -> dict:
    c = partition_to_cp111(obj["partition"], obj["ground_count"])
    total = sum(obj["partition"]) + obj["ground_count"]
    return {
        "copartition": to_json_dict(c),
        "input_size": total,
        "output_size": c.size,
        "size_ok": total == c.size,
    }


def _bij_cp111_to_partition(obj: dict) -> dict:
    c = from_json(json.dumps(obj))
    lam, k = cp111_to_partition(c)
    return {
        "partition": list(lam),
        "ground_count": k,
        "input_size": c.size,
        "output_size": sum(lam) + k,
        "size_ok": c.size == sum(lam) + k,
    }


def _bij_rim_cell_to_cp001(obj: dict) -> dict:
    c = rim_cell_to_cp001(obj["partition"], tuple(obj["cell"]))
    total = sum(obj["partition"])
    return {
        "copartition": to_json_dict(c),
        "input_size": total,
        "output_size": c.size,
        "size_ok": total == c.size,
    }


def _bij_cp001_to_rim_cell(obj: dict) -> dict:
    c = from_json(json.dumps(obj))
    lam, cell = cp001_to_rim_cell(c)
    return {
        "partition": list(lam),
        "cell": list(cell),
        "input_size": c.size,
        "output_size": sum(lam),
        "size_ok": c.size == sum(lam),
    }


_BIJECTIONS = {
    "pair-to-copartition": _bij_pair_to_copartition,
    "copartition-to-pair": _bij_copartition_to_pair,
    "copartition-to-eo": _bij_copartition_to_eo,
    "eo-to-copartition": _bij_eo_to_copartition,
    "partition-to-cp111": _bij_partition_to_cp111,
    "cp111-to-partition": _bij_cp111_to_partition,
    "rim-cell-to-cp001": _bij_rim_cell_to_cp001,
    "cp001-to-rim-cell": _bij_cp001_to_rim_cell,
}


def _cmd_bijection(args) -> int:
    obj = json.loads(_read_input(args.input))
    if args.illustrate:
        if args.name != "pair-to-copartition":
            print("--illustrate only applies to pair-to-copartition", file=sys.stderr)
            return 2
        sys.stdout.write(
            render_pair_merge(
                obj["ground_source"], obj["sky_source"], (obj["a"], obj["b"], obj["m"])
            )
        )
        return 0
    print(json.dumps(_BIJECTIONS[args.name](obj)))
    return 0


def _cmd_crank(args) -> int:
    tally = crank_tally(_params(args), args.n, args.mod)
    print(
        json.dumps(
            {
                "modulus": tally.modulus,
                "total": tally.total,
                "counts": {str(r): tally.counts[r] for r in range(tally.modulus)},
            }
        )
    )
    return 0


def _add_params(sp, with_n: bool = True) -> None:
    sp.add_argument("--a", type=int, required=True, help="ground congruence class")
    sp.add_argument("--b", type=int, required=True, help="sky congruence class")
    sp.add_argument("--m", type=int, required=True, help="modulus")
    if with_n:
        sp.add_argument("--n", type=int, required=True, help="size")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="copa",
        description="Copartition counting, enumeration, diagrams, bijections, and identity suites.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("count", help="count copartitions of a given size")
    _add_params(sp)
    sp.add_argument("--w", type=int, help="restrict to this many ground parts")
    sp.add_argument("--s", type=int, help="restrict to this many sky parts")
    sp.add_argument(
        "--method", choices=("auto", "enum", "series", "formula"), default="auto"
    )
    sp.add_argument(
        "--crosscheck",
        action="store_true",
        help="recompute by every available method and compare",
    )
    sp.set_defaults(func=_cmd_count)

    sp = sub.add_parser("table", help="counts for n = 0..max-n")
    _add_params(sp, with_n=False)
    sp.add_argument("--max-n", type=int, required=True, dest="max_n")
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.add_argument("--refined", action="store_true", help="include (w,s) tables")
    sp.set_defaults(func=_cmd_table)

    sp = sub.add_parser("verify", help="run a named verification suite")
    sp.add_argument("suite", help="suite name, or 'all'")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.add_argument("--max-n", type=int, dest="max_n")
    sp.add_argument("--order", type=int)
    sp.add_argument("--max-k", type=int, dest="max_k")
    sp.add_argument("--s", type=int, help="single scale factor (scaling suite)")
    sp.set_defaults(func=_cmd_verify)

    sp = sub.add_parser("render", help="draw one copartition")
    sp.add_argument("--input", required=True, help="copartition JSON, or - for stdin")
    sp.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    sp.add_argument("--out", help="write to this path instead of stdout")
    sp.set_defaults(func=_cmd_render)

    sp = sub.add_parser("enumerate", help="list copartitions of a size, JSON Lines")
    _add_params(sp)
    sp.set_defaults(func=_cmd_enumerate)

    sp = sub.add_parser("series", help="print series coefficients as JSON")
    sp.add_argument(
        "--kind",
        choices=("product", "double-sum", "rr-g", "rr-h", "theta", "nu", "eo-star"),
        required=True,
    )
    sp.add_argument("--order", type=int, required=True)
    sp.add_argument("--a", type=int)
    sp.add_argument("--b", type=int)
    sp.add_argument("--m", type=int)
    sp.add_argument("--x", type=int, help="first theta exponent")
    sp.add_argument("--y", type=int, help="second theta exponent")
    sp.add_argument("--form", choices=("sum", "product"), default="sum")
    sp.add_argument("--refined", action="store_true", help="bivariate coefficients")
    sp.set_defaults(func=_cmd_series)

    sp = sub.add_parser("bijection", help="apply a named map to a JSON input")
    sp.add_argument("name", choices=sorted(_BIJECTIONS))
    sp.add_argument("--input", required=True, help="JSON object, or - for stdin")
    sp.add_argument(
        "--illustrate",
        action="store_true",
        help="print the four-panel picture instead of JSON (pair merge only)",
    )
    sp.set_defaults(func=_cmd_bijection)

    sp = sub.add_parser("crank", help="tally crank residues")
    _add_params(sp)
    sp.add_argument("--mod", type=int, required=True)
    sp.set_defaults(func=_cmd_crank)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BrokenPipeError:
        try:
            sys.stdout.close()
        except OSError:
            pass
        return 0
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        print(f"error: bad input ({exc})", file=sys.stderr)
        return 2
    except (CopaError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
