"""Command-line front end.

Every command builds an output record ``{command, inputs, results, status}``
and renders it as text (default), CSV or JSON.  Rationals are always emitted
as exact ``"p/q"`` strings.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Any, Callable, Iterable, Sequence

from . import __version__
from .ehrhart import compare_with_reference, ehrhart_counts, ehrhart_poly_part, reference_poly
from .errors import WavecountError
from .exact import RatPoly, format_poly
from .multiseq import Degrees
from .spectral import (
    BOUNDARY_CONDITIONS,
    closed_form_degeneracy,
    degeneracy_table,
    heat_kernel_coeffs,
    invariants,
    midpoint_combination,
    molien_from_axes,
    molien_series,
    tiling,
    weyl_reference,
)
from .verify import ALL_SUITES, run_suite
from .waves import (
    check_reciprocity,
    decompose,
    denumerant_table_enum,
    denumerant_table_series,
    evaluate_waves,
    frobenius,
    popoviciu,
    popoviciu_gcd,
)

EXIT_OK, EXIT_VERIFY, EXIT_USAGE = 0, 1, 2


# -- argument types -----------------------------------------------------------

def degrees_arg(text: str) -> Degrees:
    try:
        d = Degrees.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated positive integers like 3,4 ({exc})")
    if not d.entries:
        raise argparse.ArgumentTypeError("expected at least one degree")
    return d


def range_arg(text: str) -> range:
    """Inclusive ``a..b`` or a single integer."""
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            lo, hi = int(a), int(b)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an inclusive range a..b or an integer, got {text!r}")
    if lo < 0 or hi < lo:
        raise argparse.ArgumentTypeError(f"range {text!r} must satisfy 0 <= a <= b")
    return range(lo, hi + 1)


def nonneg_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}")
    return v


# -- helpers ------------------------------------------------------------------

def _threads() -> int:
    try:
        return max(1, int(os.environ.get("WAVECOUNT_THREADS", "1")))
    except ValueError:
        return 1


def ordered_map(fn: Callable, items: Iterable) -> list:
    """Map preserving input order; parallel when WAVECOUNT_THREADS > 1."""
    items = list(items)
    n = _threads()
    if n == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))


def _poly_record(p: RatPoly, var: str | None = None) -> dict:
    return {"text": format_poly(p, var), "variable": var or p.variable,
            "coefficients": [str(c) for c in p.coeffs]}


def approx(x: Fraction, digits: int) -> str:
    with localcontext() as ctx:
        ctx.prec = digits + 30
        value = Decimal(x.numerator) / Decimal(x.denominator)
        return str(value.quantize(Decimal(1).scaleb(-digits)))


def _jsonable(v: Any) -> Any:
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, bool) or v is None or isinstance(v, (int, str)):
        return v
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return str(v)


def _add_approx(rows: list[dict], digits: int | None) -> list[dict]:
    if digits is None:
        return rows
    out = []
    for row in rows:
        new = dict(row)
        for k, v in row.items():
            if isinstance(v, Fraction):
                new[f"{k}~approx"] = approx(v, digits)
        out.append(new)
    return out


def make_record(command: str, inputs: dict, results: dict, ok: bool = True) -> dict:
    return {"command": command, "inputs": _jsonable(inputs), "results": _jsonable(results),
            "status": "ok" if ok else "verification_failed"}


# -- renderers ----------------------------------------------------------------

def _scalar_items(results: dict) -> list[tuple[str, str]]:
    items = []
    for k, v in results.items():
        if k == "rows":
            continue
        if isinstance(v, dict) and "text" in v:
            items.append((k, v["text"]))
        elif isinstance(v, (dict, list)):
            items.append((k, json.dumps(v, separators=(",", ":"))))
        else:
            items.append((k, "" if v is None else str(v)))
    return items


def render_text(record: dict) -> str:
    lines = [f"# {record['command']}  status={record['status']}"]
    results = record["results"]
    for k, v in _scalar_items(results):
        lines.append(f"{k}: {v}")
    rows = results.get("rows")
    if rows:
        cols = list(rows[0].keys())
        cells = [[str(r.get(c, "")) for c in cols] for r in rows]
        widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
        lines.append("  ".join(c.rjust(w) for c, w in zip(cols, widths)))
        for row in cells:
            lines.append("  ".join(x.rjust(w) for x, w in zip(row, widths)))
    return "\n".join(lines) + "\n"


def render_csv(record: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    results = record["results"]
    w.writerow(["key", "value"])
    w.writerow(["command", record["command"]])
    w.writerow(["status", record["status"]])
    for k, v in _scalar_items(results):
        w.writerow([k, v])
    rows = results.get("rows")
    if rows:
        w.writerow([])
        cols = list(rows[0].keys())
        w.writerow(cols)
        for r in rows:
            w.writerow([r.get(c, "") for c in cols])
    return buf.getvalue()


def render(record: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(record, indent=2) + "\n"
    if fmt == "csv":
        return render_csv(record)
    return render_text(record)


# -- commands -----------------------------------------------------------------

def cmd_denum(args) -> dict:
    d: Degrees = args.degrees
    lmax = args.l[-1]
    methods = ["brute", "series", "popoviciu"] if args.method == "all" else [args.method]
    if "popoviciu" in methods and d.D != 2:
        if args.method == "popoviciu":
            raise WavecountError("the popoviciu method needs exactly two degrees")
        methods.remove("popoviciu")
    cols: dict[str, list[int]] = {}
    if "brute" in methods:
        cols["brute"] = denumerant_table_enum(d, lmax)
    if "series" in methods:
        cols["series"] = denumerant_table_series(d, lmax)
    if "popoviciu" in methods:
        d1, d2 = d.entries
        f = popoviciu if math.gcd(d1, d2) == 1 else popoviciu_gcd
        cols["popoviciu"] = [None] * (lmax + 1)
        for l, v in zip(args.l, ordered_map(lambda l: f(d1, d2, l), args.l)):
            cols["popoviciu"][l] = v
    rows = [{"l": l, **{m: cols[m][l] for m in methods}} for l in args.l]
    agree = all(len({r[m] for m in methods}) == 1 for r in rows)
    results: dict = {"agree": agree, "rows": rows}
    if d.D == 2 and min(d.entries) >= 2 and math.gcd(*d.entries) == 1:
        results["frobenius"] = frobenius(*d.entries)
    return make_record("denum", {"degrees": str(d), "l": f"{args.l[0]}..{lmax}", "method": args.method},
                       results, agree)


def cmd_waves(args) -> dict:
    d: Degrees = args.degrees
    w = decompose(d)
    rep = check_reciprocity(w)
    if args.var == "l":
        w1, w2 = w.in_l()
    else:
        w1, w2 = w.w1, w.w2
    results: dict = {
        "W1": _poly_record(w1), "W2": _poly_record(w2), "W2_sign": "(-1)^l",
        "W2_nonzero": not w.w2.is_zero(), "lbar_shift": w.lbar_shift,
        "even_degrees": str(w.even_degrees), "odd_degrees": str(w.odd_degrees),
        "reciprocity": rep.passed,
    }
    if args.l is not None:
        table = denumerant_table_series(d, args.l[-1])
        rows = []
        for l in args.l:
            waves = evaluate_waves(w, l)
            rows.append({"l": l, "denumerant": table[l], "waves": waves, "undulant": table[l] - waves})
        results["rows"] = _add_approx(rows, args.approx)
    return make_record("waves", {"degrees": str(d), "var": args.var,
                                 "l": None if args.l is None else f"{args.l[0]}..{args.l[-1]}"},
                       results, rep.passed)


def cmd_ehrhart(args) -> dict:
    d: Degrees = args.degrees
    res = ehrhart_poly_part(d)
    results: dict = {"poly_part_l": _poly_record(res.poly_part_l),
                     "poly_part_lbar": _poly_record(res.poly_part_lbar),
                     "lbar_shift": res.lbar_shift}
    if d.D in (2, 3):
        results["reference_l"] = _poly_record(reference_poly(d))
        results["difference_computed_minus_reference"] = {
            str(k): v for k, v in compare_with_reference(d).items()}
    ok = True
    if args.l is not None:
        counts = ehrhart_counts(d, args.l[-1])
        rows = [{"l": l, "count": counts[l], "poly_part": res.poly_part_l(l)} for l in args.l]
        ok = counts[0] == 1 and all(a <= b for a, b in zip(counts, counts[1:]))
        results["rows"] = _add_approx(rows, args.approx)
    return make_record("ehrhart", {"degrees": str(d),
                                   "l": None if args.l is None else f"{args.l[0]}..{args.l[-1]}"},
                       results, ok)


def _tiling_from_args(args):
    name = args.name
    if name == "lune":
        if args.q is None:
            raise WavecountError("--name lune needs --q")
        name = f"lune({args.q})"
    return tiling(name)


def cmd_tiling(args) -> dict:
    spec = _tiling_from_args(args)
    table = degeneracy_table(spec, args.bc, args.lmax)
    rows = []
    ok = True
    for l in range(args.lmax + 1):
        row: dict = {"l": l, "omega": spec.eigenlevel(l, args.bc), "degeneracy": table[l]}
        if args.bc == "periodic":
            cf = closed_form_degeneracy(spec.name, l)
            row["closed_form"] = cf
            ok = ok and cf == table[l]
        rows.append(row)
    results = {"name": spec.name, "degrees": str(spec.degrees), "dim": spec.dim,
               "axis_orders": list(spec.axis_orders) if spec.axis_orders else None,
               "a_N": spec.a_N, "a_D": spec.a_D, "d0": spec.d0,
               "degeneracies": table, "rows": _add_approx(rows, args.approx)}
    return make_record("tiling", {"name": spec.name, "bc": args.bc, "lmax": args.lmax}, results, ok)


def cmd_molien(args) -> dict:
    spec = _tiling_from_args(args)
    degree_form = molien_series(spec, args.order, args.bc)
    results: dict = {"name": spec.name, "degree_form": list(degree_form.coeffs)}
    ok = True
    if args.form in ("axes", "both"):
        axes = molien_from_axes(spec.axis_orders, args.order)
        results["axis_form"] = list(axes.coeffs)
        ok = axes == degree_form
        results["agree"] = ok
    if args.form == "axes":
        del results["degree_form"]
    return make_record("molien", {"name": spec.name, "order": args.order, "form": args.form, "bc": args.bc},
                       results, ok)


def cmd_weyl(args) -> dict:
    d: Degrees = args.degrees
    inv = invariants(d)
    results: dict = {"two_g": inv.two_g, "b1": inv.b1, "b2": inv.b2_opt,
                     "weyl_reference": _poly_record(weyl_reference(d, args.bc))}
    for source in args.midpoint or []:
        results[f"midpoint_{source}"] = _poly_record(midpoint_combination(d, source))
    return make_record("weyl", {"degrees": str(d), "bc": args.bc, "midpoint": args.midpoint or []}, results)


def cmd_heatk(args) -> dict:
    d: Degrees = args.degrees
    rows = [{"index": idx, "coefficient": val.coeff, "sqrt_pi": val.sqrt_pi}
            for idx, val in heat_kernel_coeffs(d)]
    return make_record("heatk", {"degrees": str(d)}, {"rows": _add_approx(rows, None)})


def cmd_verify(args) -> dict:
    results = run_suite(args.suite, args.seed)
    rows = [{"check": r.name, "passed": r.passed, "detail": r.detail} for r in results]
    ok = all(r.passed for r in results)
    return make_record("verify", {"suite": args.suite, "seed": args.seed},
                       {"passed": sum(r.passed for r in results), "failed": sum(not r.passed for r in results),
                        "rows": rows}, ok)


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--approx", type=nonneg_int, metavar="K",
                        help="append a K-digit decimal column (non-authoritative)")

    p = argparse.ArgumentParser(prog="wavecount", description="Exact denumerants, Sylvester waves, "
                                "Ehrhart polynomials and sphere-tiling spectra.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("denum", parents=[common], help="denumerant table")
    s.add_argument("--degrees", type=degrees_arg, required=True)
    s.add_argument("--l", type=range_arg, required=True, help="inclusive range a..b")
    s.add_argument("--method", choices=("brute", "series", "popoviciu", "all"), default="series")
    s.set_defaults(func=cmd_denum)

    s = sub.add_parser("waves", parents=[common], help="first and second Sylvester waves")
    s.add_argument("--degrees", type=degrees_arg, required=True)
    s.add_argument("--var", choices=("l", "lbar"), default="lbar")
    s.add_argument("--l", type=range_arg, help="also tabulate waves and undulant over this range")
    s.set_defaults(func=cmd_waves)

    s = sub.add_parser("ehrhart", parents=[common], help="Ehrhart polynomial part and counts")
    s.add_argument("--degrees", type=degrees_arg, required=True)
    s.add_argument("--l", type=range_arg)
    s.set_defaults(func=cmd_ehrhart)

    for name, func, helptext in (("tiling", cmd_tiling, "tiling degeneracies"),
                                 ("molien", cmd_molien, "Molien / generating series")):
        s = sub.add_parser(name, parents=[common], help=helptext)
        s.add_argument("--name", required=True, help="tetrahedral, octahedral, icosahedral, lune or lune(q)")
        s.add_argument("--q", type=int, help="lune order when --name lune")
        s.add_argument("--bc", choices=BOUNDARY_CONDITIONS, default="periodic")
        if name == "tiling":
            s.add_argument("--lmax", type=nonneg_int, required=True)
        else:
            s.add_argument("--order", type=nonneg_int, default=60)
            s.add_argument("--form", choices=("degree", "axes", "both"), default="both")
        s.set_defaults(func=func)

    s = sub.add_parser("weyl", parents=[common], help="Weyl reference terms and midpoint combinations")
    s.add_argument("--degrees", type=degrees_arg, required=True)
    s.add_argument("--bc", choices=("neumann", "dirichlet"), default="neumann")
    s.add_argument("--midpoint", action="append", choices=("computed", "reference"))
    s.set_defaults(func=cmd_weyl)

    s = sub.add_parser("heatk", parents=[common], help="heat-kernel coefficients from the first wave")
    s.add_argument("--degrees", type=degrees_arg, required=True)
    s.set_defaults(func=cmd_heatk)

    s = sub.add_parser("verify", parents=[common], help="run verification suites")
    s.add_argument("--suite", choices=("all",) + ALL_SUITES, default="all")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_verify)
    return p


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        record = args.func(args)
    except WavecountError as exc:
        print(f"wavecount {args.command}: error: {exc}", file=sys.stderr)
        print(f"see: wavecount {args.command} --help", file=sys.stderr)
        return EXIT_USAGE
    out.write(render(record, args.format))
    return EXIT_OK if record["status"] == "ok" else EXIT_VERIFY


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
