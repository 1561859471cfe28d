"""Command-line front end.

Exit codes: 0 on success (refuted predictions are findings, not errors),
1 when a ``verify`` assertion fails, 2 on invalid parameters, 3 when the
field exceeds the size cap.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from . import __version__
from .cdiff import PowerMap, c_spectrum, c_uniformity
from .families import known_families_lookup
from .gf import DEFAULT_SIZE_CAP, FieldError, SizeCapExceeded, build_field
from .oracle import conjecture_check, pcn_scan, verify_prediction
from .suites import SUITES, run_suite
from .theorems import QUOTED_EXAMPLES, solve_congruence, theorem_predictions

EXIT_OK, EXIT_FAILED, EXIT_INVALID, EXIT_CAP = 0, 1, 2, 3


# ---------------------------------------------------------------- output


def _dump_json(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _dump_csv(field: dict, rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["# version", __version__, "p", field["p"], "m", field["m"],
                "modulus", " ".join(map(str, field["modulus"])), "generator", field["generator"]])
    w.writerows(rows)
    return buf.getvalue()


def _dump_table(field: dict, lines: list[tuple[str, object]], rows: list[list]) -> str:
    out = [
        f"pcnkit {__version__}",
        f"field     GF({field['p']}^{field['m']}), order {field['order']}",
        f"modulus   {field['modulus']} (low degree first)",
        f"generator {field['generator']}",
    ]
    width = max((len(k) for k, _ in lines), default=0)
    out += [f"{k.ljust(width)}  {v}" for k, v in lines]
    if rows:
        ncol = max(len(r) for r in rows)
        cols = [max(len(str(r[i])) for r in rows if i < len(r)) for i in range(ncol)]
        out.append("")
        for r in rows:
            out.append("  ".join(str(v).ljust(w) for v, w in zip(r, cols)).rstrip())
    return "\n".join(out) + "\n"


def _emit(args, doc: dict, lines: list[tuple[str, object]], rows: list[list]) -> str:
    if args.format == "json":
        text = _dump_json(doc)
    elif args.format == "csv":
        text = _dump_csv(doc["field"], rows)
    else:
        text = _dump_table(doc["field"], lines, rows)
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return text


def _field(args):
    return build_field(args.p, args.m, args.cap)


# ---------------------------------------------------------------- commands


def cmd_field(args) -> int:
    F = _field(args)
    doc = {"version": __version__, "field": F.header(), "minus_one": F.minus_one}
    rows = [["e", "g^e"]] + [[e, int(F.exp_table[e])] for e in range(min(F.order - 1, args.rows))]
    _emit(args, doc, [("minus_one", F.minus_one)], rows)
    return EXIT_OK


def _annotations(F, d: int, c: int) -> list[str]:
    out = []
    n = F.order - 1
    if c != F.minus_one:
        return out
    for ex in QUOTED_EXAMPLES:
        if (ex["p"], ex["m"]) != (F.p, F.m) or (ex["d"] - d) % n:
            continue
        if ex.get("anomaly"):
            sol = solve_congruence(F.p, F.m, ex["k"], "T2")
            out.append(
                f"x^{ex['d']} is listed as PcN at c=-1 under the T2 congruence, but it does not satisfy "
                f"that congruence; the T2 solver gives {list(sol.solutions)} for this field"
            )
        else:
            out.append(f"x^{ex['d']} is a quoted PcN example at c=-1 ({ex['theorem']})")
    return out


def cmd_uniformity(args) -> int:
    F = _field(args)
    P = PowerMap.of(F, args.d)
    c = F.parse(args.c)
    rep = c_uniformity(F, P, c, workers=args.workers)
    spec = c_spectrum(F, P, c, workers=args.workers)
    preds = theorem_predictions(F, args.d, c, [args.k] if args.k else None) + known_families_lookup(F, args.d, c)
    checked = []
    for pred in preds:
        v = verify_prediction(pred, F, args.d, c)
        checked.append({"prediction": pred.to_json(), "verdict": v.to_json()})
    doc = {
        "version": __version__,
        "field": F.header(),
        "d": P.d, "d_reduced": P.d_reduced, "gcd_d": P.gcd_d, "c": c,
        "report": rep.to_json(),
        "spectrum": spec.to_json(),
        "predictions": checked,
        "annotations": _annotations(F, args.d, c),
    }
    lines = [
        ("d", f"{P.d} (reduced {P.d_reduced}, gcd {P.gcd_d})"),
        ("c", c),
        ("uniformity", rep.uniformity),
        ("class", rep.classification),
        ("witness_b", rep.witness_b),
        ("spectrum", spec.nonzero()),
    ]
    for item in checked:
        pr, vd = item["prediction"], item["verdict"]
        lines.append((pr["theorem_id"], f"{pr['claim']['kind']}: {vd['status']}"))
    lines += [("note", a) for a in doc["annotations"]]
    rows = [["d", "c", "uniformity", "classification", "witness_b", "gcd_term"],
            [P.d, c, rep.uniformity, rep.classification,
             "" if rep.witness_b is None else rep.witness_b, "" if rep.gcd_term is None else rep.gcd_term]]
    rows += [["theorem_id", "claim", "status"]]
    rows += [[i["prediction"]["theorem_id"], i["prediction"]["claim"]["kind"], i["verdict"]["status"]] for i in checked]
    _emit(args, doc, lines, rows)
    return EXIT_OK


def cmd_spectrum(args) -> int:
    F = _field(args)
    P = PowerMap.of(F, args.d)
    c = F.parse(args.c)
    spec = c_spectrum(F, P, c, workers=args.workers)
    doc = {"version": __version__, "field": F.header(), "d": P.d, "c": c, "spectrum": spec.to_json()}
    rows = [["i", "omega_i"]] + [[i, w] for i, w in enumerate(spec.omega)]
    _emit(args, doc, [("d", P.d), ("c", c)], rows)
    return EXIT_OK


def cmd_scan(args) -> int:
    if args.conjecture:
        if args.p != 2:
            raise FieldError("--conjecture needs p = 2")
        start = time.perf_counter()
        rep = conjecture_check(args.m, workers=args.workers, cap=args.cap)
        doc = rep.to_json()
        if args.timing:
            doc["elapsed_seconds"] = time.perf_counter() - start
        rows = [["side", "d", "c"]]
        rows += [["scan_not_predicted", d, c] for d, c in rep.scan_not_predicted]
        rows += [["predicted_not_scan", d, c] for d, c in rep.predicted_not_scan]
        lines = [("holds", rep.holds), ("agreed", rep.agreed_exponents())]
        lines += [("note", n) for n in rep.notes]
        _emit(args, doc, lines, rows)
        return EXIT_OK
    F = _field(args)
    rep = pcn_scan(F, workers=args.workers)
    doc = rep.to_json(timing=args.timing)
    lines = [("pcn exponents", len(rep.pcn)), ("pcn pairs", len(rep.pairs()))]
    _emit(args, doc, lines, [list(r) for r in rep.csv_rows()])
    return EXIT_OK


def cmd_verify(args) -> int:
    name = args.suite_name or args.suite
    if not name:
        raise ValueError(f"name a suite: {', '.join(SUITES)}")
    params = {k: getattr(args, k) for k in ("p", "m", "k") if getattr(args, k)}
    checks = run_suite(name, **params)
    failed = [c for c in checks if c.status == "fail"]
    doc = {
        "version": __version__,
        "suite": name,
        "params": params,
        "passed": not failed,
        "checks": [c.to_json() for c in checks],
    }
    if args.format == "json":
        _emit(args, doc, [], [])
    else:
        rows = [["status", "check"]] + [[c.status, c.name] for c in checks]
        if args.format == "csv":
            buf = io.StringIO()
            csv.writer(buf, lineterminator="\n").writerows([["# version", __version__, "suite", name]] + rows)
            sys.stdout.write(buf.getvalue())
        else:
            for c in checks:
                print(f"{c.status.upper():5} {c.name}")
            print(f"{len(checks) - len(failed)}/{len(checks)} ok, suite {name}")
    return EXIT_FAILED if failed else EXIT_OK


def cmd_solve(args) -> int:
    if args.k is None:
        raise ValueError("solve needs -k")
    families = [args.family] if args.family else ["T1", "T2"]
    sols = [solve_congruence(args.p, args.m, args.k, fam) for fam in families]
    doc = {
        "version": __version__,
        "field": {"p": args.p, "m": args.m},
        "solutions": [s.to_json() for s in sols],
    }
    rows = [["family", "d", "parity"]]
    for s in sols:
        rows += [[s.family, d, "odd" if d % 2 else "even"] for d in s.solutions]
    if args.format == "json":
        _emit(args, doc, [], [])
    elif args.format == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(
            [["# version", __version__, "p", args.p, "m", args.m, "k", args.k]] + rows)
        sys.stdout.write(buf.getvalue())
    else:
        for s in sols:
            print(f"{s.family}: {s.to_json()['congruence']} -> {list(s.solutions) or 'no solution'}")
    return EXIT_OK


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-p", type=int, help="characteristic")
    common.add_argument("-m", type=int, help="extension degree")
    common.add_argument("--format", choices=("json", "csv", "table"), default="json")
    common.add_argument("--cap", type=int, default=DEFAULT_SIZE_CAP, help="largest field order allowed")
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--timing", action="store_true", help="include wall-clock time in JSON")

    ap = argparse.ArgumentParser(prog="pcnkit", description="c-differential uniformity of power maps over GF(p^m)")
    ap.add_argument("--version", action="version", version=f"pcnkit {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("field", parents=[common], help="describe the field realization")
    s.add_argument("--rows", type=int, default=16, help="powers of the generator to list")
    s.set_defaults(func=cmd_field, need_field=True)

    for name, func, hlp in (
        ("uniformity", cmd_uniformity, "uniformity of x^d at c, with predictions"),
        ("spectrum", cmd_spectrum, "c-differential spectrum of x^d at a = 1"),
    ):
        s = sub.add_parser(name, parents=[common], help=hlp)
        s.add_argument("-d", type=int, required=True, help="exponent")
        s.add_argument("-c", required=True, help="element code, -1, or g^e")
        s.add_argument("-k", type=int, help="restrict predictors to this k")
        s.set_defaults(func=func, need_field=True)

    s = sub.add_parser("scan", parents=[common], help="all PcN pairs (d, c) of a field")
    s.add_argument("--conjecture", action="store_true", help="diff against the GF(2^m) corollary set")
    s.add_argument("--output", "-o", help="write the report to this file")
    s.set_defaults(func=cmd_scan, need_field=True)

    s = sub.add_parser("verify", parents=[common], help="run a named verification suite")
    s.add_argument("suite_name", nargs="?", choices=SUITES + (None,), metavar="SUITE")
    s.add_argument("--suite", choices=SUITES)
    s.add_argument("-k", type=int)
    s.set_defaults(func=cmd_verify, need_field=False)

    s = sub.add_parser("solve", parents=[common], help="solve the T1/T2 exponent congruences")
    s.add_argument("-k", type=int)
    s.add_argument("--family", choices=("T1", "T2"))
    s.set_defaults(func=cmd_solve, need_field=True)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.need_field and (args.p is None or args.m is None):
            raise ValueError(f"{args.command} needs -p and -m")
        if args.workers < 1:
            raise ValueError("--workers must be >= 1")
        return args.func(args)
    except SizeCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (FieldError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
