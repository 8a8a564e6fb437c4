"""Command-line front end: ``fqtrace <command> --p P --s S --m M --e E``.

Exit codes: 0 ok/match, 1 mismatch, 2 invalid input, 3 budget refusal under
``--strict``.  Output never contains timings or worker counts, so identical
configurations print identical bytes.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from .cyclotomy import CaseMismatch, closed_form_periods, gaussian_periods, period_polynomial
from .gf import FieldError, build_field
from .theory import (
    PredictionError,
    compare,
    erratum_for,
    griesmer_check,
    predict,
    predict_general,
    representative_distribution,
    theorem_label,
)
from .tracecode import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    CodeSpec,
    InvalidSpec,
    brute_force_spectrum,
    representative_spectrum_check,
)

EXIT_OK, EXIT_MISMATCH, EXIT_INVALID, EXIT_BUDGET = 0, 1, 2, 3

CSV_COLUMNS = ["p", "s", "m", "e", "q", "r", "N", "n", "gray_length", "dimension",
               "min_distance", "num_weights", "griesmer_verdict", "enumerator"]

TABLE4 = [(2, 1, 3, 1), (3, 1, 2, 1), (2, 2, 2, 3), (5, 1, 1, 1), (7, 1, 1, 2), (3, 2, 1, 2)]


class Refused(Exception):
    """Budget refusal under --strict."""


# ---------------------------------------------------------------------------
# output helpers

def csv_row(spec: CodeSpec, dist=None, verdict: str = "") -> dict:
    row = dict(spec.params())
    row.update(gray_length=spec.gray_length, dimension=spec.dimension, min_distance="",
               num_weights="", griesmer_verdict=verdict, enumerator="")
    if dist is not None:
        row.update(min_distance=dist.min_distance, num_weights=len(dist.nonzero_weights),
                   enumerator=dist.enumerator_str())
    return {k: row[k] for k in CSV_COLUMNS}


def emit_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def emit_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def _table_lines(obj, indent=0) -> list[str]:
    pad = "  " * indent
    out = []
    for k, v in obj.items():
        if isinstance(v, dict):
            out.append(f"{pad}{k}:")
            out.extend(_table_lines(v, indent + 1))
        elif isinstance(v, list) and v and isinstance(v[0], dict) and "weight" in v[0]:
            out.append(f"{pad}{k}:")
            out.append(f"{pad}  {'weight':>12}  {'frequency':>12}")
            for item in v:
                extra = "  ".join(f"{a}={b}" for a, b in item.items() if a not in ("weight", "frequency"))
                out.append(f"{pad}  {item['weight']:>12}  {item.get('frequency', ''):>12}  {extra}".rstrip())
        else:
            out.append(f"{pad}{k}: {v}")
    return out


def emit_table(obj) -> str:
    return "\n".join(_table_lines(obj)) + "\n"


def render(obj: dict, rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return emit_json(obj)
    if fmt == "csv":
        return emit_csv(rows)
    return emit_table(obj)


# ---------------------------------------------------------------------------
# commands; each returns (payload, csv rows, exit code)

def _spec(args) -> CodeSpec:
    if args.p is None or args.m is None:
        raise InvalidSpec("--p and --m are required")
    return CodeSpec(args.p, args.s, args.m, args.e)


def _oracle(spec: CodeSpec, args):
    """Full spectrum inside the budget, one codeword per stratum outside it."""
    try:
        res = brute_force_spectrum(spec, budget=args.budget, workers=args.workers)
        return "full", res, res.distribution
    except BudgetExceeded as exc:
        if args.strict:
            raise Refused(str(exc)) from exc
        print(f"notice: {exc}; falling back to representative mode", file=sys.stderr)
        reps = representative_spectrum_check(spec)
        return "representative", reps, representative_distribution(spec, reps)


def cmd_info(args):
    spec = _spec(args)
    payload = {"params": spec.params(), "gray_length": spec.gray_length,
               "dimension": spec.dimension, "work": spec.work,
               "theorem": theorem_label(spec)}
    return payload, [csv_row(spec)], EXIT_OK


def cmd_predict(args):
    spec = _spec(args)
    pred = predict(spec)
    payload = pred.to_json()
    verdict = griesmer_check(spec, pred.distribution.min_distance).verdict
    payload["griesmer"] = verdict
    return payload, [csv_row(spec, pred.distribution, verdict)], EXIT_OK


def cmd_spectrum(args):
    spec = _spec(args)
    mode, res, dist = _oracle(spec, args)
    if mode == "full":
        payload = res.to_json()
        payload["strata"] = {k: [{"weight": w, "frequency": f} for w, f in v.items()]
                             for k, v in res.strata.items()}
    else:
        payload = {"params": spec.params(), "gray_length": spec.gray_length,
                   "dimension": spec.dimension, "distribution": dist.to_list(),
                   "min_distance": dist.min_distance, "codeword_count": None,
                   "strata": {k: [{"weight": w}] for k, w in res}}
    payload["mode"] = mode
    return payload, [csv_row(spec, dist)], EXIT_OK


def cmd_verify(args):
    spec = _spec(args)
    general = predict_general(spec)
    mode, res, dist = _oracle(spec, args)
    report = compare(general, res)
    payload = {"params": spec.params(), "mode": mode,
               "predicted": general.distribution.to_list(),
               "observed": dist.to_list(),
               "comparison": report.to_json()}
    ok = report.match
    if spec.N in (1, 2, 3, 4):
        closed = predict(spec)
        agree = closed.distribution == general.distribution
        payload["closed_form"] = {"source": closed.provenance, "variant": closed.variant,
                                  "sign": closed.sign, "agrees_with_general": agree}
        ok = ok and agree
    verdict = ""
    if spec.N == 1:
        g = griesmer_check(spec, dist.min_distance)
        payload["griesmer"] = g.to_json()
        verdict = g.verdict
    payload["erratum"] = erratum_for(spec)
    payload["status"] = "match" if ok else "mismatch"
    return payload, [csv_row(spec, dist, verdict)], EXIT_OK if ok else EXIT_MISMATCH


def cmd_periods(args):
    if args.p is None or args.m is None or args.N is None:
        raise InvalidSpec("--p, --m and --N are required")
    sm = args.s * args.m
    F = build_field(args.p, sm)
    N = args.N
    if N < 1 or (F.order % N):
        raise InvalidSpec(f"N must divide r-1 (N={N}, r-1={F.order})")
    periods = gaussian_periods(F, N)
    poly = period_polynomial(F, N)
    payload = {"p": args.p, "s": args.s, "m": args.m, "r": F.size, "N": N,
               "periods": [e.to_int() if e.is_rational() else list(e.coords) for e in periods],
               "period_polynomial": str(poly),
               "coefficients": list(poly.coeffs),
               "integer_roots": poly.integer_roots()}
    try:
        cf = closed_form_periods(N, args.p, args.s, args.m, polynomial=poly)
        payload["case"] = cf.case
        payload["selected_variant"] = cf.selected_variant
        payload["diophantine"] = {k: {"kind": d.kind, "power": d.power, "first": d.first,
                                      "second": d.second, "both_signs": d.both_signs}
                                  for k, d in cf.diophantine.items()}
    except CaseMismatch as exc:
        payload["case"] = str(exc)
    return payload, [], EXIT_OK


def cmd_griesmer(args):
    spec = _spec(args)
    d = args.d if args.d is not None else predict(spec).distribution.min_distance
    g = griesmer_check(spec, d)
    row = csv_row(spec, None, g.verdict)
    row["min_distance"] = d
    return {"params": spec.params(), "griesmer": g.to_json()}, [row], EXIT_OK


def parse_range(text: str | None, default: list[int]) -> list[int]:
    """``"3"``, ``"2-7"`` or ``"2,3,5"``."""
    if text is None:
        return default
    out = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if "-" in part:
            lo, hi = part.split("-", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    return out


def cmd_scan(args):
    if args.preset == "table4":
        cands = TABLE4
    else:
        cands = [(p, s, m, e)
                 for p in parse_range(args.p_range, [])
                 for s in parse_range(args.s_range, [1])
                 for m in parse_range(args.m_range, [])
                 for e in parse_range(args.e_range, [])]
    rows, items = [], []
    for p, s, m, e in cands:
        try:
            spec = CodeSpec(p, s, m, e)
        except InvalidSpec:
            continue
        if args.gcd is not None and spec.N != args.gcd:
            continue
        if e < args.min_e:
            continue
        try:
            if args.source == "oracle":
                dist = brute_force_spectrum(spec, budget=args.budget, workers=args.workers).distribution
            else:
                dist = predict(spec).distribution
            verdict = griesmer_check(spec, dist.min_distance).verdict
            row = csv_row(spec, dist, verdict)
            items.append({**row, "distribution": dist.to_list()})
        except (BudgetExceeded, FieldError, PredictionError, ArithmeticError, CaseMismatch) as exc:
            row = csv_row(spec)
            row["enumerator"] = f"error: {exc}"
            items.append({**row, "error": str(exc)})
        rows.append(row)
    return {"rows": items}, rows, EXIT_OK


def _scan_table(rows: list[dict]) -> str:
    cols = ["p", "s", "m", "e", "q", "N", "gray_length", "dimension", "min_distance",
            "griesmer_verdict", "enumerator"]
    lines = ["\t".join(cols)]
    for r in rows:
        lines.append("\t".join(str(r[c]) for c in cols))
    return "\n".join(lines) + "\n"


COMMANDS = {"info": cmd_info, "spectrum": cmd_spectrum, "predict": cmd_predict,
            "verify": cmd_verify, "periods": cmd_periods, "griesmer": cmd_griesmer,
            "scan": cmd_scan}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int)
    common.add_argument("--s", type=int, default=1)
    common.add_argument("--m", type=int)
    common.add_argument("--e", type=int, default=1)
    common.add_argument("--format", choices=["json", "csv", "table"], default="table")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="max coordinate evaluations for full enumeration")
    common.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    common.add_argument("--strict", action="store_true",
                        help="refuse (exit 3) instead of downgrading to representative mode")

    ap = argparse.ArgumentParser(prog="fqtrace",
                                 description="Trace codes over F_q + uF_q: spectra, predictions, checks.")
    sub = ap.add_subparsers(dest="command", required=True)
    for name in ("info", "spectrum", "predict", "verify"):
        sub.add_parser(name, parents=[common])
    per = sub.add_parser("periods", parents=[common])
    per.add_argument("--N", type=int)
    gr = sub.add_parser("griesmer", parents=[common])
    gr.add_argument("--d", type=int, help="minimum distance (default: predicted)")
    sc = sub.add_parser("scan", parents=[common])
    sc.add_argument("--p-range")
    sc.add_argument("--s-range")
    sc.add_argument("--m-range")
    sc.add_argument("--e-range")
    sc.add_argument("--gcd", type=int)
    sc.add_argument("--min-e", type=int, default=1)
    sc.add_argument("--preset", choices=["table4"])
    sc.add_argument("--source", choices=["predict", "oracle"], default="predict")
    return ap


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        payload, rows, code = COMMANDS[args.command](args)
    except Refused as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (InvalidSpec, FieldError, PredictionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if args.command == "scan" and args.format == "table":
        out.write(_scan_table(rows))
    elif args.command == "periods" and args.format == "csv":
        lines = ["class,period"] + [f"{i},{json.dumps(v).replace(',', ' ')}"
                                    for i, v in enumerate(payload["periods"])]
        out.write("\n".join(lines) + "\n")
    else:
        out.write(render(payload, rows, args.format))
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
