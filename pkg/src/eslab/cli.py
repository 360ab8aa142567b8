"""Command-line front end: ``es-lab {cf,verify,census,lattice,sierpinski}``.

Exit codes: 0 success, 1 a mathematical violation or cross-method
mismatch was found, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence

from .arith import is_prime, primes_between
from .cf import cf_expand, convergents, error_term, four_over_p_closed_form
from .lattice import count_lattice_brute, count_lattice_sliced
from .solver import (census, cf_residue_classifier, cf_shape, enumerate_solutions,
                     enumerate_solutions_general, format_shape, proof_trace,
                     verify_type_iii_absent)

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2

CENSUS_FIELDS = ["p", "f_ordered", "f_unordered", "f_I", "f_II", "f_III", "identity_holds"]
VERIFY_FIELDS = ["p", "n_convergents", "all_numerators_one", "all_D_negative", "violations"]
LATTICE_FIELDS = ["N", "a_N", "a_N_over_N", "a_N_over_N_5_2", "method"]
SIERPINSKI_FIELDS = ["p", "p_mod_a", "cf_shape", "has_solution"]


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    p_min: Optional[int] = None
    p_max: Optional[int] = None
    n_values: Sequence[int] = ()
    xy_cap: int = 1000
    output_format: str = "json"
    output_path: Optional[str] = None
    parallelism: int = 0

    def __post_init__(self):
        if self.p_min is not None and self.p_max is not None and self.p_min > self.p_max:
            raise UsageError(f"empty range: --from {self.p_min} > --to {self.p_max}")
        if self.xy_cap < 1:
            raise UsageError("--xy-cap must be >= 1")
        if list(self.n_values) != sorted(self.n_values):
            raise UsageError("--n values must be ascending")

    def workers(self) -> int:
        return self.parallelism or os.cpu_count() or 1


def ordered_map(fn: Callable, items: Iterable, jobs: int) -> list:
    """Map in input order, across processes when jobs > 1."""
    items = list(items)
    if jobs <= 1 or len(items) < 2:
        return [fn(i) for i in items]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


# --- rendering -------------------------------------------------------------

def _cell(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    return v


def render(rows: list[dict], fields: list[str], fmt: str) -> str:
    if fmt == "json":
        return "".join(json.dumps(r) + "\n" for r in rows)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n", extrasaction="ignore")
        w.writeheader()
        for r in rows:
            w.writerow({k: _cell(r.get(k)) for k in fields})
        return buf.getvalue()
    return "".join("  ".join(f"{k}={_cell(r.get(k))}" for k in fields) + "\n" for r in rows)


def emit(text: str, cfg: RunConfig) -> None:
    if cfg.output_path:
        with open(cfg.output_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# --- commands --------------------------------------------------------------

def cf_report(num: int, den: int) -> dict:
    if den < 1 or num < 0:
        raise UsageError(f"need num >= 0 and den >= 1, got {num}/{den}")
    r = Fraction(num, den)
    cf = cf_expand(r)
    convs = convergents(cf)
    errs = []
    for c in convs:
        et = error_term(r, c.k)
        errs.append({
            "k": c.k, "p_k": c.p, "q_k": c.q, "error": str(et.r),
            "complete_quotient": None if et.complete_quotient is None else str(et.complete_quotient),
        })
    report = {"input": str(r), "expansion": str(cf), "quotients": list(cf.quotients),
              "convergents": [str(c) for c in convs], "terms": errs,
              "closed_form_match": None}
    if r.numerator == 4 and r.denominator >= 5 and is_prime(r.denominator):
        exp, values = four_over_p_closed_form(r.denominator)
        report["closed_form_match"] = (exp == cf and values == [c.value for c in convs])
    return report


def cmd_cf(cfg: RunConfig, num: int, den: int) -> int:
    rep = cf_report(num, den)
    if cfg.output_format == "json":
        text = json.dumps(rep) + "\n"
    elif cfg.output_format == "csv":
        text = render(rep["terms"], ["k", "p_k", "q_k", "error", "complete_quotient"], "csv")
    else:
        lines = [f"{rep['input']} = {rep['expansion']}"]
        lines += [f"  c_{t['k']} = {t['p_k']}/{t['q_k']}  r_{t['k']} = {t['error']}"
                  for t in rep["terms"]]
        if rep["closed_form_match"] is not None:
            lines.append(f"closed-form match: {str(rep['closed_form_match']).lower()}")
        text = "\n".join(lines) + "\n"
    emit(text, cfg)
    return EXIT_OK if rep["closed_form_match"] is not False else EXIT_VIOLATION


def verify_row(args: tuple[int, int, bool]) -> dict:
    p, xy_cap, with_enumeration = args
    trace = proof_trace(p)
    rep = verify_type_iii_absent(p, xy_cap, cross_check=with_enumeration)
    return {"p": p, "n_convergents": len(trace.steps),
            "all_numerators_one": trace.all_numerators_one,
            "all_D_negative": trace.all_D_negative,
            "violations": len(rep.violations) + len(rep.enumeration_violations)}


def cmd_verify(cfg: RunConfig, with_enumeration: bool = True) -> int:
    primes = primes_between(cfg.p_min, cfg.p_max)
    rows = ordered_map(verify_row, [(p, cfg.xy_cap, with_enumeration) for p in primes],
                       cfg.workers())
    emit(render(rows, VERIFY_FIELDS, cfg.output_format), cfg)
    bad = any(r["violations"] or not r["all_numerators_one"] or not r["all_D_negative"]
              for r in rows)
    return EXIT_VIOLATION if bad else EXIT_OK


def census_row(p: int) -> dict:
    return census(p).row()


def cmd_census(cfg: RunConfig) -> int:
    rows = ordered_map(census_row, primes_between(cfg.p_min, cfg.p_max), cfg.workers())
    emit(render(rows, CENSUS_FIELDS, cfg.output_format), cfg)
    bad = any(r["f_III"] or not r["identity_holds"] for r in rows)
    return EXIT_VIOLATION if bad else EXIT_OK


def lattice_row(args: tuple[int, str]) -> dict:
    N, method = args
    if method == "both":
        brute, sliced = count_lattice_brute(N), count_lattice_sliced(N)
        row = sliced.row()
        row["method"] = "both"
        row["match"] = brute.a_N == sliced.a_N
        return row
    count = count_lattice_brute if method == "brute" else count_lattice_sliced
    return count(N).row()


def cmd_lattice(cfg: RunConfig, method: str) -> int:
    rows = ordered_map(lattice_row, [(N, method) for N in cfg.n_values], cfg.workers())
    fields = LATTICE_FIELDS + (["match"] if method == "both" else [])
    emit(render(rows, fields, cfg.output_format), cfg)
    return EXIT_VIOLATION if any(r.get("match") is False for r in rows) else EXIT_OK


def sierpinski_row(args: tuple[int, int]) -> dict:
    a, p = args
    return {"p": p, "p_mod_a": p % a, "cf_shape": format_shape(cf_shape(a, p)),
            "has_solution": bool(enumerate_solutions_general(a, p))}


def cmd_sierpinski(cfg: RunConfig, a: int) -> int:
    if a < 2:
        raise UsageError(f"--a must be >= 2, got {a}")
    primes = [p for p in primes_between(cfg.p_min, cfg.p_max) if a % p]
    rows = ordered_map(sierpinski_row, [(a, p) for p in primes], cfg.workers())
    classes = [{"residue": r, "shapes": [format_shape(s) for s in shapes]}
               for r, shapes in cf_residue_classifier(a, cfg.p_min, cfg.p_max).items()]
    if cfg.output_format == "json":
        text = "".join(json.dumps({"kind": "prime", **r}) + "\n" for r in rows)
        text += "".join(json.dumps({"kind": "class", **c}) + "\n" for c in classes)
    else:
        flat = [{"residue": c["residue"], "shapes": " ".join(c["shapes"])} for c in classes]
        text = render(rows, SIERPINSKI_FIELDS, cfg.output_format)
        text += "\n" + render(flat, ["residue", "shapes"], cfg.output_format)
    emit(text, cfg)
    return EXIT_OK if all(r["has_solution"] for r in rows) else EXIT_VIOLATION


# --- argument parsing ------------------------------------------------------

def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "text"], default="json")
    common.add_argument("--out", metavar="PATH")
    common.add_argument("--jobs", type=int, default=None,
                        help="worker processes; 0 = all cores (env ES_LAB_JOBS)")

    parser = argparse.ArgumentParser(prog="es-lab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cf", parents=[common], help="continued fraction of num/den")
    p.add_argument("num", type=int)
    p.add_argument("den", type=int)

    p = sub.add_parser("verify", parents=[common], help="type III absence over a prime range")
    p.add_argument("--from", dest="p_min", type=int, required=True)
    p.add_argument("--to", dest="p_max", type=int, required=True)
    p.add_argument("--xy-cap", type=int, default=1000)
    p.add_argument("--skip-enumeration", action="store_true",
                   help="only run the coprime-pair scan, not the full solution filter")

    p = sub.add_parser("census", parents=[common], help="solution counts by type")
    p.add_argument("--from", dest="p_min", type=int, required=True)
    p.add_argument("--to", dest="p_max", type=int, required=True)

    p = sub.add_parser("lattice", parents=[common], help="count a_N")
    p.add_argument("--n", dest="n_values", type=_int_list, required=True)
    p.add_argument("--method", choices=["brute", "sliced", "both"], default="sliced")

    p = sub.add_parser("sierpinski", parents=[common], help="a/p solutions and CF shapes")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--from", dest="p_min", type=int, default=2)
    p.add_argument("--to", dest="p_max", type=int, default=1000)
    return parser


def _jobs(flag: Optional[int]) -> int:
    if flag is not None:
        jobs = flag
    else:
        try:
            jobs = int(os.environ.get("ES_LAB_JOBS", "0"))
        except ValueError:
            raise UsageError("ES_LAB_JOBS must be an integer")
    if jobs < 0:
        raise UsageError("--jobs must be >= 0")
    return jobs


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = RunConfig(
            command=args.command,
            p_min=getattr(args, "p_min", None),
            p_max=getattr(args, "p_max", None),
            n_values=getattr(args, "n_values", ()),
            xy_cap=getattr(args, "xy_cap", 1000),
            output_format=args.format,
            output_path=args.out,
            parallelism=_jobs(args.jobs),
        )
        if args.command == "cf":
            return cmd_cf(cfg, args.num, args.den)
        if args.command in ("verify", "census") and cfg.p_min < 5:
            raise UsageError("--from must be >= 5")
        if args.command == "verify":
            return cmd_verify(cfg, with_enumeration=not args.skip_enumeration)
        if args.command == "census":
            return cmd_census(cfg)
        if args.command == "lattice":
            if not cfg.n_values or min(cfg.n_values) < 1:
                raise UsageError("--n values must be >= 1")
            return cmd_lattice(cfg, args.method)
        return cmd_sierpinski(cfg, args.a)
    except UsageError as exc:
        print(f"es-lab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
