"""symbreak command line: gen, analyze, formula, verify.

Exit codes: 0 ok, 1 input error, 2 resource cap hit, 3 verification mismatch.
Set SYMBREAK_LOG=DEBUG (or INFO, WARNING, ...) for diagnostics on stderr.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time
from pathlib import Path

from . import formulas, io, verify
from .automorphism import DEFAULT_CAP, aut_order, enumerate_automorphisms
from .distinguishing import distinguishing_index, distinguishing_number
from .errors import NoEdges, RMaxExceeded, SearchTimeout, SymbreakError
from .generators import FamilySpec, family

EXIT_OK, EXIT_INPUT, EXIT_CAP, EXIT_MISMATCH = 0, 1, 2, 3

FAMILY_ALIASES = {"q": "q_graph"}

DEFAULT_RANGES = {
    "dutch": {"n": "2..4", "k": "3..5"},
    "q": {"m": "2..5", "n": "2..4"},
    "friendship": {"n": "2..8"},
    "spiro": {"q": "3..6", "h": "1..3", "k": "2..3"},
    "poly": {"q": "3..6", "h": "1..3", "k": "2..3"},
    "nanostar": {"k": "1..2"},
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def parse_range(text: str) -> list[int]:
    """``"3"``, ``"2..5"`` (inclusive) or ``"2,4,7"``."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return list(range(int(lo), int(hi) + 1))
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise SymbreakError(f"bad integer range {text!r}") from None


def parse_params(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise SymbreakError(f"params must be comma-separated integers, got {text!r}") from None


def _write(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_gen(args) -> int:
    if args.spec:
        spec = io.load_spec(args.spec)
    elif args.family:
        spec = FamilySpec(FAMILY_ALIASES.get(args.family, args.family), parse_params(args.params or ""))
    else:
        raise SymbreakError("gen needs --family/--params or --spec")
    _write(io.dumps(family(spec), args.format), args.out)
    return EXIT_OK


def cmd_analyze(args) -> int:
    g = io.load_graph(args.input)
    start = time.perf_counter()
    order = aut_order(g)
    capped = order > args.aut_cap
    auts = None if capped else enumerate_automorphisms(g, args.aut_cap)
    out: dict = {"n": g.n, "m": g.m, "aut_order": order, "capped": capped}
    code = EXIT_CAP if capped else EXIT_OK
    limit = args.time_limit

    def solve(fn, prefix):
        nonlocal code
        try:
            res = fn(g, auts, args.max_labels, time_limit=limit)
        except (RMaxExceeded, SearchTimeout) as exc:
            out[prefix], out[f"{prefix}_witness"] = None, None
            out[f"{prefix}_error"] = f"{type(exc).__name__}: {exc}"
            code = EXIT_CAP
            return None
        out[prefix], out[f"{prefix}_witness"] = res.value, list(res.witness)
        return res

    if not args.edge:
        solve(distinguishing_number, "D")
    if args.edge or g.m:
        if not g.m:
            raise NoEdges("the distinguishing index needs at least one edge")
        res = solve(distinguishing_index, "Dprime")
        out["kernel_nontrivial"] = res.kernel_nontrivial if res else None
    else:
        out["Dprime"] = None
        out["Dprime_error"] = "NoEdges: the distinguishing index needs at least one edge"
    out["elapsed_ms"] = round((time.perf_counter() - start) * 1000, 3)
    _write(json.dumps(out, sort_keys=True) + "\n", args.out)
    return code


def cmd_formula(args) -> int:
    result = formulas.formula_for(args.family, parse_params(args.params))
    out = {"family": args.family, "params": list(parse_params(args.params)), **result.to_dict()}
    _write(json.dumps(out, sort_keys=True) + "\n", args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    cfg = verify.RunConfig(
        aut_cap=args.aut_cap,
        max_vertices=args.max_vertices,
        max_edges=args.max_edges,
        max_labels=args.max_labels,
        jobs=args.jobs,
        time_limit=args.time_limit,
        timing=args.timing,
    )
    instances = []
    for name in args.family:
        if name == "bounds":
            instances += verify.bound_instances(args.samples, args.seed)
            continue
        defaults = DEFAULT_RANGES[name]
        ranges = {key: parse_range(getattr(args, key) or dflt) for key, dflt in defaults.items()}
        instances += verify.family_instances(name, ranges)
    report = verify.run(instances, cfg)
    _write(verify.RENDERERS[args.format](report), args.out)
    return EXIT_MISMATCH if report["summary"]["mismatched"] else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="symbreak", description="Distinguishing numbers and indices of point-attaching graph families.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", help="build a family or composition graph")
    g.add_argument("--family", help="base graph or family kind (q is short for q_graph)")
    g.add_argument("--params", help="comma-separated integers, e.g. 5,3")
    g.add_argument("--spec", help="family spec JSON file (compositions, custom nanostar bases)")
    g.add_argument("--format", choices=sorted(io.FORMATS), default="edgelist")
    g.add_argument("-o", "--out")
    g.set_defaults(func=cmd_gen)

    a = sub.add_parser("analyze", help="automorphism order, D and D' with witnesses")
    a.add_argument("--in", dest="input", required=True, help="edge-list or JSON graph file")
    a.add_argument("--edge", action="store_true", help="only the edge version")
    a.add_argument("--max-labels", type=int, help="give up above this many labels (exit 2)")
    a.add_argument("--aut-cap", type=int, default=DEFAULT_CAP)
    a.add_argument("--time-limit", type=float, help="seconds per solve")
    a.add_argument("-o", "--out")
    a.set_defaults(func=cmd_analyze)

    f = sub.add_parser("formula", help="closed-form values; never runs the solver")
    f.add_argument("--family", required=True, choices=formulas.FORMULA_FAMILIES)
    f.add_argument("--params", required=True)
    f.add_argument("-o", "--out")
    f.set_defaults(func=cmd_formula)

    v = sub.add_parser("verify", help="compare formulas with the brute-force oracle")
    v.add_argument("--family", action="append", required=True, choices=verify.VERIFY_FAMILIES)
    for key in ("n", "k", "m", "q", "h"):
        v.add_argument(f"--{key}", help="range: 3, 2..5 or 2,4,7")
    v.add_argument("--samples", type=int, default=200)
    v.add_argument("--seed", type=int, default=7)
    v.add_argument("--aut-cap", type=int, default=DEFAULT_CAP)
    v.add_argument("--max-vertices", type=int, default=20)
    v.add_argument("--max-edges", type=int, default=16, help="edge solver skip threshold")
    v.add_argument("--max-labels", type=int)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--time-limit", type=float, help="seconds per solve; slower instances are skipped")
    v.add_argument("--timing", action="store_true", help="record elapsed_ms (reports stop being byte-identical)")
    v.add_argument("--format", choices=sorted(verify.RENDERERS), default="json")
    v.add_argument("-o", "--out")
    v.set_defaults(func=cmd_verify)
    return p


def _setup_logging() -> None:
    level = os.environ.get("SYMBREAK_LOG", "WARNING").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING), format="%(levelname)s %(name)s: %(message)s")


def main(argv=None) -> int:
    _setup_logging()
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (SymbreakError, OSError) as exc:
        print(f"symbreak: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
