"""Theorem verification sweeps: formula value against brute-force oracle, per instance.

An instance is one concrete graph from a family (or one random composition
for the bound checks).  Each produces a record; records are sorted by
``(family, params)`` so reports do not depend on worker scheduling.
Wall-clock timings are left out unless asked for, which keeps reports
byte-identical across runs.
"""
from __future__ import annotations

import csv
import io
import json
import logging
import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from . import formulas
from .automorphism import aut_order, enumerate_automorphisms
from .distinguishing import ELEMENTS_LIMIT, distinguishing_index, distinguishing_number, validate_witness
from .errors import RMaxExceeded, SearchTimeout, SymbreakError
from .generators import FamilySpec, Part, family
from .graph import Graph

log = logging.getLogger(__name__)

VERIFY_FAMILIES = ("dutch", "q", "friendship", "spiro", "poly", "nanostar", "bounds")

CSV_COLUMNS = (
    "family", "params", "n_vertices", "n_edges", "kind", "formula_D", "formula_Dprime",
    "oracle_D", "oracle_Dprime", "aut_order", "match", "status", "elapsed_ms", "reasons",
)


@dataclass(frozen=True)
class RunConfig:
    aut_cap: int = 10**6
    max_vertices: int = 20
    max_edges: int = 16
    max_labels: int | None = None
    jobs: int = 1
    time_limit: float | None = None
    timing: bool = False

    def __post_init__(self):
        for name in ("aut_cap", "max_vertices", "max_edges", "jobs"):
            if getattr(self, name) < 1:
                raise SymbreakError(f"{name} must be a positive integer")
        if self.max_labels is not None and self.max_labels < 1:
            raise SymbreakError("max_labels must be a positive integer")


@dataclass(frozen=True)
class Instance:
    family: str
    params: tuple
    spec: FamilySpec = field(compare=False)


# -- instance generation ---------------------------------------------------------

def family_instances(name: str, ranges: dict) -> list[Instance]:
    """Instances of a named family over integer ranges (``ranges`` maps flag name to values)."""
    r = {k: list(v) for k, v in ranges.items()}
    out = []
    if name == "dutch":
        out = [Instance("dutch", (n, k), FamilySpec("dutch", (n, k))) for n in r["n"] for k in r["k"] if n >= 2 and k >= 3]
    elif name == "q":
        out = [Instance("q", (m, n), FamilySpec("q_graph", (m, n))) for m in r["m"] for n in r["n"] if m >= 2 and n >= 2]
    elif name == "friendship":
        out = [Instance("friendship", (n,), FamilySpec("friendship", (n,))) for n in r["n"] if n >= 2]
    elif name in ("spiro", "poly"):
        for q in r["q"]:
            for h in r["h"]:
                for k in r["k"]:
                    # single rings are outside the theorems
                    if q >= 3 and 1 <= h <= q // 2 and k >= 2:
                        out.append(Instance(name, (q, h, k), FamilySpec(name, (q, h, k))))
    elif name == "nanostar":
        out = [Instance("nanostar", (k,), FamilySpec("nanostar", (k,))) for k in r["k"] if k >= 1]
    else:
        raise SymbreakError(f"no instance generator for {name!r}")
    return out


_BASES = (("complete", 3, 5), ("cycle", 3, 6), ("path", 3, 6), ("star", 2, 5))
_ARITY = {"bouquet": (2, 4), "circuit": (3, 4), "chain": (2, 4), "link": (2, 4)}


def _base_order(kind: str, p: int) -> int:
    return p + 1 if kind == "star" else p


def random_composition(rng: random.Random, max_total: int = 14) -> FamilySpec:
    """A random bouquet/circuit/chain/link of base graphs with at least three vertices each."""
    while True:
        kind = rng.choice(sorted(_ARITY))
        lo, hi = _ARITY[kind]
        count = rng.randint(lo, hi)
        bases = []
        for _ in range(count):
            base, a, b = rng.choice(_BASES)
            bases.append((base, rng.randint(a, b)))
        orders = [_base_order(b, p) for b, p in bases]
        total = {
            "bouquet": sum(orders) - (count - 1),
            "chain": sum(orders) - (count - 1),
            "circuit": count + sum(o - 1 for o in orders),
            "link": sum(orders),
        }[kind]
        if total > max_total:
            continue
        parts = []
        for (base, p), order in zip(bases, orders):
            x = rng.randrange(order)
            y = None
            if kind == "chain":
                y = rng.choice([v for v in range(order) if v != x])
            elif kind == "link":
                y = rng.randrange(order)
            parts.append(Part(FamilySpec(base, (p,)), x, y))
        return FamilySpec(kind, (), tuple(parts))


def bound_instances(samples: int, seed: int) -> list[Instance]:
    rng = random.Random(seed)
    return [Instance("bounds", (i,), random_composition(rng)) for i in range(samples)]


# -- per-instance work ----------------------------------------------------------

def _oracle(g: Graph, edge: bool, auts, cfg: RunConfig):
    solve = distinguishing_index if edge else distinguishing_number
    return solve(g, auts, cfg.max_labels, time_limit=cfg.time_limit)


def _part_values(spec: FamilySpec, g: Graph, cfg: RunConfig):
    parts = [family(p.spec) for p in spec.parts]
    part_d = [distinguishing_number(p).value for p in parts]
    part_dp = [distinguishing_index(p).value for p in parts]
    extra = {}
    if spec.kind == "circuit":
        cyc = family(FamilySpec("cycle", (len(parts),)))
        extra = {"cycle_D": distinguishing_number(cyc).value, "cycle_Dprime": distinguishing_index(cyc).value}
    elif spec.kind == "chain":
        extra = {"contact_degrees": [g.degree(g.role(f"contact:{i}:x")) for i in range(1, len(parts))]}
    return formulas.composition_bound(spec.kind, part_d, part_dp, **extra)


def _formula(inst: Instance, g: Graph, cfg: RunConfig) -> formulas.FormulaResult:
    if inst.family == "bounds":
        return _part_values(inst.spec, g, cfg)
    if inst.family in ("q", "dutch", "friendship"):
        return formulas.formula_for(inst.family, inst.params)
    return formulas.chemical_constants(inst.family, inst.params)


def _agrees(kind: str, formula_value, oracle_value) -> bool:
    return oracle_value <= formula_value if kind == "upper_bound" else oracle_value == formula_value


def run_instance(inst: Instance, cfg: RunConfig) -> dict:
    start = time.perf_counter()
    rec = {
        "family": inst.family,
        "params": list(inst.params),
        "spec": inst.spec.key,
        "n_vertices": None,
        "n_edges": None,
        "kind": None,
        "formula_D": None,
        "formula_Dprime": None,
        "formula_aut_order": None,
        "oracle_D": None,
        "oracle_Dprime": None,
        "aut_order": None,
        "witness_D": None,
        "witness_Dprime": None,
        "kernel_nontrivial": None,
        "match": None,
        "status": "skipped",
        "reasons": [],
        "elapsed_ms": None,
    }
    reasons = rec["reasons"]
    try:
        g = family(inst.spec)
        rec["n_vertices"], rec["n_edges"] = g.n, g.m
        if g.n > cfg.max_vertices:
            reasons.append(f"{g.n} vertices > max_vertices {cfg.max_vertices}")
            return _finish(rec, start, cfg)
        form = _formula(inst, g, cfg)
        rec["kind"] = form.kind
        rec["formula_D"], rec["formula_Dprime"] = form.D, form.Dprime
        reasons.extend(form.notes)
        if inst.family == "dutch":
            rec["formula_aut_order"] = math.factorial(inst.params[0]) * 2 ** inst.params[0]

        order = aut_order(g)
        rec["aut_order"] = order
        auts = enumerate_automorphisms(g, cfg.aut_cap) if order <= min(cfg.aut_cap, ELEMENTS_LIMIT) else None
        ok = True
        if rec["formula_aut_order"] is not None and order != rec["formula_aut_order"]:
            ok = False
            reasons.append(f"aut order {order} != formula {rec['formula_aut_order']}")

        d = _oracle(g, False, auts, cfg)
        rec["oracle_D"], rec["witness_D"] = d.value, list(d.witness)
        if not (d.checked_r_below and validate_witness(g, d, auts)):
            ok = False
            reasons.append("vertex witness failed re-validation")
        if form.D is not None and not _agrees(form.kind, form.D, d.value):
            ok = False
            reasons.append(f"D: formula {form.D}, oracle {d.value}")

        if g.m > cfg.max_edges:
            reasons.append(f"Dprime not checked: {g.m} edges > max_edges {cfg.max_edges}")
        elif g.m:
            dp = _oracle(g, True, auts, cfg)
            rec["oracle_Dprime"], rec["witness_Dprime"] = dp.value, list(dp.witness)
            rec["kernel_nontrivial"] = dp.kernel_nontrivial
            if not (dp.checked_r_below and validate_witness(g, dp, auts)):
                ok = False
                reasons.append("edge witness failed re-validation")
            if form.Dprime is not None and not _agrees(form.kind, form.Dprime, dp.value):
                ok = False
                reasons.append(f"Dprime: formula {form.Dprime}, oracle {dp.value}")
        rec["match"] = ok
        rec["status"] = "match" if ok else "mismatch"
    except (SearchTimeout, RMaxExceeded) as exc:
        rec["match"], rec["status"] = None, "skipped"
        reasons.append(f"{type(exc).__name__}: {exc}")
    except SymbreakError as exc:
        rec["match"], rec["status"] = False, "mismatch"
        reasons.append(f"{type(exc).__name__}: {exc}")
    return _finish(rec, start, cfg)


def _finish(rec: dict, start: float, cfg: RunConfig) -> dict:
    if cfg.timing:
        rec["elapsed_ms"] = round((time.perf_counter() - start) * 1000, 3)
    return rec


def _run_pair(args):
    return run_instance(*args)


def run(instances: list[Instance], cfg: RunConfig) -> dict:
    """Run every instance and assemble the report, records sorted by (family, params)."""
    if not instances:
        raise SymbreakError("the selected ranges produce no instances")
    work = [(inst, cfg) for inst in instances]
    if cfg.jobs > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            records = list(pool.map(_run_pair, work))
    else:
        records = [_run_pair(w) for w in work]
    records.sort(key=lambda r: (r["family"], r["params"]))
    summary = {
        "total": len(records),
        "matched": sum(r["status"] == "match" for r in records),
        "mismatched": sum(r["status"] == "mismatch" for r in records),
        "skipped_too_large": sum(r["status"] == "skipped" for r in records),
    }
    config = {k: v for k, v in asdict(cfg).items() if k not in ("jobs", "timing")}
    return {"config": config, "records": records, "summary": summary}


# -- report rendering -------------------------------------------------------------

def to_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        return " ".join(map(str, value))
    return str(value)


def to_csv(report: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for rec in report["records"]:
        row = dict(rec, reasons="; ".join(rec["reasons"]))
        writer.writerow([_cell(row[c]) for c in CSV_COLUMNS])
    return buf.getvalue()


def to_table(report: dict) -> str:
    head = ("family", "params", "n", "m", "D f/o", "D' f/o", "|Aut|", "status")
    rows = [head]
    for r in report["records"]:
        rows.append((
            r["family"], ",".join(map(str, r["params"])), _cell(r["n_vertices"]), _cell(r["n_edges"]),
            f"{_cell(r['formula_D'])}/{_cell(r['oracle_D'])}",
            f"{_cell(r['formula_Dprime'])}/{_cell(r['oracle_Dprime'])}",
            _cell(r["aut_order"]), r["status"],
        ))
    widths = [max(len(row[i]) for row in rows) for i in range(len(head))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in rows]
    s = report["summary"]
    lines.append(
        f"total {s['total']}, matched {s['matched']}, mismatched {s['mismatched']}, "
        f"skipped {s['skipped_too_large']}"
    )
    for r in report["records"]:
        if r["status"] == "mismatch":
            lines.append(f"MISMATCH {r['family']} {r['params']}: {'; '.join(r['reasons'])}")
    return "\n".join(lines) + "\n"


RENDERERS = {"json": to_json, "csv": to_csv, "table": to_table}
