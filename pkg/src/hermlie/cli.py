"""Command-line surface: catalog verification, ad-hoc structure checks,
randomized searches, obstruction replays, lattice probes, and the
classification grid report.

Every report embeds a reproducibility manifest (command, arguments, seed,
artifact and catalog versions, wall time).  All output is deterministic for
a fixed seed and version except the wall-time line.

Exit codes: 0 success / all checks pass; 1 verification mismatch; 2 input,
IO, or schema error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, field, is_dataclass, asdict
from fractions import Fraction

from . import __version__
from .scalars import GaussianRational, Poly
from .forms import Form
from .herm import CHECKERS, HermitianMetric
from .catalog import (
    CATALOG_VERSION,
    CONDITIONS,
    ExampleStructure,
    get_entry,
    list_entries,
    negative_controls,
    verify_entry,
    verify_example,
)

_STATUS_SYMBOL = {
    "verified-example": "V",
    "obstruction-replayed": "O",
    "search-evidence": "e",
    "mismatch": "X",
    "out-of-scope": ".",
}


@dataclass
class RunManifest:
    """Reproducibility header embedded in every report."""

    command: str
    arguments: dict
    seed: int
    artifact_version: str = __version__
    catalog_version: str = CATALOG_VERSION
    wall_time_s: float = 0.0
    started: float = field(default_factory=time.perf_counter)

    def finish(self):
        self.wall_time_s = time.perf_counter() - self.started

    def header(self) -> str:
        args = " ".join(f"{k}={v}" for k, v in sorted(self.arguments.items())
                        if v is not None)
        return (f"# hermlie {self.command} | seed={self.seed} "
                f"| artifact={self.artifact_version} "
                f"| catalog={self.catalog_version}"
                + (f" | {args}" if args else ""))

    def footer(self) -> str:
        self.finish()
        return f"# wall_time_s={self.wall_time_s:.3f}"


def _jsonable(obj):
    if obj is None or isinstance(obj, (bool, int, float, str)):
        return obj
    if isinstance(obj, (Fraction, GaussianRational, Poly, Form, HermitianMetric)):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if is_dataclass(obj):
        return {k: _jsonable(v) for k, v in vars(obj).items()}
    return str(obj)


def _emit_json(payload: dict, manifest: RunManifest):
    payload = dict(payload)
    manifest.finish()
    payload["manifest"] = _jsonable(
        {k: v for k, v in vars(manifest).items() if k != "started"})
    print(json.dumps(payload, indent=2, sort_keys=True))


def _seed(args) -> int:
    if getattr(args, "seed", None) is not None:
        return args.seed
    try:
        return int(os.environ.get("HERMLIE_SEED", "0"))
    except ValueError:
        return 0


def _search_config(args):
    from .search import SearchConfig

    kw = {"seed": _seed(args)}
    if getattr(args, "restarts", None) is not None:
        kw["restarts"] = args.restarts
    if getattr(args, "tol", None) is not None:
        kw["tol"] = args.tol
    if getattr(args, "max_iters", None) is not None:
        kw["max_iters"] = args.max_iters
    return SearchConfig(**kw)


# ---------------------------------------------------------------------------
# verify-catalog
# ---------------------------------------------------------------------------

def _examples_from_file(path: str) -> list:
    from .liealg import parse_scalar

    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = fh.read()
        data = json.loads(raw)
    except (OSError, json.JSONDecodeError) as err:
        raise _SchemaError(f"cannot read catalog file: {err}")
    if not isinstance(data, dict) or "examples" not in data:
        raise _SchemaError("catalog file must be an object with an 'examples' list")
    examples = data["examples"]
    if not isinstance(examples, list) or not examples:
        raise _SchemaError("catalog file has no examples")
    out = []
    for i, row in enumerate(examples):
        try:
            params = {k: parse_scalar(str(v)) for k, v in (row.get("params") or {}).items()}
            j_images = ({int(k): v for k, v in row["j_images"].items()}
                        if row.get("j_images") else None)
            out.append(ExampleStructure(
                algebra=row["algebra"],
                conditions=tuple(row.get("conditions", ())),
                equations=row["equations"],
                params=params,
                constraint=row.get("constraint", ""),
                j_images=j_images,
                j_matrix=row.get("j_matrix"),
                omega=row.get("omega", ""),
                mu=row.get("mu"),
            ))
        except (KeyError, TypeError, ValueError) as err:
            raise _SchemaError(f"bad example row {i}: {err}")
    return out


class _SchemaError(Exception):
    pass


def _stock_examples() -> list:
    out = []
    for entry in list_entries():
        out.extend(entry.examples)
    return out


def cmd_verify_catalog(args, manifest: RunManifest) -> int:
    if args.dump:
        payload = {"examples": [
            {
                "algebra": ex.algebra,
                "conditions": list(ex.conditions),
                "equations": ex.equations,
                "params": {k: str(v) for k, v in ex.params.items()},
                "constraint": ex.constraint,
                "j_images": ({str(k): v for k, v in ex.j_images.items()}
                             if ex.j_images else None),
                "j_matrix": ex.j_matrix,
                "omega": ex.omega,
                "mu": ex.mu,
            }
            for ex in _stock_examples()
        ]}
        with open(args.dump, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)
        print(manifest.header())
        print(f"wrote {len(payload['examples'])} example rows to {args.dump}")
        return 0

    failures = []
    lines = []
    if args.file:
        examples = _examples_from_file(args.file)
        entry_reports = []
    else:
        examples = _stock_examples()
        entry_reports = [verify_entry(e) for e in list_entries(include_controls=True)]
        for rep in entry_reports:
            ok = rep.get("ok", False)
            lines.append(f"entry {rep['name']}: {'ok' if ok else 'FAIL ' + str(rep)}")
            if not ok:
                failures.append(f"entry {rep['name']}")
    for ex in examples:
        rep = verify_example(ex)
        ok = rep.get("ok", False)
        tag = f"example {ex.algebra} [{', '.join(ex.conditions) or 'complex only'}]"
        lines.append(f"{tag}: {'ok' if ok else 'FAIL ' + str(rep)}")
        if not ok:
            failures.append(tag)
    if args.json:
        _emit_json({"rows": lines, "failures": failures, "ok": not failures},
                   manifest)
    else:
        print(manifest.header())
        for line in lines:
            print(line)
        print(f"{len(lines)} rows, {len(failures)} failures")
        print(manifest.footer())
    return 1 if failures else 0


# ---------------------------------------------------------------------------
# check
# ---------------------------------------------------------------------------

def cmd_check(args, manifest: RunManifest) -> int:
    from .cpx import Complexification, is_integrable, nijenhuis, squares_to_minus_id
    from .herm import is_positive_real
    from .liealg import parse_scalar

    try:
        with open(args.file, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as err:
        print(f"error: cannot read input file: {err}", file=sys.stderr)
        return 2
    try:
        if "algebra" in data:
            entry = get_entry(data["algebra"])
            equations = data.get("equations") or entry.equations
        else:
            equations = data["equations"]
        params = {k: parse_scalar(str(v)) for k, v in (data.get("params") or {}).items()}
        ex = ExampleStructure(
            algebra=data.get("algebra", "input"),
            conditions=(),
            equations=equations,
            params=params,
            j_images=({int(k): v for k, v in data["j_images"].items()}
                      if data.get("j_images") else None),
            j_matrix=data.get("j_matrix"),
            omega=data.get("omega", ""),
            mu=data.get("mu"),
        )
        g = ex.algebra_instance()
        J = ex.j()
    except (KeyError, TypeError, ValueError) as err:
        print(f"error: bad input schema: {err}", file=sys.stderr)
        return 2

    report = {"algebra": ex.algebra, "J_squares_to_minus_id": squares_to_minus_id(J)}
    integrable = is_integrable(g, J)
    report["J_integrable"] = integrable
    if not integrable:
        nz = sum(1 for comps in nijenhuis(g, J).values()
                 for c in comps if GaussianRational.coerce(c).re
                 or GaussianRational.coerce(c).im)
        report["note"] = (f"J is not integrable ({nz} nonzero torsion components); "
                          "only J-level checks were run")
    elif ex.omega:
        cx = Complexification.from_real(g, J)
        om_real = ex.omega_form()
        positive = is_positive_real(cx, om_real)
        report["omega_positive"] = positive
        if positive:
            om = cx.to_alpha(om_real)
            report["conditions"] = {
                name: {"holds": bool(rep), "certificate": _jsonable(rep.certificate),
                       "notes": rep.notes}
                for name, rep in ((n, fn(cx, om)) for n, fn in CHECKERS.items())
            }
    else:
        report["note"] = "no metric supplied; only J-level checks were run"

    if args.json:
        _emit_json(report, manifest)
    else:
        print(manifest.header())
        print(f"algebra: {report['algebra']}")
        print(f"J^2 = -Id: {report['J_squares_to_minus_id']}")
        print(f"J integrable: {report['J_integrable']}")
        if "omega_positive" in report:
            print(f"omega positive: {report['omega_positive']}")
        for name, rep in report.get("conditions", {}).items():
            mark = "holds" if rep["holds"] else "fails"
            print(f"  {name:20s} {mark}")
        if report.get("note"):
            print(report["note"])
        print(manifest.footer())
    return 0


# ---------------------------------------------------------------------------
# search
# ---------------------------------------------------------------------------

def cmd_search(args, manifest: RunManifest) -> int:
    from .search import find_complex_structure, find_metric, entry_complexification

    try:
        entry = get_entry(args.algebra)
    except KeyError as err:
        print(f"error: {err.args[0]}", file=sys.stderr)
        return 2
    cfg = _search_config(args)
    if args.condition in (None, "complex"):
        outcome = find_complex_structure(entry.algebra_instance(), cfg)
        witness = outcome.witness or {}
        summary = {
            "target": "complex structure",
            "status": outcome.status,
            "note": outcome.note,
            "best_residuals": list(outcome.best_residuals),
            "exact_J": _jsonable(witness.get("J_exact")),
        }
    else:
        if args.condition not in CHECKERS:
            print(f"error: unknown condition {args.condition!r}; choose from "
                  f"{sorted(CHECKERS)}", file=sys.stderr)
            return 2
        cx = entry_complexification(entry)
        outcome = find_metric(cx.g, cx, args.condition, cfg)
        witness = outcome.witness or {}
        summary = {
            "target": args.condition,
            "status": outcome.status,
            "note": outcome.note,
            "best_residuals": list(outcome.best_residuals),
            "metric": _jsonable(witness.get("metric")),
        }
    summary["algebra"] = entry.name
    if args.json:
        _emit_json(summary, manifest)
    else:
        print(manifest.header())
        print(f"algebra: {entry.name}")
        print(f"target: {summary['target']}")
        print(f"status: {summary['status']} ({summary['note']})")
        print(f"best residual: {min(outcome.best_residuals):.3e} "
              f"over {len(outcome.best_residuals)} restarts")
        if summary.get("exact_J"):
            print("exact witness J:")
            for row in summary["exact_J"]:
                print("  [" + ", ".join(str(v) for v in row) + "]")
        if summary.get("metric"):
            print(f"exact witness metric: {summary['metric']}")
        print(manifest.footer())
    return 0


# ---------------------------------------------------------------------------
# obstruction
# ---------------------------------------------------------------------------

def cmd_obstruction(args, manifest: RunManifest) -> int:
    from .obstructions import obstruction_table, replay_obstruction_row

    rows = obstruction_table(algebra=args.algebra, condition=args.condition)
    if not rows:
        print(manifest.header())
        print(f"no registered obstruction rows for "
              f"({args.algebra}, {args.condition})")
        return 1
    reports = []
    ok = True
    for row in rows:
        rep = replay_obstruction_row(row)
        reports.append(rep)
        ok = ok and rep["ok"]
    if args.json:
        _emit_json({"rows": _jsonable(reports), "ok": ok}, manifest)
    else:
        print(manifest.header())
        for row, rep in zip(rows, reports):
            print(f"{row.algebra} [{row.condition}] branch={row.branch or '-'} "
                  f"conclusion={row.conclusion}: "
                  f"{'replayed exactly' if rep['ok'] else 'FAILED'} "
                  f"({rep['runs']} runs, "
                  f"{len(rep['steps']) if isinstance(rep['steps'], (list, tuple)) else rep['steps']} steps)")
        print(manifest.footer())
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# lattice-probe
# ---------------------------------------------------------------------------

def cmd_lattice_probe(args, manifest: RunManifest) -> int:
    from .lattice import BUILTIN_PROBES, builtin_probe, run_probe

    if args.X and args.t:
        try:
            g = get_entry(args.algebra).algebra_instance()
        except KeyError as err:
            print(f"error: {err.args[0]}", file=sys.stderr)
            return 2
        report = run_probe(g, args.X, args.t, tolerance=args.tol,
                           name=args.algebra)
    elif args.algebra in BUILTIN_PROBES:
        report = builtin_probe(args.algebra)
    else:
        print("error: no built-in probe for this algebra; supply --X and --t",
              file=sys.stderr)
        return 2
    if args.json:
        _emit_json(_jsonable(report), manifest)
    else:
        print(manifest.header())
        print(f"algebra: {report['algebra']}")
        print(f"status: {report['status']}")
        if report.get("note"):
            print(f"note: {report['note']}")
        if report.get("rounded"):
            print("integer matrix:")
            for row in report["rounded"]:
                print("  " + " ".join(f"{v:3d}" for v in row))
        elif report.get("matrix"):
            print("matrix:")
            for row in report["matrix"]:
                print("  " + " ".join(f"{v:9.5f}" for v in row))
        print(manifest.footer())
    return 0


# ---------------------------------------------------------------------------
# report-table
# ---------------------------------------------------------------------------

def cmd_report_table(args, manifest: RunManifest) -> int:
    from .search import classification_sweep, SearchConfig

    cfg = SearchConfig(
        seed=_seed(args),
        restarts=args.restarts if args.restarts is not None else 8,
        max_iters=args.max_iters if args.max_iters is not None else 40,
    )
    result = classification_sweep(cfg=cfg)
    conds = result["conditions"]

    if args.json:
        _emit_json(_jsonable(result), manifest)
        return 0 if result["ok"] else 1
    if args.csv:
        print("algebra," + ",".join(conds))
        for row in result["rows"]:
            print(row["algebra"] + "," +
                  ",".join(row["cells"][c]["status"] for c in conds))
        return 0 if result["ok"] else 1

    print(manifest.header())
    short = {"kahler": "Kah", "skt": "SKT", "balanced": "Bal", "lck": "LCK",
             "lcskt": "LCSKT", "lcb": "LCB", "first_gauduchon": "1stG",
             "strongly_gauduchon": "StrG"}
    width = max(len(r["algebra"]) for r in result["rows"]) + 1
    print(" " * width + " ".join(f"{short.get(c, c):>5s}" for c in conds))
    for row in result["rows"]:
        cells = " ".join(
            f"{_STATUS_SYMBOL.get(row['cells'][c]['status'], '?'):>5s}"
            for c in conds)
        print(f"{row['algebra']:<{width}s}{cells}")
    print("legend: V verified example (exact), O obstruction replayed (exact), "
          "e search exhausted (evidence, not proof), X mismatch")
    print("excluded algebras (no complex structure):")
    for ctl in result["controls"]:
        print(f"  {ctl['algebra']}: {_STATUS_SYMBOL[ctl['status']]} {ctl['detail']}")
    if result["mismatches"]:
        print("DIFF against recorded claims:")
        for m in result["mismatches"]:
            print(f"  {m}")
    else:
        print("diff against recorded claims: empty")
    print(manifest.footer())
    return 0 if result["ok"] else 1


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="hermlie",
        description="Exact-arithmetic checks, searches, and reports for "
                    "special Hermitian structures on six-dimensional "
                    "strongly unimodular almost nilpotent Lie algebras.",
    )
    p.add_argument("--seed", type=int, default=None,
                   help="random seed (default: HERMLIE_SEED or 0)")
    p.add_argument("--json", action="store_true", help="emit JSON")
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("verify-catalog", help="verify the golden catalog")
    q.add_argument("file", nargs="?", default=None,
                   help="optional JSON example file overriding the built-in catalog")
    q.add_argument("--dump", default=None,
                   help="write the built-in example rows to a JSON file and exit")

    q = sub.add_parser("check", help="check a structure supplied in a JSON file")
    q.add_argument("file")

    q = sub.add_parser("search", help="randomized search on one algebra")
    q.add_argument("algebra")
    q.add_argument("--condition", default=None,
                   help="metric condition; omit for the complex-structure search")
    q.add_argument("--restarts", type=int, default=None)
    q.add_argument("--tol", type=float, default=None)
    q.add_argument("--max-iters", type=int, default=None)

    q = sub.add_parser("obstruction", help="replay exact obstruction rows")
    q.add_argument("algebra")
    q.add_argument("condition")

    q = sub.add_parser("lattice-probe", help="integrality probe for exp(t ad_X)")
    q.add_argument("algebra")
    q.add_argument("--X", default=None)
    q.add_argument("--t", default=None)
    q.add_argument("--tol", type=float, default=1e-9)

    q = sub.add_parser("report-table", help="classification grid report")
    q.add_argument("--csv", action="store_true")
    q.add_argument("--restarts", type=int, default=None)
    q.add_argument("--max-iters", type=int, default=None)
    return p


_DISPATCH = {
    "verify-catalog": cmd_verify_catalog,
    "check": cmd_check,
    "search": cmd_search,
    "obstruction": cmd_obstruction,
    "lattice-probe": cmd_lattice_probe,
    "report-table": cmd_report_table,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    manifest = RunManifest(
        command=args.command,
        arguments={k: v for k, v in vars(args).items()
                   if k not in ("command", "json") and v is not None},
        seed=_seed(args),
    )
    try:
        return _DISPATCH[args.command](args, manifest)
    except _SchemaError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
