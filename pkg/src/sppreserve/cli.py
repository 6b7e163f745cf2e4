"""Command-line surface: generate, reweight, check, audit, optimize, report.

Exit codes: 0 success / property holds, 1 checked property fails (witnesses
go to the JSON report), 2 usage, IO, or budget errors.  All numeric output is
exact p/q; decimal input is rejected so the exactness contract stays visible.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path as FsPath

from . import __version__
from .audit import audit_directed_chain, audit_grid, audit_undirected_chain
from .checks import StretchParams, check_alpha, check_exact, check_two_sided
from .constructions import (
    fig1_fixture,
    gen_directed_chain,
    gen_grid,
    gen_path_shortcut,
    gen_undirected_chain,
)
from .core import BudgetExceededError, aspect_ratio, as_fraction, format_fraction
from .fileio import ParseError, read_graph, read_paths, read_weights, write_graph, write_paths, write_weights
from .optimize import grid_lower_bound, min_aspect_ratio
from .reweight import CycleError, reweight_dag

PASS, FAIL, ERROR = 0, 1, 2


def rational(text: str) -> Fraction:
    try:
        return as_fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"expected exact rational p/q, got {text!r}: {exc}")


@dataclass(frozen=True)
class RunManifest:
    """Reproducibility record: re-running ``command`` on inputs with these
    digests reproduces outputs with those digests, byte for byte (only the
    duration varies)."""

    command: list[str]
    params: dict
    inputs: dict[str, str]
    outputs: dict[str, str]
    duration_s: float
    version: str

    def to_json(self) -> dict:
        return {
            "command": self.command,
            "params": self.params,
            "inputs": self.inputs,
            "outputs": self.outputs,
            "duration_s": self.duration_s,
            "version": self.version,
        }


@dataclass
class RunRecorder:
    """Tracks files touched by one invocation for the reproducibility manifest."""

    argv: list[str]
    started: float = field(default_factory=time.monotonic)
    inputs: dict[str, str] = field(default_factory=dict)
    outputs: dict[str, str] = field(default_factory=dict)

    def digest(self, path: str) -> str:
        return hashlib.sha256(FsPath(path).read_bytes()).hexdigest()

    def note_input(self, path: str) -> None:
        self.inputs[str(path)] = self.digest(path)

    def note_output(self, path: str) -> None:
        self.outputs[str(path)] = self.digest(path)

    def manifest(self, params: dict) -> RunManifest:
        return RunManifest(
            command=self.argv,
            params=params,
            inputs=self.inputs,
            outputs=self.outputs,
            duration_s=time.monotonic() - self.started,
            version=__version__,
        )


def _write_json(path: str, payload: dict, rec: RunRecorder | None = None) -> None:
    FsPath(path).write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    if rec is not None:
        rec.note_output(path)


def _maybe_manifest(args, rec: RunRecorder) -> None:
    if getattr(args, "manifest", None):
        params = {
            k: str(v)
            for k, v in vars(args).items()
            if k not in ("func", "manifest") and v is not None
        }
        _write_json(args.manifest, rec.manifest(params).to_json())


def _require(condition: bool, message: str) -> bool:
    if not condition:
        print(message, file=sys.stderr)
    return condition


def cmd_gen(args, rec: RunRecorder) -> int:
    family = args.family
    paths = None
    weights = None
    if family == "path-shortcut":
        if not _require(args.n is not None, "gen path-shortcut: --n required"):
            return ERROR
        graph, paths = gen_path_shortcut(args.n)
    elif family == "dir-chain":
        if not _require(args.k is not None, "gen dir-chain: --k required"):
            return ERROR
        graph, paths = gen_directed_chain(args.k, mode=args.mode, alpha=args.alpha, delta=args.delta)
    elif family == "undir-chain":
        if not _require(args.k is not None, "gen undir-chain: --k required"):
            return ERROR
        graph, paths = gen_undirected_chain(args.k, mode=args.mode)
    elif family == "grid":
        if not _require(args.L is not None and args.alpha_g is not None,
                        "gen grid: --L and --alpha-g required"):
            return ERROR
        graph, paths = gen_grid(args.L, args.alpha_g)
    elif family == "fig1":
        graph, weights = fig1_fixture()
    else:  # unreachable, argparse restricts choices
        return ERROR
    write_graph(graph, args.out)
    rec.note_output(args.out)
    if args.paths:
        if paths is None:
            print("gen: this family has no designated path system", file=sys.stderr)
            return ERROR
        write_paths(paths, args.paths)
        rec.note_output(args.paths)
    if args.weights:
        if weights is None:
            print("gen: this family has no companion weight map", file=sys.stderr)
            return ERROR
        write_weights(graph, weights, args.weights)
        rec.note_output(args.weights)
    print(f"generated {family}: n={graph.n} m={graph.m} aspect={format_fraction(aspect_ratio(graph))}")
    _maybe_manifest(args, rec)
    return PASS


def cmd_reweight(args, rec: RunRecorder) -> int:
    graph = read_graph(args.input)
    rec.note_input(args.input)
    wmap = reweight_dag(graph)
    write_weights(graph, wmap, args.out)
    rec.note_output(args.out)
    print(f"aspect ratio {format_fraction(aspect_ratio(graph, wmap))}")
    _maybe_manifest(args, rec)
    return PASS


def cmd_check(args, rec: RunRecorder) -> int:
    graph = read_graph(args.g)
    rec.note_input(args.g)
    wmap = read_weights(args.h, graph)
    rec.note_input(args.h)
    if args.kind == "exact":
        report = check_exact(graph, wmap, model=args.model)
    elif args.kind == "stretch":
        if args.alpha is None:
            print("check stretch: --alpha required", file=sys.stderr)
            return ERROR
        report = check_alpha(graph, wmap, args.alpha)
    else:
        if args.alpha_h is None or args.alpha_g is None:
            print("check two-sided: --alpha-h and --alpha-g required", file=sys.stderr)
            return ERROR
        report = check_two_sided(
            graph, wmap, StretchParams(args.alpha_h, args.alpha_g), budget=args.budget
        )
    print(f"{report.check}: {report.verdict} ({report.pairs_checked} pairs)")
    for witness in report.witnesses[:5]:
        print(
            f"  witness ({witness.s},{witness.t}): path "
            f"{'-'.join(map(str, witness.path))} w_g={format_fraction(witness.w_g)} "
            f"w_h={format_fraction(witness.w_h)} d_g={format_fraction(witness.d_g)} "
            f"d_h={format_fraction(witness.d_h)}"
        )
    if args.json:
        _write_json(args.json, report.to_json(), rec)
    _maybe_manifest(args, rec)
    return PASS if report.passed else FAIL


def cmd_audit(args, rec: RunRecorder) -> int:
    if args.family == "dir-chain":
        if args.k is None:
            print("audit dir-chain: --k required", file=sys.stderr)
            return ERROR
        report = audit_directed_chain(args.k, mode=args.mode, alpha=args.alpha, delta=args.delta)
    elif args.family == "undir-chain":
        if args.k is None:
            print("audit undir-chain: --k required", file=sys.stderr)
            return ERROR
        report = audit_undirected_chain(args.k, mode=args.mode, alpha=args.alpha)
    else:
        if args.L is None or args.alpha is None:
            print("audit grid: --L and --alpha required", file=sys.stderr)
            return ERROR
        report = audit_grid(args.L, args.alpha)
    print(f"audit {report.construction}: {report.verdict}")
    for check in report.checks:
        margin = "-" if check.worst_margin is None else format_fraction(check.worst_margin)
        print(
            f"  {check.tag}: {'pass' if check.passed else 'fail'} "
            f"({check.pairs_checked} pairs, worst margin {margin})"
        )
        for note in check.notes[:5]:
            print(f"    {note}")
    if args.json:
        _write_json(args.json, report.to_json(), rec)
    _maybe_manifest(args, rec)
    return PASS if report.passed else FAIL


def cmd_optimize(args, rec: RunRecorder) -> int:
    if args.kind == "min-aspect":
        if not _require(args.g is not None, "optimize min-aspect: --g required"):
            return ERROR
        graph = read_graph(args.g)
        rec.note_input(args.g)
        paths = None
        if args.paths:
            paths = read_paths(args.paths, graph)
            rec.note_input(args.paths)
        optimum, wmap, cert = min_aspect_ratio(
            graph, paths, args.eps, ties=args.ties, budget=args.budget
        )
        print(f"optimum {format_fraction(optimum)}")
        if args.out:
            write_weights(graph, wmap, args.out)
            rec.note_output(args.out)
        payload = cert.to_json()
        payload["meta"] = {
            "kind": "min-aspect",
            "eps": format_fraction(as_fraction(args.eps)),
            "param": args.param,
            "graph": str(args.g),
        }
    else:
        if not _require(
            args.L is not None and args.alpha_g is not None and args.alpha_h is not None,
            "optimize grid-lb: --L, --alpha-g, --alpha-h required",
        ):
            return ERROR
        optimum = grid_lower_bound(args.L, args.alpha_g, args.alpha_h, args.eps, budget=args.budget)
        print(f"optimum {format_fraction(optimum)}")
        payload = {
            "status": "optimal",
            "optimum": format_fraction(optimum),
            "assignment": {},
            "meta": {
                "kind": "grid-lb",
                "eps": format_fraction(as_fraction(args.eps)),
                "param": args.param if args.param is not None else args.L,
                "alpha_g": format_fraction(as_fraction(args.alpha_g)),
                "alpha_h": format_fraction(as_fraction(args.alpha_h)),
            },
        }
    if args.json:
        _write_json(args.json, payload, rec)
    _maybe_manifest(args, rec)
    return PASS


def cmd_report(args, rec: RunRecorder) -> int:
    runs = []
    for path in args.certs:
        data = json.loads(FsPath(path).read_text(encoding="utf-8"))
        rec.note_input(path)
        meta = data.get("meta", {})
        runs.append((meta.get("kind"), meta.get("param"), meta.get("eps"), data.get("optimum"), path))
    kinds = {kind for kind, *_ in runs}
    if len(kinds) != 1 or None in kinds:
        print("report: runs are of mixed or unknown kinds", file=sys.stderr)
        return ERROR
    if any(optimum is None for *_, optimum, _ in runs):
        print("report: a run has no optimum recorded", file=sys.stderr)
        return ERROR
    if len(runs) > 1 and any(param is None for _, param, *_ in runs):
        print("report: sweep runs need a --param value", file=sys.stderr)
        return ERROR
    epses = {eps for _, _, eps, _, _ in runs}
    if len(epses) != 1:
        print("report: runs use different eps values", file=sys.stderr)
        return ERROR
    runs.sort(key=lambda r: (r[1] is not None, r[1]))
    print(f"kind: {runs[0][0]}   eps: {runs[0][2]}")
    print("param\toptimum\tgrowth")
    rows = []
    prev: Fraction | None = None
    for _, param, _, optimum, _ in runs:
        value = Fraction(optimum)
        growth = "-" if prev is None else format_fraction(value / prev)
        print(f"{param}\t{optimum}\t{growth}")
        rows.append({"param": param, "optimum": optimum, "growth": None if prev is None else growth})
        prev = value
    if args.json:
        _write_json(args.json, {"kind": runs[0][0], "rows": rows}, rec)
    _maybe_manifest(args, rec)
    return PASS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sppreserve",
        description="Shortest-paths preserving reweighting toolkit (exact rational arithmetic).",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a construction and its designated paths")
    p.add_argument("--family", required=True,
                   choices=["path-shortcut", "dir-chain", "undir-chain", "grid", "fig1"])
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--L", type=int)
    p.add_argument("--mode", choices=["exact", "approx"], default="exact")
    p.add_argument("--alpha", type=rational)
    p.add_argument("--delta", type=rational)
    p.add_argument("--alpha-g", dest="alpha_g", type=rational)
    p.add_argument("--out", required=True)
    p.add_argument("--paths")
    p.add_argument("--weights")
    p.add_argument("--manifest")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("reweight", help="reweight a DAG to aspect ratio at most n+1")
    p.add_argument("kind", choices=["dag"])
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--manifest")
    p.set_defaults(func=cmd_reweight)

    p = sub.add_parser("check", help="check a weight map against a graph")
    p.add_argument("kind", choices=["exact", "stretch", "two-sided"])
    p.add_argument("--g", required=True)
    p.add_argument("--h", required=True)
    p.add_argument("--alpha", type=rational)
    p.add_argument("--alpha-h", dest="alpha_h", type=rational)
    p.add_argument("--alpha-g", dest="alpha_g", type=rational)
    p.add_argument("--model", choices=["one", "all", "both"], default="one")
    p.add_argument("--budget", type=int, default=10**6)
    p.add_argument("--json")
    p.add_argument("--manifest")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("audit", help="re-prove a construction's claims at its scale")
    p.add_argument("--family", required=True, choices=["dir-chain", "undir-chain", "grid"])
    p.add_argument("--k", type=int)
    p.add_argument("--L", type=int)
    p.add_argument("--mode", choices=["exact", "approx"], default="exact")
    p.add_argument("--alpha", type=rational)
    p.add_argument("--delta", type=rational)
    p.add_argument("--json")
    p.add_argument("--manifest")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("optimize", help="exact LP optimization over preserving reweightings")
    p.add_argument("kind", choices=["min-aspect", "grid-lb"])
    p.add_argument("--g")
    p.add_argument("--paths")
    p.add_argument("--eps", type=rational, required=True)
    p.add_argument("--ties", choices=["one", "all"], default="one")
    p.add_argument("--L", type=int)
    p.add_argument("--alpha-g", dest="alpha_g", type=rational)
    p.add_argument("--alpha-h", dest="alpha_h", type=rational)
    p.add_argument("--budget", type=int, default=10**6)
    p.add_argument("--param", type=int)
    p.add_argument("--out")
    p.add_argument("--json")
    p.add_argument("--manifest")
    p.set_defaults(func=cmd_optimize)

    p = sub.add_parser("report", help="tabulate a sweep of optimize runs")
    p.add_argument("certs", nargs="+")
    p.add_argument("--json")
    p.add_argument("--manifest")
    p.set_defaults(func=cmd_report)
    return parser


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    rec = RunRecorder(argv=argv)
    try:
        return args.func(args, rec)
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return ERROR
    except (ParseError, CycleError) as exc:
        print(str(exc), file=sys.stderr)
        return ERROR
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ERROR


def entry() -> None:
    sys.exit(main())
