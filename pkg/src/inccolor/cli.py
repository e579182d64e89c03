"""Command-line entry point: ``inccolor {mad,color,verify,exact,audit,gen}``.

Exit codes: 0 success, 1 verification rejected, 2 hypothesis violated,
3 parse or usage error, 4 search inconclusive, 5 internal contradiction
(a JSON artifact is written next to the output).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Sequence, TextIO

from .catalog import (PROFILES, CatalogStats, apply_discharge, assert_reducible,
                      color_catalog, get_profile)
from .degenerate import DegenerateStats, color_degenerate
from .errors import (GenerationError, GraphParseError, HypothesisViolation, InstanceTooLarge,
                     InternalContradiction, MalformedColoringError, SearchInconclusive)
from .exact import DEFAULT_NODE_LIMIT, chi_incidence, feasible
from .generators import generate
from .generic import Budget, color_generic
from .graph import Graph, degeneracy_order, parse_dimacs, parse_edge_list
from .incidence import IncidenceColoring, dumps, from_document, verify
from .mad import mad, satisfies_mad_bound

OK, REJECTED, HYPOTHESIS, USAGE, INCONCLUSIVE, CONTRADICTION = range(6)

STRATEGIES = ("degenerate", "generic", *(p.lower() for p in PROFILES))


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit 2, which means something else here
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: {message}")


@dataclass
class RunReport:
    command: list[str]
    input_digest: str | None = None
    budget: dict | None = None
    summary: dict = field(default_factory=dict)
    seconds: float = 0.0
    exit_code: int = 0

    def dumps(self) -> str:
        return json.dumps(asdict(self), indent=1) + "\n"


def digest(g: Graph) -> str:
    """SHA-256 of the canonical edge list, so formatting differences do not matter."""
    return hashlib.sha256(f"n {g.n}\n{g.to_edge_list()}".encode()).hexdigest()


def parse_rational(text: str) -> Fraction:
    """``"p/q"`` or an integer string; decimals are refused on purpose."""
    s = text.strip()
    num, _, den = s.partition("/")
    try:
        value = Fraction(int(num), int(den)) if den else Fraction(int(num))
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"expected a rational 'p/q' or an integer, got {text!r}") from None
    return value


def _read_text(path: str | None, stdin: TextIO) -> str:
    if path is None or path == "-":
        return stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def read_graph(path: str | None, stdin: TextIO) -> Graph:
    text = _read_text(path, stdin)
    is_dimacs = (path or "").endswith(".col") or any(
        line.split()[:1] == ["p"] for line in text.splitlines())
    return parse_dimacs(text) if is_dimacs else parse_edge_list(text)


def _write(path: str | None, text: str, stdout: TextIO) -> None:
    if path is None or path == "-":
        stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


# ---------------------------------------------------------------------------
# coloring


def run_strategy(g: Graph, strategy: str, k: int | None, alpha: Fraction,
                 trace: list[str] | None) -> tuple[IncidenceColoring, dict]:
    if strategy == "degenerate":
        if k is None:
            k = max(1, degeneracy_order(g).degeneracy)
        stats = DegenerateStats()
        c = color_degenerate(g, k, stats)
        if trace is not None:
            trace.append(f"insertions={stats.insertions} backtracks={stats.backtracks}")
        return c, {"strategy": strategy, "k": k}
    if strategy == "generic":
        k = 4 if k is None else k
        b = Budget.for_graph(g, k, alpha)
        c = color_generic(g, k, alpha, trace=trace)
        return c, {"strategy": strategy, "k": k, "alpha": str(alpha), "d": b.d}
    profile = get_profile(strategy.upper())
    stats = CatalogStats()
    c = color_catalog(g, profile, stats)
    if trace is not None:
        trace.append(f"patterns={dict(sorted(stats.patterns.items()))}")
        trace.append(f"tiers={dict(sorted(stats.tiers.items()))}")
    return c, {"strategy": strategy, "k": profile.working_k(g.max_degree)}


def color_one(g: Graph, strategy: str, k: int | None, alpha: Fraction,
              trace: list[str] | None) -> tuple[IncidenceColoring, dict]:
    c, info = run_strategy(g, strategy, k, alpha, trace)
    verdict = verify(g, c)
    info.update(num_colors=c.num_colors, weak_cap=c.weak_cap, verified=bool(verdict))
    if not verdict:
        raise InternalContradiction(f"self-check rejected the coloring: {verdict.describe()}",
                                    {"edges": [list(e) for e in g.edges],
                                     "verdict": verdict.describe()})
    return c, info


def _batch_worker(job: tuple[str, str, str, int | None, str]) -> tuple[str, str, int, str]:
    path, out_dir, strategy, k, alpha = job
    d = "-"
    try:
        g = read_graph(path, sys.stdin)
        d = digest(g)
        c, _ = color_one(g, strategy, k, Fraction(alpha), None)
        with open(os.path.join(out_dir, f"{d}.json"), "w") as fh:
            fh.write(dumps(g, c))
        return path, d, OK, f"{c.num_colors} colors, weak cap {c.weak_cap}"
    except Exception as exc:  # noqa: BLE001 - mapped to an exit code per file
        code = exit_code_for(exc)
        if code == CONTRADICTION:
            _write_artifact(os.path.join(out_dir, f"{d}.artifact.json"), exc)
        return path, d, code, str(exc)


def exit_code_for(exc: BaseException) -> int:
    if isinstance(exc, HypothesisViolation):
        return HYPOTHESIS
    if isinstance(exc, InternalContradiction):
        return CONTRADICTION
    if isinstance(exc, SearchInconclusive):
        return INCONCLUSIVE
    if isinstance(exc, (UsageError, GraphParseError, MalformedColoringError, GenerationError,
                        InstanceTooLarge, OSError, ValueError)):
        return USAGE
    raise exc


def _write_artifact(path: str, exc: BaseException) -> None:
    doc = {"error": type(exc).__name__, "message": str(exc),
           "artifact": getattr(exc, "artifact", {})}
    with open(path, "w") as fh:
        json.dump(doc, fh, indent=1, sort_keys=True)
        fh.write("\n")


# ---------------------------------------------------------------------------
# subcommands


class Context:
    def __init__(self, args: argparse.Namespace, stdin: TextIO, stdout: TextIO, stderr: TextIO,
                 report: RunReport) -> None:
        self.args, self.stdin, self.stdout, self.stderr = args, stdin, stdout, stderr
        self.report = report

    def graph(self) -> Graph:
        g = read_graph(self.args.input, self.stdin)
        self.report.input_digest = digest(g)
        return g

    def say(self, text: str) -> None:
        self.stdout.write(text + "\n")

    def note(self, text: str) -> None:
        self.stderr.write(text + "\n")


def cmd_mad(ctx: Context) -> int:
    g = ctx.graph()
    res = mad(g)
    ctx.say(f"{res.value.numerator}/{res.value.denominator}")
    ctx.say(" ".join(map(str, res.witness)))
    ctx.report.summary = {"mad": str(res.value), "witness": list(res.witness)}
    return OK


def cmd_color(ctx: Context) -> int:
    a = ctx.args
    alpha = parse_rational(a.alpha)
    if a.batch:
        return _color_batch(ctx, alpha)
    g = ctx.graph()
    trace: list[str] | None = [] if a.trace else None
    try:
        c, info = color_one(g, a.strategy, a.k, alpha, trace)
    finally:
        for line in trace or ():
            ctx.note(line)
    ctx.report.budget = info
    ctx.note(f"budget: {c.num_colors} colors, weak cap {c.weak_cap}")
    _write(a.out, dumps(g, c), ctx.stdout)
    ctx.report.summary = {"colors_used": len(c.colors_used()), "verified": True}
    return OK


def _color_batch(ctx: Context, alpha: Fraction) -> int:
    a = ctx.args
    if not a.out or a.out == "-":
        raise UsageError("--batch needs --out DIR")
    os.makedirs(a.out, exist_ok=True)
    files = sorted(os.path.join(a.batch, f) for f in os.listdir(a.batch)
                   if os.path.isfile(os.path.join(a.batch, f)))
    jobs = [(f, a.out, a.strategy, a.k, str(alpha)) for f in files]
    with ProcessPoolExecutor(max_workers=a.jobs) as pool:
        results = list(pool.map(_batch_worker, jobs))
    worst = OK
    for path, d, code, msg in results:
        ctx.say(f"{os.path.basename(path)}\t{d}\t{code}\t{msg}")
        worst = max(worst, code)
    ctx.report.summary = {"files": len(results),
                          "failed": sum(1 for r in results if r[2] != OK)}
    return worst


def cmd_verify(ctx: Context) -> int:
    text = _read_text(ctx.args.input, ctx.stdin)
    g, c = from_document(text)
    ctx.report.input_digest = digest(g)
    verdict = verify(g, c, ctx.args.ell)
    ctx.report.budget = {"num_colors": c.num_colors,
                         "ell": c.weak_cap if ctx.args.ell is None else ctx.args.ell}
    ctx.report.summary = {"ok": bool(verdict), "reason": verdict.describe()}
    if verdict:
        ctx.say(f"ok: {c.num_colors} colors, largest weak palette {verdict.max_weak}")
        return OK
    ctx.say(f"rejected: {verdict.describe()}")
    return REJECTED


def cmd_exact(ctx: Context) -> int:
    a = ctx.args
    g = ctx.graph()
    if a.k is None:
        res = chi_incidence(g, a.node_limit)
        ctx.say(f"chi_i {res.chi_i}")
        ctx.say(f"nodes {res.nodes_explored}")
        ctx.stdout.write(dumps(g, res.witness))
        ctx.report.summary = {"chi_i": res.chi_i, "nodes": res.nodes_explored}
        return OK
    res = feasible(g, a.k, a.ell or 0, a.node_limit)
    ctx.report.budget = {"num_colors": a.k, "ell": a.ell or 0}
    ctx.say(f"feasible {'true' if res else 'false'}")
    ctx.say(f"nodes {res.nodes_explored}")
    if res:
        ctx.stdout.write(dumps(g, res.witness))
    ctx.report.summary = {"feasible": bool(res), "nodes": res.nodes_explored}
    return OK


def cmd_audit(ctx: Context) -> int:
    a = ctx.args
    profile = get_profile(a.profile)
    g = ctx.graph()
    ctx.report.budget = {"profile": profile.id, "mad_bound": str(profile.mad_bound)}
    if a.discharge:
        rep = apply_discharge(g, profile)
        expected = sum((Fraction(d) - profile.discharge.target for d in g.degrees()), Fraction(0))
        ctx.say(f"initial_sum {rep.initial_sum}")
        ctx.say(f"final_sum {rep.final_sum}")
        ctx.say(f"negative {len(rep.negative)}")
        ctx.report.summary = {"initial_sum": str(rep.initial_sum), "final_sum": str(rep.final_sum),
                              "negative": rep.negative}
        if rep.final_sum != expected or rep.initial_sum != expected:
            raise InternalContradiction("discharging did not conserve total weight",
                                        {"profile": profile.id,
                                         "edges": [list(e) for e in g.edges]})
        return OK
    chk = satisfies_mad_bound(g, profile.mad_bound) if g.m else None
    if chk is not None and not chk:
        raise HypothesisViolation(f"mad(G) = {chk.value} is not below {profile.mad_bound}",
                                  chk.witness)
    verdict = assert_reducible(g, profile, check_mad=False)
    if not verdict:
        raise InternalContradiction(f"no {profile.id} configuration found", verdict.artifact)
    if verdict.match is None:
        ctx.say("reducible: edgeless graph")
    else:
        m = verdict.match
        ctx.say(f"reducible: {m.pattern.name} at {m.center} with {list(m.bound_to)}")
        ctx.report.summary = {"pattern": m.pattern.name, "center": m.center,
                              "neighbors": list(m.bound_to)}
    return OK


def cmd_gen(ctx: Context) -> int:
    g = generate(ctx.args.kind, ctx.args.seed)
    ctx.report.input_digest = digest(g)
    ctx.report.summary = {"n": g.n, "m": g.m, "max_degree": g.max_degree}
    text = f"# {ctx.args.kind} seed={ctx.args.seed} n={g.n}\n{g.to_edge_list()}"
    _write(ctx.args.out, text, ctx.stdout)
    return OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="inccolor", description="Incidence colorings of sparse graphs.")
    p.add_argument("--report", help="write a JSON run report here")
    common = _Parser(add_help=False)
    common.add_argument("--report", default=argparse.SUPPRESS, help="write a JSON run report here")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def graph_in(sp):
        sp.add_argument("--in", dest="input", help="edge list or DIMACS .col file (default stdin)")

    sp = sub.add_parser("mad", parents=[common], help="exact maximum average degree")
    graph_in(sp)

    sp = sub.add_parser("color", parents=[common], help="color a graph with one of the constructive strategies")
    graph_in(sp)
    sp.add_argument("--strategy", required=True, choices=STRATEGIES)
    sp.add_argument("--k", type=int)
    sp.add_argument("--alpha", default="0", help="rational p/q (generic strategy)")
    sp.add_argument("--out", help="output file, or directory with --batch")
    sp.add_argument("--trace", action="store_true", help="log peel and repair details to stderr")
    sp.add_argument("--batch", help="color every file in this directory")
    sp.add_argument("--jobs", type=int, default=None)

    sp = sub.add_parser("verify", parents=[common], help="check a coloring document")
    sp.add_argument("--in", dest="input", help="coloring document (default stdin)")
    sp.add_argument("--ell", type=int, help="weak-palette cap (default: the declared one)")

    sp = sub.add_parser("exact", parents=[common], help="exact incidence chromatic number or (k, l) feasibility")
    graph_in(sp)
    sp.add_argument("--k", type=int)
    sp.add_argument("--ell", type=int)
    sp.add_argument("--node-limit", type=int, default=DEFAULT_NODE_LIMIT)

    sp = sub.add_parser("audit", parents=[common], help="discharging replay or reducibility check")
    graph_in(sp)
    sp.add_argument("--profile", required=True, help="T1..T6 or a profile JSON file")
    mode = sp.add_mutually_exclusive_group(required=True)
    mode.add_argument("--discharge", action="store_true")
    mode.add_argument("--assert-reducible", action="store_true")

    sp = sub.add_parser("gen", parents=[common], help="generate a graph as an edge list")
    sp.add_argument("--kind", required=True, help='e.g. "grid(3,3)" or "hub_sparse(40,12,4)"')
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out")
    return p


COMMANDS = {"mad": cmd_mad, "color": cmd_color, "verify": cmd_verify, "exact": cmd_exact,
            "audit": cmd_audit, "gen": cmd_gen}


def run(argv: Sequence[str] | None = None, stdin: TextIO | None = None,
        stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    report = RunReport(command=argv)
    start = time.perf_counter()
    args = None
    try:
        args = build_parser().parse_args(argv)
        ctx = Context(args, stdin, stdout, stderr, report)
        code = COMMANDS[args.command](ctx)
    except Exception as exc:  # noqa: BLE001
        code = exit_code_for(exc)
        stderr.write(f"error: {exc}\n")
        report.summary = {"error": type(exc).__name__, "message": str(exc)}
        if isinstance(exc, HypothesisViolation) and exc.witness is not None:
            stderr.write(f"witness: {list(exc.witness)}\n")
        if code == CONTRADICTION:
            name = f"contradiction-{(report.input_digest or 'unknown')[:12]}.json"
            out = getattr(args, "out", None)
            base = os.path.dirname(out) if out and out != "-" and not getattr(args, "batch", None) else "."
            path = os.path.join(base or ".", name)
            _write_artifact(path, exc)
            stderr.write(f"artifact written to {path}\n")
    report.exit_code = code
    report.seconds = round(time.perf_counter() - start, 6)
    target = getattr(args, "report", None) if args is not None else None
    if target is None and "--report" in argv:
        i = argv.index("--report")
        target = argv[i + 1] if i + 1 < len(argv) else None
    if target:
        with open(target, "w") as fh:
            fh.write(report.dumps())
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
