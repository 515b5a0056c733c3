"""Command-line front end with machine-readable JSON reports.

Exit codes for decision commands: 0 = YES, 1 = NO, 2 = error.  Graph
files are auto-detected by extension: .el edge list, .g6 graph6, .ct
cotree text.  RETRACT_ORACLE_BUDGET ("STATES" or "VERTICES:STATES")
overrides the oracle search caps.
"""

from __future__ import annotations

import hashlib
import json
import os
import sys
import time
from pathlib import Path

import click

from . import absolute as absolute_mod
from . import folding as folding_mod
from . import oracle as oracle_mod
from . import reduction as reduction_mod
from .cotree import (
    NOT_COGRAPH,
    NotCographError,
    build_cotree,
    classify,
    clique_number,
    cotree_leaves,
    cotree_to_graph,
    format_cotree,
    parse_cotree,
)
from .graph_core import (
    Graph,
    NoRetract,
    ParseError,
    RetractCertificate,
    format_edge_list,
    parse_edge_list,
    parse_graph6,
    verify_retract_certificate,
)
from .retract_cograph import (
    PartitionedInstance,
    fpt_retract,
    partitioned_retract,
    retract,
)
from .retract_threshold import NotThresholdError, threshold_retract
from .retract_tp import NotTriviallyPerfectError, tp_retract


class CommandError(click.ClickException):
    exit_code = 2


def _load_graph(path: str) -> Graph:
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise CommandError(f"cannot read {path}: {exc}")
    try:
        if p.suffix == ".g6":
            return parse_graph6(text)
        if p.suffix == ".ct":
            return cotree_to_graph(parse_cotree(text))
        return parse_edge_list(text)
    except (ParseError, ValueError) as exc:
        raise CommandError(f"{path}: {exc}")


def _digest(path: str) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()[:16]


def _budget_from_env() -> oracle_mod.SearchBudget | None:
    raw = os.environ.get("RETRACT_ORACLE_BUDGET")
    if not raw:
        return None
    try:
        if ":" in raw:
            verts, states = raw.split(":", 1)
            return oracle_mod.SearchBudget(
                max_vertices=int(verts), max_states=int(states)
            )
        return oracle_mod.SearchBudget(max_vertices=64, max_states=int(raw))
    except ValueError as exc:
        raise CommandError(f"bad RETRACT_ORACLE_BUDGET value {raw!r}: {exc}")


def _cert_payload(result: RetractCertificate | NoRetract) -> dict:
    if isinstance(result, NoRetract):
        return {"verdict": "NO", "reason": result.reason}
    return {
        "verdict": "YES",
        "certificate": {"rho": list(result.rho), "gamma": list(result.gamma)},
    }


def _emit(report: dict, code: int) -> None:
    click.echo(json.dumps(report, indent=2))
    sys.exit(code)


@click.group()
def main() -> None:
    """Retracts, foldings and absolute retracts in cographs."""


@main.command(name="retract")
@click.argument("g_path", required=False)
@click.argument("h_path", required=False)
@click.option(
    "--solver",
    type=click.Choice(["auto", "threshold", "tp", "fpt", "oracle"]),
    default="auto",
    show_default=True,
)
@click.option(
    "--partitioned",
    "partitioned_path",
    default=None,
    help="File of pattern vertex ids; solves the induced-subgraph case on G.",
)
@click.option(
    "--batch",
    "batch_path",
    default=None,
    help="Manifest with one 'G_PATH H_PATH' pair per line; reports in order.",
)
def cmd_retract(g_path, h_path, solver, partitioned_path, batch_path) -> None:
    """Decide whether the graph in H_PATH is a retract of the one in G_PATH."""
    if batch_path:
        reports = []
        worst = 0
        for lineno, raw in enumerate(
            Path(batch_path).read_text().splitlines(), start=1
        ):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 2:
                raise CommandError(f"{batch_path}:{lineno}: expected 'G H'")
            report, code = _solve_pair(parts[0], parts[1], solver, None)
            reports.append(report)
            worst = max(worst, code)
        click.echo(json.dumps(reports, indent=2))
        sys.exit(worst)
    if not g_path or (not h_path and not partitioned_path):
        raise CommandError("need G_PATH and H_PATH (or --partitioned/--batch)")
    report, code = _solve_pair(g_path, h_path, solver, partitioned_path)
    _emit(report, code)


def _solve_pair(
    g_path: str, h_path: str | None, solver: str, partitioned_path: str | None
) -> tuple[dict, int]:
    g = _load_graph(g_path)
    started = time.perf_counter()
    report: dict = {"command": "retract", "inputs": {"g": _digest(g_path)}}
    try:
        if partitioned_path is not None:
            hset = frozenset(
                int(tok) for tok in Path(partitioned_path).read_text().split()
            )
            from .graph_core import induced_subgraph

            h, _ = induced_subgraph(g, hset)
            result = partitioned_retract(PartitionedInstance(g, hset))
            route = "partitioned"
        else:
            assert h_path is not None
            h = _load_graph(h_path)
            report["inputs"]["h"] = _digest(h_path)
            result, route = _run_solver(g, h, solver)
    except (NotCographError, NotThresholdError, NotTriviallyPerfectError) as exc:
        raise CommandError(str(exc))
    report.update(_cert_payload(result))
    report["route"] = route
    report["omega_g"] = clique_number(build_cotree(g)) if g.n else 0
    report["omega_h"] = clique_number(build_cotree(h)) if h.n else 0
    report["millis"] = round(1000 * (time.perf_counter() - started), 3)
    if isinstance(result, RetractCertificate):
        if not verify_retract_certificate(g, h, result):
            raise CommandError("internal error: certificate failed verification")
        return report, 0
    return report, 1


def _run_solver(g: Graph, h: Graph, solver: str):
    if solver == "auto":
        return retract(g, h)
    if solver == "threshold":
        return threshold_retract(g, h), "threshold"
    if solver == "tp":
        return tp_retract(g, h), "tp"
    if solver == "fpt":
        gc, hc = classify(g), classify(h)
        if NOT_COGRAPH in (gc.name, hc.name):
            bad = gc if gc.name == NOT_COGRAPH else hc
            raise NotCographError(bad.witness)  # type: ignore[arg-type]
        return fpt_retract(g, h), "fpt"
    budget = _budget_from_env() or oracle_mod.SearchBudget(max_vertices=12)
    return oracle_mod.brute_retract(g, h, budget), "oracle"


@main.command(name="classify")
@click.argument("g_path")
def cmd_classify(g_path) -> None:
    """Report the smallest graph class of the input."""
    g = _load_graph(g_path)
    cls = classify(g)
    report = {
        "command": "classify",
        "inputs": {"g": _digest(g_path)},
        "class": cls.name,
        "witness_kind": cls.witness_kind,
        "witness": list(cls.witness) if cls.witness else None,
    }
    _emit(report, 0)


@main.command(name="folding")
@click.argument("g_path")
def cmd_folding(g_path) -> None:
    """Compute the folding number, with a verified fold sequence when cheap."""
    g = _load_graph(g_path)
    started = time.perf_counter()
    budget = _budget_from_env()
    cls = classify(g)
    report: dict = {"command": "folding", "inputs": {"g": _digest(g_path)}}
    if cls.name == "threshold":
        sigma, seq = folding_mod.threshold_folding_number(g)
        route = "threshold"
    elif any(g.degree(v) == g.n - 1 for v in range(g.n)):
        sigma = folding_mod.folding_number_universal(g, budget)
        seq = None
        route = "universal"
    else:
        try:
            sigma, seq = oracle_mod.brute_folding_number(
                g, budget or oracle_mod.DEFAULT_FOLDING_BUDGET
            )
        except oracle_mod.BudgetExceededError as exc:
            raise CommandError(str(exc))
        route = "oracle"
    report["sigma"] = sigma
    report["route"] = route
    if seq is not None:
        target = Graph(sigma, [(a, b) for a in range(sigma) for b in range(a + 1, sigma)])
        report["sequence"] = {"component": list(seq.component), "steps": [list(s) for s in seq.steps]}
        report["verified"] = folding_mod.verify_fold_sequence(g, seq, target)
    report["millis"] = round(1000 * (time.perf_counter() - started), 3)
    _emit(report, 0)


@main.command(name="absolute")
@click.argument("h_path")
@click.option("--out", "out_path", default=None, help="Write the counterexample here (.el).")
def cmd_absolute(h_path, out_path) -> None:
    """Test whether the input is an absolute retract for cographs."""
    h = _load_graph(h_path)
    try:
        verdict = absolute_mod.is_absolute_retract(h)
    except (ValueError, NotCographError) as exc:
        raise CommandError(str(exc))
    report: dict = {
        "command": "absolute",
        "inputs": {"h": _digest(h_path)},
        "absolute": verdict.is_absolute,
        "failing_vertices": list(verdict.failing_vertices),
    }
    if verdict.counterexample is not None:
        report["counterexample"] = format_edge_list(verdict.counterexample)
        if out_path:
            Path(out_path).write_text(format_edge_list(verdict.counterexample))
            report["counterexample_path"] = out_path
    _emit(report, 0 if verdict.is_absolute else 1)


@main.command(name="reduce3p")
@click.argument("instance_path")
@click.argument("out_prefix")
@click.option("--force", is_flag=True, help="Encode even if the instance is invalid.")
def cmd_reduce3p(instance_path, out_prefix, force) -> None:
    """Encode a 3-partition instance as cotree files PREFIX_G.ct, PREFIX_H.ct."""
    inst = reduction_mod.parse_instance(Path(instance_path).read_text())
    try:
        pair = reduction_mod.encode(inst, force=force)
    except ValueError as exc:
        raise CommandError(str(exc))
    g_path = f"{out_prefix}_G.ct"
    h_path = f"{out_prefix}_H.ct"
    Path(g_path).write_text(format_cotree(pair.g) + "\n")
    Path(h_path).write_text(format_cotree(pair.h) + "\n")
    report = {
        "command": "reduce3p",
        "inputs": {"instance": _digest(instance_path)},
        "g_path": g_path,
        "h_path": h_path,
        "degenerate": pair.degenerate,
        "valid_triples": len(pair.triples),
        "n_g": len(cotree_leaves(pair.g)),
        "n_h": len(cotree_leaves(pair.h)),
    }
    _emit(report, 0)


@main.group(name="oracle")
def cmd_oracle() -> None:
    """Budgeted exact searches (ground truth for small inputs)."""


def _oracle_budget() -> oracle_mod.SearchBudget:
    return _budget_from_env() or oracle_mod.SearchBudget(max_vertices=12)


@cmd_oracle.command(name="retract")
@click.argument("g_path")
@click.argument("h_path")
def cmd_oracle_retract(g_path, h_path) -> None:
    g, h = _load_graph(g_path), _load_graph(h_path)
    try:
        result = oracle_mod.brute_retract(g, h, _oracle_budget())
    except oracle_mod.BudgetExceededError as exc:
        raise CommandError(str(exc))
    report = {
        "command": "oracle retract",
        "inputs": {"g": _digest(g_path), "h": _digest(h_path)},
    }
    report.update(_cert_payload(result))
    _emit(report, 0 if isinstance(result, RetractCertificate) else 1)


@cmd_oracle.command(name="hom")
@click.argument("g_path")
@click.argument("h_path")
def cmd_oracle_hom(g_path, h_path) -> None:
    g, h = _load_graph(g_path), _load_graph(h_path)
    try:
        phi = oracle_mod.brute_hom(g, h, _oracle_budget())
    except oracle_mod.BudgetExceededError as exc:
        raise CommandError(str(exc))
    report = {
        "command": "oracle hom",
        "inputs": {"g": _digest(g_path), "h": _digest(h_path)},
        "verdict": "YES" if phi is not None else "NO",
        "map": list(phi) if phi is not None else None,
    }
    _emit(report, 0 if phi is not None else 1)


def _oracle_value_command(name: str, compute):
    @cmd_oracle.command(name=name)
    @click.argument("g_path")
    def _cmd(g_path):
        g = _load_graph(g_path)
        try:
            value = compute(g)
        except oracle_mod.BudgetExceededError as exc:
            raise CommandError(str(exc))
        _emit(
            {
                "command": f"oracle {name}",
                "inputs": {"g": _digest(g_path)},
                "value": value,
            },
            0,
        )

    return _cmd


_oracle_value_command("clique", lambda g: oracle_mod.brute_clique(g, _oracle_budget()))
_oracle_value_command(
    "chromatic", lambda g: oracle_mod.brute_chromatic(g, _oracle_budget())
)
_oracle_value_command(
    "achromatic", lambda g: oracle_mod.brute_achromatic(g, _oracle_budget())[0]
)
_oracle_value_command(
    "folding", lambda g: oracle_mod.brute_folding_number(g, _oracle_budget())[0]
)


if __name__ == "__main__":
    main()
