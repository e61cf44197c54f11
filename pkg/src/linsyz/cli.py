"""Command-line front end.

Every invocation builds one report dictionary; ``--json`` prints it, otherwise
a short human rendering is derived from it.  Exit codes: 0 ok, 2 bad input or
usage, 3 resource cap hit, 4 criterion/oracle disagreement.
"""

from __future__ import annotations

import argparse
import dataclasses
import hashlib
import json
import sys
import time
from typing import Callable, Sequence

from .betti import betti_table
from .complexes import (
    SimplicialComplex,
    cm_shape_report,
    is_cohen_macaulay,
    is_shellable,
    is_vertex_decomposable_pure,
)
from .config import default_caps
from .errors import GenerationError, InputError, PreconditionError, ResourceError
from .generators import (
    cycle_family,
    cycle_perturbations,
    path_ideal_cycle,
    path_ideal_line,
    random_ideal,
    random_tree_ideal,
)
from .graph import build_syzygy_graph, classify_shape, has_linear_relations_combinatorial
from .harness import SUITES, run_suite
from .ideal import MonomialIdeal, parse_field
from .io import format_complex, format_ideal, read_complex, read_ideal
from .structure import (
    criterion_verdict,
    find_admissible_order,
    is_variable_decomposable,
    scarf_matches_graph,
)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_RESOURCE = 3
EXIT_DISAGREE = 4

PROPERTIES = ("linear-resolution", "linear-quotients", "var-decomposable", "linear-relations", "scarf")
METHODS = ("auto", "criterion", "oracle", "both")
REPORTS = ("cm", "shellable", "vertex-decomposable", "shape", "all")
FAMILIES = ("cycle-path", "line-path", "cycle-family", "perturbation", "random-tree", "random")


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # usage errors must exit 2 without a traceback
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _add_common(p: argparse.ArgumentParser, top: bool) -> None:
    # on subcommands the defaults are suppressed so flags given before the
    # subcommand are not clobbered
    d = (lambda v: v) if top else (lambda v: argparse.SUPPRESS)
    p.add_argument("--field", default=d("rat"), help="rat or gf:p (default rat)")
    p.add_argument("--cap-n", type=int, default=d(None), help="max variables for the Betti oracle")
    p.add_argument("--cap-m", type=int, default=d(None), help="max generators/facets for Scarf and shelling search")
    p.add_argument("--seed", type=int, default=d(None), help="seed for random families and suites")
    p.add_argument("--json", action="store_true", default=d(False), help="print the structured report")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="linsyz", description="Linear resolutions of squarefree monomial ideals.")
    _add_common(parser, top=True)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("graph", help="syzygy graph, its shape and pruned edges")
    p.add_argument("file")
    _add_common(p, top=False)

    p = sub.add_parser("betti", help="graded Betti table via Hochster's formula")
    p.add_argument("file")
    _add_common(p, top=False)

    p = sub.add_parser("check", help="decide a property by criterion, oracle or both")
    p.add_argument("file")
    p.add_argument("--property", choices=PROPERTIES, default="linear-resolution")
    p.add_argument("--method", choices=METHODS, default="auto")
    _add_common(p, top=False)

    p = sub.add_parser("complex", help="Cohen-Macaulay / shellable / vertex-decomposable report")
    p.add_argument("file")
    p.add_argument("--report", choices=REPORTS, default="all")
    _add_common(p, top=False)

    p = sub.add_parser("gen", help="print an instance in the ideal text format")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("params", nargs="*", type=int, help="family parameters (see README)")
    _add_common(p, top=False)

    p = sub.add_parser("verify", help="run an equivalence battery")
    p.add_argument("--suite", choices=sorted(SUITES), required=True)
    p.add_argument("--count", type=int, default=None)
    _add_common(p, top=False)
    return parser


# -- helpers --------------------------------------------------------------------------


def _caps(args):
    caps = default_caps()
    if args.cap_n is not None:
        caps = dataclasses.replace(caps, oracle_n=args.cap_n)
    if args.cap_m is not None:
        caps = dataclasses.replace(caps, scarf_m=args.cap_m, shelling_m=args.cap_m)
    return caps


def _digest(text: str) -> str:
    return "sha256:" + hashlib.sha256(text.encode()).hexdigest()[:16]


def _ideal_input(args) -> tuple[MonomialIdeal, dict]:
    I = read_ideal(args.file)
    info = {
        "file": args.file,
        "digest": _digest(format_ideal(I)),
        "n": I.n,
        "m": I.m,
        "wasMinimal": I.was_minimal,
        "generators": [sorted(g) for g in I.gens],
    }
    return I, info


def _complex_input(args) -> tuple[SimplicialComplex, dict]:
    D = read_complex(args.file)
    info = {
        "file": args.file,
        "digest": _digest(format_complex(D)),
        "n": D.n,
        "m": D.m,
        "facets": [sorted(f) for f in D.facets],
    }
    return D, info


def _verdict(value, reason: str, certificate=None) -> dict:
    return {"value": value, "reason": reason, "certificate": certificate}


# -- subcommands -----------------------------------------------------------------------


def cmd_graph(args, report: dict) -> int:
    I, report["input"] = _ideal_input(args)
    G = build_syzygy_graph(I)
    shape = classify_shape(G)
    report["graph"] = {
        "vertices": list(G.vertices),
        "edges": [list(e) for e in G.sorted_edges()],
        "prunedEdges": [{"edge": list(p.edge), "triangle": list(p.triangle)} for p in G.pruned],
        "shape": str(shape),
        "witness": list(shape.witness),
    }
    report["verdicts"] = {"shape": _verdict(str(shape), "classified pruned syzygy graph", list(shape.witness))}
    return EXIT_OK


def cmd_betti(args, report: dict) -> int:
    I, report["input"] = _ideal_input(args)
    table = betti_table(I, args.field_spec, args.caps)
    report["betti"] = table.to_json()
    report["betti"]["display"] = table.macaulay()
    d = I.degree
    report["verdicts"] = {
        "linearResolution": _verdict(d is not None and table.is_linear(d), "Betti table"),
        "projdim": _verdict(table.projdim, "Betti table"),
    }
    return EXIT_OK


def _oracle_table(I, args):
    return betti_table(I, args.field_spec, args.caps)


def _criterion(prop: str, I: MonomialIdeal, args) -> dict:
    """Combinatorial side; value None when no criterion covers the instance."""
    if I.degree is None:
        return _verdict(False, "mixed generator degrees")
    if prop == "linear-relations":
        v = has_linear_relations_combinatorial(I)
        return _verdict(v.holds, "pair subgraphs connected", list(v.pair) if v.pair else None)
    if prop == "scarf":
        G = build_syzygy_graph(I)
        if not G.is_tree():
            return _verdict(None, "Scarf comparison needs a tree-shaped graph")
        return _verdict(scarf_matches_graph(I, G, args.caps), "Scarf complex equals G_I")
    v = criterion_verdict(I)
    key = {"linear-resolution": "linear", "linear-quotients": "linear_quotients",
           "var-decomposable": "variable_decomposable"}[prop]
    value = getattr(v, key)
    cert = list(v.witness) if v.witness is not None else None
    return _verdict(value, f"{v.rule} on shape {v.shape}", cert)


def _oracle(prop: str, I: MonomialIdeal, args) -> dict:
    """Direct computation: Betti table, or exhaustive order / decomposition search."""
    d = I.degree
    if prop == "linear-quotients":
        order = find_admissible_order(I)
        return _verdict(order is not None, "admissible-order search", list(order) if order else None)
    if prop == "var-decomposable":
        ok, tree = is_variable_decomposable(I)
        return _verdict(ok, "shedding-variable search", tree.to_json() if tree else None)
    if d is None:
        return _verdict(False, "mixed generator degrees")
    table = _oracle_table(I, args)
    if prop == "linear-relations":
        return _verdict(table.has_linear_relations(d), "Betti table: beta_1 concentrated in degree d+1")
    return _verdict(table.is_linear(d), "Betti table: beta_i concentrated in degree d+i")


def cmd_check(args, report: dict) -> int:
    I, report["input"] = _ideal_input(args)
    prop, method = args.property, args.method
    verdicts: dict = {}
    if method in ("criterion", "both", "auto"):
        verdicts["criterion"] = _criterion(prop, I, args)
    if method in ("oracle", "both") or (method == "auto" and verdicts["criterion"]["value"] is None):
        verdicts["oracle"] = _oracle(prop, I, args)
    report["property"] = prop
    report["method"] = method
    report["verdicts"] = verdicts
    crit = verdicts.get("criterion")
    chosen = crit if crit is not None and crit["value"] is not None else verdicts.get("oracle", crit)
    report["result"] = chosen["value"]
    if method == "both":
        a, b = verdicts["criterion"]["value"], verdicts["oracle"]["value"]
        if a is None:
            report["agreement"] = None
        else:
            report["agreement"] = a == b
            if a != b:
                report["discrepancy"] = {
                    "property": prop,
                    "criterion": verdicts["criterion"],
                    "oracle": verdicts["oracle"],
                    "ideal": report["input"]["generators"],
                }
                return EXIT_DISAGREE
    return EXIT_OK


def cmd_complex(args, report: dict) -> int:
    D, report["input"] = _complex_input(args)
    wanted = REPORTS[:-1] if args.report == "all" else (args.report,)
    verdicts: dict = {}
    for r in wanted:
        if r == "cm":
            v = is_cohen_macaulay(D, args.field_spec, args.caps)
            verdicts["cm"] = _verdict(v.cohen_macaulay, v.reason)
        elif not D.is_pure:
            verdicts[r] = _verdict(False, "not pure")
        elif r == "shellable":
            c = is_shellable(D, args.caps)
            verdicts["shellable"] = _verdict(c.holds, "shelling-order search", list(c.witness) if c.witness else None)
        elif r == "vertex-decomposable":
            verdicts["vertexDecomposable"] = _verdict(is_vertex_decomposable_pure(D), "shedding search on the dual ideal")
        elif r == "shape":
            report["shapeReport"] = cm_shape_report(D, args.field_spec, args.caps, independent=args.report == "all")
            verdicts["shape"] = _verdict(report["shapeReport"]["shape"], report["shapeReport"]["rule"])
    report["verdicts"] = verdicts
    if report.get("shapeReport", {}).get("agree") is False:
        return EXIT_DISAGREE
    return EXIT_OK


def _gen_instance(family: str, params: list[int], seed: int | None) -> MonomialIdeal:
    need = {"cycle-path": 2, "line-path": 2, "cycle-family": 1, "perturbation": 2, "random-tree": 2, "random": 3}[family]
    if len(params) != need:
        raise InputError(f"family {family} takes {need} integer parameters, got {len(params)}")
    seed = 0 if seed is None else seed
    if family == "cycle-path":
        return path_ideal_cycle(*params)
    if family == "line-path":
        return path_ideal_line(*params)
    if family == "cycle-family":
        return cycle_family(*params)
    if family == "perturbation":
        n, k = params
        found = cycle_perturbations(n)
        if not 0 <= k < len(found):
            raise InputError(f"cycle_family({n}) has {len(found)} perturbations; index {k} out of range")
        return found[k]
    if family == "random-tree":
        return random_tree_ideal(params[0], params[1], seed)
    return random_ideal(params[0], params[1], params[2], seed)


def cmd_gen(args, report: dict) -> int:
    I = _gen_instance(args.family, args.params, args.seed)
    text = format_ideal(I)
    report["ideal"] = {"n": I.n, "generators": [sorted(g) for g in I.gens], "text": text}
    report["input"] = {"family": args.family, "params": args.params, "seed": args.seed, "digest": _digest(text)}
    return EXIT_OK


def cmd_verify(args, report: dict) -> int:
    result = run_suite(args.suite, args.count, args.seed, args.field_spec)
    report["suite"] = result.to_json()
    report["verdicts"] = {"ok": _verdict(result.ok, f"{result.disagreements} disagreeing instance(s)")}
    return EXIT_OK if result.ok else EXIT_DISAGREE


COMMANDS: dict[str, Callable] = {
    "graph": cmd_graph,
    "betti": cmd_betti,
    "check": cmd_check,
    "complex": cmd_complex,
    "gen": cmd_gen,
    "verify": cmd_verify,
}


# -- rendering -------------------------------------------------------------------------


def render(report: dict) -> str:
    """Human-readable text derived from the report."""
    cmd = report.get("subcommand", "")
    lines: list[str] = []
    if "error" in report:
        return f"error ({report['error']['kind']}): {report['error']['message']}"
    if cmd == "gen":
        return report["ideal"]["text"].rstrip("\n")
    if cmd == "graph":
        g = report["graph"]
        lines.append(f"shape: {g['shape']}")
        lines += [f"{a} {b}" for a, b in g["edges"]]
        for p in g["prunedEdges"]:
            lines.append(f"pruned {p['edge'][0]} {p['edge'][1]} (triangle {' '.join(map(str, p['triangle']))})")
        return "\n".join(lines)
    if cmd == "betti":
        return report["betti"]["display"]
    if cmd == "verify":
        s = report["suite"]
        lines.append(f"suite {s['suite']}: {s['instances']} instances, {s['disagreements']} disagreement(s)")
        for r in s["records"]:
            if not r["agree"]:
                groups = "; ".join("=".join(g) for g in r["disagreements"])
                lines.append(f"  DISAGREE {r['label']}: {groups}")
        return "\n".join(lines)
    for name, v in report.get("verdicts", {}).items():
        cert = "" if v["certificate"] is None else f"  certificate={json.dumps(v['certificate'], sort_keys=True)}"
        lines.append(f"{name}: {v['value']} ({v['reason']}){cert}")
    if "agreement" in report:
        lines.append(f"agreement: {report['agreement']}")
    if "shapeReport" in report:
        lines.append("shape report: " + json.dumps(report["shapeReport"], sort_keys=True))
    return "\n".join(lines)


def run(argv: Sequence[str] | None = None) -> tuple[int, dict]:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    report: dict = {"command": argv, "subcommand": args.command}
    start = time.perf_counter()
    try:
        args.field_spec = parse_field(args.field)
        args.caps = _caps(args)
        code = COMMANDS[args.command](args, report)
    except (InputError, PreconditionError, GenerationError) as exc:
        code = EXIT_INPUT
        report["error"] = {"kind": type(exc).__name__, "message": str(exc)}
    except ResourceError as exc:
        code = EXIT_RESOURCE
        report["error"] = {"kind": type(exc).__name__, "message": str(exc)}
    report["exitCode"] = code
    report["timings"] = {"seconds": round(time.perf_counter() - start, 6)}
    return code, report


def main(argv: Sequence[str] | None = None) -> int:
    try:
        code, report = run(argv)
    except SystemExit as exc:  # argparse usage errors / --help
        return int(exc.code or 0)
    json_mode = "--json" in (sys.argv[1:] if argv is None else argv)
    out = json.dumps(report, sort_keys=True, indent=2) if json_mode else render(report)
    stream = sys.stderr if "error" in report and not json_mode else sys.stdout
    print(out, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
