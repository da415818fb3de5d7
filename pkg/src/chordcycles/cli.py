"""Command-line front end.

Every invocation prints one JSON object ``{"command", "status", "payload"}``
to stdout (keys sorted, so equal inputs give equal bytes) and a short
human summary plus wall time to stderr. Exit codes: 0 for ``ok`` and
``no_witness``, 2 for ``inconclusive``, 1 for ``error``.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from math import ceil

from .chordality import CycleWithChords, find_chorded_cycle, is_non_chorded_bruteforce
from .decomposition import (
    block_cut,
    block_path_decompose,
    ear_decompose,
    ear_stem_certificate,
    stem_bound_check,
)
from .errors import ChordCyclesError, SoundnessError
from .families import conjecture_sweep, gen_g1, gen_g2, gen_sharpness_bipartite
from .graph import Graph, parse_graph, serialize_graph
from .low_degree import nonchorded_independent_low_degree, tree_independent_low_degree
from .packing import (
    EXHAUSTED,
    FOUND,
    Packing,
    check_hypothesis,
    check_prior_theorems,
    max_packing,
    minimal_packing,
    minimal_packing_properties,
    sigma,
    verify_packing,
)
from .sweeps import fact1_sweep, fact2_sweep, prop4_sweep

OK = "ok"
NO_WITNESS = "no_witness"
INCONCLUSIVE = "inconclusive"
ERROR = "error"
EXIT_CODES = {OK: 0, NO_WITNESS: 0, INCONCLUSIVE: 2, ERROR: 1}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def rational(x: Fraction) -> dict:
    return {"num": x.numerator, "den": x.denominator}


def read_graph(path: str) -> Graph:
    if path == "-":
        return parse_graph(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


# -- subcommands: each returns (status, payload, summary) --------------------


def cmd_detect(args):
    g = read_graph(args.graph)
    w = find_chorded_cycle(g)
    payload = {"chorded": w is not None, "witness": None if w is None else w.to_json()}
    if w is None:
        return NO_WITNESS, payload, "no chorded cycle"
    return OK, payload, f"chorded cycle {list(w.cycle)} with chords {[list(c) for c in w.chords]}"


def cmd_oracle(args):
    g = read_graph(args.graph)
    nc = is_non_chorded_bruteforce(g)
    return OK, {"non_chorded": nc}, "non-chorded" if nc else "has a chorded cycle"


def _block_cut_json(g: Graph) -> dict:
    bc = block_cut(g)
    return {
        "blocks": [list(b) for b in bc.blocks],
        "bridges": [list(e) for e in bc.bridges],
        "articulation_points": list(bc.articulation_points),
    }


def cmd_decompose(args):
    g = read_graph(args.graph)
    if args.ears:
        result = ear_decompose(g)
        if isinstance(result, CycleWithChords):
            return OK, {"kind": "chorded_cycle", "witness": result.to_json()}, "chord found"
        cert = ear_stem_certificate(g, result)
        sb = stem_bound_check(g)
        payload = {
            "kind": "ears",
            "decomposition": result.to_json(),
            "stems": {
                "per_ear": list(cert.per_ear_stem),
                "base": list(cert.base_stems),
                "stem_count": sb.stem_count,
                "bound": rational(sb.bound),
                "passed": sb.passed,
            },
        }
        return OK, payload, f"base cycle of {len(result.base_cycle)} + {len(result.ears)} ears"
    payload = {"kind": "block_cut", "block_cut": _block_cut_json(g), "decomposition": None}
    if g.is_connected() and g.m >= g.n:
        result = block_path_decompose(g)
        if isinstance(result, CycleWithChords):
            payload.update(kind="chorded_cycle", witness=result.to_json())
            return OK, payload, "chord found"
        payload.update(kind="block_path", decomposition=result.to_json())
        summary = f"{len(result.blocks)} blocks, {len(result.pendants)} pendant paths"
        return OK, payload, summary
    return OK, payload, f"{len(payload['block_cut']['blocks'])} blocks (no block-path decomposition)"


def cmd_indep(args):
    g = read_graph(args.graph)
    res = tree_independent_low_degree(g) if args.tree else nonchorded_independent_low_degree(g)
    payload = res.to_json()
    payload["size"] = len(res.vertices)
    payload["ceil_guarantee"] = ceil(res.guarantee)
    return OK, payload, f"|I| = {len(res.vertices)} >= {res.guarantee}"


def cmd_sigma(args):
    g = read_graph(args.graph)
    stat = sigma(g, args.t, args.budget)
    return OK, stat.to_json(), f"sigma_{args.t} = {stat.value}"


def cmd_pack(args):
    g = read_graph(args.graph)
    if args.minimal:
        p = minimal_packing(g, args.k, budget=args.budget)
        report = minimal_packing_properties(g, p)
        payload = p.to_json()
        payload.update(
            status=FOUND,
            minimal=True,
            properties={
                "long_cycles_checked": report.long_cycles_checked,
                "max_outside_degree": max((d for _, _, d in report.outside_degrees), default=0),
            },
        )
        return OK, payload, f"minimal {args.k}-packing on {p.total_vertices} vertices"
    res = max_packing(g, args.k, args.budget)
    payload = res.to_json()
    payload["nodes"] = res.nodes
    summary = f"{res.status}: best packing has {res.max_found} cycles ({res.nodes} nodes)"
    if res.status == FOUND:
        return OK, payload, summary
    if res.status == EXHAUSTED:
        return NO_WITNESS, payload, summary
    return INCONCLUSIVE, payload, summary


def cmd_hypothesis(args):
    prior = None
    if args.graph is not None:
        g = read_graph(args.graph)
        n, value = g.n, sigma(g, args.t).value
        prior = check_prior_theorems(g, args.k, args.budget)
    else:
        n = args.n
        value = None if args.sigma is None else (float("inf") if args.sigma == "infinity" else int(args.sigma))
    inst = check_hypothesis(n, args.k, args.t, value)
    payload = inst.to_json()
    if prior is not None:
        payload["prior_theorems"] = prior
    summary = f"n >= {inst.order_threshold}: {inst.order_ok}; sigma >= {inst.degree_threshold}: {inst.degree_ok}"
    return OK, payload, summary


def cmd_gen(args):
    if args.family == "bipartite":
        g, params = gen_sharpness_bipartite(args.k, args.n), {"k": args.k, "n": args.n}
    elif args.family == "g1":
        g, params = gen_g1(args.k), {"k": args.k}
    else:
        g, params = gen_g2(args.rounds), {"rounds": args.rounds}
    text = serialize_graph(g)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    payload = {"family": args.family, "params": params, "n": g.n, "m": g.m, "edge_list": text}
    return OK, payload, f"{args.family}: n = {g.n}, m = {g.m}"


def cmd_sweep(args):
    if args.conjecture:
        report = conjecture_sweep(args.max_n)
        payload = {"sweep": "conjecture", **report.to_json()}
        if report.violations:
            raise SoundnessError(f"{len(report.violations)} graphs below n/6", payload)
        return OK, payload, f"{report.graphs_checked} graphs, minimum ratio {report.min_ratio}"
    fn, name = {
        "fact1": (fact1_sweep, "fact1"),
        "fact2": (fact2_sweep, "fact2"),
        "prop4": (prop4_sweep, "prop4"),
    }[next(k for k in ("fact1", "fact2", "prop4") if getattr(args, k))]
    payload = fn(args.max_n)
    total = sum(payload["graphs_by_n"].values())
    return OK, payload, f"{name}: {total} graph classes checked"


def cmd_verify(args):
    g = read_graph(args.graph)
    if args.packing == "-":
        data = json.load(sys.stdin)
    else:
        with open(args.packing, encoding="utf-8") as fh:
            data = json.load(fh)
    if "payload" in data:
        data = data["payload"]
    p = Packing(tuple(CycleWithChords.from_json(c) for c in data["cycles"]))
    try:
        verify_packing(g, p)
    except SoundnessError as exc:
        payload = {"valid": False, "error": type(exc).__name__, "message": str(exc)}
        return ERROR, payload, f"invalid: {exc}"
    return OK, {"valid": True, "k": len(p), "total_vertices": p.total_vertices}, "valid packing"


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="chordcycles", description="Chorded-cycle analysis toolkit.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def graph_cmd(name, fn, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("graph", help="edge-list file, or - for stdin")
        p.set_defaults(fn=fn)
        return p

    graph_cmd("detect", cmd_detect, "find a chorded cycle")
    graph_cmd("oracle", cmd_oracle, "brute-force chordality check (n <= 12)")
    p = graph_cmd("decompose", cmd_decompose, "block-path or ear decomposition")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--blocks", action="store_true")
    mode.add_argument("--ears", action="store_true")
    p = graph_cmd("indep", cmd_indep, "independent set of low-degree vertices")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--tree", action="store_true")
    mode.add_argument("--general", action="store_true")
    p = graph_cmd("sigma", cmd_sigma, "minimum degree sum of an independent t-set")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--budget", type=int, default=None)
    p = graph_cmd("pack", cmd_pack, "vertex-disjoint chorded cycles")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--minimal", action="store_true")
    p.add_argument("--budget", type=int, default=None)

    p = sub.add_parser("hypothesis", help="degree-sum theorem thresholds")
    p.add_argument("graph", nargs="?", default=None)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--sigma", default=None, help="integer or 'infinity'")
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(fn=cmd_hypothesis)

    p = sub.add_parser("gen", help="extremal constructions")
    p.add_argument("family", choices=["bipartite", "g1", "g2"])
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--rounds", type=int)
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_gen)

    p = sub.add_parser("sweep", help="exhaustive small-order sweeps")
    mode = p.add_mutually_exclusive_group(required=True)
    for name in ("conjecture", "fact1", "fact2", "prop4"):
        mode.add_argument(f"--{name}", action="store_true")
    p.add_argument("--max-n", type=int, required=True)
    p.set_defaults(fn=cmd_sweep)

    p = sub.add_parser("verify", help="validate a packing JSON against a graph")
    p.add_argument("graph")
    p.add_argument("packing", help="packing JSON (a pack output or its payload)")
    p.set_defaults(fn=cmd_verify)
    return ap


def _check_gen_args(args) -> None:
    need = {"bipartite": ("k", "n"), "g1": ("k",), "g2": ("rounds",)}[args.family]
    missing = [f"--{a}" for a in need if getattr(args, a) is None]
    if missing:
        raise UsageError(f"gen {args.family} requires {' '.join(missing)}")


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    start = time.perf_counter()
    command = argv[0] if argv else ""
    try:
        args = build_parser().parse_args(argv)
        command = args.command
        if command == "gen":
            _check_gen_args(args)
        status, payload, summary = args.fn(args)
    except (UsageError, ChordCyclesError, OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        status = ERROR
        payload = {"error": type(exc).__name__, "message": str(exc)}
        summary = f"error: {exc}"
    out = {"command": command, "status": status, "payload": payload}
    stdout.write(json.dumps(out, sort_keys=True) + "\n")
    elapsed = time.perf_counter() - start
    stderr.write(f"{command}: {status}; {summary} [{elapsed:.3f}s]\n")
    return EXIT_CODES[status]


def main() -> None:
    sys.exit(run(sys.argv[1:]))
