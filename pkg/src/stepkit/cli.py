"""Command-line front end.

Every subcommand is deterministic given its inputs and seed; reports carry a
digest of the inputs, the seed, timing, and a verdict.  Exit codes: 0 for
success or a verified property, 1 for a refuted property or a found
counterexample, 2 for usage errors, 3 for an exhausted work budget.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import random
import sys
import time
from dataclasses import asdict, dataclass, field
from typing import Optional

from . import avoidance, binary_structure, constructions, dyadic, stepping_up, transversal
from .avoidance import AvoidanceQuery
from .hypergraph import (
    BudgetExhausted,
    Hypergraph,
    complement,
    contains_copy,
    from_json_obj,
    from_text,
    independence_number,
    is_linear,
    reverse,
    to_json_obj,
    to_text,
)
from .structure_types import parse_type, parse_type_family, serialize_type
from .transversal import OrientedHypergraph, SearchConfig

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


@dataclass
class RunReport:
    command: str
    inputs: dict
    digest: str
    seed: Optional[int]
    elapsed_s: float
    outputs: dict = field(default_factory=dict)
    verdict: Optional[str] = None


def _digest(obj) -> str:
    blob = json.dumps(obj, sort_keys=True, default=str).encode()
    return hashlib.sha256(blob).hexdigest()[:16]


def _read_hypergraph(path: str) -> Hypergraph:
    with open(path) as fh:
        text = fh.read()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return from_json_obj(json.loads(text))
    return from_text(text)


def _write_output(args, payload: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(payload if payload.endswith("\n") else payload + "\n")
    else:
        print(payload)


def _parse_int_set(text: str) -> tuple[int, ...]:
    try:
        return tuple(sorted({int(tok) for tok in text.split(",") if tok.strip() != ""}))
    except ValueError as exc:
        raise ValueError(f"bad integer set {text!r}: {exc}") from None


def _emit(args, report: RunReport, text_lines: list[str]) -> None:
    if args.format == "json":
        payload = json.dumps(asdict(report), indent=2, default=str)
    else:
        payload = "\n".join(text_lines)
    _write_output(args, payload)


# ---------------------------------------------------------------------------
# subcommand handlers: each returns (exit_code, outputs, verdict, text_lines)


def cmd_bstruct(args):
    values = _parse_int_set(args.set)
    tree = binary_structure.binary_structure(values)
    kind = binary_structure.classify_monotone(tree)
    lines = [binary_structure.format_tree(tree), f"monotone: {kind}"]
    out = {"set": list(values), "monotone": kind, "tree": binary_structure.format_tree(tree)}
    if len(values) >= 2:
        seq = binary_structure.delta_sequence(values)
        out["delta_sequence"] = list(seq)
        lines.append("delta sequence: " + ",".join(map(str, seq)))
    if args.dot:
        dot = binary_structure.tree_to_dot(tree)
        out["dot"] = dot
        lines = [dot]
    return EXIT_OK, out, None, lines


def cmd_delta(args):
    values = _parse_int_set(args.set)
    seq = binary_structure.delta_sequence(values)
    return EXIT_OK, {"delta_sequence": list(seq)}, None, [",".join(map(str, seq))]


def cmd_istype(args):
    from .structure_types import is_of_type

    values = _parse_int_set(args.set)
    t = parse_type(args.type)
    result = is_of_type(values, t)
    verdict = "match" if result else "no-match"
    return (EXIT_OK if result else EXIT_REFUTED), {"is_of_type": result}, verdict, [str(result)]


def cmd_monotype(args):
    from .structure_types import is_monotone_type

    t = parse_type(args.type)
    result = is_monotone_type(t)
    verdict = "monotone" if result else "not-monotone"
    return (EXIT_OK if result else EXIT_REFUTED), {"is_monotone_type": result}, verdict, [str(result)]


def _infer_sources(args) -> tuple[Hypergraph, Hypergraph, tuple, int]:
    types = parse_type_family(args.types) if args.types else ()
    g1 = _read_hypergraph(args.g1) if args.g1 else None
    g2 = _read_hypergraph(args.g2) if args.g2 else None
    if g1 is not None:
        k = g1.k + 1
    elif g2 is not None:
        k = g2.k + 1
    elif types:
        from .structure_types import type_size

        k = type_size(types[0])
    else:
        raise ValueError("cannot infer uniformity: provide --g1, --g2, or --types")
    n_bits = args.n if args.n is not None else (g1.n if g1 else (g2.n if g2 else None))
    if n_bits is None:
        raise ValueError("provide --n when both source graphs are empty")
    if g1 is None:
        g1 = Hypergraph(k - 1, n_bits, ())
    if g2 is None:
        g2 = Hypergraph(k - 1, n_bits, ())
    return g1, g2, types, n_bits


def cmd_stepup(args):
    g1, g2, types, n_bits = _infer_sources(args)
    graph = stepping_up.step_up(g1, g2, types, n_bits, materialize=args.materialize)
    out = {
        "n_bits": n_bits,
        "k": graph.k,
        "universe": graph.universe_size,
        "types": [serialize_type(t) for t in types],
    }
    lines = [f"stepping-up on {graph.universe_size} vertices, uniformity {graph.k}"]
    if graph.edges is not None:
        out["edge_count"] = graph.edges.m
        lines = [to_text(graph.edges).rstrip("\n")]
    return EXIT_OK, out, None, lines


def cmd_alpha(args):
    h = _read_hypergraph(args.infile)
    value, witness = independence_number(h)
    out = {"alpha": value, "witness": list(witness)}
    return EXIT_OK, out, None, [f"alpha = {value}", "witness: " + ",".join(map(str, witness))]


def cmd_free(args):
    pattern = _read_hypergraph(args.pattern)
    host = _read_hypergraph(args.host)
    result = contains_copy(pattern, host, node_budget=args.budget)
    out = {"status": result.status, "nodes": result.nodes}
    if result.status == "found":
        out["embedding"] = list(result.witness.mapping)
        return EXIT_REFUTED, out, "copy-found", [f"copy found: {list(result.witness.mapping)}"]
    if result.status == "budget":
        return EXIT_BUDGET, out, "budget", ["search budget exhausted"]
    return EXIT_OK, out, "free", ["host is free of the pattern"]


def cmd_f(args):
    types = parse_type_family(args.types) if args.types else ()
    if args.table:
        lines = ["n1\tn2\tf"]
        rows = []
        for n1 in range(2, args.table + 1):
            for n2 in range(2, args.table + 1):
                value, _ = avoidance.f_exact(AvoidanceQuery(n1, n2, types))
                rows.append({"n1": n1, "n2": n2, "f": value})
                lines.append(f"{n1}\t{n2}\t{value}")
        return EXIT_OK, {"table": rows}, None, lines
    query = AvoidanceQuery(args.n1, args.n2, types)
    value, witness = avoidance.f_exact(query)
    out = {"f": value, "witness": list(witness)}
    return EXIT_OK, out, None, [f"f = {value}", "witness: " + ",".join(map(str, witness))]


def cmd_fcheck(args):
    types = parse_type_family(args.types) if args.types else ()
    mismatches = []
    bound_violations = []
    for n1 in range(2, args.nmax + 1):
        for n2 in range(2, args.nmax + 1):
            query = AvoidanceQuery(n1, n2, types)
            exact, _ = avoidance.f_exact(query)
            brute = avoidance.f_bruteforce(query, args.universe_bits)
            if exact != brute:
                mismatches.append({"n1": n1, "n2": n2, "exact": exact, "brute": brute})
            try:
                bound = avoidance.depth1_bound(query)
                if exact > bound:
                    bound_violations.append({"n1": n1, "n2": n2, "exact": exact, "bound": bound})
            except ValueError:
                pass
    ok = not mismatches and not bound_violations
    out = {"mismatches": mismatches, "bound_violations": bound_violations}
    verdict = "verified" if ok else "refuted"
    lines = [f"oracle mismatches: {len(mismatches)}", f"bound violations: {len(bound_violations)}"]
    return (EXIT_OK if ok else EXIT_REFUTED), out, verdict, lines


def cmd_dyadic(args):
    if args.verify_lemmas:
        greedy = dyadic.verify_greedy_bound(args.max_size)
        twocolor = dyadic.verify_two_color_bound(min(args.max_size, 9))
        ok = not greedy and not twocolor
        out = {"greedy_violations": len(greedy), "two_color_violations": len(twocolor)}
        lines = [
            f"greedy bound violations (size <= {args.max_size}): {len(greedy)}",
            f"two-color bound violations (size <= {min(args.max_size, 9)}): {len(twocolor)}",
        ]
        return (EXIT_OK if ok else EXIT_REFUTED), out, "verified" if ok else "refuted", lines
    values = _parse_int_set(args.set)
    d = dyadic.dyadic_decompose(values, tie_rule=args.tie)
    out = {
        "parts": [list(p) for p in d.parts],
        "beta": list(d.beta),
        "split_levels": list(d.split_levels),
        "pi": list(dyadic.ordering_pi(d)),
    }
    lines = [
        "parts: " + " ".join("{" + ",".join(map(str, p)) + "}" for p in d.parts),
        "beta: " + ",".join(d.beta),
        "split levels: " + ",".join(map(str, d.split_levels)),
        "order (smallest first): " + ",".join(map(str, dyadic.ordering_pi(d))),
    ]
    return EXIT_OK, out, None, lines


def cmd_gk(args):
    h = constructions.doubling_graph(args.k)
    return EXIT_OK, {"n": h.n, "edges": h.m}, None, [to_text(h).rstrip("\n")]


def cmd_fano(args):
    h = constructions.fano()
    return EXIT_OK, {"n": h.n, "edges": h.m}, None, [to_text(h).rstrip("\n")]


def cmd_pg(args):
    h = constructions.pg_lines(args.q)
    return EXIT_OK, {"n": h.n, "edges": h.m}, None, [to_text(h).rstrip("\n")]


def cmd_f4check(args):
    h = constructions.pg_lines(3)
    hits = constructions.parity_partition_scan(h)
    expected = [tuple(), tuple(range(h.n))]
    ok = hits == expected
    out = {"qualifying_subsets": [list(a) for a in hits], "count": len(hits)}
    lines = [f"qualifying subsets: {len(hits)}"] + [
        "{" + ",".join(map(str, a)) + "}" for a in hits
    ]
    return (EXIT_OK if ok else EXIT_REFUTED), out, "verified" if ok else "refuted", lines


def cmd_expand(args):
    h = _read_hypergraph(args.infile)
    if args.ordered:
        oh = constructions.ordered_expansion(h)
        out = {"order": list(oh.order), "n": oh.n, "edges": oh.hypergraph.m}
        lines = [to_text(oh.hypergraph).rstrip("\n"), "order: " + ",".join(map(str, oh.order))]
        return EXIT_OK, out, None, lines
    expanded, _ = constructions.expansion(h)
    return EXIT_OK, {"n": expanded.n, "edges": expanded.m}, None, [to_text(expanded).rstrip("\n")]


def _read_oriented(path: str) -> OrientedHypergraph:
    with open(path) as fh:
        return OrientedHypergraph.from_json_obj(json.load(fh))


def cmd_blowup(args):
    h0 = _read_oriented(args.h0)
    base = _read_hypergraph(args.pattern)
    oh = constructions.ordered_expansion(base) if args.expand else constructions.OrderedHypergraph(
        base, tuple(range(base.n))
    )
    result = transversal.blowup(h0, oh)
    return EXIT_OK, {"n": result.n, "edges": result.m}, None, [to_text(result).rstrip("\n")]


def cmd_search_h0(args):
    cfg = SearchConfig(n=args.n, s=args.s, c=args.c, seed=args.seed, max_attempts=args.max_attempts)
    h0, attempts = transversal.sample_linear_oriented(cfg, girth_exceeds=args.girth)
    out = {"attempts": attempts, "edges": h0.m, "h0": h0.to_json_obj()}
    lines = [json.dumps(h0.to_json_obj())]
    return EXIT_OK, out, None, lines


def cmd_verify_h0(args):
    h0 = _read_oriented(args.infile)
    if args.exhaustive:
        verdict = transversal.verify_transversal_property(h0, max_triples=args.max_triples)
        out = {"status": verdict.status, "checked": verdict.checked}
        if verdict.status == transversal.VERIFIED:
            return EXIT_OK, out, "verified", [f"verified over {verdict.checked} triples"]
        if verdict.status == transversal.EXHAUSTED:
            return EXIT_BUDGET, out, "budget", ["triple budget exhausted"]
        partition, beta, pi = verdict.counterexample
        out["counterexample"] = {
            "partition": [list(p) for p in partition],
            "beta": list(beta),
            "pi": list(pi),
        }
        return EXIT_REFUTED, out, "counterexample", ["counterexample found"]
    fraction = transversal.transversal_statistics(h0, args.trials, args.seed or 0)
    out = {"fraction": fraction, "trials": args.trials}
    return EXIT_OK, out, None, [f"fraction of satisfied random triples: {fraction:.4f}"]


def cmd_chain_check(args):
    rng = random.Random(args.seed or 0)
    failures = 0
    for _ in range(args.trials):
        if not _one_chain_trial(rng):
            failures += 1
    ok = failures == 0
    out = {"trials": args.trials, "failures": failures}
    verdict = "verified" if ok else "refuted"
    return (EXIT_OK if ok else EXIT_REFUTED), out, verdict, [
        f"chain trials: {args.trials}, failures: {failures}"
    ]


def _one_chain_trial(rng: random.Random) -> bool:
    from .binary_structure import BOTH, DECREASING, INCREASING, classify_monotone
    from .binary_structure import binary_structure as build_tree
    from .binary_structure import level_set

    n = rng.randint(2, 32)
    values = rng.sample(range(2 ** 32), n)
    d = dyadic.dyadic_decompose(values)
    t = d.t
    for color, want in ((dyadic.R, INCREASING), (dyadic.L, DECREASING)):
        eligible = [i for i in range(1, t) if d.beta[i - 1] == color]
        if len(eligible) < 1:
            continue
        chain_len = rng.randint(1, min(3, len(eligible)))
        picked = sorted(rng.sample(eligible, chain_len))
        top_candidates = list(range(picked[-1] + 1, t + 1))
        if not top_candidates:
            continue
        top = rng.choice(top_candidates)
        chain = [rng.choice(d.parts[top - 1])] + [
            rng.choice(d.parts[i - 1]) for i in reversed(picked)
        ]
        kind = classify_monotone(build_tree(chain))
        if kind not in (want, BOTH):
            return False
        expected = frozenset(d.split_levels[i - 1] for i in picked)
        if level_set(chain) != expected:
            return False
    return True


def cmd_lemmas(args):
    verdicts = {}
    greedy = dyadic.verify_greedy_bound(args.greedy_max)
    verdicts["greedy_bound"] = "verified" if not greedy else f"{len(greedy)} violations"
    twocolor = dyadic.verify_two_color_bound(args.twocolor_max)
    verdicts["two_color_bound"] = "verified" if not twocolor else f"{len(twocolor)} violations"

    nmax = 4 if args.full else 3
    bits = 5 if args.full else 4
    families = [(), ((2, 2),)]
    mism = 0
    for n1 in range(2, nmax + 1):
        for n2 in range(2, nmax + 1):
            for fam in families:
                query = AvoidanceQuery(n1, n2, fam)
                if avoidance.f_exact(query)[0] != avoidance.f_bruteforce(query, bits):
                    mism += 1
    verdicts["avoidance_oracle"] = "verified" if mism == 0 else f"{mism} mismatches"

    rng = random.Random(args.seed or 0)
    alpha_bad = 0
    for _ in range(args.alpha_pairs):
        g1 = _random_3graph(4, rng)
        g2 = _random_3graph(4, rng)
        for fam in ((), ((2, 2),)):
            graph = stepping_up.step_up(g1, g2, fam, 4, materialize=True)
            alpha, _ = independence_number(graph.edges)
            a1, _ = independence_number(g1)
            a2, _ = independence_number(g2)
            bound, _ = avoidance.f_exact(AvoidanceQuery(a1 + 2, a2 + 2, fam))
            if alpha > bound:
                alpha_bad += 1
    verdicts["stepping_up_alpha_bound"] = (
        "verified" if alpha_bad == 0 else f"{alpha_bad} violations"
    )

    ok = all(v == "verified" for v in verdicts.values())
    lines = [f"{name}: {v}" for name, v in verdicts.items()]
    return (EXIT_OK if ok else EXIT_REFUTED), verdicts, "verified" if ok else "refuted", lines


def _random_3graph(n: int, rng: random.Random) -> Hypergraph:
    from itertools import combinations

    edges = [e for e in combinations(range(n), 3) if rng.random() < 0.5]
    return Hypergraph(3, n, tuple(edges))


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stepkit",
        description="Exact desk-scale checks for stepping-up constructions, "
        "binary structures, dyadic partitions, and avoidance numbers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, **kwargs):
        p = sub.add_parser(name, help=help_text, **kwargs)
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--out", help="write output to a file instead of stdout")
        p.add_argument("--seed", type=int, default=None)
        return p

    p = add("bstruct", "print the binary structure tree of an integer set")
    p.add_argument("--set", required=True, help="comma-separated integers")
    p.add_argument("--dot", action="store_true", help="emit GraphViz DOT")
    p.set_defaults(handler=cmd_bstruct)

    p = add("delta", "print highest differing bits of consecutive elements")
    p.add_argument("--set", required=True)
    p.set_defaults(handler=cmd_delta)

    p = add("istype", "test whether a set matches a structure type")
    p.add_argument("--set", required=True)
    p.add_argument("--type", required=True, help="type literal, e.g. (1,(2,1))")
    p.set_defaults(handler=cmd_istype)

    p = add("monotype", "test whether a structure type is realizable monotonically")
    p.add_argument("--type", required=True)
    p.set_defaults(handler=cmd_monotype)

    p = add("stepup", "assemble a stepping-up; optionally materialize its edges")
    p.add_argument("--g1", help="left source hypergraph file")
    p.add_argument("--g2", help="right source hypergraph file")
    p.add_argument("--types", default="", help="comma-separated type literals")
    p.add_argument("--n", type=int, help="source vertex count (universe is 2^n)")
    p.add_argument("--materialize", action="store_true")
    p.set_defaults(handler=cmd_stepup)

    p = add("alpha", "exact independence number of a hypergraph file")
    p.add_argument("--in", dest="infile", required=True)
    p.set_defaults(handler=cmd_alpha)

    p = add("free", "search for a copy of a pattern inside a host")
    p.add_argument("--pattern", required=True)
    p.add_argument("--host", required=True)
    p.add_argument("--budget", type=int, default=2_000_000)
    p.set_defaults(handler=cmd_free)

    p = add("f", "exact avoidance number with witness")
    p.add_argument("--n1", type=int)
    p.add_argument("--n2", type=int)
    p.add_argument("--types", default="")
    p.add_argument("--table", type=int, metavar="NMAX", help="emit a TSV grid up to NMAX")
    p.set_defaults(handler=cmd_f)

    p = add("fcheck", "cross-check avoidance values against brute force and the linear bound")
    p.add_argument("--nmax", type=int, default=3)
    p.add_argument("--types", default="")
    p.add_argument("--universe-bits", type=int, default=4)
    p.set_defaults(handler=cmd_fcheck)

    p = add("dyadic", "decompose a set, or verify the counting bounds exhaustively")
    p.add_argument("--set", help="comma-separated integers")
    p.add_argument("--tie", choices=("left", "right"), default="left")
    p.add_argument("--verify-lemmas", action="store_true")
    p.add_argument("--max-size", type=int, default=9)
    p.set_defaults(handler=cmd_dyadic)

    p = add("gk", "materialize the k-th doubling-family hypergraph")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(handler=cmd_gk)

    p = add("fano", "the 7-point line design")
    p.set_defaults(handler=cmd_fano)

    p = add("pg", "line design of the projective plane over F_q")
    p.add_argument("--q", type=int, required=True, choices=(2, 3))
    p.set_defaults(handler=cmd_pg)

    p = add("f4check", "scan the 13-point design for even-or-full vertex subsets")
    p.set_defaults(handler=cmd_f4check)

    p = add("expand", "expansion of a hypergraph (one new vertex per edge)")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--ordered", action="store_true", help="also emit the new-first ordering")
    p.set_defaults(handler=cmd_expand)

    p = add("blowup", "plant an ordered pattern into every edge of an oriented graph")
    p.add_argument("--h0", required=True, help="oriented hypergraph JSON file")
    p.add_argument("--pattern", required=True, help="hypergraph file")
    p.add_argument(
        "--expand",
        action="store_true",
        help="use the ordered expansion of the pattern instead of the pattern itself",
    )
    p.set_defaults(handler=cmd_blowup)

    p = add("search-h0", "sample a random linear oriented hypergraph")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", type=float, required=True)
    p.add_argument("--girth", type=int, default=None, help="require no cycles up to this length")
    p.add_argument("--max-attempts", type=int, default=200)
    p.set_defaults(handler=cmd_search_h0)

    p = add("verify-h0", "verify or sample the transversal-edge property")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--max-triples", type=int, default=5_000_000)
    p.add_argument("--trials", type=int, default=1000)
    p.set_defaults(handler=cmd_verify_h0)

    p = add("chain-check", "randomized trials of the peel-chain structure property")
    p.add_argument("--trials", type=int, default=10_000)
    p.set_defaults(handler=cmd_chain_check)

    p = add("lemmas", "run the exhaustive counting suites and aggregate verdicts")
    p.add_argument("--greedy-max", type=int, default=10)
    p.add_argument("--twocolor-max", type=int, default=9)
    p.add_argument("--alpha-pairs", type=int, default=10)
    p.add_argument("--full", action="store_true", help="acceptance-scale avoidance grid")
    p.set_defaults(handler=cmd_lemmas)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    inputs = {
        key: value
        for key, value in vars(args).items()
        if key not in ("handler", "format", "out") and value is not None
    }
    start = time.perf_counter()
    try:
        code, outputs, verdict, lines = args.handler(args)
    except BudgetExhausted as exc:
        report = RunReport(
            command=args.command,
            inputs=inputs,
            digest=_digest(inputs),
            seed=getattr(args, "seed", None),
            elapsed_s=round(time.perf_counter() - start, 6),
            outputs={"error": str(exc)},
            verdict="budget",
        )
        _emit(args, report, [f"budget exhausted: {exc}"])
        return EXIT_BUDGET
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report = RunReport(
        command=args.command,
        inputs=inputs,
        digest=_digest(inputs),
        seed=getattr(args, "seed", None),
        elapsed_s=round(time.perf_counter() - start, 6),
        outputs=outputs,
        verdict=verdict,
    )
    _emit(args, report, lines)
    return code


if __name__ == "__main__":
    sys.exit(main())
