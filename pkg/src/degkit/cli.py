"""Command-line interface.

Exit codes: 0 when the command decided its question (yes or no), 1 on
usage or parse errors, 2 when a search hit its resource limit.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .bench import OPERATIONS, run_bench
from .dce import (
    DceInstance,
    EditKind,
    EditSolution,
    Kernel,
    TrivialNo,
    brute_force_solve,
    make_dce,
    solve_e_plus,
    validate_solution,
)
from .dsc import DscInstance, anonymize, dsc_solve
from .errors import InvalidInputError, ParseError, ResourceLimitError
from .factors import f_factor
from .formats import parse_instance, serialize_instance, serialize_solution
from .generators import REDUCTION_KINDS, gen_cubic, gen_from_reduction, gen_random_dce
from .graph import add_edges, degree_sequence
from .nce import make_nce, nce_traceback
from .winwin import TrivialYes, kernelize_r


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _load(path: str) -> DceInstance | DscInstance:
    return parse_instance(Path(path).read_text())


def _edges_to_solution(edges) -> EditSolution:
    return EditSolution(tuple(("add", u, v) for u, v in sorted(edges)))


def _limits(args) -> dict:
    return {"node_limit": args.limit} if args.limit else {}


def _cmd_solve(args) -> int:
    inst = _load(args.instance)
    if isinstance(inst, DscInstance):
        delta = args.delta_prime or inst.graph.max_degree() + inst.k
        enum_kw = {"enum_limit": args.limit} if args.limit else {}
        edges = dsc_solve(DscInstance(inst.graph, inst.k, inst.prop, delta), **enum_kw)
        sol = None if edges is None else _edges_to_solution(edges)
        if sol is not None and args.verify:
            final = degree_sequence(add_edges(inst.graph, edges))
            assert inst.prop.fulfills(final), "solution failed verification"
    else:
        if inst.op_kind is EditKind.EDGE_ADDITION:
            sol = solve_e_plus(inst, **_limits(args))
        else:
            sol = brute_force_solve(inst, **_limits(args))
        if sol is not None and args.verify:
            validate_solution(inst, sol)
    text = serialize_solution(sol)
    if sol is not None and args.verify:
        text += "c verified\n"
    _emit(text, args.output)
    return 0


def _cmd_kernelize(args) -> int:
    inst = _load(args.instance)
    if not isinstance(inst, DceInstance):
        raise InvalidInputError("kernelization applies to dce instances")
    if args.param == "kr":
        from .dce import kernelize_kr

        result = kernelize_kr(inst)
    else:
        result = kernelize_r(inst)
    if isinstance(result, TrivialNo):
        _emit("NO\n", args.output)
    elif isinstance(result, TrivialYes):
        _emit(serialize_solution(result.witness), args.output)
    else:
        assert isinstance(result, Kernel)
        mapping = " ".join(str(v + 1) for v in result.old_of_new)
        text = f"c kernel of {args.instance}\nc original-vertices {mapping}\n"
        _emit(text + serialize_instance(result.instance), args.output)
    return 0


def _cmd_nce(args) -> int:
    inst = _load(args.instance)
    if not isinstance(inst, DceInstance):
        raise InvalidInputError("the numeric problem derives from dce instances")
    target = inst.k if args.target is None else args.target
    numeric = make_nce(
        inst.graph.degrees(), target, inst.r, [set(s) for s in inst.tau.lists]
    )
    witness = nce_traceback(numeric)
    if witness is None:
        _emit("NO\n", args.output)
    else:
        _emit("YES " + " ".join(map(str, witness)) + "\n", args.output)
    return 0


def _cmd_ffactor(args) -> int:
    inst = _load(args.instance)
    g = inst.graph
    if args.demands:
        demands = [int(tok) for tok in args.demands.split(",")]
    else:
        demands = [args.uniform] * g.vertex_count
    factor = f_factor(g, demands)
    if factor is None:
        _emit("NO\n", args.output)
    else:
        lines = [f"YES {len(factor)}"]
        lines += [f"e {u + 1} {v + 1}" for u, v in sorted(factor)]
        _emit("\n".join(lines) + "\n", args.output)
    return 0


def _cmd_reduce(args) -> int:
    inst = _load(args.instance)
    cover = None
    if args.cover:
        cover = {int(tok) - 1 for tok in args.cover.split(",")}
    out = gen_from_reduction(args.source, inst.graph, args.size, cover)
    lines = [
        f"c reduction {args.source} h={args.size} from {args.instance}",
    ]
    for v in range(out.instance.graph.vertex_count):
        lines.append(f"c role {v + 1} {out.provenance[v]}")
    _emit("\n".join(lines) + "\n" + serialize_instance(out.instance), args.output)
    return 0


def _cmd_anonymize(args) -> int:
    inst = _load(args.instance)
    edges = anonymize(inst.graph, args.anonymity, args.budget)
    sol = None if edges is None else _edges_to_solution(edges)
    if edges is not None and args.verify:
        from .dsc import anonymity_fulfills

        final = degree_sequence(add_edges(inst.graph, edges))
        assert anonymity_fulfills(final, args.anonymity), "solution failed verification"
    text = serialize_solution(sol)
    if sol is not None and args.verify:
        text += "c verified\n"
    _emit(text, args.output)
    return 0


def _cmd_gen(args) -> int:
    if args.kind == "cubic":
        g = gen_cubic(args.n, args.seed)
        inst = make_dce(g, 0, 3, [{3}] * g.vertex_count)
    else:
        inst = gen_random_dce(
            args.n, args.edge_prob, args.k, args.r, args.density, args.seed
        )
    _emit(serialize_instance(inst), args.output)
    return 0


def _cmd_bench(args) -> int:
    records = run_bench(args.corpus, args.op, args.records, jobs=args.jobs)
    failures = sum(1 for rec in records if rec.result.startswith("error"))
    print(f"ran {len(records)} instances, {failures} errors -> {args.records}")
    return 0


def build_parser() -> _Parser:
    parser = _Parser(prog="degkit", description=__doc__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="generator seed")
    common.add_argument("--verify", action="store_true", help="re-check YES outputs")
    common.add_argument("--limit", type=int, default=None, help="search node budget")
    common.add_argument("-o", "--output", default=None, help="write output to a file")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", parents=[common], help="decide an instance")
    p.add_argument("instance")
    p.add_argument("--delta-prime", type=int, default=None)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("kernelize", parents=[common], help="shrink an instance")
    p.add_argument("instance")
    p.add_argument("--param", choices=("kr", "r"), default="kr")
    p.set_defaults(func=_cmd_kernelize)

    p = sub.add_parser("nce", parents=[common], help="numeric completion on the degrees")
    p.add_argument("instance")
    p.add_argument("--target", type=int, default=None)
    p.set_defaults(func=_cmd_nce)

    p = sub.add_parser("ffactor", parents=[common], help="exact-degree subgraph")
    p.add_argument("instance")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--demands", help="comma-separated per-vertex degrees")
    group.add_argument("--uniform", type=int, help="same target degree everywhere")
    p.set_defaults(func=_cmd_ffactor)

    p = sub.add_parser("reduce", parents=[common], help="build a hardness instance")
    p.add_argument("instance")
    p.add_argument("--from", dest="source", choices=REDUCTION_KINDS, required=True)
    p.add_argument("--size", type=int, required=True, help="h of the source problem")
    p.add_argument("--cover", help="comma-separated 1-based cover vertices")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("anonymize", parents=[common], help="k-anonymize by edge additions")
    p.add_argument("instance")
    p.add_argument("-k", "--anonymity", type=int, required=True)
    p.add_argument("-s", "--budget", type=int, required=True)
    p.set_defaults(func=_cmd_anonymize)

    p = sub.add_parser("gen", parents=[common], help="generate instances")
    p.add_argument("kind", choices=("dce", "cubic"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--edge-prob", type=float, default=0.2)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--r", type=int, default=3)
    p.add_argument("--density", type=float, default=0.5)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("bench", parents=[common], help="run a corpus, record JSONL")
    p.add_argument("corpus")
    p.add_argument("--op", choices=OPERATIONS, default="solve")
    p.add_argument("--records", required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=_cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, InvalidInputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
