"""Benchmark harness: run an operation over a corpus, append JSONL records."""

from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path

from .dce import (
    DceInstance,
    EditKind,
    Kernel,
    TrivialNo,
    brute_force_solve,
    solve_e_plus,
)
from .dsc import DscInstance, dsc_solve
from .errors import DegkitError
from .formats import parse_instance
from .winwin import TrivialYes, kernelize_r

OPERATIONS = ("solve", "kernelize-kr", "kernelize-r")


@dataclass(frozen=True)
class RunRecord:
    instance: str
    operation: str
    parameters: dict = field(default_factory=dict)
    result: str = ""
    vertices_before: int = 0
    vertices_after: int | None = None
    wall_ms: float = 0.0

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


def _solve_any(inst: DceInstance | DscInstance) -> str:
    if isinstance(inst, DscInstance):
        delta = inst.delta_prime
        if delta is None:
            delta = inst.graph.max_degree() + inst.k
        edges = dsc_solve(DscInstance(inst.graph, inst.k, inst.prop, delta))
        return "no" if edges is None else f"yes {len(edges)}"
    if inst.op_kind is EditKind.EDGE_ADDITION:
        sol = solve_e_plus(inst)
    else:
        sol = brute_force_solve(inst)
    return "no" if sol is None else f"yes {len(sol.edits)}"


def _kernelize(inst: DceInstance | DscInstance, param: str) -> tuple[str, int | None]:
    if not isinstance(inst, DceInstance):
        raise DegkitError("kernelization operates on dce instances")
    from .dce import kernelize_kr

    result = kernelize_kr(inst) if param == "kr" else kernelize_r(inst)
    if isinstance(result, TrivialNo):
        return "trivial-no", 0
    if isinstance(result, TrivialYes):
        return f"trivial-yes {len(result.witness.edits)}", 0
    assert isinstance(result, Kernel)
    return "kernel", result.instance.graph.vertex_count


def run_one(path: Path, operation: str) -> RunRecord:
    started = time.perf_counter()
    name = path.name
    try:
        inst = parse_instance(path.read_text())
        before = inst.graph.vertex_count
        params: dict = {"k": inst.k}
        if isinstance(inst, DceInstance):
            params.update(r=inst.r, op=inst.op_kind.value)
        else:
            params.update(property=inst.prop.name)
        after: int | None = None
        if operation == "solve":
            result = _solve_any(inst)
        elif operation in ("kernelize-kr", "kernelize-r"):
            result, after = _kernelize(inst, operation.split("-")[1])
        else:
            raise DegkitError(f"unknown operation {operation!r}")
        return RunRecord(
            instance=name,
            operation=operation,
            parameters=params,
            result=result,
            vertices_before=before,
            vertices_after=after,
            wall_ms=(time.perf_counter() - started) * 1000.0,
        )
    except Exception as exc:  # per-instance failures recorded, harness continues
        return RunRecord(
            instance=name,
            operation=operation,
            result=f"error: {exc}",
            wall_ms=(time.perf_counter() - started) * 1000.0,
        )


def run_bench(
    corpus_dir: str | Path,
    operation: str,
    output_path: str | Path,
    jobs: int = 1,
) -> list[RunRecord]:
    """Run `operation` on every instance file; one JSONL record per run.

    Instances run on a bounded worker pool; the single writer appends
    records as runs complete.
    """
    corpus = sorted(
        p for p in Path(corpus_dir).iterdir() if p.suffix in (".dce", ".dsc")
    )
    records: list[RunRecord] = []
    output = Path(output_path)
    with output.open("a") as sink:
        if jobs <= 1:
            for path in corpus:
                record = run_one(path, operation)
                records.append(record)
                sink.write(record.to_json() + "\n")
        else:
            with ThreadPoolExecutor(max_workers=jobs) as pool:
                for record in pool.map(lambda p: run_one(p, operation), corpus):
                    records.append(record)
                    sink.write(record.to_json() + "\n")
    return records
