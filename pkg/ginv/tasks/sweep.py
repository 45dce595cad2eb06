# ginv/tasks/sweep.py
# Batch runs over a generated family. Each instance goes through every check that
# applies to it; failures carry a reproducer matrix.
import logging
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from ginv import config
from ginv.blockwise import blockwise_group_inverse
from ginv.chains import audit_chains, build_table, inverse_from_table, prepare
from ginv.checks import run_invariant_checks
from ginv.classification import check_structure_preservation, classify_closure, pattern_check
from ginv.errors import GinvError, NoGroupInverse
from ginv.linalg import RMatrix, group_inverse_oracle, rank
from ginv.matching import engines_agree
from ginv.models import FailureRecord, InputClass, SweepReport
from ginv.tasks.generators import GeneratorParams, Instance, generate
from ginv.utils.error_report import failure_record

logger = logging.getLogger(__name__)


@dataclass
class InstanceResult:
    index: int
    checks_run: List[str] = field(default_factory=list)
    failures: List[FailureRecord] = field(default_factory=list)
    output_class: str = "none"


class _Recorder:
    def __init__(self, instance: Instance):
        self.instance = instance
        self.result = InstanceResult(index=instance.index)

    def check(self, name: str, fn: Callable[[], List[str]]) -> None:
        self.result.checks_run.append(name)
        try:
            problems = fn()
        except GinvError as e:
            problems = [f"{e.reason}: {e}"]
        for detail in problems:
            self.fail(name, detail)

    def fail(self, name: str, detail: str) -> None:
        self.result.failures.append(failure_record(self.instance, name, detail))


def _expect_no_inverse(label: str, compute: Callable[[], RMatrix]) -> List[str]:
    try:
        compute()
    except NoGroupInverse:
        return []
    return [f"{label} returned a matrix for a singular instance"]


def check_singular(rec: _Recorder) -> None:
    a = rec.instance.matrix
    rec.check("rank_drop", lambda: [] if rank(a) != rank(a @ a) else ["rank(A) == rank(A^2)"])
    rec.check("oracle_refuses", lambda: _expect_no_inverse("oracle", lambda: group_inverse_oracle(a)))
    rec.check("graph_refuses", lambda: _expect_no_inverse("graph formula", lambda: inverse_from_table(build_table(prepare(a)))))
    rec.check("block_refuses", lambda: _expect_no_inverse("blockwise formula", lambda: blockwise_group_inverse(a)))


def check_regular(rec: _Recorder, debug_chains: bool) -> None:
    a = rec.instance.matrix
    try:
        ctx = prepare(a)
    except GinvError as e:
        rec.check("hypotheses", lambda: [f"{e.reason}: {e}"])
        return
    table = build_table(ctx)
    b = inverse_from_table(table)

    def triple() -> List[str]:
        out = []
        if blockwise_group_inverse(a) != b:
            out.append("graph formula != blockwise formula")
        if group_inverse_oracle(a) != b:
            out.append("graph formula != oracle")
        return out

    rec.check("triple_agreement", triple)
    rec.check("invariants", lambda: run_invariant_checks(a, b, table))
    rec.check("symmetric_closure", lambda: [] if pattern_check(b) else ["D(A#) not simple symmetric and strongly connected"])
    if a.n_rows <= config.BRUTE_FORCE_LIMIT:
        rec.check("engines", lambda: [] if engines_agree(a) else ["brute-force and structural matchings differ"])
    if debug_chains:
        rec.check("chain_audit", lambda: audit_chains(ctx, table))

    def closure() -> List[str]:
        verdict = classify_closure(a, b)
        rec.result.output_class = verdict.actual_output_class.value
        out = []
        if not verdict.consistent:
            out.append(f"{verdict.input_class.value}: predicted {verdict.predicted_closure}, actual {verdict.actual_closure}")
        if verdict.input_class == InputClass.OTHER_IN_D and verdict.witness_confirmed is not True:
            out.append(f"witness vertex {verdict.witness_vertex} not confirmed")
        return out + check_structure_preservation(a, b)

    rec.check("closure", closure)


def run_instance(args: Tuple[GeneratorParams, int, int, bool]) -> InstanceResult:
    params, seed, index, debug_chains = args
    rec = _Recorder(generate(params, seed, index))
    if params.family == "singular":
        check_singular(rec)
    else:
        check_regular(rec, debug_chains)
    return rec.result


def sweep(params: GeneratorParams, seed: int, count: int, workers: int = 1,
          debug_chains: bool = False, timing: bool = False) -> SweepReport:
    """Generate ``count`` instances and aggregate every check, ordered by index."""
    started = time.perf_counter()
    jobs = [(params, seed, index, debug_chains) for index in range(count)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run_instance, jobs, chunksize=max(1, count // (4 * workers))))
    else:
        results = [run_instance(job) for job in jobs]
    results.sort(key=lambda r: r.index)

    check_counts: Counter = Counter()
    output_classes: Counter = Counter()
    failures: List[FailureRecord] = []
    for r in results:
        check_counts.update(r.checks_run)
        output_classes[r.output_class] += 1
        failures.extend(r.failures)
    failed = sum(1 for r in results if r.failures)
    elapsed = time.perf_counter() - started
    logger.info(f"sweep {params.family} x{count} seed={seed}: {failed} failed in {elapsed:.2f}s")
    return SweepReport(
        family=params.family,
        count=count,
        seed=seed,
        passed=count - failed,
        failed=failed,
        check_counts=dict(sorted(check_counts.items())),
        output_classes=dict(sorted(output_classes.items())),
        failures=failures,
        wall_time_seconds=round(elapsed, 3) if timing else None,
    )
