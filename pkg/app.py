# ginv - exact group inverses for matrices whose digraphs lie in class D
# Command-line front end: matrix files in, reports out.

import argparse
import logging
import sys
from typing import List, Optional, TextIO

from pydantic import ValidationError

from ginv import APP_VERSION, config
from ginv.blockwise import blockwise_group_inverse
from ginv.chains import MuTable, audit_chains, build_table, inverse_from_table, prepare
from ginv.classification import classify_closure
from ginv.digraph import analyze_matrix
from ginv.errors import ClassViolation, GinvError, InvariantViolation, NoGroupInverse
from ginv.linalg import group_inverse_oracle, verify_group_axioms
from ginv.matching import family_report, maximum_matchings
from ginv.models import InverseReport, RunConfig
from ginv.store import format_matrix, load_matrix
from ginv.tasks.generators import GeneratorParams, fresh_seed, generate
from ginv.tasks.sweep import sweep
from ginv.utils.formatting import error_json, to_json

logger = logging.getLogger("ginv")


def configure_logging(level: str = config.LOG_LEVEL) -> None:
    logging.basicConfig(
        level=getattr(logging, level, logging.INFO),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )


# ===== Argument Parsing =====
def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ginv", description="Exact group inverses for class-D digraph matrices")
    parser.add_argument("--version", action="version", version=APP_VERSION)
    parser.add_argument("--log-level", default=config.LOG_LEVEL)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def fmt(p):
        p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("analyze", help="structure of D(A)")
    p.add_argument("input_path", metavar="FILE")
    fmt(p)

    p = sub.add_parser("ginv", help="group inverse")
    p.add_argument("input_path", metavar="FILE")
    p.add_argument("--method", choices=["graph", "block", "oracle", "all"], default="all")
    p.add_argument("--show-mu", action="store_true")
    p.add_argument("--debug-chains", action="store_true")
    fmt(p)

    p = sub.add_parser("matchings", help="maximum matchings and Delta_A")
    p.add_argument("input_path", metavar="FILE")
    p.add_argument("--engine", choices=["auto", "brute", "structure"], default="auto")
    p.add_argument("--limit", type=int, dest="brute_force_limit")
    fmt(p)

    p = sub.add_parser("classify", help="closure verdict for D(A#)")
    p.add_argument("input_path", metavar="FILE")

    p = sub.add_parser("gen", help="generate a random instance")
    _family_args(p)
    p.add_argument("--output", dest="output_path")

    p = sub.add_parser("verify", help="check the group inverse axioms for (A, X)")
    p.add_argument("input_path", metavar="FILE_A")
    p.add_argument("inverse_path", metavar="FILE_X")
    fmt(p)

    p = sub.add_parser("sweep", help="run the checks over a generated family")
    _family_args(p)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--workers", type=int, default=config.WORKERS)
    p.add_argument("--debug-chains", action="store_true")
    p.add_argument("--timing", action="store_true")
    p.add_argument("--output", dest="output_path")
    return parser


def _family_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", choices=["star", "corona", "classD", "singular"], default="classD")
    p.add_argument("--size", type=int)
    p.add_argument("--weight", type=int, default=5)
    p.add_argument("--density", type=float, default=0.5)
    p.add_argument("--max-pendants", type=int, default=3)
    p.add_argument("--max-n", type=int, default=14)
    p.add_argument("--seed", type=int)


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    fields = {k: v for k, v in vars(ns).items() if k in RunConfig.model_fields and v is not None}
    return RunConfig(**fields)


# ===== Subcommands =====
def _analyze(cfg: RunConfig, out: TextIO) -> None:
    report = analyze_matrix(load_matrix(cfg.input_path))
    if cfg.format == "json":
        out.write(to_json(report))
        return
    for key, value in report.model_dump().items():
        out.write(f"{key}={value}\n")


def _ginv(cfg: RunConfig, out: TextIO) -> None:
    a = load_matrix(cfg.input_path)
    results = {}
    table: Optional[MuTable] = None

    if cfg.method in ("graph", "block", "all"):
        try:
            ctx = prepare(a)
        except ClassViolation:
            if cfg.method != "all":
                raise
            logger.info("D(A) outside the formula's class; only the oracle applies")
            ctx = None
        if ctx is not None:
            if cfg.method in ("graph", "all"):
                table = build_table(ctx)
                if cfg.debug_chains:
                    violations = audit_chains(ctx, table)
                    if violations:
                        raise InvariantViolation("; ".join(violations))
                results["graph"] = inverse_from_table(table)
            if cfg.method in ("block", "all"):
                results["block"] = blockwise_group_inverse(a)
    if cfg.method in ("oracle", "all"):
        results["oracle"] = group_inverse_oracle(a)

    methods = list(results)
    first = results[methods[0]]
    agree = all(x == first for x in results.values())
    if not agree:
        raise InvariantViolation(f"methods {methods} disagree")

    delta = str(table.delta) if table is not None else None
    if cfg.format == "json":
        out.write(to_json(InverseReport(
            n=a.n_rows,
            method=cfg.method,
            methods_run=methods,
            methods_agree=agree,
            delta=delta,
            inverse=first.to_strings(),
            mu=table.entries() if cfg.show_mu and table is not None else None,
        )))
        return
    comments = [f"method={cfg.method}", f"methods_run={','.join(methods)}"]
    if delta is not None:
        comments.append(f"Delta={delta}")
    if cfg.show_mu and table is not None:
        for e in table.entries():
            chain = "-".join(map(str, e.chain))
            comments.append(f"mu({e.i},{e.j})={e.mu} beta={e.beta} chain={chain} matchings={e.matchings}")
    out.write(format_matrix(first, comments))


def _matchings(cfg: RunConfig, out: TextIO) -> None:
    fam = maximum_matchings(load_matrix(cfg.input_path), engine=cfg.engine, limit=cfg.brute_force_limit)
    if cfg.format == "json":
        out.write(to_json(family_report(fam)))
        return
    out.write(f"# engine={fam.engine} max_size={fam.max_size} degenerate={fam.degenerate}\n")
    for m in fam.matchings:
        out.write(f"{m.label()} product={m.product}\n")
    out.write(f"Delta={fam.delta}\n")


def _classify(cfg: RunConfig, out: TextIO) -> None:
    out.write(to_json(classify_closure(load_matrix(cfg.input_path))))


def _params(cfg: RunConfig) -> GeneratorParams:
    return GeneratorParams(
        family=cfg.family,
        size=cfg.size,
        weight=cfg.weight,
        density=cfg.density,
        max_pendants=cfg.max_pendants,
        max_n=cfg.max_n,
    )


def _write(cfg: RunConfig, out: TextIO, text: str) -> None:
    if cfg.output_path:
        with open(cfg.output_path, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        out.write(text)


def _gen(cfg: RunConfig, out: TextIO) -> None:
    seed = fresh_seed() if cfg.seed is None else cfg.seed
    instance = generate(_params(cfg), seed)
    _write(cfg, out, format_matrix(instance.matrix, [instance.provenance]))


def _verify(cfg: RunConfig, out: TextIO) -> None:
    verdict = verify_group_axioms(load_matrix(cfg.input_path), load_matrix(cfg.inverse_path))
    if cfg.format == "json":
        out.write(to_json(verdict))
        return
    for key, value in verdict.model_dump(exclude={"schema_version"}).items():
        out.write(f"{key}={str(value).lower()}\n")


def _sweep(cfg: RunConfig, out: TextIO) -> None:
    seed = fresh_seed() if cfg.seed is None else cfg.seed
    report = sweep(_params(cfg), seed, cfg.count, workers=cfg.workers,
                   debug_chains=cfg.debug_chains, timing=cfg.timing)
    _write(cfg, out, to_json(report))


HANDLERS = {
    "analyze": _analyze,
    "ginv": _ginv,
    "matchings": _matchings,
    "classify": _classify,
    "gen": _gen,
    "verify": _verify,
    "sweep": _sweep,
}


# ===== Entry Point =====
def run(cfg: RunConfig, out: TextIO = sys.stdout) -> int:
    """Run one subcommand; returns the process exit code."""
    try:
        HANDLERS[cfg.subcommand](cfg, out)
    except NoGroupInverse as e:
        logger.error(f"No group inverse: {e}")
        out.write(error_json(e.reason, str(e), vanished=e.vanished))
        return e.exit_code
    except GinvError as e:
        logger.error(f"{type(e).__name__}: {e}")
        out.write(error_json(e.reason, str(e)))
        return e.exit_code
    except OSError as e:
        logger.error(f"I/O error: {e}")
        out.write(error_json("io_error", str(e)))
        return 1
    return 0


def main(argv: Optional[List[str]] = None, out: TextIO = sys.stdout) -> int:
    ns = build_parser().parse_args(argv)
    configure_logging(ns.log_level.upper())
    try:
        cfg = config_from_args(ns)
    except ValidationError as e:
        logger.error(f"Invalid arguments: {e}")
        out.write(error_json("invalid_arguments", str(e)))
        return 1
    return run(cfg, out)


if __name__ == "__main__":
    sys.exit(main())
