"""Command-line front end: ``asm``, ``det``, ``hyperdet``, ``macdonald``, ``dyson``, ``verify``, ``cache``."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Mapping, Sequence, TextIO

import yaml

from .arith.laurent_poly import LaurentPoly
from .arith.rational_function import DEFAULT_SYMBOL, LAMBDA_SYMBOL, RationalFunction, to_string
from .asm.alternating_sign import count_formula, enumerate_asms, summarize_asms
from .config import Config, load_config
from .detlib.determinants import det_lambda, matrix_from_json, matrix_to_json
from .dyson.dyson_solver import solve_dyson
from .hyper.hyperdet_solver import PhiConvention, cayley_hyperdet, solve_lambda_hyperdet
from .hyper.hypermatrix import HyperMatrix
from .pipeline import GridPoint, run_verification_suite, select_identities
from .reporter.console_reporter import export_calculation_log, render_reports, render_result, reports_to_json
from .reporter.excel_reporter import export_reports_to_excel
from .symfun.cache import MacdonaldCache
from .symfun.macdonald import clear_memory_cache, macdonald_P, macdonald_Q
from .symfun.partitions import Partition
from .symfun.symmetric import SymFun
from .utils.errors import BudgetExceededError, CacheError, ConfigError, InputFormatError
from .utils.warnings import format_warning
from .verify.identities import IDENTITIES

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2


class UsageError(ValueError):
    """Raised by the argument parser instead of exiting the process."""


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


@dataclass
class _Context:
    config: Config
    stdout: TextIO
    as_json: bool

    def emit(self, text: str) -> None:
        print(text, file=self.stdout)

    def emit_json(self, payload: Any) -> None:
        self.emit(json.dumps(payload, ensure_ascii=False, indent=2))


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=int, default=None, help="Maximum number of summation terms")
    common.add_argument("--cache-dir", type=Path, default=None, help="Macdonald disk cache directory")
    common.add_argument("--json", action="store_true", help="Machine-readable output")
    return common


def build_parser() -> argparse.ArgumentParser:
    """Construct the argument parser for every subcommand."""
    common = _common_options()
    parser = _ArgumentParser(prog="asm-hyperdet", description="Exact lambda-determinant and Macdonald toolkit")
    commands = parser.add_subparsers(dest="command", required=True)

    asm = commands.add_parser("asm", parents=[common], help="Alternating sign matrices")
    asm.add_argument("action", choices=("count", "list", "stats"))
    asm.add_argument("--n", type=int, required=True)

    det = commands.add_parser("det", parents=[common], help="lambda-determinant of a square matrix")
    det.add_argument("--lambda", dest="lam", required=True, help="'sym' or a rational number")
    det.add_argument("--input", "--matrix", dest="input", type=Path, required=True, help="Matrix JSON file")

    hyper = commands.add_parser("hyperdet", parents=[common], help="Cayley or lambda-hyperdeterminant")
    hyper.add_argument("--mode", choices=("cayley", "lambda"), required=True)
    hyper.add_argument("--convention", choices=[c.value for c in PhiConvention], default=None)
    hyper.add_argument("--lambda", dest="lam", default=None, help="'sym' or a rational number")
    hyper.add_argument("--input", type=Path, required=True, help="Hypermatrix JSON file")

    macdonald = commands.add_parser("macdonald", parents=[common], help="Macdonald function at t = q^m")
    macdonald.add_argument("--partition", required=True, help="Comma separated parts, e.g. 2,1")
    macdonald.add_argument("--m", type=int, required=True)
    macdonald.add_argument("--basis", choices=("p", "m"), default="p")
    macdonald.add_argument("--kind", choices=("P", "Q"), default="Q")

    dyson = commands.add_parser("dyson", parents=[common], help="Rectangular q-Dyson coefficient")
    dyson.add_argument("--k", type=int, required=True)
    dyson.add_argument("--s", type=int, required=True)
    dyson.add_argument("--m", type=int, required=True)

    verify = commands.add_parser("verify", parents=[common], help="Run verification identities")
    verify.add_argument("identity", choices=("all", *IDENTITIES))
    verify.add_argument("--k", type=int, default=None)
    verify.add_argument("--s", type=int, default=None)
    verify.add_argument("--m", type=int, default=None)
    verify.add_argument("--convention", choices=("both", *[c.value for c in PhiConvention]), default="both")
    verify.add_argument("--seed", type=int, default=None)
    verify.add_argument("--matrix", type=Path, default=None, help="YAML file listing (k, s, m) grid points")
    verify.add_argument("--excel", type=Path, default=None, help="Write an Excel workbook of the reports")
    verify.add_argument("--trace", type=Path, default=None, help="Write the run trace as JSON")

    cache = commands.add_parser("cache", parents=[common], help="Macdonald disk cache administration")
    cache.add_argument("action", choices=("stat", "clear", "export"))
    cache.add_argument("--output", type=Path, default=None, help="Export destination")
    return parser


# ----------------------------------------------------------------------
# Input helpers
# ----------------------------------------------------------------------
def _load_json(path: Path) -> Any:
    try:
        return json.loads(path.read_text(encoding="utf-8"))
    except FileNotFoundError as exc:
        raise InputFormatError(f"{path}: file not found") from exc
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"{path}: not valid JSON: {exc}") from exc


def _parse_lambda(text: str | None) -> tuple[Any, str]:
    """Return the lambda value and the symbol matrix entries are parsed in."""
    if text is None:
        raise UsageError("--lambda is required in lambda mode")
    if text == "sym":
        return RationalFunction.gen(LAMBDA_SYMBOL), LAMBDA_SYMBOL
    try:
        return Fraction(text), DEFAULT_SYMBOL
    except (ValueError, ZeroDivisionError) as exc:
        raise InputFormatError(f"--lambda expects 'sym' or a rational number, got {text!r}") from exc


def load_grid(path: Path) -> list[GridPoint]:
    """Read ``points: [[k, s, m], ...]`` (or a bare list, or ``{k, s, m}`` mappings)."""
    try:
        payload = yaml.safe_load(path.read_text(encoding="utf-8"))
    except FileNotFoundError as exc:
        raise InputFormatError(f"{path}: file not found") from exc
    except yaml.YAMLError as exc:
        raise InputFormatError(f"{path}: not valid YAML: {exc}") from exc
    items = payload.get("points") if isinstance(payload, Mapping) else payload
    if not isinstance(items, list) or not items:
        raise InputFormatError(f"{path}: expected a non-empty list of (k, s, m) points")
    points: list[GridPoint] = []
    for item in items:
        try:
            if isinstance(item, Mapping):
                point = (int(item["k"]), int(item["s"]), int(item["m"]))
            else:
                k, s, m = (int(v) for v in item)
                point = (k, s, m)
        except (KeyError, TypeError, ValueError) as exc:
            raise InputFormatError(f"{path}: bad grid point {item!r}") from exc
        points.append(point)
    return points


def _render_value(value: Any) -> str:
    if isinstance(value, (LaurentPoly, SymFun)):
        return value.to_string()
    if isinstance(value, (int, Fraction, RationalFunction)):
        return to_string(value)
    return str(value)


# ----------------------------------------------------------------------
# Subcommands
# ----------------------------------------------------------------------
def _run_asm(args: argparse.Namespace, ctx: _Context) -> int:
    if args.action == "count":
        count = count_formula(args.n)
        if ctx.as_json:
            ctx.emit_json({"n": args.n, "count": count})
        else:
            ctx.emit(str(count))
    elif args.action == "list":
        matrices = list(enumerate_asms(args.n, ctx.config.asm_ceiling))
        if ctx.as_json:
            ctx.emit_json([asm.to_json() for asm in matrices])
        else:
            blocks = ["\n".join(" ".join(f"{v:>2}" for v in row) for row in asm.rows) for asm in matrices]
            ctx.emit("\n\n".join(blocks))
    else:
        result, trace = summarize_asms(args.n, ctx.config.asm_ceiling)
        if ctx.as_json:
            ctx.emit_json({"result": result, "trace": trace})
        else:
            rows = [
                ("count", result["count"]),
                ("count formula", result["count_formula"]),
                ("i(X) distribution", result["inversion_distribution"]),
                ("n(X) distribution", result["negative_distribution"]),
            ]
            ctx.emit(render_result(f"Alt_{args.n}", rows))
    return EXIT_OK


def _run_det(args: argparse.Namespace, ctx: _Context) -> int:
    lam, symbol = _parse_lambda(args.lam)
    rows, names = matrix_from_json(_load_json(args.input), symbol)
    value = det_lambda(rows, lam, ctx.config.det_lambda_max_side)
    if ctx.as_json:
        ctx.emit_json({**matrix_to_json(rows), "lambda": args.lam, "variables": names, "value": _render_value(value)})
    else:
        ctx.emit(render_result(f"det_lambda ({args.input.name})", [("lambda", args.lam), ("value", _render_value(value))]))
    return EXIT_OK


def _run_hyperdet(args: argparse.Namespace, ctx: _Context) -> int:
    payload = _load_json(args.input)
    budget = ctx.config.budget_terms
    if args.mode == "cayley":
        matrix = HyperMatrix.from_json(payload)
        value = cayley_hyperdet(matrix, budget)
        trace: dict[str, Any] = {"n": matrix.n, "dim": matrix.dim}
    else:
        if args.convention is None:
            raise UsageError("--convention is required in lambda mode")
        lam, symbol = _parse_lambda(args.lam)
        matrix = HyperMatrix.from_json(payload, symbol)
        value, trace = solve_lambda_hyperdet(matrix, lam, args.convention, budget)
    if ctx.as_json:
        document = {**matrix.to_json(), "mode": args.mode, "convention": args.convention}
        ctx.emit_json({**document, "value": _render_value(value), "trace": trace})
    else:
        rows = [("mode", args.mode), ("value", _render_value(value))]
        if args.convention:
            rows.insert(1, ("convention", args.convention))
        ctx.emit(render_result(f"Hyperdeterminant ({args.input.name})", rows))
    return EXIT_OK


def _run_macdonald(args: argparse.Namespace, ctx: _Context) -> int:
    partition = Partition.parse(args.partition)
    cache = MacdonaldCache(ctx.config.cache_dir)
    build = macdonald_Q if args.kind == "Q" else macdonald_P
    value = build(partition, args.m, cache, ctx.config.degree_ceiling, args.basis)
    if ctx.as_json:
        ctx.emit_json(value.to_json())
    else:
        ctx.emit(render_result(f"{args.kind}{partition}(q, q^{args.m})", [("basis", args.basis), ("value", value.to_string())]))
    return EXIT_OK


def _run_dyson(args: argparse.Namespace, ctx: _Context) -> int:
    config = ctx.config
    value, trace = solve_dyson(
        args.k, args.s, args.m, budget=config.budget_terms, max_s=config.dyson_max_s, max_m=config.dyson_max_m
    )
    if ctx.as_json:
        ctx.emit_json(value.to_json())
    else:
        rows = [("value", value.to_string()), ("F terms", trace["f_terms"]), ("truncation", trace["truncation"])]
        ctx.emit(render_result(f"Dyson coefficient (k={args.k}, s={args.s}, m={args.m})", rows))
    return EXIT_OK


def _verify_points(args: argparse.Namespace) -> list[GridPoint] | None:
    given = [value is not None for value in (args.k, args.s, args.m)]
    if any(given):
        if not all(given):
            raise UsageError("--k, --s and --m must be given together")
        if args.matrix is not None:
            raise UsageError("--matrix cannot be combined with --k/--s/--m")
        return [(args.k, args.s, args.m)]
    if args.matrix is not None:
        return load_grid(args.matrix)
    return None


def _run_verify(args: argparse.Namespace, ctx: _Context) -> int:
    conventions = tuple(PhiConvention) if args.convention == "both" else (PhiConvention.parse(args.convention),)
    artifacts = run_verification_suite(
        select_identities([args.identity]),
        ctx.config,
        points=_verify_points(args),
        conventions=conventions,
        seed=args.seed,
    )
    if ctx.as_json:
        ctx.emit(reports_to_json(artifacts.reports))
    else:
        ctx.emit(render_reports(artifacts.reports, artifacts.trace))

    saved: list[tuple[str, Path]] = []
    if args.excel is not None:
        saved.append(("Excel report", export_reports_to_excel(artifacts.reports, artifacts.trace, args.excel)))
    if args.trace is not None:
        saved.append(("Run trace", export_calculation_log(artifacts.trace, args.trace)))
    if saved and not ctx.as_json:
        ctx.emit("")
        ctx.emit("Artifacts saved:")
        for label, path in saved:
            ctx.emit(f"  {label:<13}: {path}")
    return EXIT_VERIFICATION_FAILED if artifacts.failed else EXIT_OK


def _run_cache(args: argparse.Namespace, ctx: _Context) -> int:
    cache = MacdonaldCache(ctx.config.cache_dir)
    if args.action == "stat":
        rows = cache.stat()
        if ctx.as_json:
            ctx.emit_json(rows)
        else:
            lines = [f"m={row['m']} basis={row['basis']} {row['partition']}" for row in rows]
            ctx.emit(render_result(f"Macdonald cache ({cache.directory})", [("entries", len(rows))]))
            for line in lines:
                ctx.emit(line)
    elif args.action == "clear":
        removed = cache.clear()
        clear_memory_cache()
        if ctx.as_json:
            ctx.emit_json({"removed_files": removed})
        else:
            ctx.emit(f"removed {removed} cache file(s)")
    else:
        documents = cache.export(args.output)
        if args.output is None or ctx.as_json:
            ctx.emit_json(documents)
        else:
            ctx.emit(f"exported {len(documents)} cache document(s) to {args.output}")
    return EXIT_OK


HANDLERS: dict[str, Callable[[argparse.Namespace, _Context], int]] = {
    "asm": _run_asm,
    "det": _run_det,
    "hyperdet": _run_hyperdet,
    "macdonald": _run_macdonald,
    "dyson": _run_dyson,
    "verify": _run_verify,
    "cache": _run_cache,
}


def _diagnostic(exc: BaseException) -> str:
    message = str(exc)
    if message.startswith("["):
        return message
    if isinstance(exc, ConfigError):
        return format_warning("CONFIG", message)
    if isinstance(exc, OSError):
        return format_warning("CACHE_IO", message)
    if isinstance(exc, ZeroDivisionError):
        return format_warning("POLE_AT_POINT", message)
    return format_warning("USAGE", message)


def dispatch(
    argv: Sequence[str] | None = None,
    stdout: TextIO | None = None,
    stderr: TextIO | None = None,
    environ: Mapping[str, str] | None = None,
) -> int:
    """Run one command; returns 0 on success, 1 on verification failure, 2 on usage or input errors."""

    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    try:
        args = build_parser().parse_args(list(sys.argv[1:] if argv is None else argv))
        overrides = {
            "budget_terms": args.budget,
            "cache_dir": str(args.cache_dir) if args.cache_dir is not None else None,
            "output": "json" if args.json else None,
        }
        config = load_config(overrides, environ)
        ctx = _Context(config=config, stdout=out, as_json=config.output == "json")
        return HANDLERS[args.command](args, ctx)
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except (BudgetExceededError, CacheError, ValueError, ZeroDivisionError, OSError) as exc:
        print(f"error: {_diagnostic(exc)}", file=err)
        return EXIT_USAGE


def main() -> None:
    """Console-script entry point."""
    sys.exit(dispatch())


__all__ = ["EXIT_OK", "EXIT_USAGE", "EXIT_VERIFICATION_FAILED", "UsageError", "build_parser", "dispatch", "load_grid", "main"]
