#!/usr/bin/env python3
"""
Command line front end of cojump.

    cojump estimate X1.csv X2.csv --c 0.1 --beta 0.99 [--async] [--upto 0.5]
    cojump simulate --config configs/model1.cfg --seed 7 --out runs/sim
    cojump mc --config configs/model1.cfg --n-paths 500 --threads 8 --out runs/mc
    cojump sweep --config configs/model1.cfg --n-paths 300 --out runs/sweep
    cojump classify --config configs/model1.cfg --n-paths 500 --out runs/classify

Exit status: 0 on success, 3 when an input file cannot be parsed, 4 when a
parameter, configuration or grid is invalid, 5 when a statistic is
degenerate and --strict is set.
"""

import argparse
import logging
import os
import sys
import time
from dataclasses import asdict, dataclass, field
from datetime import datetime
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence

from cojump import __version__
from cojump.core.grid import SyncPanel
from cojump.core.tabular import read_async_panel
from cojump.core.threshold import threshold_value, validate_threshold_spec
from cojump.enums import SimulationParameter
from cojump.estimators.asynchronous import hy_threshold_ic
from cojump.estimators.threshold import estimate_covariation, threshold_iv
from cojump.exceptions import (
    EXIT_SUCCESS,
    CojumpError,
    DegenerateStatisticError,
    InsufficientDataError,
    exit_code_for,
)
from cojump.experiments import export
from cojump.experiments.classification import classification_study
from cojump.experiments.monte_carlo import run_monte_carlo
from cojump.experiments.statistics import normalized_bias_stats
from cojump.experiments.sweep import sweep_thresholds
from cojump.experiments.types import DEFAULT_BETA_VALUES, DEFAULT_C_VALUES, SweepGrid
from cojump.simulate.factory import build_paths
from cojump.simulate.types import RngSeed
from cojump.utils.config import DEFAULT_BETA, DEFAULT_C, ConfigurationManager
from cojump.utils.logging import configure_logging, log_run, write_to_log_file

# Configure logger
logger = logging.getLogger("cojump.cli")

MANIFEST_NAME = "manifest.json"


@dataclass
class RunManifest:
    """
    Everything needed to reproduce one command.

    Attributes:
        command: Subcommand name
        arguments: Parsed command line arguments
        config: Configuration snapshot after overrides
        seed: Resolved master seed
        version: cojump version
        outputs: Written files, relative to the output directory
        started_at: ISO timestamp
        elapsed_seconds: Wall clock duration
    """

    command: str
    arguments: Dict[str, Any]
    config: Dict[str, Any]
    seed: Optional[int]
    version: str = __version__
    outputs: List[str] = field(default_factory=list)
    started_at: str = field(default_factory=lambda: datetime.now().isoformat())
    elapsed_seconds: float = 0.0

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    def write(self, out_dir: Path) -> Path:
        path = out_dir / MANIFEST_NAME
        write_to_log_file(self.to_dict(), str(path))
        return path


def _arguments(args: argparse.Namespace) -> Dict[str, Any]:
    return {key: value for key, value in vars(args).items() if key != "handler"}


def _configuration(args: argparse.Namespace) -> ConfigurationManager:
    manager = ConfigurationManager.from_file(args.config) if args.config else ConfigurationManager()
    manager.update_config({
        SimulationParameter.MODEL: args.model,
        SimulationParameter.LAMBDA1: args.lambda1,
        SimulationParameter.LAMBDA3: args.lambda3,
        SimulationParameter.RHO: args.rho,
        SimulationParameter.RHO_J: args.rho_j,
        SimulationParameter.HORIZON_DAYS: args.horizon_days,
    })
    for name, parameter in (("c", SimulationParameter.C), ("beta", SimulationParameter.BETA),
                            ("n_paths", SimulationParameter.N_PATHS), ("threads", SimulationParameter.THREADS)):
        if getattr(args, name, None) is not None:
            manager.update_config({parameter: getattr(args, name)})
    return manager


def _out_dir(args: argparse.Namespace) -> Path:
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    return out_dir


def _finish(manifest: RunManifest, out_dir: Path, started: float, outputs: Sequence[Path]) -> None:
    manifest.outputs = sorted(str(path.relative_to(out_dir)) for path in outputs)
    manifest.elapsed_seconds = time.perf_counter() - started
    manifest.write(out_dir)
    log_run(manifest.command, manifest.arguments, {"outputs": manifest.outputs})
    logger.info(f"{manifest.command}: wrote {len(outputs)} file(s) and the manifest to {out_dir}")


def cmd_estimate(args: argparse.Namespace) -> None:
    """Estimate on two external path files."""
    started = time.perf_counter()
    spec = validate_threshold_spec(args.c, args.beta)
    panel = read_async_panel(args.file1, args.file2)

    if args.use_async:
        window = panel.upto(args.upto) if args.upto is not None else panel
        r_h = threshold_value(spec, panel.h)
        report: Dict[str, Any] = {
            "mode": "async",
            "ic_hat": hy_threshold_ic(window, r_h),
            "iv1_hat": threshold_iv(window.path1.returns, r_h),
            "iv2_hat": threshold_iv(window.path2.returns, r_h),
            "h": panel.h,
            "r_h": [r_h, r_h],
        }
    else:
        sync = SyncPanel.from_paths(panel.path1, panel.path2)
        estimates = estimate_covariation(sync, spec, upto=args.upto)
        report = {"mode": "sync", **estimates.to_dict()}
        if estimates.avar_hat <= 0 or estimates.rho_hat is None:
            message = "Degenerate statistics: zero variance estimate or undefined correlation"
            if args.strict:
                raise DegenerateStatisticError(message, component="cli")
            logger.warning(message)
    report.update({"c": spec.c, "beta": spec.beta, "upto": args.upto})

    if args.out is None:
        print(export.dumps(report))
        return
    out_dir = _out_dir(args)
    manifest = RunManifest("estimate", _arguments(args), {"c": spec.c, "beta": spec.beta}, None)
    _finish(manifest, out_dir, started, [export.write_json(report, out_dir / "estimates.json")])


def cmd_simulate(args: argparse.Namespace) -> None:
    """Simulate one bundle and write its series and truths."""
    started = time.perf_counter()
    manager = _configuration(args)
    config = manager.to_model_config()
    seed = manager.resolve_seed(args.seed)
    bundle = build_paths(config, RngSeed(seed, args.path_index))

    out_dir = _out_dir(args)
    outputs = [
        bundle.write_csv(out_dir / "bundle.csv"),
        bundle.write_panel_csv(out_dir / "panel.csv"),
        bundle.write_truths(out_dir / "truths.json"),
    ]
    manifest = RunManifest("simulate", _arguments(args), manager.snapshot(), seed)
    _finish(manifest, out_dir, started, outputs)


def cmd_mc(args: argparse.Namespace) -> None:
    """Run a Monte Carlo bias study."""
    started = time.perf_counter()
    manager = _configuration(args)
    config = manager.to_model_config()
    spec = manager.threshold_spec()
    seed = manager.resolve_seed(args.seed)
    summary = run_monte_carlo(config, spec, manager.n_paths(), seed, threads=manager.threads(),
                              progress=args.progress)

    out_dir = _out_dir(args)
    export.write_summary(summary, out_dir / "summary.json", out_dir / "records.csv")
    outputs = [out_dir / "summary.json", out_dir / "records.csv"]
    try:
        stats = normalized_bias_stats(summary)
        export.write_normalized_stats(stats, out_dir / "normalized.json", out_dir / "qq.csv")
        outputs += [out_dir / "normalized.json", out_dir / "qq.csv"]
    except InsufficientDataError as e:
        if args.strict:
            raise DegenerateStatisticError(str(e), component="cli", original_exception=e)
        logger.warning(f"Normalized bias statistics skipped: {e}")

    manifest = RunManifest("mc", _arguments(args), manager.snapshot(), seed)
    _finish(manifest, out_dir, started, outputs)
    if args.strict and (summary.n_failed or summary.n_normalized_undefined):
        raise DegenerateStatisticError(
            f"{summary.n_failed} failed paths and {summary.n_normalized_undefined} undefined normalized biases",
            component="cli",
        )


def cmd_sweep(args: argparse.Namespace) -> None:
    """Run a threshold sweep."""
    started = time.perf_counter()
    manager = _configuration(args)
    config = manager.to_model_config()
    seed = manager.resolve_seed(args.seed)
    grid = SweepGrid(tuple(args.c_values), tuple(args.beta_values))
    result = sweep_thresholds(config, grid, manager.n_paths(), seed, threads=manager.threads(),
                              progress=args.progress)

    out_dir = _out_dir(args)
    export.write_sweep(result, out_dir / "sweep.csv", out_dir / "sweep.json")
    manifest = RunManifest("sweep", _arguments(args), manager.snapshot(), seed)
    _finish(manifest, out_dir, started, [out_dir / "sweep.csv", out_dir / "sweep.json"])


def cmd_classify(args: argparse.Namespace) -> None:
    """Run the jump classification study."""
    started = time.perf_counter()
    manager = _configuration(args)
    config = manager.to_model_config()
    spec = manager.threshold_spec()
    seed = manager.resolve_seed(args.seed)
    result = classification_study(config, spec, manager.n_paths(), seed, steps_seconds=args.steps,
                                  threads=manager.threads(), progress=args.progress)

    out_dir = _out_dir(args)
    path = export.write_classification(result, out_dir / "classification.json")
    manifest = RunManifest("classify", _arguments(args), manager.snapshot(), seed)
    _finish(manifest, out_dir, started, [path])


def _add_model_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--config', help='Configuration file (flat key = value INI)')
    parser.add_argument('--model', choices=['model1', 'model2'], help='Simulation model')
    parser.add_argument('--lambda1', type=float, help='Intensity of J1 per day (model1)')
    parser.add_argument('--lambda3', type=float, help='Intensity of J3 per day (model1)')
    parser.add_argument('--rho', type=float, help='Correlation of the Brownian drivers')
    parser.add_argument('--rho-j', dest='rho_j', type=float, help='Correlation used to build J2')
    parser.add_argument('--horizon-days', dest='horizon_days', type=float, help='Simulated horizon in days')
    parser.add_argument('--seed', type=int, help='Master seed (default: COJUMP_SEED, then config, then 0)')
    parser.add_argument('--out', required=True, help='Output directory')


def _add_experiment_options(parser: argparse.ArgumentParser, threshold: bool = True) -> None:
    if threshold:
        parser.add_argument('--c', type=float, help=f'Threshold constant (default: {DEFAULT_C})')
        parser.add_argument('--beta', type=float, help=f'Threshold power (default: {DEFAULT_BETA})')
    parser.add_argument('--n-paths', dest='n_paths', type=int, help='Number of simulated paths')
    parser.add_argument('--threads', type=int, help='Worker processes; does not change results')
    parser.add_argument('--progress', action='store_true', help='Show a progress bar')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='cojump', description='Threshold estimation of integrated covariation and co-jumps')
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    parser.add_argument('--log-dir', help='Directory to store logs (default: COJUMP_LOG_DIR)')
    parser.add_argument('--log-level', choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'], default='WARNING',
                        help='Logging level (default: WARNING)')
    parser.add_argument('--console-output', action='store_true', help='Force console output even when logging to files')
    subparsers = parser.add_subparsers(dest='command', required=True)

    estimate = subparsers.add_parser('estimate', help='Estimate on two path files (time,value CSV)')
    estimate.add_argument('file1', help='Path file of process 1')
    estimate.add_argument('file2', help='Path file of process 2')
    estimate.add_argument('--c', type=float, default=DEFAULT_C, help=f'Threshold constant (default: {DEFAULT_C})')
    estimate.add_argument('--beta', type=float, default=DEFAULT_BETA, help=f'Threshold power (default: {DEFAULT_BETA})')
    estimate.add_argument('--async', dest='use_async', action='store_true',
                          help='Use the threshold Hayashi-Yoshida estimator for asynchronous grids')
    estimate.add_argument('--upto', type=float, help='Estimate up to time t (days)')
    estimate.add_argument('--out', help='Output directory (default: print JSON to stdout)')
    estimate.add_argument('--strict', action='store_true', help='Fail on degenerate statistics')
    estimate.set_defaults(handler=cmd_estimate)

    simulate = subparsers.add_parser('simulate', help='Simulate one bivariate path')
    _add_model_options(simulate)
    simulate.add_argument('--path-index', dest='path_index', type=int, default=0, help='Path index within the seed')
    simulate.set_defaults(handler=cmd_simulate)

    mc = subparsers.add_parser('mc', help='Monte Carlo bias study')
    _add_model_options(mc)
    _add_experiment_options(mc)
    mc.add_argument('--strict', action='store_true', help='Fail on failed paths or undefined statistics')
    mc.set_defaults(handler=cmd_mc)

    sweep = subparsers.add_parser('sweep', help='Threshold sweep over a (c, beta) grid')
    _add_model_options(sweep)
    _add_experiment_options(sweep, threshold=False)
    sweep.add_argument('--c-values', dest='c_values', type=float, nargs='+', default=list(DEFAULT_C_VALUES),
                       help='Threshold constants (default: 0.1 to 5.6 step 0.5)')
    sweep.add_argument('--beta-values', dest='beta_values', type=float, nargs='+', default=list(DEFAULT_BETA_VALUES),
                       help='Threshold powers (default: 0.05 to 0.90 step 0.05, and 0.99)')
    sweep.set_defaults(handler=cmd_sweep)

    classify = subparsers.add_parser('classify', help='Jump classification study')
    _add_model_options(classify)
    _add_experiment_options(classify)
    classify.add_argument('--steps', type=int, nargs='+', default=[300, 60, 1],
                          help='Observation steps in seconds (default: 300 60 1)')
    classify.set_defaults(handler=cmd_classify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run the command line.

    Returns:
        The exit status
    """
    parser = build_parser()
    args = parser.parse_args(argv)

    configure_logging(
        log_dir=args.log_dir or os.getenv("COJUMP_LOG_DIR"),
        log_level=getattr(logging, args.log_level),
        console_output=True if args.console_output else None,
    )

    handler: Callable[[argparse.Namespace], None] = args.handler
    try:
        handler(args)
    except CojumpError as e:
        logger.error(f"Error: {e}")
        print(f"Error: {e}", file=sys.stderr)
        return exit_code_for(e)
    return EXIT_SUCCESS


if __name__ == '__main__':
    sys.exit(main())
