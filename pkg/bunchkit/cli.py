"""
bunch: command-line front end for the bunching-parameter simulator.

Usage:
    python bunch.py beta --chi 1,0 0,0 --rho 0,0 1,0       # beta of a photon pair
    python bunch.py hom --scenario worked-example            # HOM outcome tables + dip point
    python bunch.py interf --theta-c pi/8 --theta-d 3pi/8    # four-splitter interferometer
    python bunch.py sweep --grid 201 --out sweep.csv --svg sweep.svg
    python bunch.py dip --range 1 2 0.25 --out dip.csv      # generalized dip minimum
    python bunch.py solve 1.5                                # angles for a target beta
    python bunch.py scenarios                                # list the built-in pairs

Exit codes: 0 success, 2 usage/parse error, 3 domain error (degenerate configuration).
"""

from __future__ import annotations

import argparse
import logging
import math
import os
import re
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence

from bunchkit.bunching import PhotonPair, abstract_modes, bunching_beta, make_pair
from bunchkit.core.config import SOLVER_METHODS, SimulatorConfig
from bunchkit.core.errors import BunchkitError, InvalidParameterError
from bunchkit.core.optics import make_beam_splitter
from bunchkit.hom import dip_curve, dip_point, dip_point_for_interferometer, hom_distribution
from bunchkit.interferometer import (
    InterferometerConfig,
    interferometer_beta,
    oracle_beta,
    post_select,
    success_probabilities,
)
from bunchkit.report import RunReport, jsonable
from bunchkit.scenarios import SCENARIOS, get_scenario
from bunchkit.sweep import sweep_beta, solve_for_beta

logger = logging.getLogger(__name__)


# ANSI colors for terminal output
class Colors:
    HEADER = '\033[95m'
    BLUE = '\033[94m'
    CYAN = '\033[96m'
    GREEN = '\033[92m'
    YELLOW = '\033[93m'
    RED = '\033[91m'
    BOLD = '\033[1m'
    DIM = '\033[2m'
    RESET = '\033[0m'

    @staticmethod
    def supports_color() -> bool:
        if os.getenv('NO_COLOR'):
            return False
        if os.getenv('FORCE_COLOR'):
            return True
        return hasattr(sys.stdout, 'isatty') and sys.stdout.isatty()


def c(text: str, color: str) -> str:
    """Colorize text if terminal supports it."""
    if Colors.supports_color():
        return f"{color}{text}{Colors.RESET}"
    return text


# ---------------------------------------------------------------------------
# Argument parsing helpers
# ---------------------------------------------------------------------------

_PI_FRACTION = re.compile(r"^\s*([+-]?(?:\d+(?:\.\d*)?|\.\d+)?)\s*\*?\s*pi\s*(?:/\s*(\d+(?:\.\d*)?))?\s*$")


def parse_amplitude(text: str) -> complex:
    """'re,im' (or a bare 're') -> complex."""
    parts = text.split(",")
    if not 1 <= len(parts) <= 2:
        raise argparse.ArgumentTypeError(f"amplitude '{text}' must look like re,im")
    try:
        values = [float(p) for p in parts]
    except ValueError:
        raise argparse.ArgumentTypeError(f"amplitude '{text}' must look like re,im") from None
    if not all(math.isfinite(v) for v in values):
        raise argparse.ArgumentTypeError(f"amplitude '{text}' is not finite")
    return complex(values[0], values[1] if len(values) == 2 else 0.0)


def parse_angle(text: str) -> float:
    """Radians, or a pi shorthand such as 'pi/4', '3pi/8', '-pi/2'."""
    match = _PI_FRACTION.match(text.lower())
    if match:
        coefficient, divisor = match.groups()
        if coefficient in ("", "+", "-", None):
            coefficient = (coefficient or "") + "1"
        value = float(coefficient) * math.pi / (float(divisor) if divisor else 1.0)
    else:
        try:
            value = float(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"angle '{text}' is neither radians nor a pi fraction") from None
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"angle '{text}' is not finite")
    return value


def parse_beta(text: str) -> float:
    """Float or simple fraction like '5/3'."""
    try:
        if "/" in text:
            num, den = text.split("/", 1)
            return float(num) / float(den)
        return float(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"'{text}' is not a number") from None


def _pair_from_args(args, config: SimulatorConfig, distinguishable: bool = False) -> PhotonPair:
    if getattr(args, "scenario", None):
        scenario = get_scenario(args.scenario)
        chi, rho = scenario.chi, scenario.rho
    else:
        if not args.chi or not args.rho:
            raise InvalidParameterError("both --chi and --rho are required (or pick a --scenario)")
        chi, rho = args.chi, args.rho
    if len(chi) != len(rho):
        raise InvalidParameterError("chi and rho need the same number of modes", details={"chi": len(chi), "rho": len(rho)})
    if len(chi) < 2:
        raise InvalidParameterError("a pair needs at least two modes")
    modes = abstract_modes(len(chi))
    return make_pair(
        dict(zip(modes, chi)),
        dict(zip(modes, rho)),
        distinguishable=distinguishable,
        auto_normalize=config.auto_normalize,
        warn_threshold=config.cli_normalization_slack,
        tolerances=config.tolerances,
    )


def _pair_inputs(pair: PhotonPair) -> Dict[str, object]:
    return {"modes": list(pair.modes), "chi": pair.chi.to_json(), "rho": pair.rho.to_json()}


def _normalization_warnings(pair: PhotonPair) -> List[str]:
    if pair.was_normalized:
        return ["was_normalized: input amplitudes were rescaled to unit norm"]
    return []


def _config_from_args(args) -> InterferometerConfig:
    return InterferometerConfig.from_angles(args.theta_a, args.theta_b, args.theta_c, args.theta_d)


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def cmd_beta(args, config: SimulatorConfig) -> RunReport:
    """Overlap, beta and normalization of a photon pair."""
    pair = _pair_from_args(args, config)
    report = bunching_beta(pair)
    return RunReport(
        command="beta",
        inputs=jsonable(_pair_inputs(pair)),
        outputs=jsonable(report.to_json()),
        warnings=_normalization_warnings(pair),
    )


def cmd_hom(args, config: SimulatorConfig) -> RunReport:
    """Outcome tables for both photon cases on one splitter, plus the dip point."""
    pair = _pair_from_args(args, config)
    bs = make_beam_splitter(args.theta)
    tables = {}
    for distinguishable in (False, True):
        dist = hom_distribution(pair.as_distinguishable(distinguishable), bs)
        tables[dist.case.value] = {f"{a}{b}": p for a, b, p in dist.as_rows()}
    point = dip_point(pair, bs, tolerances=config.tolerances)
    inputs = _pair_inputs(pair)
    inputs["theta"] = args.theta
    if getattr(args, "scenario", None):
        inputs["scenario"] = args.scenario
    return RunReport(
        command="hom",
        inputs=jsonable(inputs),
        outputs=jsonable({"distributions": tables, "dip": point.to_json()}),
        warnings=_normalization_warnings(pair),
    )


def cmd_interf(args, config: SimulatorConfig) -> RunReport:
    """Post-selected pair, beta and success probabilities of the four-splitter interferometer."""
    setup = _config_from_args(args)
    selected = post_select(setup, config.tolerances)
    report = interferometer_beta(setup, config.tolerances)
    p_dist, p_indist = success_probabilities(setup)
    outputs: Dict[str, object] = {
        "n1": selected.n1,
        "n2": selected.n2,
        "overlap": selected.overlap,
        "overlap_sq": report.overlap_sq,
        "beta": report.beta,
        "p_dist": p_dist,
        "p_indist": p_indist,
        "psi_a": selected.psi_a.to_json(),
        "psi_b": selected.psi_b.to_json(),
    }
    if args.oracle:
        outputs["oracle_beta"] = oracle_beta(setup, config.tolerances)
    if args.hom:
        outputs["dip"] = dip_point_for_interferometer(setup).to_json()
    return RunReport(
        command="interf",
        inputs=jsonable({"theta_a": args.theta_a, "theta_b": args.theta_b, "theta_c": args.theta_c, "theta_d": args.theta_d}),
        outputs=jsonable(outputs),
    )


def cmd_sweep(args, config: SimulatorConfig) -> RunReport:
    """Beta over the (theta_C, theta_D) grid; CSV and optional SVG heatmap."""
    from bunchkit.tables import write_sweep_csv

    result = sweep_beta(args.theta_a, args.theta_b, grid_n=config.grid_n, workers=config.workers,
                        tolerances=config.tolerances)
    outputs = dict(result.summary())
    if args.out:
        outputs["csv"] = str(write_sweep_csv(Path(args.out), result))
    if args.svg:
        from bunchkit.plots import sweep_heatmap
        outputs["svg"] = str(sweep_heatmap(result, Path(args.svg)))
    return RunReport(
        command="sweep",
        inputs=jsonable({"theta_a": args.theta_a, "theta_b": args.theta_b, "grid_n": config.grid_n}),
        outputs=jsonable(outputs),
    )


MAX_DIP_POINTS = 10_000


def _dip_betas(args) -> List[float]:
    if args.range:
        start, stop, step = args.range
        if not all(math.isfinite(v) for v in (start, stop, step)):
            raise InvalidParameterError("--range values must be finite")
        if step <= 0 or stop < start:
            raise InvalidParameterError("--range needs START <= STOP and STEP > 0")
        span = (stop - start) / step
        if span >= MAX_DIP_POINTS:
            raise InvalidParameterError(
                f"--range would produce more than {MAX_DIP_POINTS} points",
                details={"range": list(args.range)},
            )
        count = int(math.floor(span + 1e-9)) + 1
        return [start + k * step for k in range(count)]
    if args.beta:
        return list(args.beta)
    raise InvalidParameterError("give --beta values or a --range")


def cmd_dip(args, config: SimulatorConfig) -> RunReport:
    """Generalized dip minimum p_11 = 1 - beta/2 over a list of betas."""
    from bunchkit.tables import write_dip_csv

    points = dip_curve(_dip_betas(args), tolerances=config.tolerances)
    outputs: Dict[str, object] = {"points": [p.to_json() for p in points]}
    if args.out:
        outputs["csv"] = str(write_dip_csv(Path(args.out), points))
    if args.svg:
        from bunchkit.plots import dip_plot
        outputs["svg"] = str(dip_plot(points, Path(args.svg)))
    return RunReport(
        command="dip",
        inputs=jsonable({"betas": [p.beta for p in points]}),
        outputs=jsonable(outputs),
    )


def cmd_solve(args, config: SimulatorConfig) -> RunReport:
    """Interferometer angles that realize a target beta."""
    method = args.method or config.solver_method
    solution = solve_for_beta(args.target, method=method)
    return RunReport(
        command="solve",
        inputs=jsonable({"target": args.target, "method": method}),
        outputs=jsonable(solution.to_json()),
    )


def cmd_scenarios(args, config: SimulatorConfig) -> RunReport:
    """List the built-in input pairs."""
    return RunReport(
        command="scenarios",
        outputs=jsonable({"scenarios": [s.to_json() for s in SCENARIOS]}),
    )


COMMANDS: Dict[str, Callable[..., RunReport]] = {
    "beta": cmd_beta,
    "hom": cmd_hom,
    "interf": cmd_interf,
    "sweep": cmd_sweep,
    "dip": cmd_dip,
    "solve": cmd_solve,
    "scenarios": cmd_scenarios,
}


# ---------------------------------------------------------------------------
# Output
# ---------------------------------------------------------------------------

def _fmt(value: object) -> str:
    if isinstance(value, float):
        return f"{value:.12g}"
    if isinstance(value, list) and len(value) == 2 and all(isinstance(v, float) for v in value):
        return f"{value[0]:.12g}{value[1]:+.12g}i"
    return str(value)


def print_report(report: RunReport) -> None:
    print(c(f"=== {report.command} ===", Colors.BOLD))
    for key, value in report.outputs.items():
        if key == "points":
            for point in value:
                print(f"  beta={_fmt(point['beta'])}  p_11={_fmt(point['p_11'])}")
        elif key == "distributions":
            for case, table in value.items():
                cells = "  ".join(f"{k}={_fmt(p)}" for k, p in table.items())
                print(f"  {c(case, Colors.CYAN)}: {cells}")
        elif key == "scenarios":
            for s in value:
                print(f"  {c(s['id'], Colors.GREEN)}: {s['title']}")
        elif isinstance(value, dict):
            inner = ", ".join(f"{k}={_fmt(v)}" for k, v in value.items())
            print(f"  {key}: {inner}")
        else:
            print(f"  {key}: {_fmt(value)}")
    for warning in report.warnings:
        print(c(f"  warning: {warning}", Colors.YELLOW))


def _print_error(exc: BunchkitError, as_json: bool) -> None:
    if as_json:
        report = RunReport(command="error", outputs=jsonable(exc.to_dict()))
        print(report.to_json())
    else:
        print(c(f"Error: {exc}", Colors.RED), file=sys.stderr)


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--json', action='store_true', help='Print the RunReport as JSON')
    common.add_argument('--out', help='CSV output path (sweep, dip)')
    common.add_argument('--svg', help='SVG plot output path (sweep, dip)')
    common.add_argument('--grid', type=int, help='Grid points per axis for sweep (default 201)')
    common.add_argument('--workers', type=int, help='Worker threads for sweep')
    common.add_argument('--no-normalize', action='store_true', help='Treat unnormalized input as an error')
    common.add_argument('--verbose', action='store_true', help='Debug logging')

    parser = argparse.ArgumentParser(
        prog='bunch',
        description='Two-photon bunching parameter simulator',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=__doc__.split("Usage:", 1)[1],
    )
    subparsers = parser.add_subparsers(dest='command', help='Available commands')

    def add_pair_args(p: argparse.ArgumentParser) -> None:
        p.add_argument('--chi', nargs='+', type=parse_amplitude, metavar='RE,IM', help='Amplitudes of photon chi')
        p.add_argument('--rho', nargs='+', type=parse_amplitude, metavar='RE,IM', help='Amplitudes of photon rho')

    def add_angle(p: argparse.ArgumentParser, flag: str, default: str = 'pi/4') -> None:
        p.add_argument(flag, type=parse_angle, default=parse_angle(default), metavar='ANGLE',
                       help=f'Radians or pi fraction (default {default})')

    beta_parser = subparsers.add_parser('beta', parents=[common], help='Bunching parameter of a photon pair')
    add_pair_args(beta_parser)

    hom_parser = subparsers.add_parser('hom', parents=[common], help='HOM outcome tables and dip point')
    add_pair_args(hom_parser)
    hom_parser.add_argument('--scenario', choices=[s.id for s in SCENARIOS], help='Use a built-in pair')
    add_angle(hom_parser, '--theta')

    interf_parser = subparsers.add_parser('interf', parents=[common], help='Four-splitter interferometer')
    for flag in ('--theta-a', '--theta-b', '--theta-c', '--theta-d'):
        add_angle(interf_parser, flag)
    interf_parser.add_argument('--oracle', action='store_true', help='Also compute beta by brute force')
    interf_parser.add_argument('--hom', action='store_true', help='Feed the tailored pair into a HOM splitter')

    sweep_parser = subparsers.add_parser('sweep', parents=[common], help='Beta over the (theta_C, theta_D) grid')
    add_angle(sweep_parser, '--theta-a')
    add_angle(sweep_parser, '--theta-b')

    dip_parser = subparsers.add_parser('dip', parents=[common], help='Generalized dip minimum vs beta')
    dip_parser.add_argument('--beta', nargs='+', type=parse_beta, help='Beta values')
    dip_parser.add_argument('--range', nargs=3, type=float, metavar=('START', 'STOP', 'STEP'))

    solve_parser = subparsers.add_parser('solve', parents=[common], help='Angles for a target beta')
    solve_parser.add_argument('target', type=parse_beta, help='Target beta in [1, 2]')
    solve_parser.add_argument('--method', choices=SOLVER_METHODS, help='closed_form (default) or bisection')

    subparsers.add_parser('scenarios', parents=[common], help='List built-in input pairs')
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    if not args.command:
        parser.print_help()
        return 0

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    config = SimulatorConfig.from_env().with_overrides(grid_n=args.grid, workers=args.workers)
    if args.no_normalize:
        config = config.with_overrides(auto_normalize=False)
    for warning in config.validate():
        logger.warning(f"Config warning: {warning}")

    try:
        report = COMMANDS[args.command](args, config)
    except BunchkitError as exc:
        _print_error(exc, args.json)
        return exc.exit_code

    if args.json:
        print(report.to_json())
    else:
        print_report(report)
    return 0


if __name__ == '__main__':
    sys.exit(main())
