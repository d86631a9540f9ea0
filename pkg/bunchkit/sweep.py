# Parameter sweeps over the (theta_C, theta_D) plane, and the inverse: angles for a target beta

from __future__ import annotations

import logging
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np
from scipy.optimize import brentq

from bunchkit.core.config import DEFAULT_TOLERANCES, SOLVER_METHODS, Tolerances
from bunchkit.core.errors import ConsistencyError, InvalidParameterError
from bunchkit.interferometer import InterferometerConfig, beta_grid, interferometer_beta

logger = logging.getLogger(__name__)

QUARTER_PI = math.pi / 4
HALF_PI = math.pi / 2
DEFAULT_GRID_N = 201
DESIGN_RESIDUAL = 1e-10


@dataclass(frozen=True, slots=True)
class SweepPoint:
    theta_c: float
    theta_d: float
    beta: Optional[float]  # None marks a configuration where post-selection is impossible

    @property
    def degenerate(self) -> bool:
        return self.beta is None


@dataclass(frozen=True, slots=True)
class SweepResult:
    """Row-major grid: theta_c is the slow index, theta_d the fast one."""

    theta_a: float
    theta_b: float
    grid_n: int
    grid: Tuple[SweepPoint, ...]
    beta_min: Optional[float]
    beta_max: Optional[float]
    coverage_fraction: float

    @property
    def degenerate_count(self) -> int:
        return sum(1 for p in self.grid if p.degenerate)

    def axis(self) -> np.ndarray:
        return np.linspace(0.0, HALF_PI, self.grid_n)

    def beta_matrix(self) -> np.ma.MaskedArray:
        values = np.array([np.nan if p.beta is None else p.beta for p in self.grid]).reshape(self.grid_n, self.grid_n)
        return np.ma.masked_invalid(values)

    def summary(self) -> Dict[str, object]:
        return {
            "theta_a": self.theta_a,
            "theta_b": self.theta_b,
            "grid_n": self.grid_n,
            "points": len(self.grid),
            "degenerate": self.degenerate_count,
            "beta_min": self.beta_min,
            "beta_max": self.beta_max,
            "coverage_fraction": self.coverage_fraction,
        }


def _evaluate_rows(
    theta_a: float, theta_b: float, axis: np.ndarray, rows: np.ndarray, tolerances: Tolerances
) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    theta_c, theta_d = np.meshgrid(axis[rows], axis, indexing="ij")
    # beta_grid mirrors interferometer._kept_amplitudes for one-angle splitters, vectorized
    beta, degenerate = beta_grid(theta_a, theta_b, theta_c, theta_d, tolerances)
    return rows, beta, degenerate


def sweep_beta(
    theta_a: float = QUARTER_PI,
    theta_b: float = QUARTER_PI,
    grid_n: int = DEFAULT_GRID_N,
    workers: int = 1,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> SweepResult:
    """Beta on a grid_n x grid_n lattice over [0, pi/2]^2, endpoints included."""
    if grid_n < 2:
        raise InvalidParameterError("grid_n must be at least 2", details={"grid_n": grid_n})
    for name, theta in (("theta_a", theta_a), ("theta_b", theta_b)):
        if not math.isfinite(theta):
            raise InvalidParameterError(f"{name} must be finite")

    start = time.perf_counter()
    axis = np.linspace(0.0, HALF_PI, grid_n)
    beta = np.empty((grid_n, grid_n))
    degenerate = np.zeros((grid_n, grid_n), dtype=bool)
    chunks = [c for c in np.array_split(np.arange(grid_n), max(1, workers)) if c.size]

    if len(chunks) == 1:
        results = [_evaluate_rows(theta_a, theta_b, axis, chunks[0], tolerances)]
    else:
        # Workers share nothing; each returns its own row indices and we merge by index
        with ThreadPoolExecutor(max_workers=len(chunks)) as pool:
            results = list(pool.map(lambda rows: _evaluate_rows(theta_a, theta_b, axis, rows, tolerances), chunks))
    for rows, chunk_beta, chunk_degenerate in results:
        beta[rows] = chunk_beta
        degenerate[rows] = chunk_degenerate

    grid = tuple(
        SweepPoint(
            theta_c=float(axis[i]),
            theta_d=float(axis[j]),
            beta=None if degenerate[i, j] else float(beta[i, j]),
        )
        for i in range(grid_n)
        for j in range(grid_n)
    )
    valid = beta[~degenerate]
    beta_min = float(valid.min()) if valid.size else None
    beta_max = float(valid.max()) if valid.size else None
    coverage = beta_max - beta_min if valid.size else 0.0

    logger.info(
        f"Swept {grid_n}x{grid_n} grid in {time.perf_counter() - start:.3f}s "
        f"({int(degenerate.sum())} degenerate, coverage {coverage:.4f})"
    )
    return SweepResult(
        theta_a=float(theta_a),
        theta_b=float(theta_b),
        grid_n=grid_n,
        grid=grid,
        beta_min=beta_min,
        beta_max=beta_max,
        coverage_fraction=coverage,
    )


@dataclass(frozen=True, slots=True)
class DesignSolution:
    theta_c: float
    theta_d: float
    achieved_beta: float
    residual: float
    target: float
    method: str
    theta_a: float = QUARTER_PI
    theta_b: float = QUARTER_PI

    def config(self) -> InterferometerConfig:
        return InterferometerConfig.from_angles(self.theta_a, self.theta_b, self.theta_c, self.theta_d)

    def to_json(self) -> Dict[str, object]:
        return {
            "target": self.target,
            "method": self.method,
            "theta_a": self.theta_a,
            "theta_b": self.theta_b,
            "theta_c": self.theta_c,
            "theta_d": self.theta_d,
            "achieved_beta": self.achieved_beta,
            "residual": self.residual,
        }


def _slice_beta(theta_c: float) -> float:
    # Anti-diagonal theta_D = pi/2 - theta_C with symmetric A and B: |I|^2 = sin^2(2 theta_C)
    config = InterferometerConfig.from_angles(QUARTER_PI, QUARTER_PI, theta_c, HALF_PI - theta_c)
    return interferometer_beta(config).beta


def _closed_form_theta(target: float) -> float:
    overlap_sq = (2.0 - target) / target
    return 0.5 * math.asin(math.sqrt(min(1.0, max(0.0, overlap_sq))))


def _bisection_theta(target: float) -> float:
    # beta falls monotonically from 2 to 1 as theta_C runs over [0, pi/4]
    for endpoint in (0.0, QUARTER_PI):
        if abs(_slice_beta(endpoint) - target) < DESIGN_RESIDUAL / 10:
            return endpoint
    return brentq(lambda theta: _slice_beta(theta) - target, 0.0, QUARTER_PI, xtol=1e-15, maxiter=200)


def solve_for_beta(target: float, method: str = "closed_form") -> DesignSolution:
    """Angles (theta_C, theta_D) on the anti-diagonal slice that realize ``target``.

    The answer is always re-evaluated through the full interferometer formula,
    so a slip in the slice algebra shows up as a residual, not a wrong angle.
    """
    if not isinstance(target, (int, float)) or not 1.0 <= target <= 2.0:
        raise InvalidParameterError("target beta must lie in [1, 2]", details={"target": target})
    if method not in SOLVER_METHODS:
        raise InvalidParameterError(f"unknown solver method '{method}'", details={"allowed": SOLVER_METHODS})

    theta_c = _closed_form_theta(target) if method == "closed_form" else _bisection_theta(target)
    theta_d = HALF_PI - theta_c
    achieved = _slice_beta(theta_c)
    residual = abs(achieved - target)
    if residual >= DESIGN_RESIDUAL:
        raise ConsistencyError("design does not reproduce the target beta", difference=residual)
    logger.debug(f"Solved beta={target} via {method}: theta_c={theta_c:.12g}, residual={residual:.3g}")
    return DesignSolution(
        theta_c=theta_c,
        theta_d=theta_d,
        achieved_beta=achieved,
        residual=residual,
        target=float(target),
        method=method,
    )


def design_table(targets: List[float], method: str = "closed_form") -> List[DesignSolution]:
    return [solve_for_beta(t, method) for t in targets]
