# Config for the simulator: one tolerances record plus the knobs the CLI and sweeps read
# Hardcoding 1e-12 in twenty places is how you end up with three different 1e-12s

from dataclasses import asdict, dataclass, field, replace
from typing import Any, Dict, List
import json
import os


SOLVER_METHODS = ("closed_form", "bisection")


@dataclass(frozen=True)
class Tolerances:
    # Every numeric threshold the package compares against lives here
    complex_atol: float = 1e-12          # complex/unitarity comparisons
    normalization: float = 1e-12         # a state counts as normalized within this
    auto_normalize: float = 1e-9         # deviations above this are reported as auto-normalized
    post_selection: float = 1e-14        # success mass below this means "impossible"
    oracle: float = 1e-10                # closed form vs brute force agreement
    distribution_sum: float = 1e-10      # unconditioned distributions must sum to 1 within this
    ratio_floor: float = 1e-6            # min distinguishable mass before forming a ratio


DEFAULT_TOLERANCES = Tolerances()


@dataclass
class SimulatorConfig:
    auto_normalize: bool = True
    grid_n: int = 201
    workers: int = 1
    solver_method: str = "closed_form"
    # Typed decimals like 0.4472 are never normalized to 1e-9; the CLI uses this looser bar
    cli_normalization_slack: float = 1e-3
    tolerances: Tolerances = field(default_factory=Tolerances)

    @classmethod
    def from_json(cls, json_str: str) -> "SimulatorConfig":
        data = json.loads(json_str)
        if "tolerances" in data:
            data["tolerances"] = Tolerances(**data["tolerances"])
        return cls(**data)

    @classmethod
    def from_file(cls, file_path: str) -> "SimulatorConfig":
        with open(file_path, "r") as f:
            return cls.from_json(f.read())

    @classmethod
    def from_env(cls) -> "SimulatorConfig":
        # None of these are required; unset means default
        config = cls()
        if grid := os.getenv("BUNCHKIT_GRID"):
            config.grid_n = int(grid)
        if workers := os.getenv("BUNCHKIT_WORKERS"):
            config.workers = int(workers)
        if solver := os.getenv("BUNCHKIT_SOLVER"):
            config.solver_method = solver.lower()
        if auto := os.getenv("BUNCHKIT_AUTO_NORMALIZE"):
            config.auto_normalize = auto.lower() in ("true", "1", "yes")
        return config

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2)

    def with_overrides(self, **changes: Any) -> "SimulatorConfig":
        return replace(self, **{k: v for k, v in changes.items() if v is not None})

    def validate(self) -> List[str]:
        warnings = []
        if self.grid_n < 2:
            warnings.append(f"grid_n={self.grid_n} is below 2; sweeps will reject it")
        if self.grid_n > 2001:
            warnings.append(f"grid_n={self.grid_n} means {self.grid_n ** 2} configurations, expect a wait")
        if self.workers < 1:
            warnings.append(f"workers={self.workers} makes no sense, 1 will be used")
        if self.solver_method not in SOLVER_METHODS:
            warnings.append(f"unknown solver_method '{self.solver_method}', expected one of {SOLVER_METHODS}")
        if self.cli_normalization_slack < self.tolerances.auto_normalize:
            warnings.append("cli_normalization_slack is tighter than the library threshold")
        return warnings

    def summary(self) -> Dict[str, Any]:
        return {
            "auto_normalize": self.auto_normalize,
            "grid_n": self.grid_n,
            "workers": self.workers,
            "solver_method": self.solver_method,
        }


class ConfigPresets:

    @staticmethod
    def default() -> SimulatorConfig:
        return SimulatorConfig()

    @staticmethod
    def strict() -> SimulatorConfig:
        # Unnormalized input is an error, not a warning
        return SimulatorConfig(auto_normalize=False)

    @staticmethod
    def quick() -> SimulatorConfig:
        return SimulatorConfig(grid_n=51)
