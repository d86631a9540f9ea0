# CSV writers for sweep grids and dip curves
# 17 significant digits so two runs can be diffed byte for byte

import csv
from pathlib import Path
from typing import Iterable, List, Sequence

from bunchkit.hom import DipPoint
from bunchkit.sweep import SweepResult

SWEEP_COLUMNS = ("theta_c", "theta_d", "beta", "degenerate")
DIP_COLUMNS = ("beta", "p_11")


def fmt(value: float) -> str:
    return f"{value:.17g}"


def sweep_rows(result: SweepResult) -> List[List[str]]:
    return [
        [fmt(p.theta_c), fmt(p.theta_d), "" if p.beta is None else fmt(p.beta), "1" if p.degenerate else "0"]
        for p in result.grid
    ]


def dip_rows(points: Iterable[DipPoint]) -> List[List[str]]:
    return [[fmt(p.beta), fmt(p.p_11)] for p in points]


def write_csv(path: Path, header: Sequence[str], rows: Iterable[Sequence[str]]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
    return path


def write_sweep_csv(path: Path, result: SweepResult) -> Path:
    return write_csv(path, SWEEP_COLUMNS, sweep_rows(result))


def write_dip_csv(path: Path, points: Iterable[DipPoint]) -> Path:
    return write_csv(path, DIP_COLUMNS, dip_rows(points))
