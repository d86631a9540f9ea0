# Brute-force two-photon outcome oracle
# Builds the labeled two-particle amplitude table, symmetrizes it explicitly, and folds
# labeled outcomes into what a detector can see: unordered mode pairs.
# Nothing here reuses the closed forms from bunching.py; that's the point.

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from types import MappingProxyType
from typing import Dict, Iterable, List, Mapping, Tuple

import numpy as np

from bunchkit.bunching import PhotonPair
from bunchkit.core.config import DEFAULT_TOLERANCES, Tolerances
from bunchkit.core.errors import InvalidParameterError, PostSelectionError, TopologyError
from bunchkit.core.models import ModeId

logger = logging.getLogger(__name__)

Outcome = Tuple[ModeId, ModeId]


class PhotonCase(str, Enum):
    DISTINGUISHABLE = "distinguishable"
    INDISTINGUISHABLE = "indistinguishable"

    @classmethod
    def of(cls, pair: PhotonPair) -> "PhotonCase":
        return cls.DISTINGUISHABLE if pair.distinguishable else cls.INDISTINGUISHABLE


@dataclass(frozen=True, slots=True)
class TwoPhotonDistribution:
    modes: Tuple[ModeId, ...]
    outcomes: Mapping[Outcome, float]
    case: PhotonCase
    total: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "modes", tuple(self.modes))
        object.__setattr__(self, "outcomes", MappingProxyType(dict(self.outcomes)))

    def validate(self, expected_total: float = 1.0, tolerances: Tolerances = DEFAULT_TOLERANCES) -> None:
        atol = tolerances.distribution_sum
        for outcome, p in self.outcomes.items():
            if not (-atol <= p <= 1.0 + atol):
                raise InvalidParameterError(f"probability of {outcome} outside [0, 1]", details={"p": p})
        if abs(self.total - expected_total) > atol:
            raise InvalidParameterError(
                "distribution does not sum to the expected total",
                details={"total": self.total, "expected": expected_total},
            )

    def key(self, m1: ModeId, m2: ModeId) -> Outcome:
        try:
            i, j = self.modes.index(m1), self.modes.index(m2)
        except ValueError:
            raise TopologyError(f"outcome ({m1}, {m2}) uses an unknown mode") from None
        return (m1, m2) if i <= j else (m2, m1)

    def probability(self, m1: ModeId, m2: ModeId) -> float:
        return self.outcomes[self.key(m1, m2)]

    def same_mode_total(self) -> float:
        return float(sum(p for (a, b), p in self.outcomes.items() if a == b))

    def coincidence_total(self) -> float:
        return float(sum(p for (a, b), p in self.outcomes.items() if a != b))

    def as_rows(self) -> List[Tuple[ModeId, ModeId, float]]:
        return [(a, b, p) for (a, b), p in self.outcomes.items()]

    def max_abs_difference(self, other: "TwoPhotonDistribution") -> float:
        if set(self.outcomes) != set(other.outcomes):
            raise TopologyError("distributions are over different outcome sets")
        return max(abs(p - other.outcomes[k]) for k, p in self.outcomes.items())

    def to_json(self) -> Dict[str, object]:
        return {
            "case": self.case.value,
            "total": self.total,
            "outcomes": [{"modes": [a, b], "p": p} for a, b, p in self.as_rows()],
        }


def _labeled_probabilities(pair: PhotonPair) -> np.ndarray:
    # P[i, j]: "photon 1 on mode i, photon 2 on mode j", before labels are thrown away
    chi = pair.chi.vector
    rho = pair.rho.vector
    if pair.distinguishable:
        # Separate amplitude tables that never interfere: multiply probabilities
        return np.outer(np.abs(chi) ** 2, np.abs(rho) ** 2)
    product = np.outer(chi, rho)
    symmetrized = product + product.T  # (1 + P_21) acting on |1; chi> |2; rho>
    weights = np.abs(symmetrized) ** 2
    return weights / weights.sum()


def _fold(modes: Tuple[ModeId, ...], labeled: np.ndarray) -> Dict[Outcome, float]:
    outcomes: Dict[Outcome, float] = {}
    for i, m1 in enumerate(modes):
        outcomes[(m1, m1)] = float(labeled[i, i])
        for j in range(i + 1, len(modes)):
            outcomes[(m1, modes[j])] = float(labeled[i, j] + labeled[j, i])
    return outcomes


def joint_distribution(pair: PhotonPair, tolerances: Tolerances = DEFAULT_TOLERANCES) -> TwoPhotonDistribution:
    """Exact distribution over unordered detection outcomes for ``pair``."""
    if len(pair.modes) < 2:
        raise TopologyError("a two-photon distribution needs at least two modes")
    outcomes = _fold(pair.modes, _labeled_probabilities(pair))
    dist = TwoPhotonDistribution(
        modes=pair.modes,
        outcomes=outcomes,
        case=PhotonCase.of(pair),
        total=float(sum(outcomes.values())),
    )
    dist.validate(tolerances=tolerances)
    return dist


def condition_on_empty_modes(
    dist: TwoPhotonDistribution,
    empty: Iterable[ModeId],
    renormalize: bool = True,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> Tuple[TwoPhotonDistribution, float]:
    """Keep only outcomes that leave every mode in ``empty`` dark.

    Returns the conditional distribution (renormalized unless told otherwise)
    and the success probability, i.e. the mass that survived.
    """
    empty_set = frozenset(empty)
    unknown = empty_set.difference(dist.modes)
    if unknown:
        raise TopologyError(f"cannot condition on unknown modes {sorted(unknown)}")
    if empty_set == frozenset(dist.modes):
        raise TopologyError("at least one mode must stay observable")

    kept = {k: p for k, p in dist.outcomes.items() if k[0] not in empty_set and k[1] not in empty_set}
    success = float(sum(kept.values()))
    if success < tolerances.post_selection:
        raise PostSelectionError(
            f"no outcome leaves {sorted(empty_set)} empty",
            success_probability=success,
        )
    logger.debug(f"Post-selection on {sorted(empty_set)} kept mass {success:.6g}")

    scale = 1.0 / success if renormalize else 1.0
    conditioned = TwoPhotonDistribution(
        modes=tuple(m for m in dist.modes if m not in empty_set),
        outcomes={k: p * scale for k, p in kept.items()},
        case=dist.case,
        total=success * scale,
    )
    return conditioned, success
