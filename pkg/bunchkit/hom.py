# Generalized HOM dip: how deep the coincidence dip goes for a pair with bunching parameter beta
# P^11 = 1 - P^(2ID) = 1 - beta * P^(2D)

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional

from bunchkit.bunching import PhotonPair, bunching_beta
from bunchkit.core.config import DEFAULT_TOLERANCES, Tolerances
from bunchkit.core.errors import ConsistencyError, InvalidParameterError, TopologyError
from bunchkit.core.models import BeamSplitter
from bunchkit.core.optics import apply_beam_splitter, symmetric_beam_splitter
from bunchkit.interferometer import InterferometerConfig, post_select
from bunchkit.oracle import TwoPhotonDistribution, joint_distribution

logger = logging.getLogger(__name__)

SYMMETRIC_P_2D = 0.5


def _clamp(p: float) -> float:
    return min(1.0, max(0.0, p))


@dataclass(frozen=True, slots=True)
class DipPoint:
    beta: float
    p_2d: float   # both photons on one output leg, distinguishable
    p_2id: float  # both photons on one output leg, indistinguishable
    p_11: float   # one photon per leg: the bottom of the dip

    def validate(self, tolerances: Tolerances = DEFAULT_TOLERANCES) -> None:
        atol = tolerances.complex_atol
        if abs(self.p_2id - self.beta * self.p_2d) > atol:
            raise InvalidParameterError("p_2id must equal beta * p_2d", details={"point": self.to_json()})
        if abs(self.p_11 - (1.0 - self.p_2id)) > atol:
            raise InvalidParameterError("p_11 must equal 1 - p_2id", details={"point": self.to_json()})
        for name in ("p_2d", "p_2id", "p_11"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise InvalidParameterError(f"{name} outside [0, 1]", details={name: value})

    def to_json(self) -> Dict[str, float]:
        return {"beta": self.beta, "p_2d": self.p_2d, "p_2id": self.p_2id, "p_11": self.p_11}


def hom_distribution(pair: PhotonPair, bs: Optional[BeamSplitter] = None) -> TwoPhotonDistribution:
    """Send both photons through ``bs`` (symmetric by default) and enumerate the outcomes."""
    if len(pair.modes) != 2:
        raise TopologyError("the HOM setup needs a pair over exactly two legs", details={"modes": pair.modes})
    bs = bs or symmetric_beam_splitter()
    legs = pair.modes
    after = pair.map_states(lambda state: apply_beam_splitter(bs, state, legs, legs))
    return joint_distribution(after)


def dip_point(
    pair: PhotonPair,
    bs: Optional[BeamSplitter] = None,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> DipPoint:
    beta = bunching_beta(pair).beta
    p_2d = hom_distribution(pair.as_distinguishable(True), bs).same_mode_total()
    p_2id = _clamp(beta * p_2d)
    p_11 = _clamp(1.0 - p_2id)

    indistinguishable = hom_distribution(pair.as_distinguishable(False), bs)
    difference = max(
        abs(indistinguishable.same_mode_total() - p_2id),
        abs(indistinguishable.coincidence_total() - p_11),
    )
    if difference > tolerances.oracle:
        raise ConsistencyError("dip point disagrees with the enumerated distribution", difference=difference)

    point = DipPoint(beta=beta, p_2d=p_2d, p_2id=p_2id, p_11=p_11)
    point.validate(tolerances)
    return point


def dip_point_for_interferometer(config: InterferometerConfig) -> DipPoint:
    # Tailor-made pair on (c1, d1) straight into a symmetric splitter
    return dip_point(post_select(config).as_pair())


def dip_curve(beta_values: Iterable[float], tolerances: Tolerances = DEFAULT_TOLERANCES) -> List[DipPoint]:
    points = []
    for beta in beta_values:
        beta = float(beta)
        if not (1.0 - tolerances.complex_atol <= beta <= 2.0 + tolerances.complex_atol):
            raise InvalidParameterError("beta must lie in [1, 2]", details={"beta": beta})
        p_2id = _clamp(beta * SYMMETRIC_P_2D)
        point = DipPoint(beta=beta, p_2d=SYMMETRIC_P_2D, p_2id=p_2id, p_11=_clamp(1.0 - p_2id))
        point.validate(tolerances)
        points.append(point)
    logger.debug(f"Dip curve with {len(points)} points")
    return points
