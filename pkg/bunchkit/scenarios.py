# Pre-built input pairs: the classic beam-splitter scenarios, ready to run
# Same idea as a gallery: an id, a title, tags, and the data

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, List, Tuple

from bunchkit.bunching import PhotonPair, make_pair
from bunchkit.core.errors import InvalidParameterError

SQRT5 = math.sqrt(5.0)


@dataclass(frozen=True, slots=True)
class Scenario:
    id: str
    title: str
    description: str
    tags: Tuple[str, ...]
    chi: Tuple[complex, ...]
    rho: Tuple[complex, ...]

    def pair(self, distinguishable: bool = False, auto_normalize: bool = True) -> PhotonPair:
        return make_pair(self.chi, self.rho, distinguishable=distinguishable, auto_normalize=auto_normalize)

    def to_json(self) -> Dict[str, object]:
        return {
            "id": self.id,
            "title": self.title,
            "tags": list(self.tags),
            "chi": [[a.real, a.imag] for a in self.chi],
            "rho": [[a.real, a.imag] for a in self.rho],
        }


SCENARIOS: List[Scenario] = [
    Scenario(
        id="hom-orthogonal",
        title="Standard HOM dip",
        description="One photon per input leg of a symmetric splitter; orthogonal states, full dip.",
        tags=("hom", "beta=2", "orthogonal"),
        chi=(1.0, 0.0),
        rho=(0.0, 1.0),
    ),
    Scenario(
        id="same-leg",
        title="Both photons on one leg",
        description="Identical states; distinguishable and indistinguishable statistics coincide.",
        tags=("beta=1", "identical"),
        chi=(0.0, 1.0),
        rho=(0.0, 1.0),
    ),
    Scenario(
        id="worked-example",
        title="Partial overlap |I|^2 = 1/5",
        description="chi = (1, 0), rho = (1/sqrt5, 2/sqrt5); beta = 5/3 and the dip bottoms out at 1/6.",
        tags=("beta=5/3", "partial-overlap"),
        chi=(1.0, 0.0),
        rho=(1.0 / SQRT5, 2.0 / SQRT5),
    ),
    Scenario(
        id="worked-example-literal",
        title="Partial overlap, unnormalized as printed",
        description="rho = (1/sqrt5, 4/sqrt5) is not normalized; after auto-normalization |I|^2 = 1/17, beta = 17/9.",
        tags=("auto-normalized",),
        chi=(1.0, 0.0),
        rho=(1.0 / SQRT5, 4.0 / SQRT5),
    ),
]


def get_scenario(scenario_id: str) -> Scenario:
    for scenario in SCENARIOS:
        if scenario.id == scenario_id:
            return scenario
    raise InvalidParameterError(
        f"unknown scenario '{scenario_id}'", details={"available": [s.id for s in SCENARIOS]}
    )
