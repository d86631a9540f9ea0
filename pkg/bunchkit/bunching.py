# Bunching parameter math for a pair of photons
# overlap |I|^2, same-state probabilities for both photon cases, and beta = 2 / (1 + |I|^2)

from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from typing import Any, Callable, Dict, Mapping, Optional, Sequence, Union

from bunchkit.core.config import DEFAULT_TOLERANCES, Tolerances
from bunchkit.core.errors import InvalidParameterError, NormalizationError, TopologyError
from bunchkit.core.models import ModeId, SinglePhotonState
from bunchkit.core.optics import inner_product

logger = logging.getLogger(__name__)

# Distinguishable pairs never need a normalization beyond the product of the two states
N_D = 1.0

StateLike = Union[SinglePhotonState, Mapping[ModeId, complex], Sequence[complex]]


def abstract_modes(count: int) -> tuple:
    return tuple(f"q{i}" for i in range(1, count + 1))


def as_state(value: StateLike) -> SinglePhotonState:
    if isinstance(value, SinglePhotonState):
        return value
    if isinstance(value, Mapping):
        return SinglePhotonState.from_mapping(value)
    amplitudes = [complex(a) for a in value]
    return SinglePhotonState.from_vector(abstract_modes(len(amplitudes)), amplitudes)


@dataclass(frozen=True, slots=True)
class PhotonPair:
    """Two single-photon states over one mode set, plus whether they can interfere."""

    chi: SinglePhotonState
    rho: SinglePhotonState
    distinguishable: bool = False
    was_normalized: bool = False

    def __post_init__(self) -> None:
        if set(self.chi.modes) != set(self.rho.modes):
            raise TopologyError(
                "chi and rho must share one mode set",
                details={"chi": self.chi.modes, "rho": self.rho.modes},
            )
        if self.rho.modes != self.chi.modes:
            object.__setattr__(self, "rho", self.rho.reordered(self.chi.modes))
        for name, state in (("chi", self.chi), ("rho", self.rho)):
            if not state.is_normalized:
                raise NormalizationError(f"{name} is not normalized", norm_sq=state.norm_sq)

    @property
    def modes(self) -> tuple:
        return self.chi.modes

    def as_distinguishable(self, distinguishable: bool = True) -> "PhotonPair":
        return replace(self, distinguishable=distinguishable)

    def map_states(self, fn: Callable[[SinglePhotonState], SinglePhotonState]) -> "PhotonPair":
        # Same transformation on both photons, e.g. a beam splitter
        return replace(self, chi=fn(self.chi), rho=fn(self.rho))


def make_pair(
    chi: StateLike,
    rho: StateLike,
    distinguishable: bool = False,
    auto_normalize: bool = True,
    warn_threshold: Optional[float] = None,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> PhotonPair:
    """Build a pair, normalizing the inputs where needed.

    Deviations from unit norm above ``warn_threshold`` (default: the library's
    auto-normalize tolerance) set ``was_normalized``; with ``auto_normalize``
    off they raise instead. Smaller deviations are absorbed silently.
    """
    threshold = tolerances.auto_normalize if warn_threshold is None else warn_threshold
    states = []
    flagged = False
    for name, raw in (("chi", chi), ("rho", rho)):
        state = as_state(raw)
        deviation = abs(state.norm_sq - 1.0)
        if deviation > tolerances.normalization:
            if deviation > threshold:
                if not auto_normalize:
                    raise NormalizationError(
                        f"{name} is not normalized and auto-normalization is off",
                        norm_sq=state.norm_sq,
                    )
                flagged = True
                logger.warning(f"Auto-normalizing {name}: norm^2 was {state.norm_sq:.12g}")
            state = state.normalized()
        states.append(state)
    return PhotonPair(chi=states[0], rho=states[1], distinguishable=distinguishable, was_normalized=flagged)


@dataclass(frozen=True, slots=True)
class BunchingReport:
    overlap_sq: float
    beta: float
    n_b: float
    n_d: float = N_D
    was_normalized: bool = False
    success_dist: Optional[float] = None
    success_indist: Optional[float] = None

    def validate(self, tolerances: Tolerances = DEFAULT_TOLERANCES) -> None:
        atol = tolerances.complex_atol
        if not (-atol <= self.overlap_sq <= 1.0 + atol):
            raise InvalidParameterError("overlap_sq outside [0, 1]", details={"overlap_sq": self.overlap_sq})
        if abs(self.beta - 2.0 / (1.0 + self.overlap_sq)) > atol:
            raise InvalidParameterError("beta does not match 2 / (1 + |I|^2)")
        if not (1.0 - atol <= self.beta <= 2.0 + atol):
            raise InvalidParameterError("beta outside [1, 2]", details={"beta": self.beta})

    def to_json(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "overlap_sq": self.overlap_sq,
            "beta": self.beta,
            "n_b": self.n_b,
            "n_d": self.n_d,
            "was_normalized": self.was_normalized,
        }
        if self.success_dist is not None:
            data["success_dist"] = self.success_dist
            data["success_indist"] = self.success_indist
        return data


def overlap_sq(pair: PhotonPair) -> float:
    # Clamped so rounding can never push beta outside [1, 2]
    value = abs(inner_product(pair.chi, pair.rho)) ** 2
    return min(1.0, max(0.0, value))


def beta_from_overlap(value: float) -> float:
    return 2.0 / (1.0 + value)


def report_from_overlap(value: float, was_normalized: bool = False, **extra: Any) -> BunchingReport:
    value = min(1.0, max(0.0, value))
    report = BunchingReport(
        overlap_sq=value,
        beta=beta_from_overlap(value),
        n_b=1.0 + value,
        was_normalized=was_normalized,
        **extra,
    )
    report.validate()
    return report


def _product_sq(pair: PhotonPair, target: ModeId) -> float:
    if target not in pair.modes:
        raise TopologyError(f"unknown target mode '{target}'", details={"modes": pair.modes})
    return pair.chi.probability(target) * pair.rho.probability(target)


def prob_same_state_distinguishable(pair: PhotonPair, target: ModeId) -> float:
    """|chi_m|^2 |rho_m|^2: both photons in ``target``, no interference."""
    return _product_sq(pair, target)


def prob_same_state_indistinguishable(pair: PhotonPair, target: ModeId) -> float:
    """2 |chi_m rho_m|^2 / (1 + |I|^2)."""
    return 2.0 * _product_sq(pair, target) / (1.0 + overlap_sq(pair))


def prob_same_state(pair: PhotonPair, target: ModeId) -> float:
    if pair.distinguishable:
        return prob_same_state_distinguishable(pair, target)
    return prob_same_state_indistinguishable(pair, target)


def bunching_beta(pair: PhotonPair) -> BunchingReport:
    # Always from the overlap, never from a probability ratio, so empty target modes are harmless
    return report_from_overlap(overlap_sq(pair), was_normalized=pair.was_normalized)
