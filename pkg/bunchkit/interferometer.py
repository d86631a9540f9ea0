# Four-splitter post-selected interferometer that tailors the overlap of two photons
#
#   photon A -> A -> (a1, a2)        photon B -> B -> (b1, b2)
#   C: (b2, a2) -> (c1, c2)          D: (b1, a1) -> (d1, d2)
#
# Detectors on c2 and d2 must stay dark; the surviving legs are c1 and d1.

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

import numpy as np

from bunchkit.bunching import BunchingReport, PhotonPair, report_from_overlap
from bunchkit.core.config import DEFAULT_TOLERANCES, Tolerances
from bunchkit.core.errors import PostSelectionError
from bunchkit.core.models import BeamSplitter, ComplexAmplitude, ModeId, SinglePhotonState
from bunchkit.core.optics import apply_beam_splitter, make_beam_splitter
from bunchkit.oracle import condition_on_empty_modes, joint_distribution

logger = logging.getLogger(__name__)

NETWORK_MODES: Tuple[ModeId, ...] = ("a1", "a2", "b1", "b2", "c1", "c2", "d1", "d2")
OUTPUT_MODES: Tuple[ModeId, ...] = ("c1", "c2", "d1", "d2")
KEPT_MODES: Tuple[ModeId, ...] = ("c1", "d1")
DARK_MODES: Tuple[ModeId, ...] = ("c2", "d2")  # must record zero counts

# (in leg 1, in leg 2) -> (out leg 1, out leg 2) for each splitter
WIRING: Dict[str, Tuple[Tuple[ModeId, ModeId], Tuple[ModeId, ModeId]]] = {
    "A": (("a1", "a2"), ("a1", "a2")),
    "B": (("b1", "b2"), ("b1", "b2")),
    "C": (("b2", "a2"), ("c1", "c2")),
    "D": (("b1", "a1"), ("d1", "d2")),
}


@dataclass(frozen=True, slots=True)
class InterferometerConfig:
    a: BeamSplitter
    b: BeamSplitter
    c: BeamSplitter
    d: BeamSplitter

    def __post_init__(self) -> None:
        for label in ("A", "B", "C", "D"):
            splitter = getattr(self, label.lower())
            if splitter.label != label:
                object.__setattr__(self, label.lower(), splitter.with_label(label))
            getattr(self, label.lower()).validate()

    @classmethod
    def from_angles(cls, theta_a: float, theta_b: float, theta_c: float, theta_d: float) -> "InterferometerConfig":
        return cls(
            a=make_beam_splitter(theta_a, "A"),
            b=make_beam_splitter(theta_b, "B"),
            c=make_beam_splitter(theta_c, "C"),
            d=make_beam_splitter(theta_d, "D"),
        )

    def splitter(self, label: str) -> BeamSplitter:
        return getattr(self, label.lower())

    def replace_splitter(self, label: str, splitter: BeamSplitter) -> "InterferometerConfig":
        parts = {k: self.splitter(k.upper()) for k in ("a", "b", "c", "d")}
        parts[label.lower()] = splitter
        return InterferometerConfig(**parts)

    def angles(self) -> Optional[Tuple[float, float, float, float]]:
        thetas = tuple(self.splitter(k).theta for k in ("A", "B", "C", "D"))
        return None if any(t is None for t in thetas) else thetas  # type: ignore[return-value]

    def to_json(self) -> Dict[str, object]:
        return {k: self.splitter(k).to_json() for k in ("A", "B", "C", "D")}


@dataclass(frozen=True, slots=True)
class PostSelectedPair:
    psi_a: SinglePhotonState
    psi_b: SinglePhotonState
    n1: float
    n2: float
    overlap: ComplexAmplitude

    @property
    def overlap_sq(self) -> float:
        return min(1.0, abs(self.overlap) ** 2)

    def as_pair(self, distinguishable: bool = False) -> PhotonPair:
        return PhotonPair(chi=self.psi_a, rho=self.psi_b, distinguishable=distinguishable)


def propagate_network(config: InterferometerConfig) -> Tuple[SinglePhotonState, SinglePhotonState]:
    """Both photons over all eight legs, by composing the four splitters."""
    states = []
    for source_leg, first in (("a2", "A"), ("b2", "B")):
        state = SinglePhotonState.basis(NETWORK_MODES, source_leg)
        for label in (first, "C", "D"):
            in_modes, out_modes = WIRING[label]
            state = apply_beam_splitter(config.splitter(label), state, in_modes, out_modes)
        states.append(state)
    return states[0], states[1]


def propagate(config: InterferometerConfig) -> Tuple[SinglePhotonState, SinglePhotonState]:
    amp_a, amp_b = propagate_network(config)
    return amp_a.project(OUTPUT_MODES), amp_b.project(OUTPUT_MODES)


def _kept_amplitudes(config: InterferometerConfig) -> Tuple[Tuple[complex, complex], Tuple[complex, complex]]:
    # Unnormalized amplitudes on (c1, d1) that survive the dark detectors
    a, b, c, d = config.a, config.b, config.c, config.d
    photon_a = (c.r * a.t, d.r * a.r)
    photon_b = (c.t_prime * b.t, d.t_prime * b.r)
    return photon_a, photon_b


def _norms_and_numerator(config: InterferometerConfig) -> Tuple[float, float, complex]:
    photon_a, photon_b = _kept_amplitudes(config)
    n1 = abs(photon_a[0]) ** 2 + abs(photon_a[1]) ** 2
    n2 = abs(photon_b[0]) ** 2 + abs(photon_b[1]) ** 2
    numerator = photon_a[0].conjugate() * photon_b[0] + photon_a[1].conjugate() * photon_b[1]
    return n1, n2, numerator


def post_select(config: InterferometerConfig, tolerances: Tolerances = DEFAULT_TOLERANCES) -> PostSelectedPair:
    photon_a, photon_b = _kept_amplitudes(config)
    n1, n2, numerator = _norms_and_numerator(config)
    for name, n in (("N1", n1), ("N2", n2)):
        if n <= tolerances.post_selection:
            raise PostSelectionError(
                f"{name} vanishes: a photon never reaches the kept legs",
                success_probability=n1 * n2,
                details={"n1": n1, "n2": n2},
            )
    psi_a = SinglePhotonState(KEPT_MODES, tuple(x / math.sqrt(n1) for x in photon_a))
    psi_b = SinglePhotonState(KEPT_MODES, tuple(x / math.sqrt(n2) for x in photon_b))
    overlap = numerator / math.sqrt(n1 * n2)
    logger.debug(f"Post-selected pair: N1={n1:.6g}, N2={n2:.6g}, |I|^2={abs(overlap) ** 2:.6g}")
    return PostSelectedPair(psi_a=psi_a, psi_b=psi_b, n1=n1, n2=n2, overlap=overlap)


def success_probabilities(config: InterferometerConfig) -> Tuple[float, float]:
    """(distinguishable, indistinguishable) probability that c2 and d2 stay dark.

    The indistinguishable value is the norm of the projected symmetrized state,
    N1 N2 (1 + |I|^2) = N1 N2 + |<A|B>|^2 with unnormalized kept amplitudes,
    which stays defined when one of the norms vanishes.
    """
    n1, n2, numerator = _norms_and_numerator(config)
    p_dist = n1 * n2
    p_indist = p_dist + abs(numerator) ** 2
    return float(p_dist), float(p_indist)


def interferometer_beta(config: InterferometerConfig, tolerances: Tolerances = DEFAULT_TOLERANCES) -> BunchingReport:
    selected = post_select(config, tolerances)
    p_dist, p_indist = success_probabilities(config)
    return report_from_overlap(selected.overlap_sq, success_dist=p_dist, success_indist=p_indist)


def network_pair(config: InterferometerConfig, distinguishable: bool = False) -> PhotonPair:
    amp_a, amp_b = propagate_network(config)
    return PhotonPair(chi=amp_a, rho=amp_b, distinguishable=distinguishable)


def oracle_success_probabilities(
    config: InterferometerConfig, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> Tuple[float, float]:
    masses = []
    for distinguishable in (True, False):
        dist = joint_distribution(network_pair(config, distinguishable), tolerances)
        _, success = condition_on_empty_modes(dist, DARK_MODES, renormalize=False, tolerances=tolerances)
        masses.append(success)
    return masses[0], masses[1]


def oracle_beta(config: InterferometerConfig, tolerances: Tolerances = DEFAULT_TOLERANCES) -> float:
    """Beta from the brute-force eight-leg distributions after post-selection.

    Uses the ratio of same-leg probabilities when the distinguishable same-leg
    mass is large enough to divide by; otherwise falls back to the ratio of
    post-selection masses, p_indist / p_dist = 1 + |I|^2.
    """
    conditioned = {}
    masses = {}
    for distinguishable in (True, False):
        dist = joint_distribution(network_pair(config, distinguishable), tolerances)
        conditioned[distinguishable], masses[distinguishable] = condition_on_empty_modes(
            dist, DARK_MODES, tolerances=tolerances
        )
    same_dist = conditioned[True].same_mode_total()
    if same_dist > tolerances.ratio_floor:
        return conditioned[False].same_mode_total() / same_dist
    return 2.0 * masses[True] / masses[False]


def beta_grid(
    theta_a: float,
    theta_b: float,
    theta_c: np.ndarray,
    theta_d: np.ndarray,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> Tuple[np.ndarray, np.ndarray]:
    """Vectorized beta over arrays of (theta_c, theta_d) for one-angle splitters.

    Returns ``(beta, degenerate)``; beta is NaN exactly where ``degenerate`` is set.
    """
    theta_c = np.asarray(theta_c, dtype=float)
    theta_d = np.asarray(theta_d, dtype=float)
    t_a, r_a = math.cos(theta_a), 1j * math.sin(theta_a)
    t_b, r_b = math.cos(theta_b), 1j * math.sin(theta_b)
    t_c, r_c = np.cos(theta_c), 1j * np.sin(theta_c)
    t_d, r_d = np.cos(theta_d), 1j * np.sin(theta_d)

    a_c1, a_d1 = r_c * t_a, r_d * r_a
    b_c1, b_d1 = t_c * t_b, t_d * r_b
    n1 = np.abs(a_c1) ** 2 + np.abs(a_d1) ** 2
    n2 = np.abs(b_c1) ** 2 + np.abs(b_d1) ** 2
    numerator = np.conj(a_c1) * b_c1 + np.conj(a_d1) * b_d1

    degenerate = (n1 <= tolerances.post_selection) | (n2 <= tolerances.post_selection)
    beta = np.full(theta_c.shape, np.nan)
    ok = ~degenerate
    overlap = np.clip(np.abs(numerator[ok]) ** 2 / (n1[ok] * n2[ok]), 0.0, 1.0)
    beta[ok] = 2.0 / (1.0 + overlap)
    return beta, degenerate
