# bunchkit - how much two photons like to share a mode, and how to tune it
# beta = 2 / (1 + |I|^2), from a pair of states or from a four-splitter interferometer

from bunchkit.core import (
    BeamSplitter,
    BunchkitError,
    ConfigPresets,
    ConsistencyError,
    InvalidParameterError,
    NormalizationError,
    PostSelectionError,
    SimulatorConfig,
    SinglePhotonState,
    Tolerances,
    TopologyError,
    apply_beam_splitter,
    inner_product,
    make_beam_splitter,
)
from bunchkit.bunching import BunchingReport, PhotonPair, bunching_beta, make_pair, overlap_sq
from bunchkit.hom import DipPoint, dip_curve, dip_point
from bunchkit.interferometer import InterferometerConfig, interferometer_beta, post_select
from bunchkit.oracle import TwoPhotonDistribution, condition_on_empty_modes, joint_distribution
from bunchkit.sweep import SweepResult, solve_for_beta, sweep_beta

__version__ = "1.0.0"
__all__ = [
    "bunching_beta",          # The main event
    "make_pair",              # Normalizing factory
    "overlap_sq",
    "PhotonPair",
    "BunchingReport",
    "SinglePhotonState",
    "BeamSplitter",
    "make_beam_splitter",
    "apply_beam_splitter",
    "inner_product",
    "joint_distribution",     # Brute force, for checking
    "condition_on_empty_modes",
    "TwoPhotonDistribution",
    "InterferometerConfig",
    "post_select",
    "interferometer_beta",
    "dip_point",
    "dip_curve",
    "DipPoint",
    "sweep_beta",
    "solve_for_beta",
    "SweepResult",
    "SimulatorConfig",
    "ConfigPresets",
    "Tolerances",
    "BunchkitError",
    "InvalidParameterError",
    "TopologyError",
    "NormalizationError",
    "PostSelectionError",
    "ConsistencyError",
]
