# The core stuff: errors, config, states, splitters
# Import everything so people don't have to dig through the file structure

from .config import ConfigPresets, DEFAULT_TOLERANCES, SimulatorConfig, Tolerances
from .errors import (
    BunchkitError,
    ConsistencyError,
    InvalidParameterError,
    NormalizationError,
    PostSelectionError,
    TopologyError,
)
from .models import BeamSplitter, ComplexAmplitude, ModeId, SinglePhotonState
from .optics import (
    apply_beam_splitter,
    apply_unitary,
    inner_product,
    make_beam_splitter,
    symmetric_beam_splitter,
)

__all__ = [
    "ConfigPresets",
    "DEFAULT_TOLERANCES",
    "SimulatorConfig",
    "Tolerances",
    "BunchkitError",
    "ConsistencyError",
    "InvalidParameterError",
    "NormalizationError",
    "PostSelectionError",
    "TopologyError",
    "BeamSplitter",
    "ComplexAmplitude",
    "ModeId",
    "SinglePhotonState",
    "apply_beam_splitter",
    "apply_unitary",
    "inner_product",
    "make_beam_splitter",
    "symmetric_beam_splitter",
]
