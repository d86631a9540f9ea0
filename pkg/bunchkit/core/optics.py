# Linear-optics operations on single-photon states
# Everything here is a pure function: state in, new state out

from __future__ import annotations

import math
import numbers
from typing import Optional, Sequence, Tuple

import numpy as np

from .config import DEFAULT_TOLERANCES, Tolerances
from .errors import InvalidParameterError, TopologyError
from .models import BeamSplitter, ComplexAmplitude, ModeId, SinglePhotonState


def make_beam_splitter(theta: float, label: Optional[str] = None) -> BeamSplitter:
    """One-angle splitter [[cos θ, i sin θ], [i sin θ, cos θ]]."""
    if isinstance(theta, bool) or not isinstance(theta, numbers.Real) or not math.isfinite(theta):
        raise InvalidParameterError("theta must be a finite number of radians", details={"theta": theta})
    theta = float(theta)
    t = complex(math.cos(theta), 0.0)
    r = complex(0.0, math.sin(theta))
    bs = BeamSplitter(t=t, r=r, t_prime=t, r_prime=r, label=label, theta=float(theta))
    bs.validate()
    return bs


def symmetric_beam_splitter(label: Optional[str] = None) -> BeamSplitter:
    return make_beam_splitter(math.pi / 4, label=label)


def apply_unitary(
    state: SinglePhotonState,
    matrix: np.ndarray,
    in_modes: Sequence[ModeId],
    out_modes: Optional[Sequence[ModeId]] = None,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> SinglePhotonState:
    """Send the amplitudes on ``in_modes`` through ``matrix`` onto ``out_modes``.

    ``matrix[i, j]`` is the amplitude for input ``in_modes[j]`` to leave on
    ``out_modes[i]``. Input legs that are not also output legs end up empty;
    output legs that are not input legs must be empty beforehand.
    """
    in_modes = tuple(in_modes)
    out_modes = in_modes if out_modes is None else tuple(out_modes)
    u = np.asarray(matrix, dtype=complex)
    k = len(in_modes)

    if u.shape != (k, k) or len(out_modes) != k:
        raise TopologyError(
            f"a {u.shape} matrix cannot map {k} input legs onto {len(out_modes)} output legs"
        )
    if len(set(in_modes)) != k or len(set(out_modes)) != k:
        raise TopologyError("input and output legs must be distinct", details={"in": in_modes, "out": out_modes})
    missing = [m for m in in_modes + out_modes if m not in state.modes]
    if missing:
        raise TopologyError(f"legs {missing} are not part of the network", details={"network": state.modes})
    if not np.allclose(u.conj().T @ u, np.eye(k), rtol=0.0, atol=tolerances.complex_atol):
        raise InvalidParameterError("mode transformation is not unitary")

    vec = state.vector
    idx_in = [state.index(m) for m in in_modes]
    idx_out = [state.index(m) for m in out_modes]
    for m, i in zip(out_modes, idx_out):
        if m not in in_modes and abs(vec[i]) > tolerances.complex_atol:
            raise TopologyError(f"output leg '{m}' is already occupied")

    incoming = vec[idx_in].copy()
    vec[idx_in] = 0.0
    vec[idx_out] = u @ incoming
    return SinglePhotonState.from_vector(state.modes, vec)


def apply_beam_splitter(
    bs: BeamSplitter,
    state: SinglePhotonState,
    in_modes: Tuple[ModeId, ModeId],
    out_modes: Tuple[ModeId, ModeId],
) -> SinglePhotonState:
    # in_modes/out_modes are (leg 1, leg 2); see BeamSplitter for the matrix layout
    if len(in_modes) != 2 or len(out_modes) != 2:
        raise TopologyError("a beam splitter has exactly two input and two output legs")
    return apply_unitary(state, bs.matrix, in_modes, out_modes)


def inner_product(a: SinglePhotonState, b: SinglePhotonState) -> ComplexAmplitude:
    """<a|b> = sum over modes of conj(a_m) b_m."""
    if set(a.modes) != set(b.modes):
        raise TopologyError(
            "inner product needs both states over the same modes",
            details={"a": a.modes, "b": b.modes},
        )
    aligned = b if b.modes == a.modes else b.reordered(a.modes)
    return complex(np.vdot(a.vector, aligned.vector))
