# Data models: single-photon states and beam splitters
# Both are frozen. Propagation builds new states, it never edits old ones.

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

import numpy as np

from .config import DEFAULT_TOLERANCES, Tolerances
from .errors import InvalidParameterError, NormalizationError, TopologyError

ModeId = str
ComplexAmplitude = complex

SPLITTER_LABELS = ("A", "B", "C", "D")


@dataclass(frozen=True, slots=True)
class SinglePhotonState:
    """Complex amplitudes of one photon over a fixed, ordered set of modes."""

    modes: Tuple[ModeId, ...]
    amplitudes: Tuple[ComplexAmplitude, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "modes", tuple(str(m) for m in self.modes))
        object.__setattr__(self, "amplitudes", tuple(complex(a) for a in self.amplitudes))
        self.validate()

    @classmethod
    def from_mapping(cls, amplitudes: Mapping[ModeId, complex]) -> "SinglePhotonState":
        return cls(modes=tuple(amplitudes.keys()), amplitudes=tuple(amplitudes.values()))

    @classmethod
    def from_vector(cls, modes: Sequence[ModeId], vector: Iterable[complex]) -> "SinglePhotonState":
        return cls(modes=tuple(modes), amplitudes=tuple(complex(v) for v in vector))

    @classmethod
    def basis(cls, modes: Sequence[ModeId], occupied: ModeId) -> "SinglePhotonState":
        if occupied not in modes:
            raise TopologyError(f"mode '{occupied}' is not one of {tuple(modes)}")
        return cls(modes=tuple(modes), amplitudes=tuple(1.0 if m == occupied else 0.0 for m in modes))

    def validate(self) -> None:
        if not self.modes:
            raise TopologyError("a state needs at least one mode")
        if len(set(self.modes)) != len(self.modes):
            raise TopologyError("mode labels must be unique", details={"modes": self.modes})
        if len(self.amplitudes) != len(self.modes):
            raise TopologyError(
                f"{len(self.amplitudes)} amplitudes for {len(self.modes)} modes"
            )
        for mode, amp in zip(self.modes, self.amplitudes):
            if not cmath.isfinite(amp):
                raise InvalidParameterError(f"amplitude on '{mode}' is not finite")

    @property
    def vector(self) -> np.ndarray:
        return np.array(self.amplitudes, dtype=complex)

    @property
    def norm_sq(self) -> float:
        return float(sum(abs(a) ** 2 for a in self.amplitudes))

    @property
    def is_normalized(self) -> bool:
        return abs(self.norm_sq - 1.0) <= DEFAULT_TOLERANCES.normalization

    def index(self, mode: ModeId) -> int:
        try:
            return self.modes.index(mode)
        except ValueError:
            raise TopologyError(f"unknown mode '{mode}'", details={"modes": self.modes}) from None

    def amplitude(self, mode: ModeId) -> ComplexAmplitude:
        return self.amplitudes[self.index(mode)]

    def probability(self, mode: ModeId) -> float:
        return abs(self.amplitude(mode)) ** 2

    def as_dict(self) -> Dict[ModeId, ComplexAmplitude]:
        return dict(zip(self.modes, self.amplitudes))

    def support(self, atol: float = DEFAULT_TOLERANCES.complex_atol) -> Tuple[ModeId, ...]:
        return tuple(m for m, a in zip(self.modes, self.amplitudes) if abs(a) > atol)

    def normalized(self) -> "SinglePhotonState":
        norm_sq = self.norm_sq
        if norm_sq <= 0.0 or not math.isfinite(norm_sq):
            raise NormalizationError("cannot normalize a zero-norm state", norm_sq=norm_sq)
        scale = 1.0 / math.sqrt(norm_sq)
        return SinglePhotonState(self.modes, tuple(a * scale for a in self.amplitudes))

    def project(self, keep: Iterable[ModeId]) -> "SinglePhotonState":
        """Restrict to ``keep`` without renormalizing; mode order follows this state."""
        keep_set = set(keep)
        unknown = keep_set.difference(self.modes)
        if unknown:
            raise TopologyError(f"cannot keep unknown modes {sorted(unknown)}")
        pairs = [(m, a) for m, a in zip(self.modes, self.amplitudes) if m in keep_set]
        return SinglePhotonState(tuple(m for m, _ in pairs), tuple(a for _, a in pairs))

    def reordered(self, modes: Sequence[ModeId]) -> "SinglePhotonState":
        if set(modes) != set(self.modes) or len(modes) != len(self.modes):
            raise TopologyError("reordering must use exactly the same modes")
        return SinglePhotonState(tuple(modes), tuple(self.amplitude(m) for m in modes))

    def to_json(self) -> Dict[str, list]:
        return {m: [a.real, a.imag] for m, a in zip(self.modes, self.amplitudes)}


@dataclass(frozen=True, slots=True)
class BeamSplitter:
    """Lossless two-leg splitter.

    Leg convention (rows are output legs 1, 2; columns are input legs 1, 2)::

        | out1 |   | t'  r |   | in1 |
        | out2 | = | r'  t | . | in2 |

    so a photon on input leg 2 leaves as t on output leg 2 plus r on output
    leg 1. One-angle splitters have t = t' = cos(theta), r = r' = i sin(theta).
    """

    t: ComplexAmplitude
    r: ComplexAmplitude
    t_prime: ComplexAmplitude
    r_prime: ComplexAmplitude
    label: Optional[str] = None
    theta: Optional[float] = None

    def __post_init__(self) -> None:
        for name in ("t", "r", "t_prime", "r_prime"):
            object.__setattr__(self, name, complex(getattr(self, name)))

    @classmethod
    def from_coefficients(
        cls,
        t: complex,
        r: complex,
        t_prime: Optional[complex] = None,
        r_prime: Optional[complex] = None,
        label: Optional[str] = None,
        tolerances: Tolerances = DEFAULT_TOLERANCES,
    ) -> "BeamSplitter":
        bs = cls(
            t=t,
            r=r,
            t_prime=t if t_prime is None else t_prime,
            r_prime=r if r_prime is None else r_prime,
            label=label,
        )
        bs.validate(tolerances)
        return bs

    @property
    def matrix(self) -> np.ndarray:
        return np.array([[self.t_prime, self.r], [self.r_prime, self.t]], dtype=complex)

    @property
    def transmissivity(self) -> float:
        return abs(self.t) ** 2

    def validate(self, tolerances: Tolerances = DEFAULT_TOLERANCES) -> None:
        atol = tolerances.complex_atol
        coeffs = (self.t, self.r, self.t_prime, self.r_prime)
        if not all(cmath.isfinite(c) for c in coeffs):
            raise InvalidParameterError("splitter coefficients must be finite", details={"label": self.label})
        if self.label is not None and self.label not in SPLITTER_LABELS:
            raise InvalidParameterError(f"splitter label must be one of {SPLITTER_LABELS}, got '{self.label}'")
        norm = abs(self.t) ** 2 + abs(self.r) ** 2
        if abs(norm - 1.0) > atol:
            raise InvalidParameterError("|t|^2 + |r|^2 must equal 1", details={"value": norm})
        cross = self.t * self.r.conjugate() + self.t.conjugate() * self.r
        if abs(cross) > atol:
            raise InvalidParameterError("t conj(r) + conj(t) r must vanish", details={"value": abs(cross)})
        u = self.matrix
        if not np.allclose(u.conj().T @ u, np.eye(2), rtol=0.0, atol=atol):
            raise InvalidParameterError("splitter matrix is not unitary", details={"label": self.label})

    def with_global_phase(self, phi: float) -> "BeamSplitter":
        phase = cmath.exp(1j * phi)
        return BeamSplitter(
            t=self.t * phase,
            r=self.r * phase,
            t_prime=self.t_prime * phase,
            r_prime=self.r_prime * phase,
            label=self.label,
        )

    def with_label(self, label: Optional[str]) -> "BeamSplitter":
        return BeamSplitter(self.t, self.r, self.t_prime, self.r_prime, label=label, theta=self.theta)

    def to_json(self) -> Dict[str, object]:
        return {
            "label": self.label,
            "theta": self.theta,
            "t": [self.t.real, self.t.imag],
            "r": [self.r.real, self.r.imag],
            "t_prime": [self.t_prime.real, self.t_prime.imag],
            "r_prime": [self.r_prime.real, self.r_prime.imag],
        }
