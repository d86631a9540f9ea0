# Custom exceptions for the simulator
# Every failure carries a message, a details dict, and the exit code the CLI should use

from typing import Any, Dict, Optional


class BunchkitError(Exception):
    # The root of the family. Catch this one if you just want "something went wrong"

    exit_code: int = 1

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        self.message = message
        self.details = details or {}
        super().__init__(self._format_message())

    def _format_message(self) -> str:
        parts = [self.message]
        if self.details:
            detail_str = ", ".join(f"{k}={v}" for k, v in self.details.items())
            parts.append(f"Details: {detail_str}")
        return " | ".join(parts)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "error_type": self.__class__.__name__,
            "message": self.message,
            "details": {k: _plain(v) for k, v in self.details.items()},
            "exit_code": self.exit_code,
        }


class InvalidParameterError(BunchkitError):
    # Angles that aren't finite, betas outside [1, 2], splitters that aren't unitary

    exit_code = 2

    def __init__(self, message: str, **kwargs):
        super().__init__(f"Invalid Parameter: {message}", **kwargs)


class TopologyError(BunchkitError):
    # Modes that don't exist, don't match, or would collide

    exit_code = 2

    def __init__(self, message: str, **kwargs):
        super().__init__(f"Topology Error: {message}", **kwargs)


class NormalizationError(BunchkitError):
    # Zero-norm states, or a state that needed normalizing when that was switched off

    exit_code = 2

    def __init__(self, message: str, norm_sq: Optional[float] = None, **kwargs):
        if norm_sq is not None:
            kwargs["details"] = kwargs.get("details", {})
            kwargs["details"]["norm_sq"] = norm_sq
        super().__init__(f"Normalization Error: {message}", **kwargs)


class PostSelectionError(BunchkitError):
    # The zero-count condition can (almost) never be met for this configuration

    exit_code = 3

    def __init__(self, message: str, success_probability: float, **kwargs):
        kwargs["details"] = kwargs.get("details", {})
        kwargs["details"]["success_probability"] = success_probability
        self.success_probability = success_probability
        super().__init__(f"Post-Selection Impossible: {message}", **kwargs)


class ConsistencyError(BunchkitError):
    # Closed form and brute-force oracle disagree. Should never fire; if it does, it's a bug

    exit_code = 3

    def __init__(self, message: str, difference: float, **kwargs):
        kwargs["details"] = kwargs.get("details", {})
        kwargs["details"]["difference"] = difference
        super().__init__(f"Consistency Error: {message}", **kwargs)


def _plain(value: Any) -> Any:
    if isinstance(value, complex):
        return [value.real, value.imag]
    if isinstance(value, (tuple, set, frozenset)):
        return [_plain(v) for v in value]
    return value
