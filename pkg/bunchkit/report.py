# RunReport: what every CLI command hands back, and what --json prints

from __future__ import annotations

from typing import Any, Dict, List

from pydantic import BaseModel, Field


class RunReport(BaseModel):
    """One CLI invocation: the command, its parsed inputs, its results, and any warnings."""

    command: str = Field(..., min_length=1)
    inputs: Dict[str, Any] = Field(default_factory=dict)
    outputs: Dict[str, Any] = Field(default_factory=dict)
    warnings: List[str] = Field(default_factory=list)

    def to_json(self) -> str:
        return self.model_dump_json(indent=2)

    @classmethod
    def from_json(cls, data: str) -> "RunReport":
        return cls.model_validate_json(data)


def jsonable(value: Any) -> Any:
    # Tuples become lists and complex numbers become [re, im] so the report round-trips
    if isinstance(value, complex):
        return [value.real, value.imag]
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if hasattr(value, "item") and callable(value.item):
        return value.item()
    return value
