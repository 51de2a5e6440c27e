"""Verdicts and check reports shared by the finite and symbolic engines."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from typing import Any


class Verdict(enum.Enum):
    TRUE = "true"
    FALSE = "false"
    VERIFIED = "verified-at-bound"
    UNKNOWN = "unknown"


@dataclass
class CheckReport:
    """Outcome of one separation-axiom check.

    ``verdict`` FALSE always carries a ``witness`` that can be re-checked
    against the defining predicate.  VERIFIED means no counterexample exists
    among the shapes enumerated at ``bound``.
    """

    axiom: str
    verdict: Verdict
    target: str = "A"
    bound: int | None = None
    witness: Any = None
    trace: list[str] = field(default_factory=list)
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def holds(self) -> bool | None:
        if self.verdict is Verdict.UNKNOWN:
            return None
        return self.verdict is not Verdict.FALSE

    def verdict_label(self) -> str:
        if self.verdict is Verdict.VERIFIED:
            return f"verified-at-bound({self.bound})"
        return self.verdict.value

    def to_json(self) -> dict:
        out = {
            "axiom": self.axiom,
            "target": self.target,
            "verdict": self.verdict_label(),
            "witness": _jsonable(self.witness),
            "trace": list(self.trace),
        }
        if self.details:
            out["details"] = _jsonable(self.details)
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def verdict_of(flag: bool) -> Verdict:
    return Verdict.TRUE if flag else Verdict.FALSE


def _jsonable(value: Any) -> Any:
    if hasattr(value, "to_json"):
        return value.to_json()
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted(_jsonable(v) for v in value)
    if isinstance(value, Verdict):
        return value.value
    return value
