"""Axiom-check reports with counterexample witnesses."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .linalg import FinSupp, format_scalar


def render(value: Any) -> Any:
    """JSON-friendly rendering of scalars, sparse vectors and keys."""
    if isinstance(value, Fraction):
        return format_scalar(value)
    if isinstance(value, FinSupp):
        return [[render(k), format_scalar(v)] for k, v in value.items()]
    if isinstance(value, (list, tuple)):
        return [render(v) for v in value]
    if isinstance(value, dict):
        return {str(k): render(v) for k, v in value.items()}
    if isinstance(value, (int, str, bool)) or value is None:
        return value
    return repr(value)


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple
    lhs: Any
    rhs: Any

    def to_dict(self) -> dict:
        return {"axiom": self.axiom, "witness": render(self.witness),
                "lhs": render(self.lhs), "rhs": render(self.rhs)}


@dataclass
class AxiomReport:
    """Outcome of an exhaustive (or sampled) axiom check.

    ``checked`` counts evaluated instances per axiom; ``probes`` holds
    informational findings (e.g. an associativity witness) that are not
    failures.  ``passed`` is true iff there are no violations.
    """

    violations: list[Violation] = field(default_factory=list)
    checked: dict[str, int] = field(default_factory=dict)
    probes: dict[str, Any] = field(default_factory=dict)
    sampled: bool = False

    @property
    def passed(self) -> bool:
        return not self.violations

    def check(self, axiom: str, witness: tuple, lhs, rhs) -> bool:
        self.checked[axiom] = self.checked.get(axiom, 0) + 1
        if lhs != rhs:
            self.violations.append(Violation(axiom, tuple(witness), lhs, rhs))
            return False
        return True

    def failed_axioms(self) -> list[str]:
        return sorted({v.axiom for v in self.violations})

    def first(self, axiom: str) -> Violation | None:
        return next((v for v in self.violations if v.axiom == axiom), None)

    def merge(self, other: "AxiomReport") -> "AxiomReport":
        self.violations.extend(other.violations)
        for k, n in other.checked.items():
            self.checked[k] = self.checked.get(k, 0) + n
        self.probes.update(other.probes)
        self.sampled = self.sampled or other.sampled
        return self

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "sampled": self.sampled,
            "checked": dict(sorted(self.checked.items())),
            "violations": [v.to_dict() for v in self.violations],
            "probes": render(dict(sorted(self.probes.items()))),
        }
