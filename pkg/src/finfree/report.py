"""Machine-readable verification records shared by the checking modules."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one identity or theorem check.

    ``passed`` is None for error-branch reports (precondition not met); failed
    verdicts carry a concrete counter-witness inside ``witnesses``.  ``grade``
    distinguishes proof-grade conclusions from sampled evidence.
    """

    check: str
    inputs: dict
    passed: bool | None
    witnesses: dict = field(default_factory=dict)
    grade: str = "proof"
    error: str | None = None

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "inputs": dict(sorted(self.inputs.items())),
            "passed": self.passed,
            "witnesses": dict(sorted(self.witnesses.items())),
            "grade": self.grade,
            "error": self.error,
        }


def algebra_fingerprint(algebra) -> str:
    """Stable content hash of an algebra's base, table and unit."""
    h = hashlib.sha256()
    h.update(repr(algebra.domain).encode())
    h.update(repr(algebra.base_vars).encode())
    h.update(str(algebra.rank).encode())
    for row in algebra.table:
        for vec in row:
            for c in vec:
                h.update(c.canonical_str().encode())
                h.update(b";")
    for c in algebra.unit:
        h.update(c.canonical_str().encode())
    return h.hexdigest()[:16]
