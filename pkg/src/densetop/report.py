from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class TheoremReport:
    """Outcome of checking one statement over a finite universe.

    ``failures`` holds replayable counterexample records; an empty list
    means the statement was verified at this scale.
    """

    theorem: str
    n: int
    mode: str
    universe: str
    checked: int
    failures: list[dict] = field(default_factory=list)
    elapsed_ms: int = 0
    notes: list[str] = field(default_factory=list)

    @property
    def verified(self) -> bool:
        return not self.failures

    @property
    def verdict(self) -> str:
        return "verified at this scale" if self.verified else "falsified"

    def to_json(self, timing: bool = True) -> dict:
        return {
            "theorem": self.theorem,
            "n": self.n,
            "mode": self.mode,
            "universe": self.universe,
            "checked": self.checked,
            "failures": self.failures,
            "elapsed_ms": self.elapsed_ms if timing else 0,
            "verdict": self.verdict,
            "notes": self.notes,
        }

    def dumps(self, timing: bool = True) -> str:
        return json.dumps(self.to_json(timing), sort_keys=True, indent=2)
