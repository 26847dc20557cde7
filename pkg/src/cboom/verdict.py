"""Structured pass/fail reports for machine-checked statements."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class TheoremVerdict:
    """One checked statement instance, with witnesses that revalidate."""

    theorem: str
    params: dict
    passed: bool
    witnesses: list = field(default_factory=list)
    notes: str = ""

    def to_json(self) -> str:
        return json.dumps(
            {
                "theorem": self.theorem,
                "params": self.params,
                "pass": self.passed,
                "witnesses": self.witnesses,
                "notes": self.notes,
            },
            sort_keys=True,
        )

    def __bool__(self) -> bool:
        return self.passed
