"""Deterministic JSON reports: identical input and seed give
byte-identical output. Wall-clock timing is therefore opt-in and null by
default."""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from typing import Optional

from . import __version__

REPORT_FORMAT = 1


@dataclass
class Report:
    command: str
    input_digest: Optional[str] = None
    seed: Optional[int] = None
    certificates: list = field(default_factory=list)
    enumeration: Optional[dict] = None
    suite: Optional[list] = None
    timing_ms: Optional[float] = None

    def to_dict(self) -> dict:
        return {
            "format": REPORT_FORMAT,
            "tool": "distab",
            "version": __version__,
            "command": self.command,
            "input_digest": self.input_digest,
            "seed": self.seed,
            "certificates": self.certificates,
            "enumeration": self.enumeration,
            "suite": self.suite,
            "timing_ms": self.timing_ms,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"


def digest(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()
