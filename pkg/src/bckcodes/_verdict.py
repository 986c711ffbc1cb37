from __future__ import annotations

from dataclasses import dataclass
from typing import Any


@dataclass(frozen=True)
class Verdict:
    """Outcome of an exhaustive check.

    Truthy iff the check passed. On failure ``witness`` holds the smallest
    counterexample found and ``reason`` names what was violated.
    """

    ok: bool
    witness: Any = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


PASS = Verdict(True)


def fail(witness, reason: str = "") -> Verdict:
    return Verdict(False, witness, reason)
