"""Boolean verdicts that carry a witness."""

from dataclasses import dataclass
from typing import Any


@dataclass(frozen=True)
class Check:
    """Result of a decidable check.

    ``ok`` is the verdict; ``witness`` holds the counterexample on failure
    (or, for existence checks, the found object on success).  Truthiness
    follows ``ok``, so ``if not check: ...`` reads naturally.
    """

    ok: bool
    witness: Any = None

    def __bool__(self) -> bool:
        return self.ok
