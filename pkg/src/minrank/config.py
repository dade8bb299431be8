"""Resource limits shared by the enumeration routines."""

from __future__ import annotations

import os
from dataclasses import dataclass

DEFAULT_MAX_GROUP = 10**6
ENV_MAX_GROUP = "MINRANK_MAX_GROUP"


@dataclass(frozen=True)
class Limits:
    max_group: int = DEFAULT_MAX_GROUP
    # brute-force generic position is cubic in |W|
    brute_force_rank: int = 4

    @classmethod
    def from_env(cls) -> "Limits":
        raw = os.environ.get(ENV_MAX_GROUP)
        if raw is None or not raw.strip():
            return cls()
        return cls(max_group=int(raw))


def max_group_order() -> int:
    return Limits.from_env().max_group
