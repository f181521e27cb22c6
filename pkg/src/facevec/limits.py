"""Resource caps for closure and clique enumeration."""
from __future__ import annotations

import os

DEFAULT_FACE_GUARD = 10**7
GUARD_ENV_VAR = "FACEVEC_GUARD"

# Exact chromatic number is only attempted up to this many vertices.
CHROMATIC_CAP = 20


def face_guard() -> int:
    """Active face/clique cap: the env override when set, else the default."""
    raw = os.environ.get(GUARD_ENV_VAR)
    if raw is None:
        return DEFAULT_FACE_GUARD
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{GUARD_ENV_VAR} must be an integer, got {raw!r}") from None
    if value <= 0:
        raise ValueError(f"{GUARD_ENV_VAR} must be positive, got {value}")
    return value
