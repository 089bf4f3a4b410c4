"""Small shared helpers."""

from __future__ import annotations

import os

__all__ = ["thread_count"]


def thread_count() -> int:
    """Parallelism cap from GRUSHIN_THREADS (0 or unset = automatic)."""
    raw = os.environ.get("GRUSHIN_THREADS", "0")
    try:
        n = int(raw)
    except ValueError:
        raise ValueError(f"GRUSHIN_THREADS must be an integer, got {raw!r}")
    if n < 0:
        raise ValueError("GRUSHIN_THREADS must be >= 0")
    if n == 0:
        return min(os.cpu_count() or 1, 8)
    return n
