"""Deterministic seed derivation shared by the trainers and samplers.

A single user-facing seed is split into independent streams with a
splitmix64 finalizer. String parts hash through sha256, so per-class
seeds depend on the class identity rather than its position: permuting
the class list cannot change any stream.
"""

from __future__ import annotations

import hashlib

_MASK = (1 << 64) - 1


def _mix(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & _MASK
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK
    return x ^ (x >> 31)


def derive_seed(seed: int, *parts) -> int:
    """Mix integer or string parts into a 64-bit stream seed."""
    x = seed & _MASK
    for part in parts:
        if isinstance(part, str):
            digest = hashlib.sha256(part.encode("utf-8")).digest()
            part = int.from_bytes(digest[:8], "big")
        x = _mix(x ^ (part & _MASK))
    return _mix(x)
