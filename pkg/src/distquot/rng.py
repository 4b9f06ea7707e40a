"""Seedable, platform-independent random number generation.

Experiment trials must reproduce bit-for-bit across machines, so random
sampling is driven by splitmix64 (Steele, Lea, Flood 2014): a 64-bit
counter-based generator with a fixed, documented update, independent of
Python's hash randomization and of any numpy version.
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """splitmix64 stream seeded with a 64-bit integer."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform integer in [0, n), unbiased via rejection."""
        if n <= 0:
            raise ValueError("below() requires n >= 1")
        limit = _MASK64 - (_MASK64 + 1) % n
        while True:
            v = self.next64()
            if v <= limit:
                return v % n


def sample_without_replacement(rng: SplitMix64, n: int, k: int) -> list[int]:
    """k distinct integers from [0, n) via a sparse partial Fisher-Yates shuffle.

    Only the touched slots of the virtual permutation are stored, so n may be
    as large as a full grid (2^24) without allocating an n-sized array.
    """
    if k < 0 or k > n:
        raise ValueError(f"cannot draw {k} distinct values from a range of {n}")
    swapped: dict[int, int] = {}
    out = []
    for i in range(k):
        j = i + rng.below(n - i)
        out.append(swapped.get(j, j))
        swapped[j] = swapped.get(i, i)
    return out
