"""Portable seeded generator for reproducible property trials.

State update (xorshift64*, all arithmetic mod 2**64)::

    x ^= x >> 12
    x ^= x << 25
    x ^= x >> 27
    out = x * 0x2545F4914F6CDD1D

The initial state is ``splitmix64(seed)``::

    z = seed + 0x9E3779B97F4A7C15
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    z = z ^ (z >> 31)

with a zero result replaced by ``0x9E3779B97F4A7C15``.  Floats in [0, 1)
take the top 53 bits of ``out`` divided by ``2**53``.  Trial ``t`` of a run
with seed ``s`` uses the generator seeded with ``s + t``.
"""

from __future__ import annotations

from fractions import Fraction

MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def splitmix64(seed: int) -> int:
    z = (seed + _GOLDEN) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class XorShift64Star:
    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = splitmix64(seed & MASK64) or _GOLDEN

    def next_u64(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & MASK64
        x ^= x >> 27
        self.state = x
        return (x * 0x2545F4914F6CDD1D) & MASK64

    def random(self) -> float:
        return (self.next_u64() >> 11) / 9007199254740992.0

    def uniform(self, lo: float, hi: float) -> float:
        return lo + (hi - lo) * self.random()

    def randint(self, lo: int, hi: int) -> int:
        """Integer in ``[lo, hi]`` inclusive (modulo reduction; bias is negligible here)."""
        return lo + self.next_u64() % (hi - lo + 1)

    def fraction(self, num_bound: int = 9, den_bound: int = 6) -> Fraction:
        return Fraction(self.randint(-num_bound, num_bound), self.randint(1, den_bound))


def trial_rng(seed: int, trial: int) -> XorShift64Star:
    return XorShift64Star(seed + trial)
