"""Deterministic seeded randomness shared by every randomized check.

A single splitmix64 stream per (seed, label) pair.  The same step function is
re-implemented inside the mod-p kernels (both backends), so randomized kernel
code consumes bit-identical streams whether or not the JIT is enabled.
"""

from __future__ import annotations

from fractions import Fraction

MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def splitmix64(state: int) -> tuple[int, int]:
    """One splitmix64 step: returns (new_state, output word)."""
    state = (state + _GOLDEN) & MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    z = z ^ (z >> 31)
    return state, z


def _fnv1a64(s: str) -> int:
    h = 0xCBF29CE484222325
    for ch in s.encode("utf-8"):
        h = ((h ^ ch) * 0x100000001B3) & MASK64
    return h


class Stream:
    """Deterministic u64 stream derived from an integer seed and a label.

    Labels isolate consumers: two checks seeded from the same run seed draw
    from independent streams, so registry order and concurrency cannot change
    any check's inputs.
    """

    def __init__(self, seed: int, label: str = ""):
        # ensure distinct seeds map to distinct states even for tiny seeds
        _, mixed = splitmix64(seed & MASK64)
        self._state = mixed ^ _fnv1a64(label)

    def u64(self) -> int:
        self._state, out = splitmix64(self._state)
        return out

    def below(self, n: int) -> int:
        """Uniform-ish integer in [0, n). Modulo bias is irrelevant here."""
        if n <= 0:
            raise ValueError("below() needs n >= 1")
        if n <= MASK64:
            return self.u64() % n
        # wide draws for big n (not used by checks, kept total)
        bits = n.bit_length()
        words = (bits + 63) // 64
        while True:
            v = 0
            for _ in range(words):
                v = (v << 64) | self.u64()
            if v < (n * ((1 << (64 * words)) // n)):
                return v % n

    def nonzero_below(self, n: int) -> int:
        while True:
            v = self.below(n)
            if v != 0:
                return v

    def int_range(self, lo: int, hi: int) -> int:
        """Integer in [lo, hi] inclusive."""
        return lo + self.below(hi - lo + 1)

    def fraction(self, num_bound: int = 50, den_bound: int = 20) -> Fraction:
        num = self.int_range(-num_bound, num_bound)
        den = self.int_range(1, den_bound)
        return Fraction(num, den)

    def nonzero_fraction(self, num_bound: int = 50, den_bound: int = 20) -> Fraction:
        while True:
            f = self.fraction(num_bound, den_bound)
            if f != 0:
                return f
