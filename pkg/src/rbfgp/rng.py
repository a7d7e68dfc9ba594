"""Seeded, platform-independent random stream.

The generator is PCG32 (XSH-RR output on a 64-bit LCG state):

    state' = state * 6364136223846793005 + 1442695040888963407   (mod 2**64)
    out    = rotr32(((state ^ (state >> 18)) >> 27) mod 2**32, state >> 59)

computed from the *old* state. Seeding follows the reference PCG routine:
state = 0, step, state += seed, step. A uniform double takes two 32-bit
outputs (27 + 26 high bits) and is exact on the 2**-53 grid in [0, 1).
Normals use the Box-Muller transform and cache the second value of each pair.
"""
import math

import numpy as np

MASK64 = (1 << 64) - 1
MULTIPLIER = 6364136223846793005
INCREMENT = 1442695040888963407


def box_muller(u1, u2):
    """Map ``u1 in (0, 1]`` and ``u2 in [0, 1)`` to two independent N(0, 1) values."""
    r = math.sqrt(-2.0 * math.log(u1))
    theta = 2.0 * math.pi * u2
    return r * math.cos(theta), r * math.sin(theta)


class RandomStream:
    """Deterministic PCG32 stream. One owner per stream; not thread-safe."""

    def __init__(self, seed=0):
        seed = int(seed)
        if not 0 <= seed <= MASK64:
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {seed}")
        self.seed = seed
        self._state = 0
        self._next32()
        self._state = (self._state + seed) & MASK64
        self._next32()
        self._cached_normal = None

    def _next32(self):
        old = self._state
        self._state = (old * MULTIPLIER + INCREMENT) & MASK64
        xorshifted = (((old >> 18) ^ old) >> 27) & 0xFFFFFFFF
        rot = old >> 59
        return ((xorshifted >> rot) | (xorshifted << ((-rot) & 31))) & 0xFFFFFFFF

    def next_uint32(self):
        return self._next32()

    def next_uniform(self):
        """Uniform double in [0, 1)."""
        a = self._next32() >> 5
        b = self._next32() >> 6
        return (a * 67108864.0 + b) / 9007199254740992.0

    def next_standard_normal(self):
        if self._cached_normal is not None:
            z, self._cached_normal = self._cached_normal, None
            return z
        u1 = 1.0 - self.next_uniform()
        u2 = self.next_uniform()
        z0, z1 = box_muller(u1, u2)
        self._cached_normal = z1
        return z0

    def uniform(self, size):
        out = np.empty(size, dtype=float)
        flat = out.reshape(-1)
        for i in range(flat.size):
            flat[i] = self.next_uniform()
        return out

    def standard_normal(self, size):
        """Array of normals filled in C order from the stream."""
        out = np.empty(size, dtype=float)
        flat = out.reshape(-1)
        for i in range(flat.size):
            flat[i] = self.next_standard_normal()
        return out
