"""xoshiro256** seeded through splitmix64.

Both algorithms are fixed by their published constants, so a seed gives
the same stream in any language:

* splitmix64: ``z += 0x9E3779B97F4A7C15``; ``z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9``;
  ``z = (z ^ (z >> 27)) * 0x94D049BB133111EB``; output ``z ^ (z >> 31)``.
* xoshiro256**: output ``rotl(s1 * 5, 7) * 9``; state update with shift 17
  and rotation 45.

Integers in ``[lo, hi]`` are drawn by rejection on the top bits, so they
are exactly uniform.
"""

from __future__ import annotations

MASK = (1 << 64) - 1
ALGORITHM = "xoshiro256**/splitmix64 v1"


def _rotl(x: int, k: int) -> int:
    return ((x << k) | (x >> (64 - k))) & MASK


def splitmix64(state: int):
    """Infinite splitmix64 stream starting from ``state``."""
    z = state & MASK
    while True:
        z = (z + 0x9E3779B97F4A7C15) & MASK
        x = z
        x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & MASK
        x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & MASK
        yield x ^ (x >> 31)


class Xoshiro256:
    def __init__(self, seed: int, stream: int = 0):
        # the stream index is folded into the seed so sub-generators never overlap in practice
        mix = splitmix64((seed + stream * 0xD1B54A32D192ED03) & MASK)
        self.s = [next(mix) for _ in range(4)]

    def next_u64(self) -> int:
        s = self.s
        result = (_rotl((s[1] * 5) & MASK, 7) * 9) & MASK
        t = (s[1] << 17) & MASK
        s[2] ^= s[0]
        s[3] ^= s[1]
        s[1] ^= s[2]
        s[0] ^= s[3]
        s[2] ^= t
        s[3] = _rotl(s[3], 45)
        return result

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in the closed range [lo, hi]."""
        if hi < lo:
            raise ValueError("empty range")
        span = hi - lo + 1
        bits = max(1, (span - 1).bit_length())
        while True:
            v = self.next_u64() >> (64 - bits)
            if v < span:
                return lo + v

    def nonzero(self, mag: int) -> int:
        while True:
            v = self.randint(-mag, mag)
            if v:
                return v
