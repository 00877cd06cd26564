"""Seeded, platform-independent random stream.

Algorithm ``xoshiro256**`` (Blackman & Vigna), state seeded by four
consecutive SplitMix64 outputs of the user seed. State transition per draw::

    result = rotl(s1 * 5, 7) * 9
    t = s1 << 17
    s2 ^= s0; s3 ^= s1; s1 ^= s2; s0 ^= s3
    s2 ^= t;  s3 = rotl(s3, 45)

all arithmetic mod 2**64. Bounded integers use Lemire's multiply-and-reject
method, so they are unbiased. Reals are ``(x >> 11) * 2**-53``.
Changing any of this must bump ``ALGORITHM``.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1
ALGORITHM = "xoshiro256**/splitmix64-seed/lemire-bounded v1"


def _splitmix64(x: int) -> tuple[int, int]:
    x = (x + 0x9E3779B97F4A7C15) & MASK64
    z = x
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return x, z ^ (z >> 31)


class RandomStream:
    algorithm = ALGORITHM

    def __init__(self, seed: int):
        self.seed = seed
        x = seed & MASK64
        state = []
        for _ in range(4):
            x, z = _splitmix64(x)
            state.append(z)
        self._s = state

    def next_u64(self) -> int:
        s0, s1, s2, s3 = self._s
        r = ((s1 * 5) & MASK64)
        r = (((r << 7) | (r >> 57)) & MASK64) * 9 & MASK64
        t = (s1 << 17) & MASK64
        s2 ^= s0
        s3 ^= s1
        s1 ^= s2
        s0 ^= s3
        s2 ^= t
        s3 = ((s3 << 45) | (s3 >> 19)) & MASK64
        self._s = [s0, s1, s2, s3]
        return r

    def below(self, n: int) -> int:
        """Uniform integer in ``[0, n)``."""
        if n <= 0:
            raise ValueError("n must be positive")
        m = self.next_u64() * n
        low = m & MASK64
        if low < n:
            threshold = (-n) % n
            while low < threshold:
                m = self.next_u64() * n
                low = m & MASK64
        return m >> 64

    def integers(self, low: int, high: int) -> int:
        """Uniform integer in ``[low, high]`` inclusive."""
        return low + self.below(high - low + 1)

    def random(self) -> float:
        return (self.next_u64() >> 11) * (1.0 / 9007199254740992.0)


def rng_stream(seed: int) -> RandomStream:
    return RandomStream(seed)
