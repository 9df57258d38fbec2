"""SplitMix64, the generator behind every seeded construction.

Chosen because its output is fully specified by a few lines of 64-bit integer
arithmetic, so golden files generated here can be reproduced by any other
implementation.  ``split`` derives an independent child stream.
"""

from fractions import Fraction

ALGORITHM = "splitmix64/v1"

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + _GAMMA) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def split(self) -> "SplitMix64":
        return SplitMix64(self.next_u64())

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound), by rejection (no modulo bias)."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - (1 << 64) % bound
        while True:
            r = self.next_u64()
            if r < limit:
                return r % bound

    def bernoulli(self, p: Fraction) -> bool:
        """True with probability exactly ``p`` up to 2**-64 resolution."""
        return self.next_u64() * p.denominator < p.numerator << 64
