"""Counter based random streams.

Draw ``k`` of trial ``t`` is a pure function of ``(seed, t, k)``, so results
never depend on how trials are split across workers or on how many draws an
earlier trial consumed.  The generator is a splitmix64 style Weyl sequence:
a stream key is mixed from ``(seed, trial)`` and each draw finalizes
``key + (k + 1) * GOLDEN``.

The compiled batch kernels in ``_kernels`` reimplement exactly this function
on uint64; the two are checked against each other in the test suite.
"""

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15
TRIAL_STRIDE = 0xC2B2AE3D27D4EB4F
KEY_OFFSET = 0xD1B54A32D192ED03

_TWO53 = float(1 << 53)


def mix64(z: int) -> int:
    """The splitmix64 finalizer on 64-bit integers."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def stream_key(seed: int, trial: int) -> int:
    """The 64-bit key of stream ``trial`` under ``seed``."""
    return mix64(seed * GOLDEN + trial * TRIAL_STRIDE + KEY_OFFSET)


def draw_u64(seed: int, trial: int, index: int) -> int:
    """Draw ``index`` of stream ``(seed, trial)`` as a uint64."""
    return mix64(stream_key(seed, trial) + (index + 1) * GOLDEN)


class CounterRng:
    """Stateful view of one ``(seed, trial)`` stream.

    Equivalent to calling ``draw_u64(seed, trial, k)`` for k = 0, 1, 2, ...
    """

    __slots__ = ("_key", "_index")

    def __init__(self, seed: int, trial: int = 0):
        self._key = stream_key(seed, trial)
        self._index = 0

    def next_u64(self) -> int:
        u = mix64(self._key + (self._index + 1) * GOLDEN)
        self._index += 1
        return u

    def random(self) -> float:
        """Uniform float in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) / _TWO53

    def randbelow(self, m: int) -> int:
        """Exact uniform integer in [0, m) by 64-bit rejection."""
        if m <= 0:
            raise ValueError(f"randbelow needs m >= 1, got {m}")
        rem = (1 << 64) % m
        limit = (1 << 64) - rem
        while True:
            u = self.next_u64()
            if u < limit:
                return u % m

    @property
    def draws_used(self) -> int:
        return self._index
