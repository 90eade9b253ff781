import numpy as np

from .exceptions import DomainError

_U64 = 2**64
_MANTISSA = 2.0**-52


class RngStream:
    """
    Seeded, counter-based uniform stream.

    (seed, stream_id) selects a Philox key through SeedSequence's spawn key,
    so the same pair always replays the same sequence and distinct stream ids
    are independent. A stream carries mutable state: never share one instance
    between concurrent callers, derive one per task instead.
    """

    def __init__(self, seed: int = 0, stream_id: int = 0):
        if not (0 <= seed < _U64 and 0 <= stream_id < _U64):
            raise DomainError(f"seed and stream_id must be 64-bit unsigned integers, got {seed}, {stream_id}")
        self.seed = int(seed)
        self.stream_id = int(stream_id)
        seq = np.random.SeedSequence(self.seed, spawn_key=(self.stream_id,))
        self._gen = np.random.Generator(np.random.Philox(seq))

    def __repr__(self) -> str:
        return f"RngStream(seed={self.seed}, stream_id={self.stream_id})"

    def derive(self, offset: int) -> "RngStream":
        """Fresh stream at stream_id + offset (same seed)."""
        return RngStream(self.seed, (self.stream_id + offset) % _U64)

    def uniforms(self, n: int) -> np.ndarray:
        """
        n uniforms strictly inside (0, 1).

        Each value is (k + 0.5)·2⁻⁵² for an integer k in [0, 2⁵²), so neither
        0 nor 1 can occur and log / quantile never see a boundary.
        """
        k = self._gen.integers(0, 2**52, size=n, dtype=np.int64)
        return (k + 0.5) * _MANTISSA
