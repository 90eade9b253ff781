from typing import Protocol, runtime_checkable

import numpy as np

from .._types import Params, SamplerKind
from ..rng import RngStream

@runtime_checkable
class Sampler(Protocol):
    kind: SamplerKind

    def draw(self, p: Params, r: RngStream, n: int) -> np.ndarray:
        """
        Draw an iid sample.

        Args:
            p: Pseudo-Lindley parameters.
            r: Stream supplying the uniforms; advanced by the call.
            n: Sample size, n >= 1.

        Returns:
            A float array of n nonnegative draws, deterministic given
            (r.seed, r.stream_id) and the stream's position.
        """
        ...
