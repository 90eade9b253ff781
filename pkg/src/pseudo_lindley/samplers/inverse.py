import numpy as np

from .._types import Params, QuantileSettings, SamplerKind
from ..distribution import sample_inverse
from ..rng import RngStream


class InverseSampler:
    """Quantile inversion by dichotomy, the reference generator."""

    kind: SamplerKind = "inverse"

    def __init__(self, settings: QuantileSettings | None = None):
        self.settings = settings if settings is not None else QuantileSettings()

    def draw(self, p: Params, r: RngStream, n: int) -> np.ndarray:
        return sample_inverse(p, r, n, self.settings)
