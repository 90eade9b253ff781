from .._types import SamplerKind
from ..exceptions import DomainError
from .inverse import InverseSampler
from .mixture import MixtureSampler
from .protocol import Sampler

_SAMPLERS: dict[str, type] = {
    "inverse": InverseSampler,
    "mixture": MixtureSampler,
}


def get_sampler(kind: SamplerKind) -> Sampler:
    """Instantiate the sampler backend registered under `kind`."""
    try:
        return _SAMPLERS[kind]()
    except KeyError:
        raise DomainError(f"unknown sampler {kind!r}; expected one of {sorted(_SAMPLERS)}") from None


__all__ = ["Sampler", "InverseSampler", "MixtureSampler", "get_sampler"]
