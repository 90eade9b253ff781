import pytest
from pseudo_lindley._types import Params
from pseudo_lindley.rng import RngStream

@pytest.fixture
def p22():
    # θ = β = 2, the parameter point of the reference simulation table
    return Params(2.0, 2.0)

@pytest.fixture
def stream():
    return RngStream(seed=20240601, stream_id=0)
