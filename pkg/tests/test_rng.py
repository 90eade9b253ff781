import numpy as np
import pytest

from pseudo_lindley.exceptions import DomainError
from pseudo_lindley.rng import RngStream

def test_same_pair_replays():
    a = RngStream(42, 7).uniforms(1000)
    b = RngStream(42, 7).uniforms(1000)
    np.testing.assert_array_equal(a, b)

def test_distinct_streams_differ():
    a = RngStream(42, 7).uniforms(100)
    b = RngStream(42, 8).uniforms(100)
    c = RngStream(43, 7).uniforms(100)
    assert not np.array_equal(a, b)
    assert not np.array_equal(a, c)

def test_uniforms_strictly_inside_unit_interval():
    u = RngStream(0, 0).uniforms(200_000)
    assert u.min() > 0.0
    assert u.max() < 1.0
    assert abs(u.mean() - 0.5) < 0.005

def test_derive_offsets_stream_id():
    base = RngStream(9, 100)
    child = base.derive(5)
    assert (child.seed, child.stream_id) == (9, 105)
    np.testing.assert_array_equal(child.uniforms(10), RngStream(9, 105).uniforms(10))

def test_stream_continues_between_calls():
    r = RngStream(1, 1)
    joined = np.concatenate([r.uniforms(5), r.uniforms(5)])
    np.testing.assert_array_equal(joined, RngStream(1, 1).uniforms(10))

@pytest.mark.parametrize("seed, stream_id", [(-1, 0), (0, -1), (2**64, 0)])
def test_rejects_out_of_range_keys(seed, stream_id):
    with pytest.raises(DomainError):
        RngStream(seed, stream_id)
