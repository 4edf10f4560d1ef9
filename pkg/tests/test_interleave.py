import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from sdcfec.interleave import InterleaveConfig, deinterleave, interleave


def test_repetition_pair_example():
    cfg = InterleaveConfig(codeword_length=3, depth=2)
    assert interleave([1, 1, 1, 0, 0, 0], cfg).tolist() == [1, 0, 1, 0, 1, 0]
    assert deinterleave([1, 0, 1, 0, 1, 0], cfg).tolist() == [1, 1, 1, 0, 0, 0]


def test_index_formula():
    out = interleave(np.array(list("abcdefgh")), InterleaveConfig(4, 2))
    assert "".join(out) == "aebfcgdh"


def test_depth_one_is_identity():
    x = np.random.default_rng(0).integers(0, 2, 35)
    cfg = InterleaveConfig(7, 1)
    assert (interleave(x, cfg) == x).all()
    assert (deinterleave(x, cfg) == x).all()


def test_multiple_blocks_are_independent():
    cfg = InterleaveConfig(3, 2)
    x = np.arange(12)
    assert interleave(x, cfg).tolist() == [0, 3, 1, 4, 2, 5, 6, 9, 7, 10, 8, 11]


@pytest.mark.parametrize("fn", [interleave, deinterleave])
def test_partial_block_rejected(fn):
    with pytest.raises(ValueError):
        fn(np.zeros(7), InterleaveConfig(3, 2))


@pytest.mark.parametrize("kwargs", [{"codeword_length": 0}, {"codeword_length": 3, "depth": 0}])
def test_invalid_config(kwargs):
    with pytest.raises(ValueError):
        InterleaveConfig(**kwargs)


@given(
    n=st.integers(1, 30),
    depth=st.integers(1, 6),
    blocks=st.integers(0, 5),
    seed=st.integers(0, 2**32 - 1),
)
def test_roundtrip_and_permutation(n, depth, blocks, seed):
    cfg = InterleaveConfig(n, depth)
    x = np.random.default_rng(seed).integers(0, 2, n * depth * blocks)
    y = interleave(x, cfg)
    assert (deinterleave(y, cfg) == x).all()
    assert sorted(y.tolist()) == sorted(x.tolist())
    tags = np.arange(x.size)
    assert sorted(interleave(tags, cfg).tolist()) == tags.tolist()


@given(n=st.integers(1, 25), blocks=st.integers(1, 4))
def test_depth_two_splits_every_symbol(n, blocks):
    # tag every bit with the index of its codeword
    cfg = InterleaveConfig(n, 2)
    owners = np.repeat(np.arange(2 * blocks), n)
    pairs = interleave(owners, cfg).reshape(-1, 2)
    assert (pairs[:, 0] != pairs[:, 1]).all()
