"""Row-column block interleaver.

``depth`` consecutive codewords are written as the rows of a
``depth x codeword_length`` array and read out column by column, so bit
``j`` of codeword ``i`` lands at position ``j * depth + i`` of the block.
With ``depth=2`` the two bits of every Bell symbol then come from two
different codewords and a double-bit symbol error becomes two single-bit
codeword errors.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ["InterleaveConfig", "interleave", "deinterleave"]


@dataclass(frozen=True)
class InterleaveConfig:
    codeword_length: int
    depth: int = 2

    def __post_init__(self) -> None:
        if self.codeword_length < 1:
            raise ValueError(f"codeword_length must be >= 1, got {self.codeword_length}")
        if self.depth < 1:
            raise ValueError(f"depth must be >= 1, got {self.depth}")

    @property
    def block_size(self) -> int:
        return self.codeword_length * self.depth


def _blocks(bits, cfg: InterleaveConfig) -> np.ndarray:
    bits = np.asarray(bits).reshape(-1)
    if bits.size % cfg.block_size:
        raise ValueError(
            f"input length {bits.size} is not a multiple of the interleave block "
            f"({cfg.codeword_length} x {cfg.depth} = {cfg.block_size})"
        )
    return bits


def interleave(bits, cfg: InterleaveConfig) -> np.ndarray:
    bits = _blocks(bits, cfg)
    rows = bits.reshape(-1, cfg.depth, cfg.codeword_length)
    return rows.transpose(0, 2, 1).reshape(-1)


def deinterleave(bits, cfg: InterleaveConfig) -> np.ndarray:
    bits = _blocks(bits, cfg)
    cols = bits.reshape(-1, cfg.codeword_length, cfg.depth)
    return cols.transpose(0, 2, 1).reshape(-1)
