"""End-to-end transmission: encode, frame, send, deframe, decode, count.

The transmit chain for one trial is::

    message -> encode_blocks -> frame_bits -> map_to_symbols -> transmit_sdc
            -> unmap_to_bits -> deframe_bits -> decode_blocks -> compare

For the direct channel the framed bits skip the symbol mapping and go
through :func:`~sdcfec.channel.transmit_direct` one bit per channel use.

A *frame* is the smallest self-contained unit of the stream: ``depth``
codewords (doubled when odd-length codewords are paired) plus their pad
bits.  Frames never share a channel symbol, so errors in different frames
are independent; :mod:`sdcfec.analytic` relies on that.

Randomness
----------
A trial with seed ``s`` draws its message from ``default_rng([s, 0])`` and
its channel errors from ``default_rng([s, 1])`` (numpy PCG64 seeded through
``SeedSequence``).  Sweep point ``i`` of a sweep with base seed ``s`` runs
with seed :func:`derive_seed` ``(s, i)``, the first 8 bytes (little endian)
of ``blake2b(f"{s}:{i}")``.  Results therefore do not depend on the order in
which points are evaluated.
"""

from __future__ import annotations

import hashlib
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from typing import Literal

import numpy as np

from .channel import BellSymbol, PauliChannelParams, transmit_direct, transmit_sdc
from .codes import LinearCode, decode_blocks, encode_blocks, get_code
from .interleave import InterleaveConfig, deinterleave, interleave

__all__ = [
    "PAD_POLICIES",
    "CHANNELS",
    "FrameLayout",
    "frame_layout",
    "frame_bits",
    "deframe_bits",
    "map_to_symbols",
    "unmap_to_bits",
    "symbols_display",
    "recover_messages",
    "TrialConfig",
    "TransmissionReport",
    "derive_seed",
    "random_message",
    "run_trial",
    "sweep",
]

PadPolicy = Literal["percodeword", "concat"]
ChannelKind = Literal["sdc", "direct"]
PAD_POLICIES = ("percodeword", "concat")
CHANNELS = ("sdc", "direct")


@dataclass(frozen=True)
class FrameLayout:
    """How codewords of one code are laid out on the channel."""

    n: int
    k: int
    depth: int
    pad_policy: str
    padded: bool  # one trailing 0 per codeword
    unit_length: int  # codeword length after padding
    codewords_per_frame: int

    @property
    def frame_bits(self) -> int:
        return self.unit_length * self.codewords_per_frame

    @property
    def frame_symbols(self) -> int:
        return self.frame_bits // 2

    @property
    def interleaver(self) -> InterleaveConfig:
        return InterleaveConfig(self.unit_length, self.depth)


def frame_layout(code: LinearCode | str, depth: int = 1, pad_policy: str = "percodeword") -> FrameLayout:
    code = get_code(code)
    if pad_policy not in PAD_POLICIES:
        raise ValueError(f"pad_policy must be one of {PAD_POLICIES}, got {pad_policy!r}")
    if depth < 1:
        raise ValueError(f"interleave depth must be >= 1, got {depth}")
    odd = code.n % 2 == 1
    padded = odd and pad_policy == "percodeword"
    unit = code.n + 1 if padded else code.n
    per_frame = math.lcm(depth, 2) if odd and pad_policy == "concat" else depth
    return FrameLayout(code.n, code.k, depth, pad_policy, padded, unit, per_frame)


def frame_bits(codewords, code: LinearCode | str, pad_policy: str = "percodeword", depth: int = 1) -> np.ndarray:
    """Pad (or pair) codewords and interleave them, ready for symbol mapping.

    ``codewords`` is the flat concatenation of whole codewords; their count
    must fill whole frames (a multiple of ``depth``, and even when odd
    codewords are paired).
    """
    layout = frame_layout(code, depth, pad_policy)
    bits = np.asarray(codewords, dtype=np.uint8).reshape(-1)
    if bits.size % layout.n:
        raise ValueError(f"input length {bits.size} is not a multiple of n={layout.n}")
    count = bits.size // layout.n
    if count % layout.codewords_per_frame:
        if layout.pad_policy == "concat" and layout.n % 2 and count % 2:
            raise ValueError(f"concat framing of odd-length codewords needs an even codeword count, got {count}")
        raise ValueError(
            f"codeword count {count} is not a multiple of the frame size "
            f"({layout.codewords_per_frame} codewords)"
        )
    rows = bits.reshape(count, layout.n)
    if layout.padded:
        rows = np.hstack([rows, np.zeros((count, 1), dtype=np.uint8)])
    return interleave(rows.reshape(-1), layout.interleaver)


def deframe_bits(bits, code: LinearCode | str, pad_policy: str = "percodeword", depth: int = 1) -> np.ndarray:
    """Inverse of :func:`frame_bits`; pad bits are dropped unread."""
    layout = frame_layout(code, depth, pad_policy)
    bits = np.asarray(bits, dtype=np.uint8).reshape(-1)
    if bits.size % layout.frame_bits:
        raise ValueError(f"input length {bits.size} is not a multiple of the frame ({layout.frame_bits} bits)")
    rows = deinterleave(bits, layout.interleaver).reshape(-1, layout.unit_length)
    return rows[:, : layout.n].reshape(-1)


def map_to_symbols(bits) -> np.ndarray:
    """Pair consecutive bits ``(c[2i], c[2i+1])`` into Bell labels."""
    bits = np.asarray(bits, dtype=np.uint8).reshape(-1)
    if bits.size % 2:
        raise ValueError(f"symbol mapping needs an even number of bits, got {bits.size}")
    pairs = bits.reshape(-1, 2)
    return (pairs[:, 0] << 1) | pairs[:, 1]


def unmap_to_bits(symbols) -> np.ndarray:
    symbols = np.asarray(symbols, dtype=np.uint8).reshape(-1)
    return np.stack([symbols >> 1, symbols & 1], axis=1).reshape(-1)


def symbols_display(symbols) -> list[str]:
    return [BellSymbol(int(s)).display for s in np.asarray(symbols).reshape(-1)]


def recover_messages(received_bits, code: LinearCode | str, pad_policy: str = "percodeword", depth: int = 1):
    """Deframe and decode a received bit stream of whole frames.

    Returns ``(messages, detected_uncorrectable)`` as from
    :func:`~sdcfec.codes.decode_blocks`.
    """
    code = get_code(code)
    words = deframe_bits(received_bits, code, pad_policy, depth).reshape(-1, code.n)
    messages, _, flagged = decode_blocks(code, words)
    return messages, flagged


@dataclass(frozen=True)
class TrialConfig:
    code: str = "none"
    channel: ChannelKind = "sdc"
    params: PauliChannelParams = PauliChannelParams.depolarizing(0.0)
    interleave_depth: int = 1
    message_bits: int = 1_000_000
    seed: int = 0
    pad_policy: PadPolicy = "percodeword"

    def __post_init__(self) -> None:
        get_code(self.code)
        if self.channel not in CHANNELS:
            raise ValueError(f"channel must be one of {CHANNELS}, got {self.channel!r}")
        if self.pad_policy not in PAD_POLICIES:
            raise ValueError(f"pad_policy must be one of {PAD_POLICIES}, got {self.pad_policy!r}")
        if self.message_bits < 1:
            raise ValueError(f"message_bits must be >= 1, got {self.message_bits}")
        if self.interleave_depth < 1:
            raise ValueError(f"interleave_depth must be >= 1, got {self.interleave_depth}")
        if self.seed < 0:
            raise ValueError(f"seed must be non-negative, got {self.seed}")


@dataclass(frozen=True)
class TransmissionReport:
    p: float
    params: PauliChannelParams
    channel: str
    code: str
    interleave_depth: int
    pad_policy: str
    bits_sent: int
    bit_errors: int
    ber: float
    codewords: int
    codeword_errors: int
    cer: float
    seed: int


def derive_seed(seed: int, index: int) -> int:
    digest = hashlib.blake2b(f"{seed}:{index}".encode(), digest_size=8).digest()
    return int.from_bytes(digest, "little")


def random_message(cfg: TrialConfig) -> np.ndarray:
    """``cfg.message_bits`` rounded up to a whole number of k-bit blocks."""
    k = get_code(cfg.code).k
    length = -(-cfg.message_bits // k) * k
    return np.random.default_rng([cfg.seed, 0]).integers(0, 2, size=length, dtype=np.uint8)


def run_trial(cfg: TrialConfig, message=None) -> TransmissionReport:
    """Send one message through the full chain and count the damage.

    ``message`` must hold a whole number of k-bit blocks; when omitted one
    is drawn with :func:`random_message`.  Zero blocks are appended to fill
    the last frame and are left out of every count.
    """
    code = get_code(cfg.code)
    layout = frame_layout(code, cfg.interleave_depth, cfg.pad_policy)
    if message is None:
        message = random_message(cfg)
    message = np.asarray(message, dtype=np.uint8).reshape(-1)
    if message.size == 0 or message.size % code.k:
        raise ValueError(f"message length {message.size} is not a positive multiple of k={code.k}")
    blocks = message.reshape(-1, code.k)
    count = blocks.shape[0]
    filler = -count % layout.codewords_per_frame
    padded = np.vstack([blocks, np.zeros((filler, code.k), dtype=np.uint8)])

    framed = frame_bits(encode_blocks(code, padded), code, cfg.pad_policy, cfg.interleave_depth)
    rng = np.random.default_rng([cfg.seed, 1])
    if cfg.channel == "sdc":
        received = unmap_to_bits(transmit_sdc(map_to_symbols(framed), cfg.params, rng))
    else:
        received = transmit_direct(framed, cfg.params, rng)

    decoded, _ = recover_messages(received, code, cfg.pad_policy, cfg.interleave_depth)
    wrong = decoded[:count] != blocks
    bit_errors = int(wrong.sum())
    codeword_errors = int(wrong.any(axis=1).sum())
    return TransmissionReport(
        p=cfg.params.p,
        params=cfg.params,
        channel=cfg.channel,
        code=code.name,
        interleave_depth=cfg.interleave_depth,
        pad_policy=cfg.pad_policy,
        bits_sent=int(message.size),
        bit_errors=bit_errors,
        ber=bit_errors / message.size,
        codewords=count,
        codeword_errors=codeword_errors,
        cer=codeword_errors / count,
        seed=cfg.seed,
    )


def sweep(base_cfg: TrialConfig, p_grid, workers: int = 1) -> list[TransmissionReport]:
    """Run one depolarizing trial per grid point, in grid order.

    Point ``i`` uses seed ``derive_seed(base_cfg.seed, i)`` so the reports
    are the same whatever ``workers`` is.
    """
    grid = [float(p) for p in p_grid]
    configs = []
    for i, p in enumerate(grid):
        if not (0.0 <= p <= 1.0):
            raise ValueError(f"noise parameter must lie in [0, 1], got {p}")
        configs.append(
            replace(base_cfg, params=PauliChannelParams.depolarizing(p), seed=derive_seed(base_cfg.seed, i))
        )
    if workers <= 1:
        reports = [run_trial(cfg) for cfg in configs]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(run_trial, configs))
    # report the grid value itself, not 1 - p0 with its rounding noise
    return [replace(r, p=p) for r, p in zip(reports, grid)]
