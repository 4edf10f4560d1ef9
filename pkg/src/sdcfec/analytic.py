"""Closed-form error rates, capacities and an exact enumeration oracle.

:func:`exhaustive_ber` is the reference for coded error rates.  It lists
every assignment of Pauli errors to the Bell symbols of one frame,
weights each by its probability and pushes it through the same
deframe/decode path as the Monte Carlo simulator.  For the linear codes
and syndrome/majority decoders used here the decoded error depends only on
the channel error, so the all-zero message gives the exact answer for
every message.

Two of the printed closed forms are kept as *references*, not truths:
:func:`ber_rep3_noninterleaved_reference` and
:func:`fec_success_reference`.  Compare them with the oracle instead of
asserting them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import xlogy

from .channel import ERROR_MASK, PauliChannelParams
from .codes import LinearCode, encode_blocks, get_code
from .pipeline import frame_bits, frame_layout, map_to_symbols, recover_messages, unmap_to_bits

__all__ = [
    "EnumerationBudgetError",
    "ExhaustiveResult",
    "CapacityCurve",
    "ber_uncoded",
    "ber_rep3_interleaved",
    "ber_rep3_noninterleaved_reference",
    "fec_success_reference",
    "capacity_sdc",
    "capacity_direct",
    "capacity_curve",
    "exhaustive_ber",
    "DEFAULT_MAX_PATTERNS",
]

DEFAULT_MAX_PATTERNS = 10**7
_LN2 = math.log(2.0)


class EnumerationBudgetError(ValueError):
    """The frame has more error patterns than the enumeration budget."""


def _check_p(p: float) -> float:
    p = float(p)
    if not (0.0 <= p <= 1.0):
        raise ValueError(f"noise parameter must lie in [0, 1], got {p}")
    return p


def ber_uncoded(p: float) -> float:
    """Uncoded bit error rate, the same for SDC and direct sending."""
    return 2.0 * _check_p(p) / 3.0


def ber_rep3_interleaved(p: float) -> float:
    """Repetition [3,1] with two codewords interleaved bit by bit."""
    p = _check_p(p)
    return 4.0 / 3.0 * p**2 - 16.0 / 27.0 * p**3


def ber_rep3_noninterleaved_reference(p: float) -> float:
    """Printed polynomial for non-interleaved repetition [3,1].

    Kept verbatim for comparison; the enumeration oracle disagrees with its
    quadratic and cubic terms.
    """
    p = _check_p(p)
    return p / 3.0 + 7.0 / 18.0 * p**2 + 2.0 / 27.0 * p**3


def fec_success_reference(n: int, p: float) -> float:
    """Printed success probability of a distance-3 code over ``n`` symbols.

    ``(1-p)**n + (2p/3) (1-p)**(n-1)``.  It has no factor for which of the
    ``n`` symbols is hit, so treat it as a reference only.
    """
    p = _check_p(p)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return (1.0 - p) ** n + 2.0 * p / 3.0 * (1.0 - p) ** (n - 1)


def capacity_sdc(p: float) -> float:
    """Classical SDC capacity in bits per channel use (log base 2)."""
    p = _check_p(p)
    return 2.0 + (xlogy(1.0 - p, 1.0 - p) + xlogy(p, p / 3.0)) / _LN2


def capacity_direct(p: float) -> float:
    p = _check_p(p)
    return 1.0 + (xlogy(1.0 - p, 1.0 - p) + xlogy(p, p)) / _LN2


@dataclass(frozen=True)
class CapacityCurve:
    p: float
    c_sdc: float
    c_direct: float


def capacity_curve(p_grid) -> list[CapacityCurve]:
    return [CapacityCurve(float(p), capacity_sdc(p), capacity_direct(p)) for p in p_grid]


@dataclass(frozen=True)
class ExhaustiveResult:
    """Exact error statistics of one frame.

    The variances are per frame and let a Monte Carlo estimate over many
    independent frames be given an exact standard error, which matters
    when bit errors come in correlated bursts.
    """

    ber: float
    cer: float
    weight_total: float
    patterns: int
    frame_symbols: int
    frame_message_bits: int
    frame_codewords: int
    bit_error_var: float
    codeword_error_var: float

    def ber_sigma(self, bits_sent: int) -> float:
        frames = bits_sent / self.frame_message_bits
        return math.sqrt(self.bit_error_var / frames) / self.frame_message_bits

    def cer_sigma(self, codewords: int) -> float:
        frames = codewords / self.frame_codewords
        return math.sqrt(self.codeword_error_var / frames) / self.frame_codewords


def exhaustive_ber(
    code: LinearCode | str,
    depth: int = 1,
    pad_policy: str = "percodeword",
    params: PauliChannelParams | float = 0.0,
    *,
    channel: str = "sdc",
    message=None,
    max_patterns: int = DEFAULT_MAX_PATTERNS,
    chunk_size: int = 1 << 16,
) -> ExhaustiveResult:
    """Exact BER and CER of one frame by enumerating every error pattern.

    ``message`` is the frame's message (``codewords_per_frame * k`` bits),
    all zeros by default.  Error labels of probability zero are skipped,
    and the budget counts only the patterns that remain.

    Raises
    ------
    EnumerationBudgetError
        More than ``max_patterns`` patterns to enumerate.
    ValueError
        ``channel`` is not ``"sdc"``.
    """
    if channel != "sdc":
        raise ValueError(f"exhaustive enumeration supports the sdc channel only, got {channel!r}")
    code = get_code(code)
    if not isinstance(params, PauliChannelParams):
        params = PauliChannelParams.depolarizing(float(params))
    layout = frame_layout(code, depth, pad_policy)
    m = layout.frame_symbols
    per_frame = layout.codewords_per_frame

    probs = params.probs
    support = np.flatnonzero(probs > 0.0).astype(np.uint8)
    s = support.size
    patterns = s**m
    if patterns > max_patterns:
        raise EnumerationBudgetError(
            f"{code.name} frame has {m} symbols -> {patterns} error patterns, "
            f"over the budget of {max_patterns}"
        )

    if message is None:
        message = np.zeros(per_frame * code.k, dtype=np.uint8)
    blocks = np.asarray(message, dtype=np.uint8).reshape(per_frame, code.k)
    sent = map_to_symbols(frame_bits(encode_blocks(code, blocks), code, pad_policy, depth))

    place = s ** np.arange(m, dtype=np.int64)
    sums = {key: [] for key in ("w", "bit", "bit2", "cw", "cw2")}
    for start in range(0, patterns, chunk_size):
        idx = np.arange(start, min(start + chunk_size, patterns), dtype=np.int64)
        labels = support[(idx[:, None] // place) % s]
        weights = np.prod(probs[labels], axis=1)
        received = sent[None, :] ^ ERROR_MASK[labels]
        decoded, _ = recover_messages(unmap_to_bits(received), code, pad_policy, depth)
        wrong = decoded.reshape(idx.size, per_frame, code.k) != blocks
        bit_err = wrong.sum(axis=(1, 2)).astype(float)
        cw_err = wrong.any(axis=2).sum(axis=1).astype(float)
        sums["w"].append(weights.sum())
        sums["bit"].append(weights @ bit_err)
        sums["bit2"].append(weights @ bit_err**2)
        sums["cw"].append(weights @ cw_err)
        sums["cw2"].append(weights @ cw_err**2)

    total = {key: math.fsum(vals) for key, vals in sums.items()}
    message_bits = per_frame * code.k
    mean_bit = total["bit"]
    mean_cw = total["cw"]
    return ExhaustiveResult(
        ber=mean_bit / message_bits,
        cer=mean_cw / per_frame,
        weight_total=total["w"],
        patterns=patterns,
        frame_symbols=m,
        frame_message_bits=message_bits,
        frame_codewords=per_frame,
        bit_error_var=max(total["bit2"] - mean_bit**2, 0.0),
        codeword_error_var=max(total["cw2"] - mean_cw**2, 0.0),
    )
