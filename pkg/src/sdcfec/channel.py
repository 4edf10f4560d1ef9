"""Bell-symbol algebra and the one-sided Pauli channel.

Transmission is simulated in the label algebra rather than with density
matrices.  A Pauli channel maps each Bell state onto a mixture of Bell
states, so measuring the received state is the same as XOR-ing the sent
label with a sampled error label.

Two integer encodings are in play and they are NOT the same:

* a Bell symbol ``(b0, b1)`` has label ``2*b0 + b1``;
* an error index ``j`` follows the probability vector order
  ``(I, X, Z, XZ)``, so ``j & 1`` is the X component (flips ``b0``) and
  ``j >> 1`` is the Z component (flips ``b1``).

:data:`ERROR_MASK` converts an error index into the XOR mask applied to a
symbol label.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

__all__ = [
    "BellSymbol",
    "ErrorLabel",
    "ERROR_MASK",
    "PauliChannelParams",
    "symbol_from_bits",
    "apply_error",
    "sample_error",
    "sample_errors",
    "transition_matrix_sdc",
    "transition_matrix_direct",
    "transmit_sdc",
    "transmit_direct",
]

_PROB_TOL = 1e-12


class BellSymbol(enum.IntEnum):
    """One of the four Bell states, labelled ``2*b0 + b1``."""

    PHI_PLUS = 0  # (0, 0)
    PHI_MINUS = 1  # (0, 1)
    PSI_PLUS = 2  # (1, 0)
    PSI_MINUS = 3  # (1, 1)

    @property
    def b0(self) -> int:
        return int(self) >> 1

    @property
    def b1(self) -> int:
        return int(self) & 1

    @property
    def bits(self) -> tuple[int, int]:
        return self.b0, self.b1

    @property
    def display(self) -> str:
        return _DISPLAY[self]


_DISPLAY = {
    BellSymbol.PHI_PLUS: "Φ⁺",
    BellSymbol.PHI_MINUS: "Φ⁻",
    BellSymbol.PSI_PLUS: "Ψ⁺",
    BellSymbol.PSI_MINUS: "Ψ⁻",
}


class ErrorLabel(enum.IntEnum):
    """Pauli error applied to the transmitted half of the pair."""

    I = 0
    X = 1
    Z = 2
    XZ = 3

    @property
    def flips_b0(self) -> bool:
        return bool(self & 1)

    @property
    def flips_b1(self) -> bool:
        return bool(self >> 1)


# error index -> XOR mask on symbol labels (X flips b0, the high label bit)
ERROR_MASK = np.array([0, 2, 1, 3], dtype=np.uint8)


@dataclass(frozen=True)
class PauliChannelParams:
    """Probabilities of the errors I, X, Z and XZ on one channel use."""

    p0: float
    p1: float
    p2: float
    p3: float

    def __post_init__(self) -> None:
        probs = (self.p0, self.p1, self.p2, self.p3)
        for value in probs:
            if not (0.0 <= value <= 1.0):
                raise ValueError(f"probabilities must lie in [0, 1], got {probs}")
        if abs(sum(probs) - 1.0) > _PROB_TOL:
            raise ValueError(f"probabilities must sum to 1, got {sum(probs)!r}")

    @classmethod
    def depolarizing(cls, p: float) -> PauliChannelParams:
        if not (0.0 <= p <= 1.0):
            raise ValueError(f"depolarizing parameter must lie in [0, 1], got {p}")
        return cls(1.0 - p, p / 3, p / 3, p / 3)

    @property
    def probs(self) -> np.ndarray:
        return np.array([self.p0, self.p1, self.p2, self.p3], dtype=float)

    @property
    def p(self) -> float:
        """Total error probability ``1 - p0`` (the depolarizing parameter)."""
        return 1.0 - self.p0

    @property
    def bit_flip_probability(self) -> float:
        """Probability that a single directly-sent bit is flipped."""
        return self.p1 + self.p3

    def _cdf_edges(self) -> np.ndarray:
        return np.cumsum(self.probs)[:3]


def symbol_from_bits(b0: int, b1: int) -> BellSymbol:
    return BellSymbol(((int(b0) & 1) << 1) | (int(b1) & 1))


def apply_error(s: int, e: int) -> BellSymbol:
    """Return the symbol Bob measures when error ``e`` strikes symbol ``s``."""
    return BellSymbol(int(s) ^ int(ERROR_MASK[int(e)]))


def sample_error(params: PauliChannelParams, rng: np.random.Generator) -> ErrorLabel:
    """Draw one error label by inverse CDF over ``(I, X, Z, XZ)``.

    Consumes exactly one uniform draw from ``rng``.
    """
    u = rng.random()
    return ErrorLabel(int(np.searchsorted(params._cdf_edges(), u, side="right")))


def sample_errors(
    params: PauliChannelParams, rng: np.random.Generator, size: int
) -> np.ndarray:
    """Vectorised :func:`sample_error`; the same draws in the same order."""
    u = rng.random(size)
    return np.searchsorted(params._cdf_edges(), u, side="right").astype(np.uint8)


def transition_matrix_sdc(params: PauliChannelParams) -> np.ndarray:
    """4x4 matrix whose entry ``[b', b]`` is ``Prob(b' | b)`` for SDC.

    Columns index the sent label, rows the received label.
    """
    mask_to_prob = np.empty(4)
    mask_to_prob[ERROR_MASK] = params.probs
    labels = np.arange(4)
    return mask_to_prob[labels[:, None] ^ labels[None, :]]


def transition_matrix_direct(params: PauliChannelParams) -> np.ndarray:
    """Same layout as :func:`transition_matrix_sdc` for two direct sends.

    Each bit rides its own channel use and is flipped independently by
    the X-component errors.
    """
    q = params.bit_flip_probability
    labels = np.arange(4)
    diff = labels[:, None] ^ labels[None, :]
    flips = (diff >> 1) + (diff & 1)
    return q**flips * (1.0 - q) ** (2 - flips)


def transmit_sdc(
    symbols, params: PauliChannelParams, rng: np.random.Generator
) -> np.ndarray:
    """Send a sequence of Bell labels through the channel, one error each."""
    symbols = np.asarray(symbols, dtype=np.uint8).reshape(-1)
    errors = sample_errors(params, rng, symbols.size)
    return symbols ^ ERROR_MASK[errors]


def transmit_direct(
    bits, params: PauliChannelParams, rng: np.random.Generator
) -> np.ndarray:
    """Send bits one per channel use; Z alone only changes the phase."""
    bits = np.asarray(bits, dtype=np.uint8).reshape(-1)
    errors = sample_errors(params, rng, bits.size)
    return bits ^ (errors & 1)
