"""Binary linear block codes: repetition, Hamming [7,4] and extended Golay.

Conventions
-----------
* ``generator`` is the n-by-k matrix ``G`` with codeword ``c = G b`` over
  GF(2).  Bit 0 of a codeword is transmitted first.
* ``parity_check`` is ``H`` with ``H c = 0`` for every codeword.
* Every code here is systematic: ``message_positions`` lists the codeword
  indices holding the message bits, so decoding is "correct the codeword,
  then read those positions".

Decoding works on 2-D arrays of blocks so that a million-bit stream is
decoded in a handful of numpy calls.  :func:`decode` is the single-block
wrapper.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "LinearCode",
    "DecodeResult",
    "encode",
    "encode_blocks",
    "decode",
    "decode_blocks",
    "syndrome",
    "code_catalog",
    "get_code",
    "CODE_NAMES",
]


@dataclass(frozen=True, eq=False)
class LinearCode:
    """An ``[n, k]`` binary code correcting ``t`` errors.

    ``decoder`` is one of ``"identity"``, ``"majority"`` or ``"syndrome"``.
    Syndrome decoding uses ``leaders``: for every syndrome (packed as an
    integer, first syndrome bit most significant) the error pattern to
    remove, plus a flag for syndromes the code detects but cannot correct.
    """

    name: str
    n: int
    k: int
    t: int
    generator: np.ndarray
    parity_check: np.ndarray
    message_positions: tuple[int, ...]
    decoder: str
    leaders: np.ndarray | None = field(default=None, repr=False)
    uncorrectable: np.ndarray | None = field(default=None, repr=False)

    @property
    def rate(self) -> float:
        return self.k / self.n


@dataclass(frozen=True, eq=False)
class DecodeResult:
    message: np.ndarray
    corrected_bits: int
    detected_uncorrectable: bool


def _as_blocks(bits, width: int, what: str) -> np.ndarray:
    arr = np.asarray(bits, dtype=np.uint8)
    if arr.ndim == 1:
        arr = arr.reshape(1, -1) if arr.size else arr.reshape(0, width)
    if arr.ndim != 2 or arr.shape[1] != width:
        raise ValueError(f"{what} blocks must have length {width}, got shape {arr.shape}")
    return arr


def _gf2_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    # float matmul goes through BLAS; sums stay far below 2**24 so this is exact
    return (a.astype(np.float32) @ b.astype(np.float32)).astype(np.int64) & 1


def encode_blocks(code: LinearCode, messages) -> np.ndarray:
    """Encode an ``(m, k)`` array of messages into an ``(m, n)`` array."""
    messages = _as_blocks(messages, code.k, "message")
    return _gf2_matmul(messages, code.generator.T).astype(np.uint8)


def encode(code: LinearCode, message) -> np.ndarray:
    message = np.asarray(message, dtype=np.uint8)
    if message.ndim != 1 or message.size != code.k:
        raise ValueError(f"{code.name} expects a {code.k}-bit message, got {message.size} bits")
    return encode_blocks(code, message.reshape(1, -1))[0]


def _syndrome_blocks(code: LinearCode, received: np.ndarray) -> np.ndarray:
    return _gf2_matmul(received, code.parity_check.T).astype(np.uint8)


def syndrome(code: LinearCode, received) -> np.ndarray:
    """``H d`` over GF(2); all zero iff ``received`` is a codeword."""
    received = np.asarray(received, dtype=np.uint8)
    if received.ndim != 1 or received.size != code.n:
        raise ValueError(f"{code.name} expects {code.n} received bits, got {received.size}")
    return _syndrome_blocks(code, received.reshape(1, -1))[0]


def _pack(bits: np.ndarray) -> np.ndarray:
    weights = 1 << np.arange(bits.shape[-1] - 1, -1, -1, dtype=np.int64)
    return bits.astype(np.int64) @ weights


def decode_blocks(code: LinearCode, received) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Decode an ``(m, n)`` array of received words.

    Returns ``(messages, corrected_bits, detected_uncorrectable)`` with
    shapes ``(m, k)``, ``(m,)`` and ``(m,)``.
    """
    received = _as_blocks(received, code.n, "received")
    m = received.shape[0]
    if code.decoder == "identity":
        return received.copy(), np.zeros(m, dtype=np.int64), np.zeros(m, dtype=bool)
    if code.decoder == "majority":
        ones = received.sum(axis=1, dtype=np.int64)
        decided = (2 * ones > code.n).astype(np.uint8)
        corrected = np.where(decided == 1, code.n - ones, ones)
        tie = 2 * ones == code.n
        return decided.reshape(-1, 1), corrected, tie
    if code.decoder == "syndrome":
        idx = _pack(_syndrome_blocks(code, received))
        fixed = received ^ code.leaders[idx]
        corrected = code.leaders[idx].sum(axis=1, dtype=np.int64)
        return fixed[:, list(code.message_positions)], corrected, code.uncorrectable[idx].copy()
    raise ValueError(f"unknown decoder {code.decoder!r}")


def decode(code: LinearCode, received) -> DecodeResult:
    received = np.asarray(received, dtype=np.uint8)
    if received.ndim != 1 or received.size != code.n:
        raise ValueError(f"{code.name} expects {code.n} received bits, got {received.size}")
    messages, corrected, flagged = decode_blocks(code, received.reshape(1, -1))
    return DecodeResult(messages[0], int(corrected[0]), bool(flagged[0]))


# ---------------------------------------------------------------------------
# catalog

def _identity_code() -> LinearCode:
    # two bits per block so uncoded bits pair straight into Bell symbols
    return LinearCode(
        name="none", n=2, k=2, t=0,
        generator=np.eye(2, dtype=np.uint8),
        parity_check=np.zeros((0, 2), dtype=np.uint8),
        message_positions=(0, 1),
        decoder="identity",
    )


def repetition_code(n: int) -> LinearCode:
    if n < 1 or n % 2 == 0:
        raise ValueError(f"repetition length must be odd and positive, got {n}")
    h = np.hstack([np.ones((n - 1, 1), dtype=np.uint8), np.eye(n - 1, dtype=np.uint8)])
    return LinearCode(
        name=f"rep{n}", n=n, k=1, t=n // 2,
        generator=np.ones((n, 1), dtype=np.uint8),
        parity_check=h,
        message_positions=(0,),
        decoder="majority",
    )


def hamming74() -> LinearCode:
    """Hamming [7,4] with parity at positions 1, 2, 4 (1-indexed).

    Column ``i`` of ``H`` is the binary form of position ``i + 1``, so the
    syndrome read most-significant-bit first names the flipped position.
    """
    positions = np.arange(1, 8)
    h = np.array([(positions >> shift) & 1 for shift in (2, 1, 0)], dtype=np.uint8)
    data_positions = (2, 4, 5, 6)
    g = np.zeros((7, 4), dtype=np.uint8)
    g[list(data_positions), range(4)] = 1
    # each row of H is one parity check; its parity bit sits at position 4, 2, 1
    for row, parity_index in zip(h, (3, 1, 0)):
        g[parity_index] = row[list(data_positions)]
    leaders = np.zeros((8, 7), dtype=np.uint8)
    for pos in range(1, 8):
        leaders[pos, pos - 1] = 1
    return LinearCode(
        name="hamming74", n=7, k=4, t=1,
        generator=g, parity_check=h,
        message_positions=data_positions,
        decoder="syndrome",
        leaders=leaders,
        uncorrectable=np.zeros(8, dtype=bool),
    )


# Standard 12x12 matrix of the extended Golay code; symmetric and B @ B = I.
_GOLAY_B = np.array([
    [1, 1, 0, 1, 1, 1, 0, 0, 0, 1, 0, 1],
    [1, 0, 1, 1, 1, 0, 0, 0, 1, 0, 1, 1],
    [0, 1, 1, 1, 0, 0, 0, 1, 0, 1, 1, 1],
    [1, 1, 1, 0, 0, 0, 1, 0, 1, 1, 0, 1],
    [1, 1, 0, 0, 0, 1, 0, 1, 1, 0, 1, 1],
    [1, 0, 0, 0, 1, 0, 1, 1, 0, 1, 1, 1],
    [0, 0, 0, 1, 0, 1, 1, 0, 1, 1, 1, 1],
    [0, 0, 1, 0, 1, 1, 0, 1, 1, 1, 0, 1],
    [0, 1, 0, 1, 1, 0, 1, 1, 1, 0, 0, 1],
    [1, 0, 1, 1, 0, 1, 1, 1, 0, 0, 0, 1],
    [0, 1, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1],
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0],
], dtype=np.uint8)


def golay_error_pattern(s: np.ndarray) -> np.ndarray | None:
    """Classical extended-Golay decoder: syndrome -> error of weight <= 3.

    With codewords ``(m, m B)`` and error ``(e1, e2)`` the syndrome is
    ``s = e1 B + e2`` and ``s B = e1 + e2 B``.  Returns ``None`` when no
    pattern of weight <= 3 explains ``s`` (a detected weight-4 error).
    """
    b = _GOLAY_B
    s = np.asarray(s, dtype=np.uint8)
    unit = np.eye(12, dtype=np.uint8)
    if s.sum() <= 3:
        return np.concatenate([np.zeros(12, dtype=np.uint8), s])
    for i in range(12):
        if (s ^ b[i]).sum() <= 2:
            return np.concatenate([unit[i], s ^ b[i]])
    sb = (s.astype(np.int64) @ b) & 1
    sb = sb.astype(np.uint8)
    if sb.sum() <= 3:
        return np.concatenate([sb, np.zeros(12, dtype=np.uint8)])
    for i in range(12):
        if (sb ^ b[i]).sum() <= 2:
            return np.concatenate([sb ^ b[i], unit[i]])
    return None


def golay2412() -> LinearCode:
    b = _GOLAY_B
    g = np.vstack([np.eye(12, dtype=np.uint8), b.T])
    h = np.hstack([b.T, np.eye(12, dtype=np.uint8)])
    leaders = np.zeros((4096, 24), dtype=np.uint8)
    uncorrectable = np.zeros(4096, dtype=bool)
    all_syndromes = (np.arange(4096)[:, None] >> np.arange(11, -1, -1)) & 1
    for idx, s in enumerate(all_syndromes.astype(np.uint8)):
        pattern = golay_error_pattern(s)
        if pattern is None:
            # best effort: hand back the systematic bits untouched
            uncorrectable[idx] = True
        else:
            leaders[idx] = pattern
    return LinearCode(
        name="golay2412", n=24, k=12, t=3,
        generator=g, parity_check=h,
        message_positions=tuple(range(12)),
        decoder="syndrome",
        leaders=leaders,
        uncorrectable=uncorrectable,
    )


CODE_NAMES = ("none", "rep3", "rep5", "rep7", "hamming74", "golay2412")

_CATALOG: dict[str, LinearCode] = {}


def code_catalog() -> list[LinearCode]:
    """All codes in table order: none, rep3, rep5, rep7, hamming74, golay2412."""
    if not _CATALOG:
        for code in (
            _identity_code(),
            repetition_code(3),
            repetition_code(5),
            repetition_code(7),
            hamming74(),
            golay2412(),
        ):
            _CATALOG[code.name] = code
    return [_CATALOG[name] for name in CODE_NAMES]


def get_code(name: str | LinearCode) -> LinearCode:
    if isinstance(name, LinearCode):
        return name
    code_catalog()
    try:
        return _CATALOG[name]
    except KeyError:
        raise ValueError(f"unknown code {name!r}; choose from {', '.join(CODE_NAMES)}") from None
