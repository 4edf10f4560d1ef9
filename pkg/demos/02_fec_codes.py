# %% [markdown]
# # Forward error correction on top of superdense coding
#
# First the Hamming [7,4] walk-through, then BER curves for every code in
# the catalog, over SDC and over direct sending.

# %%
from sdcfec import (
    ErrorLabel,
    PauliChannelParams,
    TrialConfig,
    apply_error,
    code_catalog,
    decode,
    deframe_bits,
    encode,
    frame_bits,
    get_code,
    map_to_symbols,
    run_trial,
    symbols_display,
    unmap_to_bits,
)

# %%
hamming = get_code("hamming74")
framed = frame_bits(encode(hamming, [1, 0, 0, 1]), hamming)
symbols = map_to_symbols(framed)
print("framed  ", framed.tolist(), "->", " ".join(symbols_display(symbols)))

symbols[3] = apply_error(symbols[3], ErrorLabel.X)
received = unmap_to_bits(symbols)
result = decode(hamming, deframe_bits(received, hamming))
print("received", received.tolist(), "-> decoded", result.message.tolist(),
      f"({result.corrected_bits} bit corrected)")

# %% [markdown]
# Over SDC a single XZ error can put two errors in the same codeword, so
# the same code does better over direct sending for small k.

# %%
grid = [0.02, 0.05, 0.08, 0.1]
print(f"{'code':>10} {'channel':>7} " + " ".join(f"p={p:<6}" for p in grid))
for code in code_catalog():
    for channel in ("sdc", "direct"):
        bers = [
            run_trial(TrialConfig(code=code.name, channel=channel, params=PauliChannelParams.depolarizing(p),
                                  message_bits=240_000, seed=3)).ber
            for p in grid
        ]
        print(f"{code.name:>10} {channel:>7} " + " ".join(f"{b:8.5f}" for b in bers))
