# %% [markdown]
# # Exact enumeration versus the printed closed forms
#
# `exhaustive_ber` enumerates every error pattern of one frame.  Here it
# is set beside two closed forms that do not match it exactly: the
# non-interleaved repetition polynomial and the distance-3 success
# probability.

# %%
from sdcfec import (
    ber_rep3_noninterleaved_reference,
    exhaustive_ber,
    fec_success_reference,
)

# %%
print(f"{'p':>5} {'rep3 exact':>11} {'printed':>9} {'p/3+4p^2/9':>11}")
for p in (0.01, 0.05, 0.1):
    exact = exhaustive_ber("rep3", 1, "concat", p).ber
    print(f"{p:5.2f} {exact:11.7f} {ber_rep3_noninterleaved_reference(p):9.7f} {p / 3 + 4 * p**2 / 9:11.7f}")

# %% [markdown]
# Probability that a padded Hamming [7,4] codeword (four Bell symbols)
# decodes correctly.

# %%
for p in (0.01, 0.05, 0.1):
    exact = 1 - exhaustive_ber("hamming74", 1, "percodeword", p).cer
    print(f"p={p:4.2f}  exact {exact:.6f}  printed {fec_success_reference(4, p):.6f}")

# %% [markdown]
# The whole Golay frame has 4**12 patterns; raise the budget to run it.

# %%
golay = exhaustive_ber("golay2412", 1, "percodeword", 0.1, max_patterns=4**12, chunk_size=1 << 18)
print(f"golay2412 p=0.1: BER {golay.ber:.6f}, CER {golay.cer:.6f}")
