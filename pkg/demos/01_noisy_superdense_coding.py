# %% [markdown]
# # Superdense coding through a depolarizing channel
#
# Two classical bits ride on one transmitted qubit.  Noise on that qubit
# acts on the Bell label as an XOR, which is all the simulator needs.

# %%
import numpy as np

from sdcfec import (
    BellSymbol,
    ErrorLabel,
    PauliChannelParams,
    TrialConfig,
    apply_error,
    ber_uncoded,
    capacity_direct,
    capacity_sdc,
    run_trial,
    transition_matrix_sdc,
)

# %% [markdown]
# Each error label moves a Bell state to another one.  XZ flips both
# bits at once, which is the burst that hurts FEC later on.

# %%
for s in BellSymbol:
    row = "  ".join(f"{e.name:>2}->{apply_error(s, e).display}" for e in ErrorLabel)
    print(f"{s.display} {s.bits}:  {row}")

# %%
params = PauliChannelParams.depolarizing(0.06)
print(np.round(transition_matrix_sdc(params), 4))

# %% [markdown]
# Uncoded BER: superdense coding and direct sending both give 2p/3,
# although SDC carries two bits per channel use.

# %%
print(f"{'p':>5} {'SDC':>9} {'direct':>9} {'2p/3':>9} {'C_SDC':>7} {'C_dir':>7}")
for p in np.linspace(0, 0.1, 6):
    params = PauliChannelParams.depolarizing(p)
    sdc = run_trial(TrialConfig(channel="sdc", params=params, message_bits=200_000, seed=1))
    direct = run_trial(TrialConfig(channel="direct", params=params, message_bits=200_000, seed=2))
    print(f"{p:5.2f} {sdc.ber:9.5f} {direct.ber:9.5f} {ber_uncoded(p):9.5f} "
          f"{capacity_sdc(p):7.3f} {capacity_direct(p):7.3f}")
