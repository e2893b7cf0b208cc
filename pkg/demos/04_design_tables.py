"""Regenerate the design tables for both layouts and compare them."""
# %%
import sys

from slideocam import Mechanism, PinModel, sweep
from slideocam.formats import sweep_csv
from slideocam.optimizer import TABLE1_ETAS, TABLE2_ETAS

pin = PinModel()

# %%
coax = sweep(50, 9.5, pin, TABLE1_ETAS, Mechanism.COAXIAL, workers=4)
sys.stdout.write(sweep_csv(coax, rounding="published"))

# %%
tri = sweep(50, 9.5, pin, TABLE2_ETAS, Mechanism.NONCOAXIAL3, workers=4)
sys.stdout.write(sweep_csv(tri, rounding="published"))

# %% [markdown]
# Same eta, same cam, different layout.

# %%
print(f"{'eta':>7} {'service coax':>13} {'service 3-cam':>14} {'vL coax':>9} {'vL 3-cam':>9}")
for a, b in zip(coax[1:], tri):
    print(f"{a.eta:7.4f} {a.service_pct:12.2f}% {b.service_pct:13.2f}% "
          f"{a.vLmax_um:9.2f} {b.vLmax_um:9.2f}")
