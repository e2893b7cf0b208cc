"""Force transmission over one drive arc: pressure angle, service factor,
pin load and deflection, for the coaxial pair and the three-cam layout.
"""
# %%
import math

import numpy as np

from slideocam import DesignParams, Mechanism, PinModel, design_report, driving_interval
from slideocam.loads import force_state

params = DesignParams(p=50, eta=0.37, a4=9.0)
pin = PinModel(L=10, tau=1200, E=2e5)  # tau in N*mm

# %% [markdown]
# Both layouts share the same profile.  With three cams each one only
# has to carry the follower for a third of a turn, starting further from
# psi = pi where the pressure angle is steep.

# %%
for mech in Mechanism:
    r = design_report(params, pin, mech)
    iv = driving_interval(params, mech)
    print(f"{mech.value}:")
    print(f"  drive arc [{math.degrees(iv.psi_start):.2f}, {math.degrees(iv.psi_end):.2f}] deg")
    print(f"  |mu| {math.degrees(r.mu_min):.2f} .. {math.degrees(r.mu_max):.2f} deg")
    print(f"  service factor {100 * r.service_factor:.2f} %")
    print(f"  max pin deflection {1e3 * r.vL_max:.2f} um")

# %% [markdown]
# Contact force along the coaxial drive arc.  The vertical part is the
# torque divided by the lever p/2pi; the horizontal part blows up near
# psi = pi, so the worst case is always the start of the arc.

# %%
iv = driving_interval(params, Mechanism.COAXIAL)
for psi in np.linspace(iv.psi_start, iv.psi_end, 6):
    fs = force_state(pin, params, psi)
    print(f"psi={math.degrees(psi):7.2f} deg  f_x={fs.f_x:8.2f} N  f_y={fs.f_y:7.2f} N")
