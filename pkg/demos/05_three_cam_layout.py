"""Where the three camshafts go and which cam drives when."""
# %%
import math

import numpy as np

from slideocam import DesignParams, Mechanism, drive_schedule, layout
from slideocam.mechanism import follower_travel, scheduled_pressure_angle

params = DesignParams(p=50, eta=0.37, a4=9.0)
lay = layout(params, Mechanism.NONCOAXIAL3)
for k, (phase, y) in enumerate(zip(lay.phases, lay.offsets_y), start=1):
    print(f"cam {k}: phase {math.degrees(phase):5.1f} deg, shaft {y:7.3f} mm along the follower")

# %%
sched = drive_schedule(params, Mechanism.NONCOAXIAL3)
for span in sched.spans:
    print(f"cam {span.cam} drives [{math.degrees(span.psi_start):7.2f}, "
          f"{math.degrees(span.psi_end):7.2f}) deg")
print("follower travel per turn:", follower_travel(params, sched), "mm")

# %% [markdown]
# Pressure angle seen by the follower over a full turn: it never
# exceeds the three-cam |mu|max because handover happens first.

# %%
psi = np.linspace(0, 2 * math.pi, 13)
for x in psi:
    mu = scheduled_pressure_angle(params, sched, x)
    print(f"psi={math.degrees(x):6.1f} deg  cam {sched.cam_at(x)}  mu={math.degrees(mu):6.2f} deg")
