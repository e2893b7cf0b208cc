"""Build one cam, check it is manufacturable, and draw it.

Run:  python demos/01_cam_profile.py   (writes demos/out/cam_037.svg, and a PNG
when matplotlib is installed)
"""
# %%
import math
from pathlib import Path

import numpy as np

from slideocam import (CurveKind, DesignParams, cam_curvature, extended_angle, feasibility,
                       kappa_p_max, sample_profile)
from slideocam.formats import profile_svg

OUT = Path(__file__).with_name("out")
OUT.mkdir(exist_ok=True)

# %% [markdown]
# A 50 mm pitch follower, offset ratio 0.37 and a 9 mm roller.  The
# roller is as large as the 9.5 mm camshaft allows (a4 + b = e).

# %%
params = DesignParams(p=50, eta=0.37, a4=9.0)
print(params, "offset e =", params.e, "mm")

report = feasibility(params)
for name, ok in report.as_dict().items():
    print(f"  {name:20s} {ok}")

# %% [markdown]
# The profile closes at the extended angle, a small negative shaft angle.
# Contact runs from there to its mirror image past 2*pi.

# %%
delta = extended_angle(params)
print(f"extended angle: {math.degrees(delta):.3f} deg")

cam = sample_profile(params, CurveKind.CAM_PROFILE, 720)
pitch = sample_profile(params, CurveKind.PITCH_CURVE, 720)
print(f"cam profile spans psi in [{cam.psi[0]:.4f}, {cam.psi[-1]:.4f}] rad")

# %% [markdown]
# Undercut margin: the roller radius against the tightest bend of the
# pitch curve.

# %%
rho_min = 1 / kappa_p_max(params)
print(f"smallest pitch radius of curvature {rho_min:.2f} mm vs roller {params.a4} mm")
kc = cam_curvature(params, cam.psi)
print(f"cam curvature range: {kc.min():.4f} .. {kc.max():.4f} 1/mm")
print("convex profile:", bool(np.all(kc > 0)))

# %%
(OUT / "cam_037.svg").write_text(profile_svg([cam, pitch]))
print("wrote", OUT / "cam_037.svg")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    fig, ax = plt.subplots(figsize=(5, 5))
    ax.plot(cam.u, cam.v, label="cam profile")
    ax.plot(pitch.u, pitch.v, "--", label="pitch curve")
    ax.add_patch(plt.Circle((0, 0), 9.5, fill=False, color="grey"))
    ax.set_aspect("equal")
    ax.legend()
    fig.savefig(OUT / "cam_037.png", dpi=120)
    print("wrote", OUT / "cam_037.png")
