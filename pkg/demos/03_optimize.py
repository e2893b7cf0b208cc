"""Pick the offset ratio and roller that minimise pin deflection."""
# %%
import math

from slideocam import optimize
from slideocam.formats import optimization_text

# %% [markdown]
# The default search spans every convex design with the 9.5 mm shaft.
# The roller is always pushed to its largest admissible size, so the
# search is one-dimensional in eta.

# %%
res = optimize(p=50, b=9.5)
print(optimization_text(res))

# %% [markdown]
# Restricting eta shows what happens when a lower offset is imposed by
# the housing: the upper bound becomes the optimum.

# %%
for eta_max in (0.5, 0.4, 0.38):
    r = optimize(p=50, b=9.5, eta_bounds=(1 / math.pi, eta_max))
    print(f"eta <= {eta_max}: eta*={r.eta_opt:.4f}  a4*={r.a4_opt:.3f} mm  z={r.z_opt:.4g}")
