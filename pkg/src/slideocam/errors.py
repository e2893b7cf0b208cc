"""Exception hierarchy.

Everything raised on purpose by the package derives from
:class:`SlideOCamError`, so callers (and the CLI) can catch one type.
"""


class SlideOCamError(Exception):
    """Base class for all package errors."""


class InvalidParameters(SlideOCamError, ValueError):
    """A value violates a type invariant (negative pitch, forbidden eta, ...)."""


class InfeasibleDesign(SlideOCamError):
    """Design point is well formed but geometrically unusable."""


class NoRoot(InfeasibleDesign):
    """The cam profile never closes: v_c has no sign change on (-pi, 0)."""


class UndercutSingularity(InfeasibleDesign):
    """Roller radius equals the local radius of curvature of the pitch curve."""


class InfiniteForce(SlideOCamError):
    """Line of action passes through the camshaft axis (delta = 0)."""


class DegeneratePin(InfeasibleDesign):
    """Roller too small for the series-2 bearing fit (a4 <= 5 mm)."""


class Infeasible(InfeasibleDesign):
    """No point inside the search bounds satisfies the constraints."""
