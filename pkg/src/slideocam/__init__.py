"""Design toolkit for the Slide-O-Cam rotation-to-translation cam drive."""
from .errors import (DegeneratePin, Infeasible, InfeasibleDesign, InfiniteForce,
                     InvalidParameters, NoRoot, SlideOCamError, UndercutSingularity)
from .geometry import (Coefficients, CurveKind, DesignParams, ProfileCurve, cam_profile_point,
                       coefficients, displacement_s, extended_angle, pitch_curve_point,
                       sample_profile)
from .kinematics import (Branch, CurvatureExtrema, DrivingInterval, FeasibilityReport, Mechanism,
                         cam_curvature, curvature_extrema, driving_interval, feasibility,
                         kappa_p_max, parametric_curvature, pitch_curvature, pressure_angle,
                         service_factor)
from .loads import (ForceState, PinModel, bearing_pin_radius, bearing_roller_radius,
                    horizontal_force, max_pin_deflection, vertical_force_F0)
from .mechanism import AnalysisReport, DriveSchedule, Layout, design_report, drive_schedule, layout
from .optimizer import (TABLE1_ETAS, TABLE2_ETAS, ConstraintStatus, OptimizationResult, SweepRow,
                        constraints, objective_z, optimize, sweep)

__version__ = "0.1.0"
