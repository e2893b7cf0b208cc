"""Published design tables (p=50 mm, b=9.5 mm, L=10 mm, tau=1.2 N*m, E=2e5 MPa)."""
import math

# eta, a4, a5, z, vLmax_um, mu_min_deg, mu_max_deg, service_pct
TABLE1 = [
    (0.69, 24.99, 12.50, 249, 0.09, 42.11, 80.68, 0.0),
    (0.5, 15.5, 6.56, 2968, 0.50, 28.59, 69.81, 6.85),
    (0.4, 10.5, 3.44, 32183, 4.32, 20.31, 57.99, 46.68),
    (0.39, 10, 3.12, 45490, 6.07, 19.46, 56.42, 50.68),
    (0.38, 9.5, 2.81, 66659, 8.87, 18.61, 54.78, 54.68),
    (0.37, 9, 2.50, 102171, 13.63, 17.75, 53.04, 58.69),
    (0.36, 8.5, 2.19, 165896, 22.31, 16.89, 51.22, 62.69),
    (0.35, 8, 1.87, 290765, 39.71, 16.03, 49.31, 66.70),
    (0.34, 7.5, 1.56, 566521, 79.18, 15.17, 47.31, 70.72),
    (0.33, 7, 1.25, 1.29e6, 186.06, 14.31, 45.21, 74.73),
    (1 / math.pi, 6.41, 0.88, 4.68e6, 710.19, 13.31, 42.64, 79.43),
]

# eta, a4, a5, vLmax_um, mu_min_deg, mu_max_deg, service_pct
TABLE2 = [
    (0.5, 15.5, 6.56, 0.26, 28.59, 49.41, 10.49),
    (0.4, 10.5, 3.44, 2.88, 20.31, 37.20, 70.02),
    (0.39, 10, 3.12, 4.14, 19.46, 35.81, 76.02),
    (0.38, 9.5, 2.81, 6.20, 18.61, 34.39, 82.02),
    (0.37, 9, 2.50, 9.76, 17.75, 32.95, 88.03),
    (0.36, 8.5, 2.19, 16.39, 16.89, 31.48, 94.04),
    (0.35, 8, 1.87, 29.89, 16.03, 29.98, 100.0),
    (0.34, 7.5, 1.56, 61.07, 15.17, 28.47, 100.0),
    (0.33, 7, 1.25, 147.02, 14.31, 26.93, 100.0),
    (1 / math.pi, 6.41, 0.88, 576.95, 13.31, 25.12, 100.0),
]


def matches_printed(value, printed, decimals=2):
    """True when ``printed`` is one of the two neighbours of ``value`` at ``decimals``.

    The tables mix rounding and truncation (1.875 -> 1.87, 2.1875 -> 2.19,
    24.9992 -> 24.99), so either neighbour is accepted.
    """
    scale = 10**decimals
    lo = math.floor(value * scale + 1e-9) / scale
    hi = math.ceil(value * scale - 1e-9) / scale
    return math.isclose(printed, lo, abs_tol=1e-9) or math.isclose(printed, hi, abs_tol=1e-9)
