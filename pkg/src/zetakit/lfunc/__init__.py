"""Zeta and L-functions: series, continuation, special values, scans."""

from .dirichlet import dirichlet_L, dirichlet_L_direct
from .gamma import EULER_GAMMA, gamma, loggamma, rgamma, upper_incomplete_gamma
from .hurwitz import (
    hurwitz,
    hurwitz_even,
    hurwitz_even_regular,
    hurwitz_neg_int,
    hurwitz_odd,
)
from .scans import (
    critical_line_zeros,
    nonvanishing_scan,
    scan_critical_line,
    trig_polynomial_check,
)
from .series import LSeriesCoefficients, euler_product_zeta, lseries, zeta_euler_maclaurin
from .zeta import completed_zeta, lambda0, riemann_zeta, zeta_even_rational, zeta_even_value

__all__ = [
    "EULER_GAMMA",
    "LSeriesCoefficients",
    "completed_zeta",
    "critical_line_zeros",
    "dirichlet_L",
    "dirichlet_L_direct",
    "euler_product_zeta",
    "gamma",
    "hurwitz",
    "hurwitz_even",
    "hurwitz_even_regular",
    "hurwitz_neg_int",
    "hurwitz_odd",
    "lambda0",
    "loggamma",
    "lseries",
    "nonvanishing_scan",
    "rgamma",
    "riemann_zeta",
    "scan_critical_line",
    "trig_polynomial_check",
    "upper_incomplete_gamma",
    "zeta_euler_maclaurin",
    "zeta_even_rational",
    "zeta_even_value",
]
