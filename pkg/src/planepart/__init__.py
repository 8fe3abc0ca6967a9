"""Exact enumeration and asymptotics of plane partitions with at most N parts."""
from .asymptotics import (
    EstimateReport,
    SaddleResult,
    beta0_1d,
    beta0_2d,
    p1d_restricted_estimate,
    p2d_restricted_estimate,
    p2d_unrestricted_estimate,
    saddle_count,
    table1_report,
)
from .bose import (
    OscillatorPoint,
    ZSequence,
    b_k,
    log_macmahon,
    log_y_n_numeric,
    log_z_inf,
    y1d_closed,
    y2d_closed,
    y_n_numeric,
    z_inf,
    zn_1d_closed,
    zn_recurrence,
)
from .errors import ConvergenceError, ResourceLimitError, SaddleError, ZnOverflowError
from .exact import RestrictionSpec, p1d, p1d_atmost, p2d, p2d_atmost, sigma2
from .generator import PlanePartition, count_by_parts, generate_all, validate

__version__ = "0.1.0"
