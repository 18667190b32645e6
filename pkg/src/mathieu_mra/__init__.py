"""Elliptic-cylinder (Mathieu) multiresolution analysis toolkit.

Eigensolutions of the periodic Mathieu equation for odd orders, the
derived smoothing/detail filter pair, spectral identity checks, cascade
approximations of the scaling function and wavelet, and a periodic
multilevel transform, with an independent ODE integrator for
cross-validation.
"""

from .cascade import CascadeOutput, refinement_residual, run, two_scale_residual
from .core import (
    ConvergenceError,
    EigenSolution,
    MathieuParams,
    count_function_zeros,
    count_zeros,
    evaluate,
    evaluate_derivative,
    recurrence_residual,
    slope_at_zero,
    solve_even,
    solve_odd,
    value_at_zero,
)
from .filterbank import (
    FilterBank,
    SpectrumGrid,
    build,
    count_transfer_zeros,
    dtft,
    magnitude_G_via_se,
    normalization_residuals,
    phase_pairing_residual,
    qmf_report,
    sign_correct,
    transfer_G,
    transfer_H,
)
from .oracle import (
    DEFAULT_STEP,
    StepSizeError,
    Trajectory,
    compare,
    integrate,
    shoot_even,
    shoot_odd,
)
from .transform import DwtResult, forward, inverse

__version__ = "0.1.0"
