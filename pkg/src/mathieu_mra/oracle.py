"""Independent validation path: direct integration of the Mathieu ODE.

A fixed-step 5th-order Runge-Kutta scheme integrates

    y'' + (a - 2 q cos 2z) y = 0

and characteristic values are recovered by shooting on the half-period
boundary condition, entirely bypassing the tridiagonal eigensolve of
:mod:`mathieu_mra.core`.
"""

import math
from dataclasses import dataclass

import numpy as np

from .core import (
    ConvergenceError,
    MathieuParams,
    evaluate,
    slope_at_zero,
    solve_even,
    solve_odd,
    value_at_zero,
)

DEFAULT_STEP = math.pi / 4096

# Dormand-Prince 5th-order stage coefficients; the embedded 4th-order
# weights drive the local-error refusal check only (the step stays fixed).
_C = (0.0, 1 / 5, 3 / 10, 4 / 5, 8 / 9, 1.0, 1.0)
_A = (
    (),
    (1 / 5,),
    (3 / 40, 9 / 40),
    (44 / 45, -56 / 15, 32 / 9),
    (19372 / 6561, -25360 / 2187, 64448 / 6561, -212 / 729),
    (9017 / 3168, -355 / 33, 46732 / 5247, 49 / 176, -5103 / 18656),
    (35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84),
)
_B5 = (35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84, 0.0)
_B4 = (5179 / 57600, 0.0, 7571 / 16695, 393 / 640, -92097 / 339200, 187 / 2100, 1 / 40)


class StepSizeError(ConvergenceError):
    """The requested fixed step is too coarse for the local-error bound."""


@dataclass(frozen=True)
class Trajectory:
    """Sampled ODE solution on a uniform grid starting at z=0."""

    grid: np.ndarray
    y: np.ndarray
    yprime: np.ndarray
    a: float
    q: float
    step: float

    def __post_init__(self):
        self.grid.setflags(write=False)
        self.y.setflags(write=False)
        self.yprime.setflags(write=False)


def integrate(a, q, y0, yprime0, z_end, step=DEFAULT_STEP, max_local_error=1e-9):
    """Fixed-step 5th-order Runge-Kutta solution from z=0 to z_end.

    Deterministic: the step count is round(z_end/step) and the actual step
    z_end/n is stored on the returned trajectory.  Raises
    :class:`StepSizeError` (reporting a sufficient step) if the embedded
    error estimate of any step exceeds ``max_local_error``.
    """
    if step <= 0.0:
        raise ValueError("step must be positive")
    if z_end <= 0.0:
        raise ValueError("z_end must be positive")
    n = max(1, round(z_end / step))
    h = z_end / n
    ys = np.empty(n + 1)
    yps = np.empty(n + 1)
    y, yp = float(y0), float(yprime0)
    ys[0], yps[0] = y, yp
    ky = [0.0] * 7
    kp = [0.0] * 7
    z = 0.0
    for i in range(n):
        for s in range(7):
            yi, pi = y, yp
            row = _A[s]
            for j in range(s):
                yi += h * row[j] * ky[j]
                pi += h * row[j] * kp[j]
            ky[s] = pi
            kp[s] = -(a - 2.0 * q * math.cos(2.0 * (z + _C[s] * h))) * yi
        dy5 = sum(_B5[s] * ky[s] for s in range(7))
        dp5 = sum(_B5[s] * kp[s] for s in range(7))
        dy4 = sum(_B4[s] * ky[s] for s in range(7))
        dp4 = sum(_B4[s] * kp[s] for s in range(7))
        err = h * max(abs(dy5 - dy4), abs(dp5 - dp4))
        if err > max_local_error:
            needed = h * (max_local_error / err) ** 0.2
            raise StepSizeError(
                f"step {h:.6g} too large: local error {err:.3e} exceeds "
                f"{max_local_error:.3e}; use step <= {needed:.3e}"
            )
        y += h * dy5
        yp += h * dp5
        z += h
        ys[i + 1], yps[i + 1] = y, yp
    if not (np.all(np.isfinite(ys)) and np.all(np.isfinite(yps))):
        raise ConvergenceError("trajectory blew up (non-finite samples)")
    return Trajectory(np.linspace(0.0, z_end, n + 1), ys, yps, float(a), float(q), h)


def _bisect_scalar(f, bracket, tol):
    lo, hi = float(bracket[0]), float(bracket[1])
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if flo * fhi > 0.0:
        raise ValueError(f"no sign change in bracket ({lo:.6g}, {hi:.6g})")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            if hi - lo > 16 * tol:
                raise ConvergenceError("bisection stagnated before reaching tol")
            break
        fm = f(mid)
        if flo * fm <= 0.0:
            hi, fhi = mid, fm
        else:
            lo, flo = mid, fm
    return 0.5 * (lo + hi)


def shoot_even(nu, q, bracket=None, tol=1e-10, step=DEFAULT_STEP):
    """Characteristic value of the even odd-order solution by shooting.

    Bisects on a -> y(pi/2) for the trajectory with y(0)=1, y'(0)=0; an
    even solution of odd order vanishes at the quarter period.  The default
    bracket is the matrix eigenvalue +/- 0.5.
    """
    if bracket is None:
        center = solve_even(MathieuParams(nu, q)).a
        bracket = (center - 0.5, center + 0.5)

    def endpoint(a):
        return integrate(a, q, 1.0, 0.0, math.pi / 2, step=step).y[-1]

    return _bisect_scalar(endpoint, bracket, tol)


def shoot_odd(nu, q, bracket=None, tol=1e-10, step=DEFAULT_STEP):
    """Characteristic value of the odd odd-order solution by shooting.

    Bisects on a -> y'(pi/2) for the trajectory with y(0)=0, y'(0)=1; an
    odd solution of odd order has a flat point at the quarter period.
    """
    if bracket is None:
        center = solve_odd(MathieuParams(nu, q)).a
        bracket = (center - 0.5, center + 0.5)

    def endpoint(a):
        return integrate(a, q, 0.0, 1.0, math.pi / 2, step=step).yprime[-1]

    return _bisect_scalar(endpoint, bracket, tol)


def compare(sol, traj):
    """Sup-norm gap between the harmonic series and an ODE trajectory.

    The series is rescaled to match the trajectory's unit initial value
    (even kind) or unit initial slope (odd kind).  Raises ValueError when
    (a, q) or the initial conditions do not match the solution kind.
    """
    if abs(traj.q - sol.q) > 1e-12:
        raise ValueError("q mismatch between solution and trajectory")
    if abs(traj.a - sol.a) > 1e-6 * max(1.0, abs(sol.a)):
        raise ValueError("characteristic value mismatch between solution and trajectory")
    if sol.kind == "even-ce":
        if abs(traj.y[0] - 1.0) > 1e-12 or abs(traj.yprime[0]) > 1e-12:
            raise ValueError("trajectory initial conditions are not even-kind (1, 0)")
        scale = value_at_zero(sol)
    else:
        if abs(traj.y[0]) > 1e-12 or abs(traj.yprime[0] - 1.0) > 1e-12:
            raise ValueError("trajectory initial conditions are not odd-kind (0, 1)")
        scale = slope_at_zero(sol)
    series = evaluate(sol, traj.grid) / scale
    return float(np.max(np.abs(series - traj.y)))
