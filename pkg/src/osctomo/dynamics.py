"""Auxiliary classical dynamics of the forced parametric oscillator.

Everything downstream (time-dependent invariants, propagators, tomograms)
is built from the complex solution ``eps(t)`` of the classical oscillator
equation

    eps'' + omega^2(t) * eps = 0,    eps(0) = 1,  eps'(0) = 1j,

together with the drive shift

    beta(t) = -(1j / sqrt(2)) * integral_0^t eps(s) f(s) ds.

Units are dimensionless (hbar = m = 1); for constant unit frequency the
solution is ``eps(t) = exp(1j t)``.  The seeded initial conditions fix the
Wronskian

    eps' * conj(eps) - conj(eps') * eps = 2j

for all times, and that conservation law is the one solution-quality
invariant monitored during integration.

Sign conventions and orderings used by the rest of the package are
documented in :mod:`osctomo.invariants`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import EvaluationError, UnsupportedOrderError, WronskianDriftError

__all__ = [
    "DriveProfile",
    "EpsilonTrajectory",
    "solve_epsilon",
    "beta_shift",
    "parametric_resonance_epsilon",
    "hermite",
    "hermite_gauss",
    "TOL_WRONSKIAN",
    "MAX_HERMITE_ORDER",
]

#: Default ceiling on the Wronskian drift accepted from the integrator.
TOL_WRONSKIAN = 1e-6

#: Largest Hermite order served by :func:`hermite` / :func:`hermite_gauss`.
MAX_HERMITE_ORDER = 200


def _zero_force(t: float) -> float:
    return 0.0


@dataclass(frozen=True)
class DriveProfile:
    """Time dependence of the Hamiltonian H = p^2/2 + omega^2(t) q^2/2 - f(t) q.

    ``omega_sq`` and ``force`` are scalar callables of time.  A repulsive
    oscillator is expressed by a negative ``omega_sq`` (only the square of
    the frequency ever enters the equations).

    Use the constructors :meth:`constant`, :meth:`free`,
    :meth:`parametric_resonance` and :meth:`custom` rather than building
    instances by hand; they set the ``kind`` tag consumed by closed-form
    shortcuts and the command line driver.
    """

    omega_sq: Callable[[float], float]
    force: Callable[[float], float]
    kind: str
    parameter: float | None = None

    @classmethod
    def constant(cls, omega: float = 1.0, force: Callable[[float], float] | None = None):
        """Constant frequency omega (omega_sq = omega**2 for all t)."""
        w2 = float(omega) ** 2
        return cls(lambda t: w2, force or _zero_force, "constant", float(omega))

    @classmethod
    def free(cls, force: Callable[[float], float] | None = None):
        """Free motion, omega_sq = 0."""
        return cls(lambda t: 0.0, force or _zero_force, "free", None)

    @classmethod
    def parametric_resonance(cls, k: float, force: Callable[[float], float] | None = None):
        """Parametric resonance profile omega_sq(t) = (1 + k cos 2t) / (1 + k).

        The weak-modulation regime is enforced as k in (-0.5, 0.5).
        """
        k = float(k)
        if not -0.5 < k < 0.5:
            raise ValueError(f"parametric resonance requires k in (-0.5, 0.5), got {k}")
        return cls(
            lambda t: (1.0 + k * math.cos(2.0 * t)) / (1.0 + k),
            force or _zero_force,
            "parametric_resonance",
            k,
        )

    @classmethod
    def custom(
        cls,
        omega_sq: Callable[[float], float],
        force: Callable[[float], float] | None = None,
    ):
        """Arbitrary user-supplied omega_sq(t) (may be negative) and force."""
        return cls(omega_sq, force or _zero_force, "custom", None)


@dataclass(frozen=True)
class EpsilonTrajectory:
    """Sampled solution of the auxiliary equation on a uniform time grid.

    ``eps`` and ``eps_dot`` are stored side by side: every downstream
    formula needs both, and re-differentiating ``eps`` numerically would
    only add error.  Off-grid values come from cubic Hermite interpolation,
    which uses ``eps_dot`` as the exact derivative of ``eps`` and
    ``eps_ddot = -omega_sq(t) * eps`` as the exact derivative of
    ``eps_dot``.
    """

    t: np.ndarray
    eps: np.ndarray
    eps_dot: np.ndarray
    profile: DriveProfile
    max_wronskian_drift: float

    @property
    def step(self) -> float:
        return float(self.t[1] - self.t[0])

    @property
    def t_end(self) -> float:
        return float(self.t[-1])

    def wronskian(self) -> np.ndarray:
        """eps'*conj(eps) - conj(eps')*eps at every grid node (ideally 2j)."""
        return self.eps_dot * np.conj(self.eps) - np.conj(self.eps_dot) * self.eps

    def _bracket(self, time: float) -> tuple[int, float]:
        if not 0.0 <= time <= self.t_end * (1 + 1e-12) + 1e-15:
            raise ValueError(f"time {time} outside trajectory range [0, {self.t_end}]")
        h = self.step
        i = min(int(time / h), len(self.t) - 2)
        return i, (time - self.t[i]) / h

    def __call__(self, time: float) -> tuple[complex, complex]:
        """Interpolated (eps, eps_dot) at an arbitrary time in range."""
        i, s = self._bracket(time)
        if s == 0.0:
            return complex(self.eps[i]), complex(self.eps_dot[i])
        h = self.step
        h00 = (1 + 2 * s) * (1 - s) ** 2
        h10 = s * (1 - s) ** 2
        h01 = s * s * (3 - 2 * s)
        h11 = s * s * (s - 1)
        e0, e1 = self.eps[i], self.eps[i + 1]
        d0, d1 = self.eps_dot[i], self.eps_dot[i + 1]
        a0 = -self.profile.omega_sq(self.t[i]) * e0
        a1 = -self.profile.omega_sq(self.t[i + 1]) * e1
        eps = h00 * e0 + h10 * h * d0 + h01 * e1 + h11 * h * d1
        eps_dot = h00 * d0 + h10 * h * a0 + h01 * d1 + h11 * h * a1
        return complex(eps), complex(eps_dot)


def solve_epsilon(
    profile: DriveProfile,
    t_end: float,
    step: float,
    tol_wronskian: float = TOL_WRONSKIAN,
) -> EpsilonTrajectory:
    """Integrate eps'' + omega_sq(t) eps = 0 from the seeded initial data.

    Fixed-step classical 4th-order Runge-Kutta on the first-order system
    (eps, eps_dot).  The step is rounded so the uniform grid lands exactly
    on ``t_end``.

    Parameters
    ----------
    profile : DriveProfile
        Supplies omega_sq; the force plays no role here.
    t_end, step : float
        Final time (> 0) and requested step (0 < step <= t_end).
    tol_wronskian : float
        Maximum accepted drift |W(t) - 2j| over the grid.

    Raises
    ------
    EvaluationError
        omega_sq returned a non-finite value somewhere on the grid.
    WronskianDriftError
        The integration quality invariant was violated.
    """
    if t_end <= 0:
        raise ValueError("t_end must be positive")
    if step <= 0 or step > t_end:
        raise ValueError("step must satisfy 0 < step <= t_end")

    n = max(1, round(t_end / step))
    h = t_end / n
    t = np.linspace(0.0, t_end, n + 1)

    w_full = np.array([profile.omega_sq(t[i]) for i in range(n + 1)], dtype=float)
    w_half = np.array([profile.omega_sq(t[i] + 0.5 * h) for i in range(n)], dtype=float)
    if not (np.all(np.isfinite(w_full)) and np.all(np.isfinite(w_half))):
        bad = t[~np.isfinite(w_full)] if not np.all(np.isfinite(w_full)) else (
            t[:-1][~np.isfinite(w_half)] + 0.5 * h
        )
        raise EvaluationError(f"omega_sq non-finite at t = {bad[0]:g}")

    eps = np.empty(n + 1, dtype=complex)
    eps_dot = np.empty(n + 1, dtype=complex)
    e, d = 1.0 + 0.0j, 1.0j
    eps[0], eps_dot[0] = e, d
    for i in range(n):
        w0, wh, w1 = w_full[i], w_half[i], w_full[i + 1]
        k1e, k1d = d, -w0 * e
        y2e, y2d = e + 0.5 * h * k1e, d + 0.5 * h * k1d
        k2e, k2d = y2d, -wh * y2e
        y3e, y3d = e + 0.5 * h * k2e, d + 0.5 * h * k2d
        k3e, k3d = y3d, -wh * y3e
        y4e, y4d = e + h * k3e, d + h * k3d
        k4e, k4d = y4d, -w1 * y4e
        e = e + (h / 6.0) * (k1e + 2 * k2e + 2 * k3e + k4e)
        d = d + (h / 6.0) * (k1d + 2 * k2d + 2 * k3d + k4d)
        eps[i + 1], eps_dot[i + 1] = e, d

    drift = float(np.max(np.abs(eps_dot * np.conj(eps) - np.conj(eps_dot) * eps - 2.0j)))
    if drift > tol_wronskian:
        raise WronskianDriftError(drift, tol_wronskian)
    return EpsilonTrajectory(t, eps, eps_dot, profile, drift)


def _integrand(traj: EpsilonTrajectory, time: float) -> complex:
    eps, _ = traj(time)
    return eps * traj.profile.force(time)


def _beta_integral_to(traj: EpsilonTrajectory, t: float) -> complex:
    """integral_0^t eps(s) f(s) ds on the trajectory grid.

    Composite Simpson over whole grid intervals; the (at most two steps
    long) remainder is handled with a single 3-point Simpson rule on
    interpolated values.
    """
    h = traj.step
    g = traj.eps * np.array([traj.profile.force(ti) for ti in traj.t])

    m = int(math.floor(t / h + 1e-12))
    m -= m % 2  # composite Simpson needs an even interval count
    total = 0.0 + 0.0j
    if m >= 2:
        total += (h / 3.0) * (
            g[0] + g[m] + 4.0 * np.sum(g[1:m:2]) + 2.0 * np.sum(g[2:m:2])
        )
    a, b = m * h, t
    if b - a > 1e-15 * max(1.0, t):
        mid = 0.5 * (a + b)
        total += ((b - a) / 6.0) * (
            _integrand(traj, a) + 4.0 * _integrand(traj, mid) + _integrand(traj, b)
        )
    return total


def beta_shift(
    profile: DriveProfile,
    traj: EpsilonTrajectory,
    t: float,
    t_start: float = 0.0,
) -> complex:
    """Drive shift beta over [t_start, t]: -(1j/sqrt(2)) * integral eps f.

    ``profile`` must be the one the trajectory was solved with (its force
    is the integrand weight).  Both endpoints must lie inside the
    trajectory range.  Additivity over adjacent intervals is exact by
    construction.
    """
    if profile is not traj.profile and profile != traj.profile:
        raise ValueError("profile does not match the trajectory's profile")
    for endpoint in (t_start, t):
        if not 0.0 <= endpoint <= traj.t_end * (1 + 1e-12) + 1e-15:
            raise ValueError(f"time {endpoint} outside trajectory range [0, {traj.t_end}]")
    value = _beta_integral_to(traj, t) - _beta_integral_to(traj, t_start)
    return complex(-1j / math.sqrt(2.0) * value)


def parametric_resonance_epsilon(k: float, t):
    """Closed-form weak-resonance approximation for eps and its derivative.

    For omega_sq(t) = (1 + k cos 2t)/(1 + k) with |k| << 1,

        eps(t) = cosh(kt/4) e^{it} - 1j sinh(kt/4) e^{-it},

    and the returned eps_dot is the exact time derivative of that
    expression (not the derivative of the true solution).  At k = 0 this
    reduces to exp(1j t).

    The squared modulus of the approximation is
    ``|eps|^2 = cosh(kt/2) - sinh(kt/2) sin(2t)``; the 1/|r| envelope seen
    in constant-frame tomogram plots should be computed from eps via this
    route rather than from any further simplified expression.
    """
    k = float(k)
    if not abs(k) < 0.5:
        raise ValueError(f"approximation valid only for |k| < 0.5, got {k}")
    t = np.asarray(t, dtype=float) if np.ndim(t) else float(t)
    ch, sh = np.cosh(k * t / 4.0), np.sinh(k * t / 4.0)
    fwd, bwd = np.exp(1j * t), np.exp(-1j * t)
    eps = ch * fwd - 1j * sh * bwd
    eps_dot = (1j * ch + (k / 4.0) * sh) * fwd - (sh + 1j * (k / 4.0) * ch) * bwd
    if np.ndim(eps):
        return eps, eps_dot
    return complex(eps), complex(eps_dot)


def hermite(n: int, y):
    """Physicists' Hermite polynomial H_n(y) by three-term recurrence.

    H_0 = 1, H_1 = 2y, H_{n+1} = 2y H_n - 2n H_{n-1}.  Guarded at
    n <= MAX_HERMITE_ORDER; for large orders combine with the Gaussian
    weight through :func:`hermite_gauss` instead, since the bare
    polynomial overflows double precision near n ~ 150.
    """
    n = _check_order(n)
    y = np.asarray(y, dtype=float)
    h_prev = np.ones_like(y)
    if n == 0:
        return h_prev if h_prev.ndim else float(h_prev)
    h = 2.0 * y
    for j in range(1, n):
        h, h_prev = 2.0 * y * h - 2.0 * j * h_prev, h
    return h if h.ndim else float(h)


def hermite_gauss(n: int, y):
    """L2-normalised Hermite function H_n(y) e^{-y^2/2} / sqrt(n! 2^n sqrt(pi)).

    Evaluated with a scaled recurrence that keeps every intermediate on
    the order of one, so it stays finite for all supported n and y.
    """
    n = _check_order(n)
    y = np.asarray(y, dtype=float)
    u_prev = np.pi ** -0.25 * np.exp(-0.5 * y * y)
    if n == 0:
        return u_prev if u_prev.ndim else float(u_prev)
    u = math.sqrt(2.0) * y * u_prev
    for j in range(1, n):
        u, u_prev = math.sqrt(2.0 / (j + 1)) * y * u - math.sqrt(j / (j + 1)) * u_prev, u
    return u if u.ndim else float(u)


def _check_order(n) -> int:
    if int(n) != n or n < 0:
        raise ValueError(f"order must be a non-negative integer, got {n!r}")
    n = int(n)
    if n > MAX_HERMITE_ORDER:
        raise UnsupportedOrderError(
            f"order {n} above supported maximum {MAX_HERMITE_ORDER}"
        )
    return n
