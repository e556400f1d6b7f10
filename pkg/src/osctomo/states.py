"""Closed-form marginal distribution functions (tomograms) and wavefunctions.

The marginal distribution function w(X, mu, nu, t) is the probability
density of the quadrature X = mu*q + nu*p measured in the rotated/scaled
phase-space frame labelled by (mu, nu).  All states here are expressed
through the auxiliary solution (eps, eps_dot) and the drive shift beta of
:mod:`osctomo.dynamics`; passing (eps, eps_dot, beta) = (1, 1j, 0)
evaluates the t = 0 forms, so no separate initial-time code path exists.

Shared frame quantities:

    r     = eps_dot * nu + eps * mu          (must be nonzero)
    gamma = alpha - beta
    Y     = (beta* r + beta r* + sqrt(2) X) / (sqrt(2) |r|)   (real)

The coherent tomogram is the normal density with

    mean      <X>   = sqrt(2) Re(gamma * conj(r))
    variance  sig^2 = |r|^2 / 2,

the Fock tomogram is w_n = hermite_gauss(n, Y)^2 / |r|, and the cross
terms carry the unit phases (r*/|r|)^n (r/|r|)^m on top of the same
Hermite-Gauss profile.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .dynamics import hermite_gauss
from .errors import DegenerateFrameError

__all__ = [
    "FrameKernel",
    "coherent_mdf",
    "mean_X",
    "variance_X",
    "coherent_mdf_fourier",
    "fourier_ladder_apply",
    "annihilation_eigencheck",
    "fock_mdf",
    "cross_mdf",
    "coherent_wavefunction",
]

_SQRT2 = math.sqrt(2.0)
_R_TOL = 1e-12


def _frame_r(eps: complex, eps_dot: complex, mu, nu):
    r = eps_dot * np.asarray(nu, dtype=complex) + eps * np.asarray(mu, dtype=complex)
    if np.any(np.abs(r) < _R_TOL):
        raise DegenerateFrameError(
            "frame coefficient r = eps_dot*nu + eps*mu vanished; the tomogram "
            "kernel is degenerate for this (mu, nu)"
        )
    return r


@dataclass(frozen=True)
class FrameKernel:
    """The shared (r, Y, gamma) combination entering every closed form.

    ``r`` and ``Y`` broadcast with whatever array arguments produced them.
    """

    r: complex | np.ndarray
    Y: float | np.ndarray
    gamma: complex

    @classmethod
    def from_state(cls, alpha, eps, eps_dot, beta, X, mu, nu):
        r = _frame_r(eps, eps_dot, mu, nu)
        abs_r = np.abs(r)
        Y = (2.0 * np.real(np.conj(beta) * r) + _SQRT2 * np.asarray(X, dtype=float)) / (
            _SQRT2 * abs_r
        )
        return cls(r, Y, complex(alpha) - complex(beta))


def mean_X(alpha, eps, eps_dot, beta, mu, nu):
    """<X> = sqrt(2) Re[(alpha - beta) conj(r)]."""
    r = _frame_r(eps, eps_dot, mu, nu)
    gamma = complex(alpha) - complex(beta)
    return _SQRT2 * np.real(gamma * np.conj(r))


def variance_X(eps, eps_dot, mu, nu):
    """Var X = |eps_dot*nu + eps*mu|^2 / 2 (independent of the state label)."""
    r = _frame_r(eps, eps_dot, mu, nu)
    return 0.5 * np.abs(r) ** 2


def coherent_mdf(alpha, eps, eps_dot, beta, X, mu, nu):
    """Tomogram of the coherent state alpha: a normal density in X.

    Vectorised over X (and over mu/nu as long as r stays away from zero).
    """
    r = _frame_r(eps, eps_dot, mu, nu)
    s = np.abs(r) ** 2
    gamma = complex(alpha) - complex(beta)
    m = _SQRT2 * np.real(gamma * np.conj(r))
    X = np.asarray(X, dtype=float)
    return np.exp(-((X - m) ** 2) / s) / np.sqrt(np.pi * s)


def coherent_mdf_fourier(k, alpha, eps, eps_dot, beta, mu, nu):
    """Characteristic-function form of the coherent tomogram.

    w_k = exp(-k^2 |r|^2 / 4 - 1j k <X>), normalised so w_0 = 1; the
    inverse transform w(X) = (2 pi)^-1 integral w_k e^{1j k X} dk
    reproduces :func:`coherent_mdf`.  Satisfies conj(w_k) = w_{-k}.

    In the scaled variables (y, z) = (k mu, k nu) the quadratic part of
    the exponent at t = 0 reads -(y^2 + z^2)/4, i.e. the Gaussian ansatz
    coefficients are c = d = -1/4 with no cross term.
    """
    r = _frame_r(eps, eps_dot, mu, nu)
    s = np.abs(r) ** 2
    gamma = complex(alpha) - complex(beta)
    m = _SQRT2 * np.real(gamma * np.conj(r))
    k = np.asarray(k, dtype=float)
    out = np.exp(-0.25 * k * k * s - 1j * k * m)
    return out if out.ndim else complex(out)


def fourier_ladder_apply(
    wk: Callable[[float, float], complex],
    eps: complex,
    eps_dot: complex,
    y: float,
    z: float,
    h: float,
) -> complex:
    """Apply the Fourier-space ladder operator to a tomogram transform.

    The operator, acting on functions of the scaled variables
    (y, z) = (k mu, k nu), is

        (1j/2)(eps y + eps_dot z) + eps_dot d/dy - eps d/dz,

    with the derivatives realised as central differences of step h.  On a
    coherent transform its eigenvalue is sqrt(2) (alpha - beta): this is
    the tomogram-native statement of coherence in the one space where the
    inverse X-derivative is algebraic.
    """
    if h <= 0:
        raise ValueError("h must be positive")
    d_y = (wk(y + h, z) - wk(y - h, z)) / (2.0 * h)
    d_z = (wk(y, z + h) - wk(y, z - h)) / (2.0 * h)
    return 0.5j * (eps * y + eps_dot * z) * wk(y, z) + eps_dot * d_y - eps * d_z


def annihilation_eigencheck(alpha, eps, eps_dot, beta, mu, nu, k, h) -> complex:
    """Residual of the coherence eigen-equation in Fourier space.

    Returns (ladder operator applied to w_k) - sqrt(2) gamma w_k at the
    point (y, z) = (k mu, k nu) with central differences of step h; the
    exact residual is zero, so the returned value is O(h^2).
    """
    k = float(k)
    if k == 0.0:
        raise ValueError("k must be nonzero (the scaled variables divide by k)")

    def wk(y: float, z: float) -> complex:
        return complex(
            coherent_mdf_fourier(k, alpha, eps, eps_dot, beta, y / k, z / k)
        )

    y, z = k * float(mu), k * float(nu)
    gamma = complex(alpha) - complex(beta)
    applied = fourier_ladder_apply(wk, complex(eps), complex(eps_dot), y, z, h)
    return applied - _SQRT2 * gamma * wk(y, z)


def fock_mdf(n: int, eps, eps_dot, beta, X, mu, nu):
    """Tomogram of the n-th excited state: hermite_gauss(n, Y)^2 / |r|.

    For f = 0 and constant unit frequency this depends on (X, mu, nu)
    only through X / sqrt(mu^2 + nu^2).
    """
    fk = FrameKernel.from_state(0.0, eps, eps_dot, beta, X, mu, nu)
    return hermite_gauss(n, fk.Y) ** 2 / np.abs(fk.r)


def cross_mdf(n: int, m: int, eps, eps_dot, beta, X, mu, nu):
    """Off-diagonal tomogram w_nm between Fock states n and m.

    w_nm = hermite_gauss(n, Y) hermite_gauss(m, Y) e^{1j (m-n) arg r} / |r|;
    Hermitian in (n, m): w_nm = conj(w_mn).  The coherent tomogram is
    recovered from the double series

        w_alpha = e^{-|alpha|^2} sum_{n,m} alpha^n conj(alpha)^m
                  / sqrt(n! m!) * w_nm.
    """
    fk = FrameKernel.from_state(0.0, eps, eps_dot, beta, X, mu, nu)
    phase = np.exp(1j * (m - n) * np.angle(fk.r))
    return hermite_gauss(n, fk.Y) * hermite_gauss(m, fk.Y) * phase / np.abs(fk.r)


def coherent_wavefunction(alpha, eps, eps_dot, beta, x):
    """Normalised coherent wavefunction in the position representation.

    psi_alpha(x) = (pi |eps|^2)^{-1/4}
                   exp{-[gamma eps* + gamma* eps]^2 / (4 |eps|^2)}
                   exp{1j x^2 eps_dot / (2 eps) + sqrt(2) gamma x / eps},

    with gamma = alpha - beta and the free global phase fixed to zero.
    The tomogram and density matrix built from psi are blind to that
    choice.
    """
    eps, eps_dot = complex(eps), complex(eps_dot)
    if abs(eps) < _R_TOL:
        raise DegenerateFrameError("eps = 0; wavefunction gauge is degenerate")
    gamma = complex(alpha) - complex(beta)
    ae2 = abs(eps) ** 2
    real_comb = 2.0 * (gamma * eps.conjugate()).real  # gamma eps* + gamma* eps
    prefactor = (np.pi * ae2) ** -0.25 * math.exp(-(real_comb**2) / (4.0 * ae2))
    x = np.asarray(x, dtype=float)
    out = prefactor * np.exp(0.5j * x * x * eps_dot / eps + _SQRT2 * gamma * x / eps)
    return out if out.ndim else complex(out)
