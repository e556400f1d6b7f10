"""Time-dependent integrals of motion for the driven oscillator.

Two equivalent encodings of the linear invariant I(t) are provided and
cross-checked against each other:

* the matrix form ``I(t) = Lambda(t) Q + Delta(t)`` with the ordering
  ``Q = (p, q)`` (rows of Lambda are the p- and q-like invariants, columns
  multiply p and q, in that order) -- this ordering is used everywhere in
  the package;
* the ladder pair ``A(t), Adag(t)`` with

      A(t) = (1j/sqrt 2) (eps p - eps_dot q) + beta,

  whose commutator [A, Adag] equals 1 whenever (eps, eps_dot) carry the
  canonical Wronskian.

The matrix entries follow from the ladder pair through

    I_p = (A - Adag) / (sqrt(2) 1j),     I_q = (A + Adag) / sqrt(2),

which fixes

    Lambda = 1/2 [[eps + eps*,        -(eps_dot + eps_dot*)],
                  [1j (eps - eps*),   -1j (eps_dot - eps_dot*)]]

    Delta  = (sqrt(2) Im beta, sqrt(2) Re beta).

At t = 0 (eps = 1, eps_dot = 1j, beta = 0) this gives I(0) = Q exactly,
and det Lambda = 1 for all t as a consequence of the Wronskian.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConsistencyError

__all__ = [
    "LinearInvariant",
    "LadderInvariant",
    "lambda_matrix",
    "delta_vector",
    "linear_invariant",
    "ladder_pair",
    "ladder_commutator",
    "invariant_from_ladder",
    "IMAG_RESIDUE_TOL",
    "DET_TOL",
]

#: Largest imaginary residue tolerated when collapsing complex algebra to reals.
IMAG_RESIDUE_TOL = 1e-10

#: Tolerance on |det Lambda - 1|.
DET_TOL = 1e-8

_SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class LinearInvariant:
    """I(t) = lam @ (p, q) + delta, with lam a real 2x2 matrix."""

    lam: np.ndarray
    delta: np.ndarray
    t: float = 0.0

    def __post_init__(self):
        lam = np.asarray(self.lam, dtype=float)
        delta = np.asarray(self.delta, dtype=float)
        if lam.shape != (2, 2) or delta.shape != (2,):
            raise ValueError("lam must be 2x2 and delta length 2")
        det = lam[0, 0] * lam[1, 1] - lam[0, 1] * lam[1, 0]
        if abs(det - 1.0) > DET_TOL:
            raise ConsistencyError(f"det Lambda = {det!r} deviates from 1 beyond {DET_TOL}")
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "delta", delta)

    @property
    def det(self) -> float:
        return float(np.linalg.det(self.lam))

    def apply(self, p: float, q: float) -> np.ndarray:
        """Value of (I_p, I_q) on a classical phase-space point."""
        return self.lam @ np.array([p, q], dtype=float) + self.delta


@dataclass(frozen=True)
class LadderInvariant:
    """Linear form cp*p + cq*q + c0 on phase space, with complex coefficients."""

    cp: complex
    cq: complex
    c0: complex

    def apply(self, p: complex, q: complex) -> complex:
        return self.cp * p + self.cq * q + self.c0


def _to_real(value: complex, what: str) -> float:
    if abs(value.imag) > IMAG_RESIDUE_TOL:
        raise ConsistencyError(
            f"{what} has imaginary residue {value.imag:.3e} above {IMAG_RESIDUE_TOL}"
        )
    return float(value.real)


def lambda_matrix(eps: complex, eps_dot: complex) -> np.ndarray:
    """Real 2x2 matrix Lambda(t) built from (eps, eps_dot).

    Imaginary residues of the four entries must sit below
    IMAG_RESIDUE_TOL (they are exactly zero in exact arithmetic) and are
    then dropped.
    """
    eps, eps_dot = complex(eps), complex(eps_dot)
    entries = [
        0.5 * (eps + eps.conjugate()),
        -0.5 * (eps_dot + eps_dot.conjugate()),
        0.5j * (eps - eps.conjugate()),
        -0.5j * (eps_dot - eps_dot.conjugate()),
    ]
    vals = [_to_real(e, "Lambda entry") for e in entries]
    return np.array([[vals[0], vals[1]], [vals[2], vals[3]]])


def delta_vector(beta: complex) -> np.ndarray:
    """Real shift Delta(t) = (sqrt(2) Im beta, sqrt(2) Re beta).

    The first component pairs with the p-like invariant, the second with
    the q-like one; both follow from the ladder pair via
    I_p = (A - Adag)/(sqrt(2) 1j) and I_q = (A + Adag)/sqrt(2), and make
    I(t) constant along classical trajectories of the driven oscillator.
    """
    beta = complex(beta)
    return np.array([_SQRT2 * beta.imag, _SQRT2 * beta.real])


def linear_invariant(eps: complex, eps_dot: complex, beta: complex, t: float = 0.0) -> LinearInvariant:
    """Assemble the LinearInvariant for given auxiliary data."""
    return LinearInvariant(lambda_matrix(eps, eps_dot), delta_vector(beta), t)


def ladder_pair(eps: complex, eps_dot: complex, beta: complex) -> tuple[LadderInvariant, LadderInvariant]:
    """The invariant ladder pair (A, Adag).

    A(0) is the usual annihilation operator a = (q + 1j p)/sqrt(2);
    A(t) is its evolution under the driven-oscillator Hamiltonian.
    """
    eps, eps_dot, beta = complex(eps), complex(eps_dot), complex(beta)
    a = LadderInvariant(1j * eps / _SQRT2, -1j * eps_dot / _SQRT2, beta)
    adag = LadderInvariant(
        -1j * eps.conjugate() / _SQRT2,
        1j * eps_dot.conjugate() / _SQRT2,
        beta.conjugate(),
    )
    return a, adag


def ladder_commutator(a: LadderInvariant, b: LadderInvariant) -> complex:
    """Scalar commutator [a, b] of two linear forms, using [q, p] = 1j.

    [a, b] = (a.cp b.cq - a.cq b.cp) [p, q] = -1j (a.cp b.cq - a.cq b.cp);
    for a canonical pair from :func:`ladder_pair` this equals 1.
    """
    return -1j * (a.cp * b.cq - a.cq * b.cp)


def invariant_from_ladder(
    a: LadderInvariant, adag: LadderInvariant, t: float = 0.0
) -> LinearInvariant:
    """Reassemble (Lambda, Delta) from the ladder pair.

    Agrees componentwise with :func:`lambda_matrix` / :func:`delta_vector`
    built from the same (eps, eps_dot, beta); used as a consistency
    cross-check.
    """
    i_p = [(a.cp - adag.cp) / (_SQRT2 * 1j), (a.cq - adag.cq) / (_SQRT2 * 1j),
           (a.c0 - adag.c0) / (_SQRT2 * 1j)]
    i_q = [(a.cp + adag.cp) / _SQRT2, (a.cq + adag.cq) / _SQRT2,
           (a.c0 + adag.c0) / _SQRT2]
    lam = np.array([
        [_to_real(i_p[0], "I_p p-coefficient"), _to_real(i_p[1], "I_p q-coefficient")],
        [_to_real(i_q[0], "I_q p-coefficient"), _to_real(i_q[1], "I_q q-coefficient")],
    ])
    delta = np.array([_to_real(i_p[2], "I_p shift"), _to_real(i_q[2], "I_q shift")])
    return LinearInvariant(lam, delta, t)
