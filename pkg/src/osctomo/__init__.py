"""Tomographic probability representation of the forced parametric oscillator.

Quantum states are represented by the marginal distribution function
(tomogram) w(X, mu, nu, t): a genuine probability density for the
quadrature X = mu*q + nu*p, indexed by the phase-space frame (mu, nu).
The package provides

* :mod:`osctomo.dynamics` -- the auxiliary complex trajectory eps(t), the
  drive shift beta(t) and Hermite utilities;
* :mod:`osctomo.invariants` -- linear and ladder integrals of motion;
* :mod:`osctomo.propagators` -- the affine classical propagator of the
  tomogram evolution equation and the quantum Green functions;
* :mod:`osctomo.states` -- closed-form coherent and Fock tomograms,
  Fourier-space forms and wavefunctions;
* :mod:`osctomo.transforms` -- the tomogram <-> density matrix <-> Wigner
  transform web;
* :mod:`osctomo.cli` -- the ``osctomo`` command line driver (``figure``,
  ``eval``, ``selftest``).

Dimensionless units throughout: hbar = m = 1, and omega = 1 for the
constant-frequency oscillator.  All public functions are pure; grids and
trajectories are immutable after construction, so everything is safe to
evaluate concurrently.
"""

from .dynamics import (
    DriveProfile,
    EpsilonTrajectory,
    solve_epsilon,
    beta_shift,
    parametric_resonance_epsilon,
    hermite,
    hermite_gauss,
)
from .errors import (
    OscTomoError,
    EvaluationError,
    WronskianDriftError,
    ConsistencyError,
    DegenerateFrameError,
    CausticError,
    FrameUnsupportedError,
    UnsupportedOrderError,
    QuadratureConvergenceError,
    OutOfSupportWarning,
)
from .invariants import (
    LinearInvariant,
    LadderInvariant,
    lambda_matrix,
    delta_vector,
    linear_invariant,
    ladder_pair,
    ladder_commutator,
    invariant_from_ladder,
)
from .propagators import (
    ClassicalPropagator,
    MdfSample,
    fokker_planck_residual,
    green_sho,
    green_free,
    green_driven,
    quantum_propagator,
    quantum_propagator_from_shift,
)
from .states import (
    FrameKernel,
    coherent_mdf,
    mean_X,
    variance_X,
    coherent_mdf_fourier,
    fourier_ladder_apply,
    annihilation_eigencheck,
    fock_mdf,
    cross_mdf,
    coherent_wavefunction,
)
from .transforms import (
    DensityGrid,
    WignerGrid,
    QuadratureSpec,
    mdf_from_density,
    density_from_mdf,
    density_grid_from_mdf,
    mdf_from_wigner,
)

__version__ = "0.1.0"

__all__ = [
    "DriveProfile",
    "EpsilonTrajectory",
    "solve_epsilon",
    "beta_shift",
    "parametric_resonance_epsilon",
    "hermite",
    "hermite_gauss",
    "LinearInvariant",
    "LadderInvariant",
    "lambda_matrix",
    "delta_vector",
    "linear_invariant",
    "ladder_pair",
    "ladder_commutator",
    "invariant_from_ladder",
    "ClassicalPropagator",
    "MdfSample",
    "fokker_planck_residual",
    "green_sho",
    "green_free",
    "green_driven",
    "quantum_propagator",
    "quantum_propagator_from_shift",
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
    "DensityGrid",
    "WignerGrid",
    "QuadratureSpec",
    "mdf_from_density",
    "density_from_mdf",
    "density_grid_from_mdf",
    "mdf_from_wigner",
    "OscTomoError",
    "EvaluationError",
    "WronskianDriftError",
    "ConsistencyError",
    "DegenerateFrameError",
    "CausticError",
    "FrameUnsupportedError",
    "UnsupportedOrderError",
    "QuadratureConvergenceError",
    "OutOfSupportWarning",
    "__version__",
]
