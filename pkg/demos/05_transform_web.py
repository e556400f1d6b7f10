"""The transform web: tomogram <-> density matrix <-> Wigner function.

A state can enter the web anywhere; this script walks the vacuum around
the full loop and checks every leg against the closed forms.
"""

import math

import numpy as np

from osctomo import (
    DensityGrid,
    QuadratureSpec,
    WignerGrid,
    coherent_mdf,
    coherent_wavefunction,
    density_from_mdf,
    density_grid_from_mdf,
    mdf_from_density,
    mdf_from_wigner,
    mean_X,
    variance_X,
)

VACUUM = (1.0, 1.0j, 0.0)  # (eps, eps_dot, beta) at t = 0
w_vac = lambda X, mu, nu: coherent_mdf(0.0, *VACUUM, X, mu, nu)

# --- wavefunction -> density grid -> tomogram ------------------------------
rho = DensityGrid.from_wavefunction(lambda x: coherent_wavefunction(0.0, *VACUUM, x), 8.0, 321)
print(f"density grid: {rho.n} x {rho.n}, trace = {rho.trace():.10f}")
val = mdf_from_density(rho, 0.5, 0.6, 0.8)
print(f"tomogram from rho at X=0.5, frame (0.6, 0.8): {val:.10f} "
      f"(closed form {w_vac(0.5, 0.6, 0.8):.10f})")

# --- tomogram -> density matrix --------------------------------------------
# the Y window tracks the Gaussian mass frame by frame, which is what
# keeps the narrow small-mu slices resolved
def window(mu, nu):
    centre = mean_X(0.0, *VACUUM, mu, nu)
    sigma = np.sqrt(variance_X(1.0, 1.0j, mu, nu))
    return centre - 10.0 * sigma, centre + 10.0 * sigma

quad = QuadratureSpec(mu_max=12.0, mu_count=160, y_window=window, y_count=501)
r00 = density_from_mdf(w_vac, 0.0, 0.0, quad)
print(f"\nrho(0, 0) reconstructed from the tomogram: {r00.real:.10f} "
      f"(|psi_0(0)|^2 = {1.0 / math.sqrt(math.pi):.10f})")

# full grid reconstruction, then back to the tomogram: the round trip
rebuilt = density_grid_from_mdf(w_vac, 6.0, 161, quad)
worst = max(
    abs(mdf_from_density(rebuilt, X, 0.6, 0.8) - w_vac(X, 0.6, 0.8))
    for X in np.linspace(-4.0, 4.0, 41)
)
print(f"round trip tomogram -> rho -> tomogram: max |difference| = {worst:.2e}")

# --- Wigner -> tomogram -----------------------------------------------------
# the vacuum Wigner function in the (2 pi)^(-1) normalisation convention
q = np.linspace(-6.0, 6.0, 401)
wigner = WignerGrid(6.0, 2.0 * np.exp(-np.add.outer(q * q, q * q)))
print(f"\nWigner normalisation: {wigner.normalisation():.10f}")
for X in (0.0, 1.0):
    val = mdf_from_wigner(wigner, X, 1.0 / math.sqrt(2), 1.0 / math.sqrt(2))
    print(f"projection at X = {X}: {val:.10f} "
          f"(closed form {math.exp(-X * X) / math.sqrt(math.pi):.10f})")
