"""Quantum Green functions of the driven oscillator and their limits.

The driven kernel reduces to the oscillator kernel when the force is
switched off, the oscillator kernel tends to the free one at small times,
and the density-matrix propagator K = G conj(G) is blind to the free
time-dependent phase left open by the wavefunction kernel.
"""

import math

from osctomo import (
    DriveProfile,
    green_driven,
    green_free,
    green_sho,
    quantum_propagator,
    quantum_propagator_from_shift,
    solve_epsilon,
    beta_shift,
)

# moduli are point-independent: |G| = (2 pi |sin t|)^(-1/2)
print("free-kernel modulus at t = 1:", abs(green_free(0.3, 0.7, 1.0)),
      "vs (2 pi)^(-1/2) =", (2 * math.pi) ** -0.5)

# small-time limit: sin t -> t, cos t -> 1
t = 1e-2
g_s, g_f = green_sho(0.3, 0.4, t), green_free(0.3, 0.4, t)
print(f"oscillator vs free kernel at t = {t}: relative difference "
      f"{abs(g_s - g_f) / abs(g_f):.2e}")

# driven kernel with the force switched off is the oscillator kernel
quiet = DriveProfile.constant(1.0)
print("driven(f=0) == SHO:",
      abs(green_driven(0.4, -0.7, 1.1, quiet) - green_sho(0.4, -0.7, 1.1)))

# two routes to the driven density-matrix propagator: force integrals in
# the exponent, or the whole drive folded into the shift beta(t)
profile = DriveProfile.constant(1.0, force=lambda s: math.cos(0.7 * s) + 0.4)
t = 1.3
traj = solve_epsilon(profile, t, 1e-3)
beta = beta_shift(profile, traj, t)
k_direct = quantum_propagator(0.4, -0.2, 0.1, 0.9, t, profile)
k_shift = quantum_propagator_from_shift(0.4, -0.2, 0.1, 0.9, t, beta)
print(f"force-integral route : {k_direct:.12f}")
print(f"beta-shift route     : {k_shift:.12f}")
print(f"difference           : {abs(k_direct - k_shift):.2e}")

# the free phase convention cancels in K
k_0 = quantum_propagator(0.4, -0.2, 0.1, 0.9, t, profile, phase=0.0)
k_f = quantum_propagator(0.4, -0.2, 0.1, 0.9, t, profile, phase=0.37 * t)
print(f"phase blindness      : |K(F=0) - K(F=0.37 t)| = {abs(k_0 - k_f):.2e}")
