"""
Two coupled oscillators
=======================

Decouple the Hamiltonian with the 45 degree rotation, read off the squeeze
parameter, and check that the squeezed Gaussian really is the ground state.
"""

import numpy as np

import lorentz_squeeze as ls

# A coupling with (K + C) / (K - C) = 4
c = ls.OscillatorCoupling(m=1.0, K=1.25, C=0.75)
nf = ls.normal_modes(c)
print(f"mode frequencies: omega1 = {nf.omega1:.6f}, omega2 = {nf.omega2:.6f}")

# The relation exp(2 eta) = (K+C)/(K-C) gives ln 2.  The parameter that
# actually makes the Gaussian an eigenstate is half as large, with the sign
# saying which normal mode is soft.
print("eta from coupling:", ls.eta_from_coupling(c).value)
print("eta canonical    :", ls.eta_canonical(c).value)

###############################################################################
# The rotated Hamiltonian agrees with the original at random phase points.

rng = np.random.default_rng(0)
x1, x2, p1, p2 = rng.normal(size=(4, 5))
y1, y2 = ls.normal_coordinates(x1, x2)
q1, q2 = ls.normal_coordinates(p1, p2)
print(ls.hamiltonian_coupled(x1, x2, p1, p2, c) - ls.hamiltonian_normal(y1, y2, q1, q2, nf, c.m))

###############################################################################
# Apply H by finite differences and compare with the zero-point energy.

g = np.linspace(-4, 4, 81)
X1, X2 = np.meshgrid(g, g)
print("sup |(H - E0) psi| =", ls.ground_state_residual(c, X1, X2))
