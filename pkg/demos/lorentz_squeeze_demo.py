"""
Lorentz-squeezed oscillator
===========================

A boost scales the light-cone coordinates by ``e^eta`` and ``e^-eta``, which
turns the circular rest-frame Gaussian into an ellipse along ``z = t``.
"""

import math

import numpy as np

import lorentz_squeeze as ls

p = ls.SpacetimePoint(z=1.0, t=0.25)
for eta in (0.0, 0.5, 1.0):
    b = ls.boost(p, eta)
    lc0, lc = ls.to_lightcone(p), ls.to_lightcone(b)
    print(f"eta={eta}: u ratio {lc.u / lc0.u:.4f}, v ratio {lc.v / lc0.v:.4f}, "
          f"interval {b.z ** 2 - b.t ** 2:.12f}")

###############################################################################
# The boosted ground state is still annihilated by the hyperbolic oscillator
# operator.  A Gaussian of the wrong width is not.

grid = ls.GridSpec(-4, 4, -4, 4, 81, 81)
for eta in (0.0, 1.2, 2.0):
    print(f"residual at eta={eta}: {ls.oscillator_residual(eta, grid):.2e}")
print("control:", ls.oscillator_residual(0.0, grid, psi=lambda z, t: np.exp(-0.6 * (z * z + t * t))))

###############################################################################
# Numerical Fourier transform of the space-time function reproduces the
# momentum-energy function.

eta = 0.8
for qz, q0 in [(0.0, 0.0), (1.0, 0.5), (-1.5, 1.0)]:
    num = ls.fourier_2d(lambda z, t: ls.psi_boosted(eta, z, t), q_z=qz, q_0=q0)
    print(f"q=({qz}, {q0}): transform {num:.10f}, closed form {ls.phi_boosted(eta, qz, q0):.10f}")

###############################################################################
# Longitudinal widths in position and momentum grow together.

for eta in (0.0, 0.7, 1.5):
    vz = ls.integrate_2d(lambda z, t: z * z * ls.psi_boosted(eta, z, t) ** 2)
    vq = ls.integrate_2d(lambda a, b: a * a * ls.phi_boosted(eta, a, b) ** 2)
    print(f"eta={eta}: Var z = {vz:.6f}, Var q_z = {vq:.6f}, cosh(2 eta)/2 = {math.cosh(2 * eta) / 2:.6f}")
