"""
Tracing out the second oscillator
=================================

The squeezed ground state has a geometric Schmidt spectrum.  Integrating out
one coordinate leaves a thermal-looking mixed state whose purity, entropy and
Wigner function all follow from ``tanh(eta / 2)``.
"""

import math

import numpy as np

import lorentz_squeeze as ls

eta = 2.0
spec = ls.certified_spectrum(eta, tail_tol=1e-12)
print(f"k_max = {spec.k_max}, tail = {spec.tail:.3e}")
print("first coefficients:", np.round(spec.c[:5], 6))

###############################################################################
# Closed forms against sums over the spectrum.

print("purity :", ls.purity(eta), ls.purity_spectral(spec))
print("entropy:", ls.entropy(eta), ls.entropy_spectral(spec))
print("<n>    :", ls.mean_excitation(eta))

###############################################################################
# Temperature: entropy and temperature rise together with the coupling.

for e in (0.25, 0.5, 1.0, 2.0, 4.0):
    print(f"eta={e:4.2f}  S={ls.entropy(e):.4f}  T/omega={ls.temperature(e, 1.0):.4f}")

###############################################################################
# The kernel in closed form and as a truncated Hermite sum.

x = np.linspace(-3, 3, 7)
X, XP = np.meshgrid(x, x)
k_max = ls.truncation_order(1.0, 1e-12)
gap = np.max(np.abs(ls.reduced_density(1.0, X, XP) - ls.reduced_density(1.0, X, XP, k_max=k_max)))
print("closed vs spectral kernel:", gap)

###############################################################################
# The Wigner function spreads as cosh(eta) / 2 in both x and p.

for e in (0.0, 1.0, 2.0):
    var = ls.integrate_2d(lambda a, b: a * a * ls.wigner_reduced(e, a, b))
    print(f"eta={e}: Var x = {var:.6f}  (cosh/2 = {math.cosh(e) / 2:.6f})")
