"""
Partons and decoherence
=======================

For a 900 GeV proton the internal period is dilated by ``e^eta`` while the
interaction time with a counter-moving probe shrinks by ``e^-eta``.
"""

import numpy as np

import lorentz_squeeze as ls

rep = ls.parton_report(ls.BeamSpec(E=900.0, m=ls.PROTON_MASS_GEV))
for field in ("eta", "period_factor", "interaction_factor", "coherence_ratio", "entropy", "purity"):
    print(f"{field:>18}: {getattr(rep, field):.6g}")

###############################################################################
# Entropy of the boosted bound state when the time separation goes unobserved.

for eta in np.linspace(0, 3, 7):
    print(f"rapidity {eta:.1f}: S = {ls.boosted_hadron_entropy(eta):.4f}, "
          f"ratio = {ls.coherence_ratio(eta):.3e}")

###############################################################################
# The same numbers from the command line::
#
#     lorentz-squeeze parton --energy 900 --mass 0.938 --format json
#     lorentz-squeeze boost-grid --rapidity 1.5 --space momentum > fig_momentum.csv
