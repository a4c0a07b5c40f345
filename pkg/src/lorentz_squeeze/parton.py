"""Decoherence figures of merit for a boosted bound state.

Rapidities here use the boost convention; the entropy and purity of the
boosted hadron are taken from :mod:`lorentz_squeeze.density` after converting
to the wave-function convention (``eta_wf = 2 * rapidity``).
"""

import math
from dataclasses import dataclass

from . import density
from .errors import KinematicsError
from .oscillator import Convention, SqueezeParameter

PROTON_MASS_GEV = 0.938


@dataclass(frozen=True)
class BeamSpec:
    E: float
    m: float = PROTON_MASS_GEV

    def __post_init__(self):
        if not self.m > 0:
            raise KinematicsError(f"rest mass must be positive, got {self.m}")
        if self.E < self.m:
            raise KinematicsError(f"energy {self.E} GeV is below the rest mass {self.m} GeV")


def rapidity_from_energy(b):
    return math.acosh(b.E / b.m)


def period_factor(eta):
    """Dilation of the internal oscillation period."""
    return math.exp(eta)


def interaction_factor(eta):
    """Contraction of the interaction time with a counter-moving probe."""
    return math.exp(-eta)


def coherence_ratio(eta):
    return math.exp(-2.0 * eta)


def _as_wavefunction(eta):
    return SqueezeParameter(eta, Convention.BOOST).to_wavefunction()


def boosted_hadron_entropy(eta):
    return density.entropy(_as_wavefunction(eta))


def boosted_hadron_purity(eta):
    return density.purity(_as_wavefunction(eta))


@dataclass(frozen=True)
class PartonReport:
    eta: float
    period_factor: float
    interaction_factor: float
    coherence_ratio: float
    entropy: float
    purity: float


def parton_report(b):
    eta = rapidity_from_energy(b)
    return PartonReport(
        eta=eta,
        period_factor=period_factor(eta),
        interaction_factor=interaction_factor(eta),
        coherence_ratio=coherence_ratio(eta),
        entropy=boosted_hadron_entropy(eta),
        purity=boosted_hadron_purity(eta),
    )
