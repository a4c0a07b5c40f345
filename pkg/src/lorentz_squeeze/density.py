"""Partial trace of the squeezed ground state over one oscillator.

Every function here takes the squeeze parameter in the wave-function
convention (see :class:`~lorentz_squeeze.oscillator.Convention`).  With
``t = tanh(eta/2)`` the reduced state is thermal: its occupation
probabilities are ``(1 - t^2) t^(2k)``.
"""

import math
from dataclasses import dataclass

import numpy as np

from .basis import hermite_functions
from .errors import NoTemperatureError
from .oscillator import as_wavefunction_eta, ground_state_psi


def pure_density(eta, x1, x2, x1p, x2p):
    return ground_state_psi(eta, x1, x2) * ground_state_psi(eta, x1p, x2p)


@dataclass(frozen=True)
class SchmidtSpectrum:
    """Schmidt coefficients ``c_k`` and probabilities ``lam_k = c_k^2`` for ``k <= k_max``.

    ``tail`` is the exact remainder ``1 - sum(lam)``, i.e. ``t^(2 (k_max + 1))``.
    """

    eta: float
    k_max: int
    c: np.ndarray
    lam: np.ndarray
    tail: float

    @property
    def ratio(self):
        return math.tanh(self.eta / 2.0) ** 2


def schmidt_spectrum(eta, k_max):
    eta = float(as_wavefunction_eta(eta))
    if int(k_max) != k_max or k_max < 0:
        raise ValueError(f"k_max must be a nonnegative integer, got {k_max!r}")
    k_max = int(k_max)
    t = math.tanh(eta / 2.0)
    k = np.arange(k_max + 1)
    c = t ** k / math.cosh(eta / 2.0)
    lam = c * c
    c.setflags(write=False)
    lam.setflags(write=False)
    return SchmidtSpectrum(eta=eta, k_max=k_max, c=c, lam=lam, tail=t ** (2 * (k_max + 1)))


def truncation_order(eta, tail_tol):
    """Smallest ``k_max`` whose geometric remainder ``t^(2(k_max+1))`` is ``<= tail_tol``."""
    if not 0.0 < tail_tol < 1.0:
        raise ValueError("tail_tol must lie in (0, 1)")
    t2 = math.tanh(float(as_wavefunction_eta(eta)) / 2.0) ** 2
    if t2 == 0.0:
        return 0
    k = max(0, math.ceil(math.log(tail_tol) / math.log(t2)) - 1)
    # the logarithm can land one step off on either side
    while k > 0 and t2 ** k <= tail_tol:
        k -= 1
    while t2 ** (k + 1) > tail_tol:
        k += 1
    return k


def certified_spectrum(eta, tail_tol=1e-15):
    return schmidt_spectrum(eta, truncation_order(eta, tail_tol))


@dataclass(frozen=True)
class DensityKernel:
    """Reduced density matrix ``rho(x, x')`` as a callable kernel.

    ``k_max=None`` selects the closed Gaussian form; an integer selects the
    spectral sum truncated at that order.
    """

    eta: float
    k_max: int = None

    def __call__(self, x, xp):
        return reduced_density(self.eta, x, xp, k_max=self.k_max)

    @property
    def tail(self):
        if self.k_max is None:
            return 0.0
        return schmidt_spectrum(self.eta, self.k_max).tail


def reduced_density(eta, x, xp, k_max=None):
    eta = float(as_wavefunction_eta(eta))
    x = np.asarray(x, dtype=float)
    xp = np.asarray(xp, dtype=float)
    if k_max is None:
        ch = math.cosh(eta)
        s = x + xp
        d = x - xp
        return np.exp(-s * s / (4.0 * ch) - ch * d * d / 4.0) / math.sqrt(math.pi * ch)
    lam = schmidt_spectrum(eta, k_max).lam
    phi = hermite_functions(k_max, x)
    phip = hermite_functions(k_max, xp)
    return np.tensordot(lam, phi * phip, axes=1)


def purity(eta):
    return 1.0 / math.cosh(float(as_wavefunction_eta(eta)))


def purity_spectral(spectrum):
    return float(np.sum(spectrum.lam ** 2))


def entropy(eta):
    """Von Neumann entropy of the reduced state, in units of k_B.

    Evaluated as ``(n+1) ln(n+1) - n ln n`` with ``n = sinh^2(eta/2)``,
    rearranged so that no large terms cancel.
    """
    eta = float(as_wavefunction_eta(eta))
    n = math.sinh(eta / 2.0) ** 2
    if n == 0.0:
        return 0.0
    return math.log1p(n) + n * math.log1p(1.0 / n)


def entropy_closed_form(eta):
    """Entropy as ``2 [cosh^2 ln cosh - sinh^2 ln|sinh|]`` of ``eta/2``, written out directly."""
    h = abs(float(as_wavefunction_eta(eta))) / 2.0
    if h == 0.0:
        return 0.0
    return 2.0 * (math.cosh(h) ** 2 * math.log(math.cosh(h)) - math.sinh(h) ** 2 * math.log(math.sinh(h)))


def entropy_spectral(spectrum):
    lam = spectrum.lam[spectrum.lam > 0]
    return float(-np.sum(lam * np.log(lam)))


def mean_excitation(eta):
    return math.sinh(float(as_wavefunction_eta(eta)) / 2.0) ** 2


@dataclass(frozen=True)
class ThermalPoint:
    T: float
    omega: float


def temperature_from_squeeze(eta, omega):
    """Invert ``tanh(eta/2) = exp(-omega/T)`` with hbar = k_B = 1.

    Note the reduced state's Boltzmann ratio is ``tanh^2(eta/2)``, so at this
    temperature the occupations are ``exp(-2 k omega / T)``.
    """
    eta = float(as_wavefunction_eta(eta))
    if not eta > 0:
        raise NoTemperatureError(f"no temperature for eta = {eta}; need eta > 0")
    if not omega > 0:
        raise NoTemperatureError(f"mode frequency must be positive, got {omega}")
    # ln coth(eta/2) == 2 atanh(exp(-eta)), without cancellation at large eta
    return ThermalPoint(T=omega / (2.0 * math.atanh(math.exp(-eta))), omega=omega)


def temperature(eta, omega):
    """Total variant of :func:`temperature_from_squeeze`: zero for a pure state, even in ``eta``."""
    eta = float(as_wavefunction_eta(eta))
    if eta == 0.0:
        return 0.0
    return temperature_from_squeeze(abs(eta), omega).T


def wigner_reduced(eta, x, p):
    ch = math.cosh(float(as_wavefunction_eta(eta)))
    x = np.asarray(x, dtype=float)
    p = np.asarray(p, dtype=float)
    return np.exp(-(x * x + p * p) / ch) / (math.pi * ch)
