"""Two identical oscillators coupled by a spring.

Natural units with hbar = 1.  The exact normal-mode springs are ``K - C``
for the relative coordinate ``y1`` and ``K + C`` for the center coordinate
``y2``.  Two squeeze parameters are exposed:

* :func:`eta_from_coupling` - the relation ``exp(2 eta) = (K+C)/(K-C)``;
* :func:`eta_canonical` - the value for which :func:`ground_state_psi` is
  exactly the ground state of the coupled Hamiltonian once lengths are
  measured in units of ``(m sqrt(K^2 - C^2))^(-1/4)``.

They differ by a factor ``-1/2``.
"""

import enum
from dataclasses import dataclass

import numpy as np

from .errors import InvalidCouplingError, SingularCouplingError

SQRT2 = np.sqrt(2.0)


class Convention(enum.Enum):
    """Which exponent a squeeze parameter multiplies.

    ``WAVEFUNCTION``: ``exp(+-eta)`` on the squared normal coordinates of the
    coupled-oscillator ground state.  ``BOOST``: rapidity, entering the
    boosted covariant wave function as ``exp(+-2 eta)``.
    """

    WAVEFUNCTION = "wavefunction"
    BOOST = "boost"


@dataclass(frozen=True)
class SqueezeParameter:
    value: float
    convention: Convention = Convention.WAVEFUNCTION

    def to_wavefunction(self):
        if self.convention is Convention.WAVEFUNCTION:
            return self
        return SqueezeParameter(2.0 * self.value, Convention.WAVEFUNCTION)

    def to_boost(self):
        if self.convention is Convention.BOOST:
            return self
        return SqueezeParameter(0.5 * self.value, Convention.BOOST)

    def __float__(self):
        return float(self.value)


def as_wavefunction_eta(eta):
    """Plain float in the wave-function convention.

    Bare numbers are taken to be in that convention already.
    """
    if isinstance(eta, SqueezeParameter):
        return eta.to_wavefunction().value
    return eta


@dataclass(frozen=True)
class OscillatorCoupling:
    """Mass ``m``, spring constant ``K`` and coupling ``C``; needs ``|C| < K``."""

    m: float
    K: float
    C: float

    def __post_init__(self):
        if not self.m > 0:
            raise InvalidCouplingError(f"invalid coupling: mass must be positive, got {self.m}")
        if not self.K > 0:
            raise InvalidCouplingError(f"invalid coupling: spring must be positive, got {self.K}")
        if abs(self.C) >= self.K:
            raise SingularCouplingError()

    @property
    def reduced_spring(self):
        """``sqrt(K^2 - C^2)``, the geometric mean of the two mode springs."""
        return np.sqrt((self.K - self.C) * (self.K + self.C))

    @property
    def length_scale(self):
        """Multiply a physical length by this to get the dimensionless one."""
        return (self.m * self.reduced_spring) ** 0.25

    @property
    def mean_frequency(self):
        return np.sqrt(self.reduced_spring / self.m)


@dataclass(frozen=True)
class NormalModeForm:
    omega1: float
    omega2: float

    def springs(self, m):
        return m * self.omega1 ** 2, m * self.omega2 ** 2

    @property
    def zero_point_energy(self):
        return 0.5 * (self.omega1 + self.omega2)


def normal_modes(c):
    return NormalModeForm(omega1=np.sqrt((c.K - c.C) / c.m), omega2=np.sqrt((c.K + c.C) / c.m))


def eta_from_coupling(c):
    return SqueezeParameter(0.5 * np.log((c.K + c.C) / (c.K - c.C)), Convention.WAVEFUNCTION)


def eta_canonical(c):
    return SqueezeParameter(0.25 * np.log((c.K - c.C) / (c.K + c.C)), Convention.WAVEFUNCTION)


def normal_coordinates(x1, x2):
    return (x1 - x2) / SQRT2, (x1 + x2) / SQRT2


def from_normal_coordinates(y1, y2):
    return (y1 + y2) / SQRT2, (y2 - y1) / SQRT2


def hamiltonian_coupled(x1, x2, p1, p2, c):
    return (p1 ** 2 + p2 ** 2) / (2.0 * c.m) + 0.5 * (c.K * (x1 ** 2 + x2 ** 2) + 2.0 * c.C * x1 * x2)


def hamiltonian_normal(y1, y2, py1, py2, nf, m):
    """Decoupled Hamiltonian; momenta rotate with the same map as positions."""
    k1, k2 = nf.springs(m)
    return (py1 ** 2 + py2 ** 2) / (2.0 * m) + 0.5 * (k1 * y1 ** 2 + k2 * y2 ** 2)


def ground_state_psi(eta, x1, x2):
    """Squeezed two-variable Gaussian ``pi^(-1/2) exp(-(e^eta y1^2 + e^-eta y2^2)/2)``.

    ``eta`` is in the wave-function convention (a bare float or a
    :class:`SqueezeParameter`, converted if needed).
    """
    eta = as_wavefunction_eta(eta)
    y1, y2 = normal_coordinates(np.asarray(x1, dtype=float), np.asarray(x2, dtype=float))
    return np.exp(-0.5 * (np.exp(eta) * y1 ** 2 + np.exp(-eta) * y2 ** 2)) / np.sqrt(np.pi)


def ground_state_physical(c, x1, x2):
    """Ground state of the coupled Hamiltonian in physical length units."""
    s = c.length_scale
    return s * ground_state_psi(eta_canonical(c), s * np.asarray(x1), s * np.asarray(x2))


def ground_state_residual(c, x1, x2, step=1e-3):
    """Sup of ``|(H - E0) psi|`` at the given points, Laplacian by central differences."""
    x1 = np.asarray(x1, dtype=float)
    x2 = np.asarray(x2, dtype=float)
    psi = ground_state_physical(c, x1, x2)
    lap = (ground_state_physical(c, x1 + step, x2) + ground_state_physical(c, x1 - step, x2)
           + ground_state_physical(c, x1, x2 + step) + ground_state_physical(c, x1, x2 - step)
           - 4.0 * psi) / step ** 2
    potential = hamiltonian_coupled(x1, x2, 0.0, 0.0, c)
    h_psi = -lap / (2.0 * c.m) + potential * psi
    e0 = normal_modes(c).zero_point_energy
    return float(np.max(np.abs(h_psi - e0 * psi)))
