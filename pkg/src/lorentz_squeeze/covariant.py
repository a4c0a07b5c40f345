"""Covariant oscillator in the longitudinal (z, t) plane.

The squeeze parameter here is the rapidity of the boost along z.  Only the
longitudinal separation ``z`` and the time separation ``t`` are modeled; the
time direction always stays in its Gaussian ground state.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

SQRT2 = math.sqrt(2.0)
RESIDUAL_WINDOW = 4.0


@dataclass(frozen=True)
class GridSpec:
    """Closed uniform lattice over ``[z_min, z_max] x [t_min, t_max]``."""

    z_min: float = -4.0
    z_max: float = 4.0
    t_min: float = -4.0
    t_max: float = 4.0
    n_z: int = 81
    n_t: int = 81

    def __post_init__(self):
        if not (self.z_min < self.z_max and self.t_min < self.t_max):
            raise DomainError("grid bounds must satisfy min < max on each axis")
        if self.n_z < 2 or self.n_t < 2:
            raise DomainError("grid needs at least 2 points per axis")

    def axes(self):
        return (np.linspace(self.z_min, self.z_max, self.n_z),
                np.linspace(self.t_min, self.t_max, self.n_t))

    def mesh(self):
        """``(Z, T)`` arrays of shape ``(n_t, n_z)``: t varies along rows."""
        z, t = self.axes()
        return np.meshgrid(z, t, indexing="xy")


@dataclass(frozen=True)
class SpacetimePoint:
    z: float
    t: float


@dataclass(frozen=True)
class LightconePoint:
    u: float
    v: float


@dataclass(frozen=True)
class MomentumPoint:
    q_z: float
    q_0: float

    @property
    def q_u(self):
        return (self.q_0 - self.q_z) / SQRT2

    @property
    def q_v(self):
        return (self.q_0 + self.q_z) / SQRT2


def momentum_from_lightcone(q_u, q_v):
    return MomentumPoint(q_z=(q_v - q_u) / SQRT2, q_0=(q_v + q_u) / SQRT2)


def relative_coordinates(x_a, x_b):
    """Center ``X = (x_a + x_b)/2`` and separation ``x = (x_a - x_b)/(2 sqrt 2)``."""
    x_a = np.asarray(x_a, dtype=float)
    x_b = np.asarray(x_b, dtype=float)
    return (x_a + x_b) / 2.0, (x_a - x_b) / (2.0 * SQRT2)


def relative_momenta(p_a, p_b):
    """Total ``P = p_a + p_b`` and relative ``q = sqrt(2) (p_a - p_b)``."""
    p_a = np.asarray(p_a, dtype=float)
    p_b = np.asarray(p_b, dtype=float)
    return p_a + p_b, SQRT2 * (p_a - p_b)


def boost_matrix(eta):
    ch, sh = math.cosh(eta), math.sinh(eta)
    return np.array([[ch, sh], [sh, ch]])


def boost(p, eta):
    ch, sh = math.cosh(eta), math.sinh(eta)
    return SpacetimePoint(z=ch * p.z + sh * p.t, t=sh * p.z + ch * p.t)


def to_lightcone(p):
    return LightconePoint(u=(p.z + p.t) / SQRT2, v=(p.z - p.t) / SQRT2)


def from_lightcone(q):
    return SpacetimePoint(z=(q.u + q.v) / SQRT2, t=(q.u - q.v) / SQRT2)


def _squeezed_gaussian(eta, a, b):
    return np.exp(-0.5 * (np.exp(-2.0 * eta) * a * a + np.exp(2.0 * eta) * b * b)) / math.sqrt(math.pi)


def psi_rest(z, t):
    z = np.asarray(z, dtype=float)
    t = np.asarray(t, dtype=float)
    return np.exp(-0.5 * (z * z + t * t)) / math.sqrt(math.pi)


def psi_boosted(eta, z, t):
    """Lorentz-squeezed ground state: wide along ``u``, narrow along ``v``."""
    z = np.asarray(z, dtype=float)
    t = np.asarray(t, dtype=float)
    return _squeezed_gaussian(eta, (z + t) / SQRT2, (z - t) / SQRT2)


def phi_boosted(eta, q_z, q_0):
    """Momentum-energy wave function, the Fourier image of :func:`psi_boosted`."""
    q_z = np.asarray(q_z, dtype=float)
    q_0 = np.asarray(q_0, dtype=float)
    return _squeezed_gaussian(eta, (q_0 - q_z) / SQRT2, (q_0 + q_z) / SQRT2)


def squeeze_axes(eta):
    """Standard deviations of ``|psi|^2`` along the ``u`` and ``v`` axes."""
    return math.exp(eta) / SQRT2, math.exp(-eta) / SQRT2


def longitudinal_variance(eta):
    """``Var(z)`` under ``|psi|^2``; equal to ``Var(q_z)`` under ``|phi|^2``."""
    return math.cosh(2.0 * eta) / 2.0


def oscillator_residual(eta, grid, step=1e-3, psi=None):
    """Sup over ``grid`` of ``|L psi|`` with ``L = [(z^2 - d_z^2) - (t^2 - d_t^2)] / 2``.

    Second derivatives by central differences.  ``psi(z, t)`` defaults to the
    boosted ground state at rapidity ``eta``, which ``L`` annihilates.
    """
    w = RESIDUAL_WINDOW
    if min(grid.z_min, grid.t_min) < -w or max(grid.z_max, grid.t_max) > w:
        raise DomainError(f"residual grid must lie within |z|, |t| <= {w}")
    if psi is None:
        def psi(z, t):
            return psi_boosted(eta, z, t)
    Z, T = grid.mesh()
    f = psi(Z, T)
    d_zz = (psi(Z + step, T) - 2.0 * f + psi(Z - step, T)) / step ** 2
    d_tt = (psi(Z, T + step) - 2.0 * f + psi(Z, T - step)) / step ** 2
    lf = 0.5 * ((Z * Z * f - d_zz) - (T * T * f - d_tt))
    return float(np.max(np.abs(lf)))
