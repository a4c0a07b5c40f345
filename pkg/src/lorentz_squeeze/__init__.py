"""Coupled oscillators, partial traces and Lorentz-squeezed wave functions."""

__version__ = "0.1.0"

from .basis import (
    DEFAULT_FOURIER,
    DEFAULT_QUADRATURE,
    DEFAULT_QUADRATURE_2D,
    MAX_HERMITE_ORDER,
    FourierConvention,
    QuadratureSpec,
    fourier_2d,
    hermite_functions,
    hermite_phi,
    integrate_1d,
    integrate_2d,
)
from .covariant import (
    GridSpec,
    LightconePoint,
    MomentumPoint,
    SpacetimePoint,
    boost,
    boost_matrix,
    from_lightcone,
    longitudinal_variance,
    momentum_from_lightcone,
    oscillator_residual,
    phi_boosted,
    psi_boosted,
    psi_rest,
    relative_coordinates,
    relative_momenta,
    squeeze_axes,
    to_lightcone,
)
from .density import (
    DensityKernel,
    SchmidtSpectrum,
    ThermalPoint,
    certified_spectrum,
    entropy,
    entropy_closed_form,
    entropy_spectral,
    mean_excitation,
    pure_density,
    purity,
    purity_spectral,
    reduced_density,
    schmidt_spectrum,
    temperature,
    temperature_from_squeeze,
    truncation_order,
    wigner_reduced,
)
from .errors import (
    AccuracyError,
    ConventionError,
    DomainError,
    InvalidCouplingError,
    KinematicsError,
    NoTemperatureError,
    SingularCouplingError,
    SqueezeError,
    UnsupportedOrderError,
)
from .oscillator import (
    Convention,
    NormalModeForm,
    OscillatorCoupling,
    SqueezeParameter,
    eta_canonical,
    eta_from_coupling,
    from_normal_coordinates,
    ground_state_physical,
    ground_state_psi,
    ground_state_residual,
    hamiltonian_coupled,
    hamiltonian_normal,
    normal_coordinates,
    normal_modes,
)
from .parton import (
    PROTON_MASS_GEV,
    BeamSpec,
    PartonReport,
    boosted_hadron_entropy,
    boosted_hadron_purity,
    coherence_ratio,
    interaction_factor,
    parton_report,
    period_factor,
    rapidity_from_energy,
)
