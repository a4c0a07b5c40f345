import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lorentz_squeeze import (
    DensityKernel,
    NoTemperatureError,
    UnsupportedOrderError,
    certified_spectrum,
    entropy,
    entropy_closed_form,
    entropy_spectral,
    ground_state_psi,
    hermite_functions,
    hermite_phi,
    integrate_1d,
    integrate_2d,
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

ETAS = [0.1, 0.5, 1.0, 2.0, 4.0]


def partial_trace_numeric(eta, x, xp):
    """Oracle: integrate the unobserved coordinate out of psi(x, .) psi(x', .)."""
    return integrate_1d(lambda y: ground_state_psi(eta, x, y) * ground_state_psi(eta, xp, y))


# --- pure state -------------------------------------------------------------

def test_pure_density_examples():
    assert pure_density(0.0, 0, 0, 0, 0) == pytest.approx(1 / math.pi, abs=1e-15)
    args = (0.7, 0.3, -0.2, 1.1, 0.4)
    assert pure_density(*args) == ground_state_psi(0.7, 0.3, -0.2) * ground_state_psi(0.7, 1.1, 0.4)


def test_pure_density_idempotent():
    # (rho o rho)(a; b) = rho(a; b) for a pure state
    for a, b in [((0.0, 0.0), (0.0, 0.0)), ((0.5, -0.3), (1.0, 0.2)), ((-1.2, 0.4), (0.3, 0.9))]:
        comp = integrate_2d(lambda y1, y2: pure_density(0.0, *a, y1, y2) * pure_density(0.0, y1, y2, *b))
        assert abs(comp - pure_density(0.0, *a, *b)) < 1e-8


# --- Schmidt spectrum -------------------------------------------------------

def test_schmidt_uncoupled():
    s = schmidt_spectrum(0.0, 4)
    np.testing.assert_array_equal(s.c, [1, 0, 0, 0, 0])
    assert s.tail == 0.0


@pytest.mark.parametrize("k", range(6))
def test_schmidt_overlaps(k):
    eta = 1.2
    s = schmidt_spectrum(eta, 5)
    ov = integrate_2d(lambda a, b: ground_state_psi(eta, a, b) * hermite_phi(k, a) * hermite_phi(k, b))
    assert abs(ov - s.c[k]) < 1e-8


def test_schmidt_off_diagonal_overlaps_vanish():
    eta = 1.2
    for j, k in [(0, 1), (0, 2), (1, 3), (2, 4)]:
        ov = integrate_2d(lambda a, b: ground_state_psi(eta, a, b) * hermite_phi(j, a) * hermite_phi(k, b))
        assert abs(ov) < 1e-10


def test_schmidt_tail_exact():
    s = schmidt_spectrum(2.0, 50)
    assert s.tail == pytest.approx(math.tanh(1.0) ** 102, rel=1e-13)
    assert abs(s.lam.sum() - (1 - math.tanh(1.0) ** 102)) < 1e-12


@settings(max_examples=50)
@given(st.floats(-6, 6), st.integers(0, 200))
def test_schmidt_geometric_and_complete(eta, k_max):
    s = schmidt_spectrum(eta, k_max)
    assert 0 < s.lam.sum() <= 1 + 1e-15
    assert abs(1 - s.lam.sum() - s.tail) < 1e-13
    nz = s.lam[1:] > 1e-280
    np.testing.assert_allclose(s.lam[1:][nz] / s.lam[:-1][nz], math.tanh(eta / 2) ** 2, rtol=1e-12)


def test_negative_eta_alternates_sign():
    s = schmidt_spectrum(-1.0, 4)
    assert np.all(np.sign(s.c[1::2]) == -1) and np.all(s.c[::2] > 0)
    np.testing.assert_allclose(s.lam, schmidt_spectrum(1.0, 4).lam, rtol=1e-15)


# --- truncation -------------------------------------------------------------

def test_truncation_examples():
    assert truncation_order(0.0, 1e-3) == 0
    k = truncation_order(2.0, 1e-12)
    t2 = math.tanh(1.0) ** 2
    scan = next(j for j in range(10_000) if t2 ** (j + 1) <= 1e-12)
    assert k == scan == 50


@given(st.floats(0.01, 8), st.floats(1e-15, 0.5), st.floats(1e-15, 0.5))
def test_truncation_monotone_in_tolerance(eta, a, b):
    lo, hi = sorted((a, b))
    assert truncation_order(eta, hi) <= truncation_order(eta, lo)
    k = truncation_order(eta, lo)
    t2 = math.tanh(eta / 2) ** 2
    assert t2 ** (k + 1) <= lo and (k == 0 or t2 ** k > lo)


# --- reduced density matrix -------------------------------------------------

def test_reduced_density_pure_limit():
    x = np.linspace(-3, 3, 13)
    X, XP = np.meshgrid(x, x)
    np.testing.assert_allclose(reduced_density(0.0, X, XP), hermite_phi(0, X) * hermite_phi(0, XP), rtol=1e-14)


@pytest.mark.parametrize("eta", [0.4, 1.0, 2.5])
def test_closed_form_kernel_matches_direct_partial_trace(eta):
    for x, xp in [(0.0, 0.0), (0.5, -0.7), (1.3, 1.1), (-2.0, 0.4)]:
        assert abs(reduced_density(eta, x, xp) - partial_trace_numeric(eta, x, xp)) < 1e-12


def test_trace_is_one():
    assert abs(integrate_1d(lambda x: reduced_density(1.5, x, x)) - 1) < 1e-8


def test_closed_vs_spectral_kernel():
    eta = 1.0
    k_max = truncation_order(eta, 1e-12)
    x = np.linspace(-4, 4, 81)
    X, XP = np.meshgrid(x, x)
    diff = reduced_density(eta, X, XP) - reduced_density(eta, X, XP, k_max=k_max)
    assert np.max(np.abs(diff)) < 1e-8


def test_kernel_object_and_symmetry():
    k = DensityKernel(0.9)
    ks = DensityKernel(0.9, k_max=30)
    assert k(0.3, -1.1) == k(-1.1, 0.3)
    assert ks(0.3, -1.1) == pytest.approx(ks(-1.1, 0.3), abs=1e-15)
    assert ks.tail == pytest.approx(math.tanh(0.45) ** 62)
    assert k.tail == 0.0
    with pytest.raises(UnsupportedOrderError):
        DensityKernel(4.0, k_max=400)(0.0, 0.0)


def test_hermite_basis_matrix_is_diagonal():
    eta, n = 1.0, 12
    rho = np.empty((n + 1, n + 1))
    for m in range(n + 1):
        for k in range(m, n + 1):
            f = lambda a, b, m=m, k=k: (hermite_functions(k, a)[m] * reduced_density(eta, a, b)
                                        * hermite_functions(k, b)[k])
            rho[m, k] = rho[k, m] = integrate_2d(f)
    lam = schmidt_spectrum(eta, n).lam
    assert np.max(np.abs(rho - np.diag(lam))) < 1e-8


# --- purity, entropy --------------------------------------------------------

@pytest.mark.parametrize("eta", ETAS)
def test_purity_series(eta):
    s = certified_spectrum(eta, 1e-15)
    assert abs(purity_spectral(s) - 1 / math.cosh(eta)) < 1e-10


def test_purity_examples():
    assert purity(0.0) == 1.0
    assert purity(2.0) == pytest.approx(0.265802, abs=1e-6)


def test_purity_by_kernel_quadrature():
    val = integrate_2d(lambda a, b: reduced_density(1.0, a, b) ** 2)
    assert abs(val - purity(1.0)) < 1e-6


@given(st.floats(0.0, 10.0), st.floats(0.0, 10.0))
def test_purity_decreasing(a, b):
    lo, hi = sorted((a, b))
    assert purity(hi) <= purity(lo) <= 1.0
    assert purity(-a) == purity(a)


@pytest.mark.parametrize("eta", ETAS)
def test_entropy_matches_spectral_sum(eta):
    s = certified_spectrum(eta, 1e-16)
    assert abs(entropy(eta) - entropy_spectral(s)) < 1e-10
    assert abs(entropy_closed_form(eta) - entropy(eta)) < 1e-12


def test_entropy_examples():
    assert entropy(0.0) == 0.0
    assert entropy_closed_form(0.0) == 0.0
    assert entropy(2.0) == pytest.approx(1.6199, abs=1e-4)
    assert abs(entropy(20.0) - (20.0 - 2 * math.log(2) + 1)) < 1e-8


@given(st.floats(-30, 30))
def test_entropy_even_and_nonnegative(eta):
    assert entropy(eta) == entropy(-eta) >= 0.0


# --- temperature, excitation ------------------------------------------------

def test_temperature_examples():
    eta = 2 * math.atanh(math.exp(-1))
    assert eta == pytest.approx(0.7719368329, abs=1e-9)
    assert temperature_from_squeeze(eta, 1.0).T == pytest.approx(1.0, rel=1e-14)
    assert temperature_from_squeeze(1e-6, 1.0).T < 0.1
    with pytest.raises(NoTemperatureError):
        temperature_from_squeeze(0.0, 1.0)
    with pytest.raises(NoTemperatureError):
        temperature_from_squeeze(-1.0, 1.0)
    assert temperature(0.0, 1.0) == 0.0


@given(st.floats(0.01, 20), st.floats(0.1, 10))
def test_occupation_is_bose_einstein(eta, omega):
    # the reduced-state Boltzmann ratio is tanh^2(eta/2) = exp(-2 omega / T)
    T = temperature_from_squeeze(eta, omega).T
    assert mean_excitation(eta) == pytest.approx(1 / math.expm1(2 * omega / T), rel=1e-12)


@given(st.floats(0.01, 10), st.floats(0.01, 10))
def test_temperature_monotone(a, b):
    lo, hi = sorted((a, b))
    assert temperature_from_squeeze(lo, 1.0).T <= temperature_from_squeeze(hi, 1.0).T


def test_mean_excitation():
    assert mean_excitation(0.0) == 0.0
    assert mean_excitation(2.0) == pytest.approx(1.38109, abs=1e-5)
    s = certified_spectrum(2.0, 1e-16)
    assert np.dot(np.arange(s.k_max + 1), s.lam) == pytest.approx(mean_excitation(2.0), abs=1e-12)


# --- Wigner function --------------------------------------------------------

def wigner_from_kernel(eta, x, p):
    """Oracle: W(x, p) = (1/pi) int rho(x+y, x-y) exp(-2ipy) dy."""
    return integrate_1d(lambda y: reduced_density(eta, x + y, x - y) * np.cos(2 * p * y)) / math.pi


def test_wigner_pure_limit():
    assert wigner_reduced(0.0, 0.3, -0.4) == pytest.approx(math.exp(-0.25) / math.pi, rel=1e-15)


@pytest.mark.parametrize("eta", [0.5, 1.0, 1.5])
def test_wigner_matches_kernel_transform(eta):
    for x, p in [(0.0, 0.0), (0.7, -0.3), (-1.5, 1.2), (2.0, 0.5)]:
        assert abs(wigner_reduced(eta, x, p) - wigner_from_kernel(eta, x, p)) < 1e-12


def test_wigner_normalization_purity_and_variance():
    assert abs(integrate_2d(lambda x, p: wigner_reduced(1.5, x, p)) - 1) < 1e-8
    assert abs(2 * math.pi * integrate_2d(lambda x, p: wigner_reduced(1.0, x, p) ** 2) - purity(1.0)) < 1e-6
    var = integrate_2d(lambda x, p: x * x * wigner_reduced(1.0, x, p))
    assert abs(var - math.cosh(1.0) / 2) < 1e-8
