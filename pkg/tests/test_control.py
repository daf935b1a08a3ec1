import math

import numpy as np
import pytest
import scipy.special

from zenolab.control import (
    bessel_j0, bessel_j0_zero, continuous_control_propagator, control_field, integrated_phase,
    phase_integral,
)
from zenolab.operators import evolve, spectral_norm


def test_bessel_series_matches_scipy():
    for x in np.linspace(0, 16, 33):
        assert bessel_j0(x) == pytest.approx(scipy.special.j0(x), abs=1e-15)


def test_zeros():
    z = [bessel_j0_zero(n) for n in range(1, 6)]
    assert z[0] == pytest.approx(2.404825557695773, abs=1e-10)
    assert np.allclose(z, scipy.special.jn_zeros(0, 5), atol=1e-12, rtol=0)
    assert all(abs(bessel_j0(x)) < 1e-12 for x in z)
    assert all(a < b for a, b in zip(z, z[1:]))
    for n in (0, 6):
        with pytest.raises(ValueError):
            bessel_j0_zero(n)


def test_field_and_phase():
    phi, Phi = control_field(2.0, 0.5), integrated_phase(2.0, 0.5)
    assert phi(0.125) == pytest.approx(2.0 * 4 * math.pi)
    assert Phi(0.25) == pytest.approx(4.0) and Phi(0.5) == pytest.approx(0.0, abs=1e-15)
    # Phi' = phi
    h = 1e-6
    assert (Phi(0.1 + h) - Phi(0.1 - h)) / (2 * h) == pytest.approx(phi(0.1), rel=1e-8)


@pytest.mark.parametrize("T", [0.1, 1.0, 3.0])
def test_phase_integral(T):
    assert phase_integral(0.0, T) == pytest.approx(T, abs=1e-15)
    assert abs(phase_integral(bessel_j0_zero(1), T)) < 1e-8 * T
    for a in (0.5, 1.0, 2.0):
        closed = T * np.exp(1j * a) * scipy.special.j0(a)
        assert abs(phase_integral(a, T) - closed) < 1e-8 * T
    with pytest.raises(ValueError):
        phase_integral(1.0, T, quad_points=10)


def test_no_drive_is_free_evolution(zz):
    U = continuous_control_propagator(zz.H, zz.P, 0.0, 0.25, 8)
    assert spectral_norm(U - evolve(zz.H, 2.0)) < 1e-12
    assert spectral_norm(U.conj().T @ U - np.eye(4)) < 1e-12


def test_period_power_equals_full_slicing(zz):
    from zenolab.operators import time_ordered_propagator
    a, T, N, m = 2.4, 0.5, 3, 32
    phi = control_field(a, T)
    full = time_ordered_propagator(lambda t: zz.H + phi(t) * zz.P, 0.0, N * T, N * m)
    assert spectral_norm(continuous_control_propagator(zz.H, zz.P, a, T, N, m) - full) < 1e-12


def test_plateau_off_zero(zz):
    errs = [spectral_norm(continuous_control_propagator(zz.H, zz.P, 1.0, 2.0 / N, N) - evolve(zz.H_Z, 2.0))
            for N in (32, 64)]
    assert errs[1] > 1e-3 and errs[1] / errs[0] == pytest.approx(1.0, abs=0.05)
