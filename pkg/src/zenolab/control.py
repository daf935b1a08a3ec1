"""Zeno dynamics from a smooth periodic control field ``phi(t) P``."""

from __future__ import annotations

import math
from decimal import Decimal, localcontext

import numpy as np

from .operators import as_operator, time_ordered_propagator

DEFAULT_SLICES_PER_PERIOD = 1024
DEFAULT_QUAD_POINTS = 1024
MAX_BESSEL_ZERO = 5


def bessel_j0(x: float) -> float:
    """J0 from its power series, summed in 50-digit decimal arithmetic.

    The alternating series loses ~``x/ln 10`` digits to cancellation in
    double precision; the extended working precision keeps the result
    correctly rounded for ``|x| < 20``.
    """
    with localcontext() as ctx:
        ctx.prec = 50
        q = (Decimal(x) / 2) ** 2
        term = Decimal(1)
        total = term
        m = 0
        eps = Decimal(10) ** -45
        while True:
            m += 1
            term = -term * q / (m * m)
            total += term
            if abs(term) < eps and m > q:
                break
        return float(total)


def bessel_j0_zero(n: int) -> float:
    """The ``n``-th positive zero of J0 by bisection (``1 <= n <= 5``)."""
    if not 1 <= n <= MAX_BESSEL_ZERO:
        raise ValueError(f"only zeros 1..{MAX_BESSEL_ZERO} are supported, got {n}")
    guess = (n - 0.25) * math.pi  # McMahon leading term
    lo, hi = guess - 0.4, guess + 0.4
    flo = bessel_j0(lo)
    if flo * bessel_j0(hi) > 0:
        raise RuntimeError(f"bracket for zero {n} does not change sign")
    while hi - lo > 4e-16 * hi:
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        fm = bessel_j0(mid)
        if fm == 0.0:
            return mid
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def control_field(alpha_f: float, T: float):
    """``phi(t) = alpha (2 pi / T) sin(2 pi t / T)``."""
    w = 2 * math.pi / T
    return lambda t: alpha_f * w * math.sin(w * t)


def integrated_phase(alpha_f: float, T: float):
    """``Phi(t) = alpha (1 - cos(2 pi t / T))``."""
    w = 2 * math.pi / T
    return lambda t: alpha_f * (1.0 - np.cos(w * t))


def phase_integral(alpha_f: float, T: float, quad_points: int = DEFAULT_QUAD_POINTS) -> complex:
    """``int_0^T exp(i Phi(t)) dt`` by composite Simpson quadrature."""
    if quad_points < 64:
        raise ValueError("quad_points must be >= 64")
    n = quad_points + (quad_points % 2)  # Simpson needs an even interval count
    t = np.linspace(0.0, T, n + 1)
    f = np.exp(1j * integrated_phase(alpha_f, T)(t))
    w = np.ones(n + 1)
    w[1:-1:2] = 4.0
    w[2:-1:2] = 2.0
    return complex(np.dot(w, f) * (T / n) / 3.0)


def continuous_control_propagator(
    H, P, alpha_f: float, T: float, N: int,
    slices_per_period: int = DEFAULT_SLICES_PER_PERIOD,
) -> np.ndarray:
    """Propagator of ``H + phi(t) P`` over ``[0, N T]``.

    The generator is ``T``-periodic and the midpoint slices of every period
    coincide, so the ``N * slices_per_period`` slice product equals the
    ``N``-th power of the one-period product.
    """
    H = as_operator(H)
    P = as_operator(P)
    if T <= 0 or N < 1 or slices_per_period < 1:
        raise ValueError("T, N and slices_per_period must be positive")
    phi = control_field(alpha_f, T)
    U_period = time_ordered_propagator(lambda t: H + phi(t) * P, 0.0, T, slices_per_period)
    return np.linalg.matrix_power(U_period, N)
