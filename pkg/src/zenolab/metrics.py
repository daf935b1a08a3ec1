"""Error metrics, analytic bounds, success probabilities and slope fits."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .operators import (
    as_operator,
    commutator,
    evolve,
    is_hermitian,
    is_normalized,
    is_unitary,
    spectral_norm,
    trace_norm,
)
from .sequences import (
    first_order_spec,
    second_order_spec,
    trotter_spec,
    validate_density_matrix,
)
from .system import SystemModel

FIT_FLOOR = 1e-14
AUTO_SLOPE_REL_TOL = 0.10
EIGEN_CLUSTER_TOL = 1e-8

WindowPolicy = Union[str, tuple[int, int]]


# --- errors -----------------------------------------------------------------

def zeno_error_measurement(sys: SystemModel, U_seq, t: float) -> float:
    """``|| U_seq - e^{-i PHP t} P ||``."""
    U_seq = as_operator(U_seq)
    if U_seq.shape != sys.H.shape:
        raise ValueError("sequence and system dimensions differ")
    return spectral_norm(U_seq - evolve(sys.PHP, t) @ sys.P)


def zeno_error_unitary(sys: SystemModel, U_seq, t: float,
                       include_kick_phase: bool = False, n_kicks: int = 0) -> float:
    """Distance to ``e^{-i H_Z t}``, or to ``R^n e^{-i H_Z t}`` with the kick phase."""
    U_seq = as_operator(U_seq)
    if U_seq.shape != sys.H.shape:
        raise ValueError("sequence and system dimensions differ")
    target = evolve(sys.H_Z, t)
    if include_kick_phase and n_kicks % 2:
        target = sys.R @ target
    return spectral_norm(U_seq - target)


# --- bounds -----------------------------------------------------------------

def bound_first_order(sys: SystemModel, t: float, N: int) -> float:
    return t**2 * sys.norm_H**2 / N


def bound_second_order(sys: SystemModel, t: float, N: int) -> float:
    return t**3 * sys.norm_H**3 / (3 * N**2)


def bound_kick_commutator(sys: SystemModel, t: float, N: int) -> float:
    """``t^2 ||[H, RHR]|| / (8N)`` for ``N`` reflection *pairs*.

    The bound covers ``(R e^{-iH t/(2N)})^(2N)``, i.e. ``kick_zeno(sys, 2N, t)``.
    """
    return t**2 * spectral_norm(commutator(sys.H, sys.RHR)) / (8 * N)


def eigenvalue_clusters(U, tol: float = EIGEN_CLUSTER_TOL) -> list[complex]:
    """Representatives of the distinct eigenvalues of a unitary."""
    reps: list[complex] = []
    for lam in np.linalg.eigvals(as_operator(U)):
        lam = lam / abs(lam)
        if all(abs(lam - r) > tol for r in reps):
            reps.append(complex(lam))
    return reps


def kick_gap(U_Z) -> tuple[int, float]:
    """``(m, eta)``: eigenvalue count and minimum chordal gap on the unit circle."""
    reps = eigenvalue_clusters(U_Z)
    m = len(reps)
    if m < 2:
        raise ValueError("kick has a single eigenvalue; the Zeno bound is undefined")
    eta = min(abs(a - b) for i, a in enumerate(reps) for b in reps[i + 1:])
    return m, eta


def bound_kick_general(U_Z, H, t: float, N: int) -> float:
    """``(2/N)(sqrt(m)/eta + 1) t ||H|| (1 + 2 ||H|| t)``."""
    U_Z = as_operator(U_Z)
    H = as_operator(H)
    if not is_unitary(U_Z, 1e-10):
        raise ValueError("U_Z is not unitary")
    if not is_hermitian(H):
        raise ValueError("H is not Hermitian")
    m, eta = kick_gap(U_Z)
    nH = spectral_norm(H)
    return (2.0 / N) * (math.sqrt(m) / eta + 1.0) * t * nH * (1.0 + 2.0 * nH * t)


def eigenprojectors(U_Z) -> list[np.ndarray]:
    """Spectral projectors of a normal matrix via Lagrange interpolation."""
    U_Z = as_operator(U_Z)
    reps = eigenvalue_clusters(U_Z)
    eye = np.eye(U_Z.shape[0], dtype=complex)
    projs = []
    for i, li in enumerate(reps):
        Pm = eye.copy()
        for j, lj in enumerate(reps):
            if j != i:
                Pm = Pm @ (U_Z - lj * eye) / (li - lj)
        projs.append(Pm)
    return projs


def kick_error_general(U_Z, H, N: int, t: float) -> float:
    """``|| (U_Z e^{-iH t/N})^N - U_Z^N e^{-i H_Z t} ||`` with ``H_Z = sum_l P_l H P_l``."""
    U_Z = as_operator(U_Z)
    H = as_operator(H)
    H_Z = sum(Pl @ H @ Pl for Pl in eigenprojectors(U_Z))
    seq = np.linalg.matrix_power(U_Z @ evolve(H, t / N), N)
    return spectral_norm(seq - np.linalg.matrix_power(U_Z, N) @ evolve(H_Z, t))


# --- success probability ----------------------------------------------------

def _family_spec(family: str, k: int, N: int, t: float):
    if family == "first_order":
        return first_order_spec(N, t)
    if family == "second_order":
        return second_order_spec(N, t)
    if family == "trotter_measurement":
        return trotter_spec(k, N, t, measured=True)
    raise ValueError(f"unknown measurement family {family!r}")


def _check_initial_state(sys: SystemModel, psi0) -> np.ndarray:
    psi0 = np.asarray(psi0, dtype=complex)
    if psi0.shape != (sys.dim,):
        raise ValueError("initial state has the wrong dimension")
    if not is_normalized(psi0):
        raise ValueError("initial state is not normalized")
    if np.linalg.norm(sys.P @ psi0 - psi0) > 1e-10:
        raise ValueError("initial state is not in the range of P")
    return psi0


def success_probability(sys: SystemModel, family: str, k: int, N: int, t: float, psi0) -> float:
    """Squared norm of the unnormalized state after the full measured sequence."""
    psi0 = _check_initial_state(sys, psi0)
    M = _family_spec(family, k, N, t).compile(sys)
    phi = M @ psi0
    return float(min(1.0, max(0.0, np.vdot(phi, phi).real)))


def step_success_probabilities(sys: SystemModel, family: str, k: int, N: int, t: float,
                               psi0) -> list[float]:
    """Conditional success probability of each of the ``N`` steps."""
    psi = _check_initial_state(sys, psi0)
    step = _family_spec(family, k, N, t).compile_once(sys)
    probs = []
    for _ in range(N):
        nxt = step @ psi
        p = np.vdot(nxt, nxt).real
        probs.append(float(p))
        psi = nxt / math.sqrt(p)
    return probs


def success_bound_first_order(sys: SystemModel, t: float, N: int) -> float:
    return 1.0 - 2.0 * sys.norm_H**2 * t**2 / N


# --- states -----------------------------------------------------------------

def trace_distance(rho, sigma) -> float:
    rho = validate_density_matrix(rho)
    sigma = validate_density_matrix(sigma, rho.shape[0])
    return 0.5 * trace_norm(rho - sigma)


# --- fits -------------------------------------------------------------------

@dataclass(frozen=True)
class ScalingFit:
    points: tuple[tuple[float, float], ...]
    slope: float
    intercept: float
    rms_residual: float
    window: tuple[int, int]  # inclusive indices into ``points``

    @property
    def window_points(self):
        return self.points[self.window[0]: self.window[1] + 1]

    def summary(self) -> str:
        return (f"slope={self.slope:.4f} window=[{self.window[0]},{self.window[1]}] "
                f"rms={self.rms_residual:.3g}")


def _lstsq(lx: np.ndarray, ly: np.ndarray) -> tuple[float, float, float]:
    A = np.vstack([lx, np.ones_like(lx)]).T
    (slope, intercept), *_ = np.linalg.lstsq(A, ly, rcond=None)
    resid = ly - (slope * lx + intercept)
    return float(slope), float(intercept), float(np.sqrt(np.mean(resid**2)))


def auto_window(lx: np.ndarray, ly: np.ndarray, rel_tol: float = AUTO_SLOPE_REL_TOL) -> tuple[int, int]:
    """Largest run of points whose two-point local slopes all lie within
    ``rel_tol`` of the run's median local slope; ties go to larger ``x``."""
    local = np.diff(ly) / np.diff(lx)
    n = len(lx)
    best = None
    for size in range(n, 2, -1):
        for a in range(n - size, -1, -1):
            s = local[a: a + size - 1]
            med = np.median(s)
            if np.all(np.abs(s - med) <= rel_tol * abs(med)):
                best = (a, a + size - 1)
                break
        if best:
            break
    if best is None:
        raise ValueError("no window of >= 3 points has consistent local slopes")
    return best


def _usable(points, floor):
    usable = sorted((float(x), float(y)) for x, y in points if x > 0 and y > floor)
    if len(usable) < 3:
        raise ValueError(f"need at least 3 usable points, got {len(usable)}")
    return usable, np.log([p[0] for p in usable]), np.log([p[1] for p in usable])


def fit_loglog(points: Sequence[tuple[float, float]], window_policy: WindowPolicy = "auto",
               floor: float = FIT_FLOOR, rel_tol: float = AUTO_SLOPE_REL_TOL) -> ScalingFit:
    """Least-squares line through ``(log x, log y)``.

    Points with ``y`` at or below ``floor`` are dropped as round-off.
    ``window_policy`` is ``"full"``, ``"auto"`` or an explicit inclusive
    ``(start, stop)`` index pair into the remaining points (sorted by ``x``).
    """
    usable, lx, ly = _usable(points, floor)
    if isinstance(window_policy, tuple):
        a, b = window_policy
        if not (0 <= a and b < len(usable) and b - a >= 2):
            raise ValueError(f"explicit window {window_policy} invalid for {len(usable)} points")
        window = (a, b)
    elif window_policy == "full":
        window = (0, len(usable) - 1)
    elif window_policy == "auto":
        window = auto_window(lx, ly, rel_tol)
    else:
        raise ValueError(f"unknown window policy {window_policy!r}")
    sl = slice(window[0], window[1] + 1)
    slope, intercept, rms = _lstsq(lx[sl], ly[sl])
    return ScalingFit(tuple(usable), slope, intercept, rms, window)


def segment_regimes(points: Sequence[tuple[float, float]], floor: float = FIT_FLOOR,
                    rel_tol: float = AUTO_SLOPE_REL_TOL) -> list[ScalingFit]:
    """Split a curve into power-law regimes, ordered by increasing ``x``.

    The largest consistent window is taken first, then the points on either
    side of it are segmented recursively; stretches with no consistent
    window of at least three points (crossovers) are left out.
    """
    usable, lx, ly = _usable(points, floor)
    windows: list[tuple[int, int]] = []

    def split(lo: int, hi: int):
        if hi - lo < 2:
            return
        try:
            a, b = auto_window(lx[lo: hi + 1], ly[lo: hi + 1], rel_tol)
        except ValueError:
            return
        windows.append((lo + a, lo + b))
        split(lo, lo + a - 1)
        split(lo + b + 1, hi)

    split(0, len(usable) - 1)
    fits = []
    for a, b in sorted(windows):
        slope, intercept, rms = _lstsq(lx[a: b + 1], ly[a: b + 1])
        fits.append(ScalingFit(tuple(usable), slope, intercept, rms, (a, b)))
    return fits
