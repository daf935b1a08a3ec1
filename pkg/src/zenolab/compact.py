"""Short Zeno steps with palindromic durations and the coefficient solver."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .sequences import Evolve, Measure, Reflect, SequenceSpec
from .system import SystemModel

RESIDUAL_TOL = 1e-12
ORDER3_STARTS = (0.1, 0.7, 1.3)
ORDER4_GRID = np.linspace(-1.0, 1.0, 5)


class SolverError(RuntimeError):
    pass


@dataclass(frozen=True)
class CompactCoefficients:
    order: int
    values: tuple[float, ...]
    residuals: tuple[float, ...]

    def __post_init__(self):
        expected = {3: 2, 4: 3}.get(self.order)
        if expected is None:
            raise ValueError(f"order must be 3 or 4, got {self.order}")
        if len(self.values) != expected:
            raise ValueError(f"order {self.order} needs {expected} coefficients, got {len(self.values)}")

    @property
    def durations(self) -> tuple[float, ...]:
        """Palindromic evolution durations in units of ``dt``."""
        return self.values + self.values[::-1]


def order3_equations(a: float, b: float) -> np.ndarray:
    return np.array([a + b - 0.5, 8 * a * b * b - 1.0 / 6.0])


def order4_equations(v) -> np.ndarray:
    a, b, g = v
    return np.array([
        a + b + g - 0.5,
        8 * b * (a * b + 2 * a * g + g * g) - 1.0 / 6.0,
        8 * b * (a * a * b + 2 * a * a * g + 2 * a * g * g + b * g * g) - 1.0 / 24.0,
    ])


def order4_jacobian(v) -> np.ndarray:
    a, b, g = v
    return np.array([
        [1.0, 1.0, 1.0],
        [8 * b * (b + 2 * g), 8 * (2 * a * b + 2 * a * g + g * g), 8 * b * (2 * a + 2 * g)],
        [
            8 * b * (2 * a * b + 4 * a * g + 2 * g * g),
            8 * (2 * a * a * b + 2 * a * a * g + 2 * a * g * g + 2 * b * g * g),
            8 * b * (2 * a * a + 4 * a * g + 2 * b * g),
        ],
    ])


def _cubic(a: float) -> tuple[float, float]:
    # 8 a (1/2 - a)^2 - 1/6 and its derivative
    f = 8 * a * (0.5 - a) ** 2 - 1.0 / 6.0
    df = 8 * (0.5 - a) ** 2 - 16 * a * (0.5 - a)
    return f, df


def _newton_scalar(x: float, maxiter: int = 200) -> float | None:
    f, df = _cubic(x)
    for _ in range(maxiter):
        if df == 0.0:
            return None
        step = f / df
        lam = 1.0
        while lam > 1e-6:
            fn, dfn = _cubic(x - lam * step)
            if abs(fn) < abs(f):
                break
            lam *= 0.5
        else:
            return x if abs(f) < 1e-15 else None
        x, f, df = x - lam * step, fn, dfn
        if abs(lam * step) < 1e-16 * max(1.0, abs(x)):
            break
    return x


def _newton_system(v, maxiter: int = 200):
    v = np.asarray(v, dtype=float)
    F = order4_equations(v)
    for _ in range(maxiter):
        try:
            step = np.linalg.solve(order4_jacobian(v), F)
        except np.linalg.LinAlgError:
            return None
        lam = 1.0
        while lam > 1e-8:
            trial = v - lam * step
            Ft = order4_equations(trial)
            if np.max(np.abs(Ft)) < np.max(np.abs(F)) or np.max(np.abs(Ft)) < 1e-15:
                break
            lam *= 0.5
        else:
            break
        v, F = trial, Ft
        if np.max(np.abs(lam * step)) < 1e-16 * max(1.0, np.max(np.abs(v))):
            break
    return v


def solve_compact_coefficients(order: int) -> CompactCoefficients:
    """Coefficients of the order-3 or order-4 compact step.

    Order 3 eliminates ``b = 1/2 - a`` and keeps the real root with
    ``a`` in ``(0.5, 1)``.  Order 4 runs damped Newton from a grid of starts
    in ``[-1, 1]^3`` and keeps the valid root of smallest max-magnitude.
    """
    if order == 3:
        roots = []
        for x0 in ORDER3_STARTS:
            a = _newton_scalar(x0)
            if a is None:
                continue
            res = np.abs(order3_equations(a, 0.5 - a))
            if np.all(res < RESIDUAL_TOL) and 0.5 < a < 1.0:
                roots.append(a)
        if not roots:
            raise SolverError("no admissible root of the order-3 system")
        a = min(roots)
        b = 0.5 - a
        return CompactCoefficients(3, (a, b), tuple(np.abs(order3_equations(a, b)).tolist()))
    if order == 4:
        found: list[np.ndarray] = []
        for start in itertools.product(ORDER4_GRID, repeat=3):
            v = _newton_system(start)
            if v is None or not np.all(np.isfinite(v)):
                continue
            if np.max(np.abs(order4_equations(v))) < RESIDUAL_TOL:
                found.append(v)
        if not found:
            raise SolverError("no root of the order-4 system from the start grid")
        # smallest max-magnitude; ties broken lexicographically for determinism
        best = min(found, key=lambda v: (round(float(np.max(np.abs(v))), 10), tuple(np.round(v, 10))))
        return CompactCoefficients(4, tuple(float(x) for x in best),
                                   tuple(np.abs(order4_equations(best)).tolist()))
    raise ValueError(f"order must be 3 or 4, got {order}")


def compact_spec(coeffs: CompactCoefficients, dt: float, with_measurements: bool) -> SequenceSpec:
    """``P e^{-i x1 H dt} R e^{-i x2 H dt} R ... e^{-i x1 H dt} P``.

    Without measurements the outer projectors are dropped; the odd number
    of reflections means the step then approximates ``R e^{-i H_Z dt}``.
    """
    if dt <= 0:
        raise ValueError("dt must be positive")
    if np.max(coeffs.residuals) >= RESIDUAL_TOL:
        raise ValueError("compact coefficients do not satisfy their equations")
    prims: list = []
    for i, x in enumerate(coeffs.durations):
        if i > 0:
            prims.append(Reflect())
        prims.append(Evolve("H", x * dt))
    if with_measurements:
        return SequenceSpec((Measure(), *prims, Measure()), 1, "compact")
    return SequenceSpec(tuple(prims), 1, "compact_kick")


def compact_sequence(sys: SystemModel, coeffs: CompactCoefficients, dt: float,
                     with_measurements: bool) -> np.ndarray:
    return compact_spec(coeffs, dt, with_measurements).compile(sys)
