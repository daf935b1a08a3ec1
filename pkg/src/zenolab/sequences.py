"""Zeno sequence builders.

Every discrete family is described by a :class:`SequenceSpec`, an ordered
list of primitives in time order (the first primitive acts first), repeated
``N`` times.  ``MEASURE`` applies the unnormalized projector ``P`` (the
outcome that keeps the state in the Zeno subspace).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from .operators import HERMITIAN_TOL, dagger, evolve, is_hermitian
from .system import SystemModel
from .trotter import FIRST, StagePlan, suzuki_stage_plan

MEASUREMENT_FAMILIES = frozenset({"first_order", "second_order", "trotter_measurement", "compact"})


@dataclass(frozen=True)
class Evolve:
    tag: str  # "H" or "RHR"
    duration: float

    def __post_init__(self):
        if self.tag not in ("H", "RHR"):
            raise ValueError(f"unknown generator tag {self.tag!r}")
        if not np.isfinite(self.duration):
            raise ValueError("duration must be finite")


@dataclass(frozen=True)
class Reflect:
    pass


@dataclass(frozen=True)
class Measure:
    pass


Primitive = Union[Evolve, Reflect, Measure]


@dataclass(frozen=True)
class SequenceSpec:
    primitives: tuple[Primitive, ...]
    repetitions: int = 1
    family: str = ""

    def __post_init__(self):
        if self.repetitions < 1:
            raise ValueError("repetitions must be >= 1")
        if any(isinstance(p, Measure) for p in self.primitives) and self.family not in MEASUREMENT_FAMILIES:
            raise ValueError(f"MEASURE is not allowed in family {self.family!r}")

    def count(self, kind: type) -> int:
        return sum(isinstance(p, kind) for p in self.primitives)

    def compile_once(self, sys: SystemModel) -> np.ndarray:
        gens = {"H": sys.H, "RHR": sys.RHR}
        U = np.eye(sys.dim, dtype=complex)
        for prim in self.primitives:
            if isinstance(prim, Evolve):
                U = evolve(gens[prim.tag], prim.duration) @ U
            elif isinstance(prim, Reflect):
                U = sys.R @ U
            else:
                U = sys.P @ U
        return U

    def compile(self, sys: SystemModel) -> np.ndarray:
        return np.linalg.matrix_power(self.compile_once(sys), self.repetitions)

    def to_rows(self) -> str:
        lines = []
        for prim in self.primitives:
            if isinstance(prim, Evolve):
                lines.append(f"EVOLVE,{prim.tag},{prim.duration!r}")
            elif isinstance(prim, Reflect):
                lines.append("REFLECT")
            else:
                lines.append("MEASURE")
        return "\n".join(lines) + "\n"


def parse_rows(text: str, repetitions: int = 1, family: str = "") -> SequenceSpec:
    prims: list[Primitive] = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        fields = line.split(",")
        if fields[0] == "EVOLVE" and len(fields) == 3:
            prims.append(Evolve(fields[1], float(fields[2])))
        elif fields == ["REFLECT"]:
            prims.append(Reflect())
        elif fields == ["MEASURE"]:
            prims.append(Measure())
        else:
            raise ValueError(f"malformed sequence row {line!r}")
    return SequenceSpec(tuple(prims), repetitions, family)


def _check_positive(**kwargs):
    for name, value in kwargs.items():
        if value <= 0:
            raise ValueError(f"{name} must be positive, got {value}")


# --- specs ------------------------------------------------------------------

def first_order_spec(N: int, t: float) -> SequenceSpec:
    _check_positive(N=N, t=t)
    return SequenceSpec((Measure(), Evolve("H", t / N), Measure()), N, "first_order")


def second_order_spec(N: int, t: float) -> SequenceSpec:
    _check_positive(N=N, t=t)
    dt = t / N
    prims = (Measure(), Evolve("H", dt / 2), Reflect(), Evolve("H", dt / 2), Measure())
    return SequenceSpec(prims, N, "second_order")


def plan_primitives(plan: StagePlan, dt: float) -> tuple[Primitive, ...]:
    return tuple(Evolve("H" if tag == FIRST else "RHR", c * dt / 2) for tag, c in plan.stages)


def trotter_spec(k: int, N: int, t: float, measured: bool) -> SequenceSpec:
    _check_positive(N=N, t=t)
    body = plan_primitives(suzuki_stage_plan(k), t / N)
    if measured:
        return SequenceSpec((Measure(),) + body + (Measure(),), N, "trotter_measurement")
    return SequenceSpec(body, N, "trotter_kick")


def kick_spec(N: int, t: float) -> SequenceSpec:
    _check_positive(N=N, t=t)
    return SequenceSpec((Evolve("H", t / N), Reflect()), N, "kick")


def udd_times(k: int, dt: float) -> np.ndarray:
    """Switching times ``t_j = dt sin^2(j pi / (2(k+1)))`` for ``j = 0..k+1``."""
    j = np.arange(k + 2)
    return dt * np.sin(j * np.pi / (2 * (k + 1))) ** 2


def udd_spec(k: int, dt: float) -> SequenceSpec:
    if k < 1:
        raise ValueError("k must be >= 1")
    _check_positive(dt=dt)
    times = udd_times(k, dt)
    times[-1] = dt
    prims: list[Primitive] = []
    for j in range(k + 1):
        if j > 0:
            prims.append(Reflect())
        prims.append(Evolve("H", times[j + 1] - times[j]))
    return SequenceSpec(tuple(prims), 1, "udd")


# --- compiled builders ------------------------------------------------------

def measurement_zeno(sys: SystemModel, N: int, t: float) -> np.ndarray:
    """``(P e^{-iHt/N} P)^N``."""
    return first_order_spec(N, t).compile(sys)


def second_order_measurement(sys: SystemModel, N: int, t: float) -> np.ndarray:
    """``(P e^{-iH dt/2} R e^{-iH dt/2} P)^N`` with ``dt = t/N``."""
    return second_order_spec(N, t).compile(sys)


def higher_order_measurement(sys: SystemModel, k: int, N: int, t: float) -> np.ndarray:
    """``(P S_2k P)^N`` where ``S_2k`` is the order-2k formula with step ``t/N``."""
    return trotter_spec(k, N, t, measured=True).compile(sys)


def kick_zeno(sys: SystemModel, N: int, t: float) -> np.ndarray:
    """``(R e^{-iHt/N})^N``; compare against ``R^N e^{-i H_Z t}``."""
    return kick_spec(N, t).compile(sys)


def higher_order_kick(sys: SystemModel, k: int, N: int, t: float) -> np.ndarray:
    """``S_2k^N`` with step ``t/N``."""
    return trotter_spec(k, N, t, measured=False).compile(sys)


def udd_sequence(sys: SystemModel, k: int, dt: float) -> np.ndarray:
    """One UDD-timed Zeno step with ``k`` reflections.

    For odd ``k`` one reflection is left over, so the step approximates
    ``R e^{-i H_Z dt}``; use ``zeno_error_unitary(..., n_kicks=k)``.
    """
    return udd_spec(k, dt).compile(sys)


def randomized_channel_apply(sys: SystemModel, k: int, N: int, t: float, rho) -> np.ndarray:
    """Exact average of ``S rho S^H`` and ``(R S R) rho (R S R)^H`` with ``S = S_2k^N``."""
    rho = validate_density_matrix(rho, sys.dim)
    S = higher_order_kick(sys, k, N, t)
    RSR = sys.R @ S @ sys.R
    out = 0.5 * (S @ rho @ dagger(S)) + 0.5 * (RSR @ rho @ dagger(RSR))
    return 0.5 * (out + dagger(out))


def validate_density_matrix(rho, dim: int | None = None, tol: float = HERMITIAN_TOL) -> np.ndarray:
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise ValueError("density matrix must be square")
    if dim is not None and rho.shape[0] != dim:
        raise ValueError(f"density matrix has dim {rho.shape[0]}, expected {dim}")
    if not is_hermitian(rho, tol):
        raise ValueError("density matrix is not Hermitian")
    if abs(np.trace(rho).real - 1.0) > tol:
        raise ValueError("density matrix trace is not 1")
    if np.min(np.linalg.eigvalsh(0.5 * (rho + dagger(rho)))) < -tol:
        raise ValueError("density matrix is not positive semidefinite")
    return rho
