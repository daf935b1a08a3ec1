"""Suzuki product formulas for the generator pair ``{H, RHR}``."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .operators import commutator, evolve, spectral_norm
from .system import SystemModel

FIRST = "FIRST"
SECOND = "SECOND"
MAX_PLAN_ORDER = 4
MAX_ALPHA_ORDER = 3


@dataclass(frozen=True)
class StagePlan:
    """Ordered ``(tag, coefficient)`` stages of a symmetric formula of order ``2k``.

    A stage ``(FIRST, c)`` evolves under ``H`` for ``c * tau`` and
    ``(SECOND, c)`` under ``RHR``; coefficients of each tag sum to one.
    """

    order_k: int
    stages: tuple[tuple[str, float], ...]

    def coefficient_sums(self) -> dict[str, float]:
        sums = {FIRST: 0.0, SECOND: 0.0}
        for tag, c in self.stages:
            sums[tag] += c
        return sums

    def to_rows(self) -> str:
        return "".join(f"{tag},{c!r}\n" for tag, c in self.stages)


def suzuki_p(k: int) -> float:
    return 1.0 / (4.0 - 4.0 ** (1.0 / (2 * k - 1)))


def _merge(stages):
    out: list[tuple[str, float]] = []
    for tag, c in stages:
        if out and out[-1][0] == tag:
            out[-1] = (tag, out[-1][1] + c)
        else:
            out.append((tag, c))
    return out


def _raw_stages(k: int, merge: bool) -> list[tuple[str, float]]:
    if k == 1:
        return [(FIRST, 0.5), (SECOND, 1.0), (FIRST, 0.5)]
    p = suzuki_p(k)
    inner = _raw_stages(k - 1, merge)
    seq = []
    for scale in (p, p, 1.0 - 4.0 * p, p, p):
        seq.extend((tag, scale * c) for tag, c in inner)
    return _merge(seq) if merge else seq


def suzuki_stage_plan(k: int, merge: bool = True) -> StagePlan:
    """Fractal Suzuki recursion ``S_2k(t) = S_2k-2(p t)^2 S_2k-2((1-4p) t) S_2k-2(p t)^2``."""
    if not 1 <= k <= MAX_PLAN_ORDER:
        raise ValueError(f"k must be in [1, {MAX_PLAN_ORDER}], got {k}")
    return StagePlan(k, tuple(_raw_stages(k, merge)))


def compile_plan(sys: SystemModel, plan: StagePlan, dt: float) -> np.ndarray:
    """Product of stage exponentials with step ``dt/2`` (earliest stage rightmost)."""
    gens = {FIRST: sys.H, SECOND: sys.RHR}
    U = np.eye(sys.dim, dtype=complex)
    for tag, c in plan.stages:
        U = evolve(gens[tag], c * dt / 2.0) @ U
    return U


def build_trotter_step(sys: SystemModel, k: int, dt: float) -> np.ndarray:
    if dt <= 0:
        raise ValueError("dt must be positive")
    return compile_plan(sys, suzuki_stage_plan(k), dt)


def reflection_tokens(plan: StagePlan) -> list[str]:
    """Symbolic realization with ``e^{-iRHR c} = R e^{-iH c} R`` and ``R R = 1``."""
    tokens: list[str] = []
    for tag, _ in plan.stages:
        piece = ["R", "H", "R"] if tag == SECOND else ["H"]
        for tok in piece:
            if tok == "R" and tokens and tokens[-1] == "R":
                tokens.pop()
            else:
                tokens.append(tok)
    return tokens


def reflection_count(k: int) -> int:
    return reflection_tokens(suzuki_stage_plan(k)).count("R")


def alpha_commutator_sum(sys: SystemModel, k: int) -> float:
    """Sum over all ``2k+1``-fold nested commutators of ``H`` and ``RHR``."""
    if not 1 <= k <= MAX_ALPHA_ORDER:
        raise ValueError(f"alpha sum supports k in [1, {MAX_ALPHA_ORDER}], got {k}")
    gens = (sys.H, sys.RHR)
    depth = 2 * k + 1
    # level[word] = [H_{g_n}, ..., [H_{g_2}, H_{g_1}]] built prefix by prefix
    level = {(g,): gens[g] for g in range(2)}
    for _ in range(depth - 1):
        level = {w + (g,): commutator(gens[g], C) for w, C in level.items() for g in range(2)}
    return float(sum(spectral_norm(C) for C in level.values()))

