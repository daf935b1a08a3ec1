"""Parameter scans, pinned reproduction recipes and the bound-domination suite.

Everything here returns plain data (rows, fit lines, verdicts); the CLI only
formats and writes it.
"""

from __future__ import annotations

import csv
import io
import itertools
import math
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import Callable

import numpy as np

from .compact import compact_sequence, solve_compact_coefficients
from .control import bessel_j0, bessel_j0_zero, continuous_control_propagator, phase_integral
from .metrics import (
    AUTO_SLOPE_REL_TOL,
    FIT_FLOOR,
    bound_first_order,
    bound_kick_commutator,
    bound_kick_general,
    bound_second_order,
    fit_loglog,
    kick_error_general,
    segment_regimes,
    success_bound_first_order,
    success_probability,
    trace_distance,
    zeno_error_measurement,
    zeno_error_unitary,
)
from .operators import evolve, dagger
from .sequences import (
    higher_order_kick,
    higher_order_measurement,
    kick_zeno,
    measurement_zeno,
    randomized_channel_apply,
    second_order_measurement,
    udd_sequence,
)
from .system import SystemModel, example_zz_x, load_system, make_rng, random_system, random_unitary

CSV_COLUMNS = ("family", "k", "beta", "J", "t", "N", "dt", "error", "bound", "success_prob")
CSV_HEADER = ",".join(CSV_COLUMNS)

FAMILIES = (
    "first_order", "second_order", "trotter_measurement", "kick", "trotter_kick",
    "udd", "compact", "compact_kick", "control",
)
K_FAMILIES = {"trotter_measurement", "trotter_kick", "udd", "compact", "compact_kick"}
SUCCESS_FAMILIES = {"first_order", "second_order", "trotter_measurement"}
SCAN_AXES = ("k", "J", "beta", "N", "dt")
GRID_ORDER = ("k", "J", "beta", "N", "dt")

FIG1_REL_TOL = 0.05
SMALL_REGIME_FLOOR = 1e-13
BOUND_SLACK = 1e-12
BOUND_N_GRID = (1, 2, 4, 8, 16, 32, 64)
CONTROL_SYSTEM = (1.0, 0.1)  # (beta, J) of the ZZ preset used by control_field


def fmt(x) -> str:
    """17 significant digits (round-trip exact); ``None`` becomes an empty field."""
    if x is None:
        return ""
    if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
        return str(int(x))
    if isinstance(x, str):
        return x
    return format(float(x), ".17g")


# --- config -----------------------------------------------------------------

@dataclass
class ExperimentConfig:
    system: str = "zz_x"
    family: str = "udd"
    k: list = field(default_factory=list)
    J: list = field(default_factory=list)
    beta: list = field(default_factory=list)
    N: list = field(default_factory=lambda: [1])
    dt: list = field(default_factory=list)
    t: float | None = None
    alpha_f: float | None = None
    seed: int = 0
    output: str | None = None
    scan: str | None = None
    window_policy: str = "auto"
    rel_tol: float = AUTO_SLOPE_REL_TOL

    def validate(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; choose from {', '.join(FAMILIES)}")
        if self.scan is not None and self.scan not in SCAN_AXES:
            raise ValueError(f"scan axis must be one of {SCAN_AXES}, got {self.scan!r}")
        if self.family in K_FAMILIES and not self.k:
            raise ValueError(f"family {self.family!r} needs a k grid")
        if not self.N:
            raise ValueError("N grid is empty")
        if self.dt == [] and self.t is None:
            raise ValueError("give either a dt grid or a total time t")
        if self.dt and self.t is not None:
            raise ValueError("dt grid and t are mutually exclusive")
        for name in ("k", "J", "beta", "N", "dt"):
            vals = getattr(self, name)
            if any(not (isinstance(v, (int, float)) and math.isfinite(v)) for v in vals):
                raise ValueError(f"{name} grid has non-numeric values")
            if name != "beta" and any(v <= 0 for v in vals):
                raise ValueError(f"{name} grid values must be positive")
        if any(int(v) != v for v in self.k + self.N):
            raise ValueError("k and N must be integers")
        if self.t is not None and self.t <= 0:
            raise ValueError("t must be positive")
        if self.scan is not None and not getattr(self, self.scan):
            raise ValueError(f"scan axis {self.scan!r} has an empty grid")
        parse_window_policy(self.window_policy)


def parse_window_policy(text) -> str | tuple[int, int]:
    if isinstance(text, tuple):
        return text
    s = str(text).strip().lower()
    if s in ("auto", "full"):
        return s
    m = re.fullmatch(r"(\d+)\s*:\s*(\d+)", s)
    if m:
        return int(m.group(1)), int(m.group(2))
    raise ValueError(f"window_policy must be auto, full or 'a:b', got {text!r}")


def _scalar(tok: str):
    tok = tok.strip()
    for conv in (int, float):
        try:
            return conv(tok)
        except ValueError:
            pass
    return tok.strip("\"'")


def _value(text: str):
    text = text.strip()
    m = re.fullmatch(r"logspace\(([^)]*)\)", text)
    if m:
        parts = [p.strip() for p in m.group(1).split(",")]
        if len(parts) != 3:
            raise ValueError("logspace takes (start, stop, count)")
        start, stop, count = float(parts[0]), float(parts[1]), int(parts[2])
        if start <= 0 or stop <= 0 or count < 0:
            raise ValueError("logspace needs positive endpoints and count >= 0")
        return [float(v) for v in np.geomspace(start, stop, count)] if count else []
    if text.startswith("[") and text.endswith("]"):
        inner = text[1:-1].strip()
        return [_scalar(p) for p in inner.split(",")] if inner else []
    return _scalar(text)


def parse_config(text: str) -> ExperimentConfig:
    """Flat ``key = value`` text; ``#`` starts a comment."""
    known = {f.name for f in fields(ExperimentConfig)}
    list_keys = {"k", "J", "beta", "N", "dt"}
    values: dict = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rhs = line.partition("=")
        key = key.strip()
        if not sep:
            raise ValueError(f"line {lineno}: expected 'key = value'")
        if key not in known:
            raise ValueError(f"line {lineno}: unknown key {key!r}")
        val = _value(rhs)
        if key in list_keys and not isinstance(val, list):
            val = [val]
        if key in ("t", "alpha_f", "rel_tol") and val is not None:
            val = float(val)
        if key in ("system", "family", "output", "scan", "window_policy"):
            val = str(val)
        values[key] = val
    cfg = ExperimentConfig(**values)
    cfg.validate()
    return cfg


# --- systems and single grid points ------------------------------------------

def resolve_system(spec: str, seed: int, beta: float | None, J: float | None) -> SystemModel:
    """Presets ``zz_x[:beta=..,J=..]`` and ``random:dim=..,rank=..`` or a descriptor path."""
    name, _, args = spec.partition(":")
    if name == "random":
        params = {"dim": 4, "rank": 1}
        for item in filter(None, (a.strip() for a in args.split(","))):
            key, _, value = item.partition("=")
            if key not in params:
                raise ValueError(f"unknown preset parameter {key!r}")
            params[key] = int(value)
        if beta is not None or J is not None:
            raise ValueError("beta/J grids only apply to the zz_x preset")
        return random_system(params["dim"], params["rank"], seed)
    sys = load_system(spec)
    if beta is None and J is None:
        return sys
    if name != "zz_x":
        raise ValueError("beta/J grids only apply to the zz_x preset")
    return example_zz_x(sys.beta if beta is None else beta, sys.J if J is None else J)


def zeno_state(sys: SystemModel) -> np.ndarray:
    """Normalized dominant column of ``P``: a deterministic state in the Zeno subspace."""
    col = int(np.argmax(np.sum(np.abs(sys.P) ** 2, axis=0)))
    v = sys.P[:, col]
    return v / np.linalg.norm(v)


@dataclass(frozen=True)
class GridPoint:
    system: str
    seed: int
    family: str
    k: int | None
    J: float | None
    beta: float | None
    N: int
    dt: float | None
    t: float | None
    alpha_f: float | None


def evaluate_point(p: GridPoint) -> dict:
    """One CSV row (a dict keyed by ``CSV_COLUMNS``)."""
    sys = resolve_system(p.system, p.seed, p.beta, p.J)
    N = int(p.N)
    dt = p.dt if p.dt is not None else p.t / N
    t = N * dt if p.dt is not None else p.t
    fam, k = p.family, p.k
    bound = succ = None
    if fam == "first_order":
        err = zeno_error_measurement(sys, measurement_zeno(sys, N, t), t)
        bound = bound_first_order(sys, t, N)
    elif fam == "second_order":
        err = zeno_error_measurement(sys, second_order_measurement(sys, N, t), t)
        bound = bound_second_order(sys, t, N)
    elif fam == "trotter_measurement":
        err = zeno_error_measurement(sys, higher_order_measurement(sys, k, N, t), t)
    elif fam == "kick":
        err = zeno_error_unitary(sys, kick_zeno(sys, N, t), t, True, N)
        bound = bound_kick_general(sys.R, sys.H, t, N)
    elif fam == "trotter_kick":
        err = zeno_error_unitary(sys, higher_order_kick(sys, k, N, t), t)
    elif fam == "udd":
        U = np.linalg.matrix_power(udd_sequence(sys, k, dt), N)
        err = zeno_error_unitary(sys, U, t, True, k * N)
    elif fam in ("compact", "compact_kick"):
        coeffs = solve_compact_coefficients(k)
        U = np.linalg.matrix_power(compact_sequence(sys, coeffs, dt, fam == "compact"), N)
        if fam == "compact":
            err = zeno_error_measurement(sys, U, t)
        else:
            err = zeno_error_unitary(sys, U, t, True, (len(coeffs.durations) - 1) * N)
    elif fam == "control":
        alpha = bessel_j0_zero(1) if p.alpha_f is None else p.alpha_f
        U = continuous_control_propagator(sys.H, sys.P, alpha, dt, N)
        err = zeno_error_unitary(sys, U, t)
    else:
        raise ValueError(f"unknown family {fam!r}")
    if fam in SUCCESS_FAMILIES:
        succ = success_probability(sys, fam, k or 1, N, t, zeno_state(sys))
    return {
        "family": fam, "k": k, "beta": sys.beta, "J": sys.J, "t": t, "N": N, "dt": dt,
        "error": err, "bound": bound, "success_prob": succ,
    }


def grid_points(cfg: ExperimentConfig) -> list[GridPoint]:
    """Grid points in lexicographic (family, k, J, beta, N, dt) order."""
    cfg.validate()
    axes = {
        "k": sorted(int(v) for v in cfg.k) if cfg.family in K_FAMILIES else [None],
        "J": sorted(float(v) for v in cfg.J) or [None],
        "beta": sorted(float(v) for v in cfg.beta) or [None],
        "N": sorted(int(v) for v in cfg.N),
        "dt": sorted(float(v) for v in cfg.dt) or [None],
    }
    return [
        GridPoint(cfg.system, cfg.seed, cfg.family, k, J, beta, N, dt, cfg.t, cfg.alpha_f)
        for k, J, beta, N, dt in itertools.product(*(axes[a] for a in GRID_ORDER))
    ]


def run_points(points: list[GridPoint], jobs: int = 1) -> list[dict]:
    """Evaluate in a worker pool; results come back in input order."""
    if jobs < 1:
        raise ValueError("jobs must be >= 1")
    if jobs == 1 or len(points) < 2:
        return [evaluate_point(p) for p in points]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(evaluate_point, points, chunksize=max(1, len(points) // (4 * jobs))))


def fit_line(label: str, points, policy="auto", rel_tol: float = AUTO_SLOPE_REL_TOL,
             floor: float = FIT_FLOOR) -> str:
    try:
        f = fit_loglog(points, parse_window_policy(policy), floor, rel_tol)
    except ValueError as exc:
        return f"# fit: {label} failed: {exc}"
    return (f"# fit: {label} slope={fmt(f.slope)} window=[{f.window[0]},{f.window[1]}] "
            f"rms={fmt(f.rms_residual)}")


def scan_fit_lines(cfg: ExperimentConfig, rows: list[dict]) -> list[str]:
    """One fit of error against the scan axis per combination of the other axes."""
    if cfg.scan is None:
        return []
    varying = [a for a in GRID_ORDER if a != cfg.scan and len(set(getattr(cfg, a))) > 1
               and (a != "k" or cfg.family in K_FAMILIES)]
    groups: dict[tuple, list] = {}
    for pt, row in zip(grid_points(cfg), rows):
        key = tuple(getattr(pt, a) for a in varying)
        groups.setdefault(key, []).append((getattr(pt, cfg.scan), row["error"]))
    lines = []
    for key, pts in groups.items():
        label = " ".join(f"{a}={fmt(v)}" for a, v in zip(varying, key)) or f"family={cfg.family}"
        lines.append(fit_line(label, pts, cfg.window_policy, cfg.rel_tol))
    return lines


def render_csv(rows: list[dict], comments: list[str] = ()) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for row in rows:
        w.writerow([fmt(row.get(c)) for c in CSV_COLUMNS])
    for line in comments:
        buf.write(line + "\n")
    return buf.getvalue()


def run_scan(cfg: ExperimentConfig, jobs: int = 1) -> str:
    points = grid_points(cfg)
    if not points:
        raise ValueError("the grid is empty")
    rows = run_points(points, jobs)
    return render_csv(rows, scan_fit_lines(cfg, rows))


# --- verdicts -----------------------------------------------------------------

@dataclass(frozen=True)
class Check:
    name: str
    measured: float
    expected: float
    tol: float
    kind: str = "abs"  # "abs": |m - e| <= tol; "max": m <= e; "min": m >= e

    @property
    def passed(self) -> bool:
        if not math.isfinite(self.measured):
            return False
        if self.kind == "max":
            return self.measured <= self.expected + self.tol
        if self.kind == "min":
            return self.measured >= self.expected - self.tol
        return abs(self.measured - self.expected) <= self.tol

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        if self.kind == "abs":
            rule = f"expected {self.expected:g} ± {self.tol:g}"
        elif self.kind == "max":
            rule = f"expected <= {self.expected:g}"
        else:
            rule = f"expected >= {self.expected:g}"
        return f"{verdict} {self.name}: measured {self.measured:.6g}, {rule}"


@dataclass
class RecipeResult:
    rows: list[dict]
    comments: list[str]
    checks: list[Check]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def csv(self) -> str:
        return render_csv(self.rows, self.comments)


def _slope_comment(label: str, fit) -> str:
    return (f"# fit: {label} slope={fmt(fit.slope)} window=[{fit.window[0]},{fit.window[1]}] "
            f"rms={fmt(fit.rms_residual)}")


# --- recipes ------------------------------------------------------------------

def recipe_fig1(jobs: int = 1) -> RecipeResult:
    """UDD error vs dt for k = 3..6 on the ZZ system with beta=1, J=1e-4."""
    cfg = ExperimentConfig(system="zz_x:beta=1,J=1e-4", family="udd", k=[3, 4, 5, 6],
                           dt=[float(v) for v in np.geomspace(1e-2, 1.0, 25)], scan="dt")
    rows = run_points(grid_points(cfg), jobs)
    comments, checks = [], []
    small_seen = 0
    for k in cfg.k:
        pts = [(r["dt"], r["error"]) for r in rows if r["k"] == k]
        large = segment_regimes(pts, FIT_FLOOR, FIG1_REL_TOL)[-1]
        comments.append(_slope_comment(f"k={k} regime=large", large))
        checks.append(Check(f"fig1 k={k} large-dt slope", large.slope, k + 1, 0.15))
        regs = segment_regimes(pts, SMALL_REGIME_FLOOR, FIG1_REL_TOL)
        if len(regs) > 1:
            small_seen += 1
            comments.append(_slope_comment(f"k={k} regime=small", regs[0]))
            checks.append(Check(f"fig1 k={k} small-dt slope", regs[0].slope, 3.0, 0.2))
    checks.append(Check("fig1 curves with a small-dt regime above 1e-13", small_seen, 1, 0, "min"))
    return RecipeResult(rows, comments, checks)


def _randomized_rows(k: int, J: float, dt: float) -> tuple[dict, dict]:
    sys = example_zz_x(1.0, J)
    rho0 = np.zeros((4, 4), dtype=complex)
    rho0[0, 0] = 1.0
    U_ideal = evolve(sys.H_Z, dt)
    ideal = U_ideal @ rho0 @ dagger(U_ideal)
    S = higher_order_kick(sys, k, 1, dt)
    det = trace_distance(S @ rho0 @ dagger(S), ideal)
    rnd = trace_distance(randomized_channel_apply(sys, k, 1, dt, rho0), ideal)
    base = {"k": k, "beta": sys.beta, "J": sys.J, "t": dt, "N": 1, "dt": dt,
            "bound": None, "success_prob": None}
    return {**base, "family": "trotter_kick", "error": det}, {**base, "family": "randomized", "error": rnd}


def _randomized_panel(name: str, axis: str, Js, dts, expected: Callable[[str, int], float],
                      tol: float) -> RecipeResult:
    rows, comments, checks = [], [], []
    for k in (1, 2):
        det_rows, rnd_rows = [], []
        for J in Js:
            for dt in dts:
                d, r = _randomized_rows(k, J, dt)
                det_rows.append(d)
                rnd_rows.append(r)
        for label, group in (("deterministic", det_rows), ("randomized", rnd_rows)):
            rows.extend(group)
            fit = fit_loglog([(r[axis], r["error"]) for r in group], "full")
            comments.append(_slope_comment(f"k={k} protocol={label}", fit))
            checks.append(Check(f"{name} k={k} {label} slope in {axis}", fit.slope,
                                expected(label, k), tol))
    return RecipeResult(rows, comments, checks)


def recipe_randomized_leftpanel(jobs: int = 1) -> RecipeResult:
    Js = [float(v) for v in np.geomspace(1e-4, 1e-1, 15)]
    return _randomized_panel("randomized_leftpanel", "J", Js, [0.1],
                             lambda label, k: 1.0 if label == "deterministic" else 2.0, 0.05)


def recipe_randomized_rightpanel(jobs: int = 1) -> RecipeResult:
    dts = [float(v) for v in np.geomspace(1e-2, 0.5, 15)]
    return _randomized_panel("randomized_rightpanel", "dt", [0.01], dts,
                             lambda label, k: 2 * k + 1.0, 0.1)


def recipe_control_field(jobs: int = 1) -> RecipeResult:
    """Bessel-zero drive: N-slope, Magnus phase integral and the off-zero plateau."""
    beta, J = CONTROL_SYSTEM
    t = 2.0
    Ns = [4, 8, 16, 32, 64]
    zero = bessel_j0_zero(1)
    checks = [Check("control_field first J0 zero", zero, 2.404825557695773, 1e-10)]
    rows, comments = [], []
    by_alpha = {}
    for alpha in (zero, 1.0):
        cfg = ExperimentConfig(system=f"zz_x:beta={beta},J={J}", family="control",
                               N=Ns, t=t, alpha_f=alpha, scan="N")
        group = run_points(grid_points(cfg), jobs)
        rows.extend(group)
        by_alpha[alpha] = group
    fit = fit_loglog([(r["N"], r["error"]) for r in by_alpha[zero]], "full")
    comments.append(_slope_comment(f"alpha_f={fmt(zero)}", fit))
    comments.append(f"# plateau: alpha_f=1 errors={' '.join(fmt(r['error']) for r in by_alpha[1.0])}")
    checks.append(Check("control_field N-slope at the J0 zero", fit.slope, -2.0, 0.15))
    for T in (0.5, 1.0, t / Ns[-1]):
        checks.append(Check(f"control_field |phase integral|/T at the zero, T={T:g}",
                            abs(phase_integral(zero, T)) / T, 1e-8, 0.0, "max"))
    for alpha in (0.5, 1.0, 2.0):
        T = 1.0
        closed = T * complex(math.cos(alpha), math.sin(alpha)) * bessel_j0(alpha)
        checks.append(Check(f"control_field phase integral vs closed form, alpha={alpha:g}",
                            abs(phase_integral(alpha, T) - closed) / T, 1e-8, 0.0, "max"))
    plateau = [r["error"] for r in by_alpha[1.0]]
    checks.append(Check("control_field alpha_f=1 error at N=64", plateau[-1], 1e-3, 0.0, "min"))
    checks.append(Check("control_field alpha_f=1 error ratio N=64/N=32", plateau[-1] / plateau[-2],
                        1.0, 0.1))
    return RecipeResult(rows, comments, checks)


# --- bound suite ----------------------------------------------------------------

BOUND_NAMES = ("first_order", "second_order", "kick_old", "kick_commutator", "kick_general",
               "success_first_order")


def suite_system(seed: int, index: int) -> SystemModel:
    dim = (2, 4, 8)[index % 3]
    rank = 1 + (index // 3) % (dim - 1)
    return random_system(dim, rank, seed + index)


def bound_instances(sys: SystemModel, seed: int, index: int, t: float = 1.0):
    """Yield ``(bound_name, N, measured, bound)``; success is reported as ``(1 - p, 1 - p_min)``."""
    rng = make_rng(seed + index + 1_000_003)
    U_Z = random_unitary(sys.dim, rng)
    psi0 = zeno_state(sys)
    for N in BOUND_N_GRID:
        yield ("first_order", N, zeno_error_measurement(sys, measurement_zeno(sys, N, t), t),
               bound_first_order(sys, t, N))
        yield ("second_order", N, zeno_error_measurement(sys, second_order_measurement(sys, N, t), t),
               bound_second_order(sys, t, N))
        yield ("kick_old", N, zeno_error_unitary(sys, kick_zeno(sys, N, t), t, True, N),
               bound_kick_general(sys.R, sys.H, t, N))
        # N reflection pairs: 2N kicks of duration t/(2N)
        yield ("kick_commutator", N, zeno_error_unitary(sys, kick_zeno(sys, 2 * N, t), t),
               bound_kick_commutator(sys, t, N))
        yield ("kick_general", N, kick_error_general(U_Z, sys.H, N, t),
               bound_kick_general(U_Z, sys.H, t, N))
        p = success_probability(sys, "first_order", 1, N, t, psi0)
        yield ("success_first_order", N, 1.0 - p, 1.0 - success_bound_first_order(sys, t, N))


@dataclass
class BoundReport:
    trials: int
    seed: int
    max_ratio: dict
    min_slack: dict
    violations: list  # (bound, system index, N, measured, bound)
    rows: list

    @property
    def passed(self) -> bool:
        return not self.violations

    def text(self) -> str:
        lines = [f"bound suite: trials={self.trials} seed={self.seed} N={list(BOUND_N_GRID)} t=1"]
        for name in BOUND_NAMES:
            lines.append(f"  {name:20s} max error/bound={self.max_ratio[name]:.6g} "
                         f"min slack={self.min_slack[name]:.6g}")
        for name, idx, N, err, bnd in self.violations:
            lines.append(f"  VIOLATION {name} system={idx} seed={self.seed + idx} N={N} "
                         f"error={err:.17g} bound={bnd:.17g}")
        return "\n".join(lines)

    def checks(self) -> list[Check]:
        out = []
        for name in BOUND_NAMES:
            count = sum(v[0] == name for v in self.violations)
            out.append(Check(f"bounds_suite {name} violations", count, 0, 0, "max"))
        return out


def verify_bounds(trials: int, seed: int) -> BoundReport:
    if trials < 1:
        raise ValueError("trials must be >= 1")
    max_ratio = {n: 0.0 for n in BOUND_NAMES}
    min_slack = {n: math.inf for n in BOUND_NAMES}
    violations, rows = [], []
    for idx in range(trials):
        sys = suite_system(seed, idx)
        for name, N, err, bnd in bound_instances(sys, seed, idx):
            slack = bnd - err
            min_slack[name] = min(min_slack[name], slack)
            if bnd > 0:
                max_ratio[name] = max(max_ratio[name], err / bnd)
            if slack < -BOUND_SLACK:
                violations.append((name, idx, N, err, bnd))
            rows.append({"family": name, "k": None, "beta": sys.beta, "J": sys.J, "t": 1.0,
                         "N": N, "dt": 1.0 / N, "error": err, "bound": bnd, "success_prob": None})
    return BoundReport(trials, seed, max_ratio, min_slack, violations, rows)


def recipe_bounds_suite(jobs: int = 1) -> RecipeResult:
    report = verify_bounds(200, 0)
    comments = ["# " + line.strip() for line in report.text().splitlines()]
    return RecipeResult(report.rows, comments, report.checks())


RECIPES: dict[str, Callable[..., RecipeResult]] = {
    "fig1": recipe_fig1,
    "randomized_leftpanel": recipe_randomized_leftpanel,
    "randomized_rightpanel": recipe_randomized_rightpanel,
    "control_field": recipe_control_field,
    "bounds_suite": recipe_bounds_suite,
}


def write_text(path: str | Path, text: str) -> None:
    Path(path).write_text(text)
