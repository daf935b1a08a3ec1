"""Dense complex matrix primitives.

Operators are plain ``numpy`` complex arrays of shape ``(d, d)``; states are
1-d complex arrays.  Everything here is a pure function of its inputs.
"""

from __future__ import annotations

from typing import Callable

import numpy as np

HERMITIAN_TOL = 1e-10
EXPM_SCALE_TARGET = 0.5
EXPM_TERM_TOL = 1e-17
POWER_ITER_TOL = 1e-13
POWER_ITER_MAXITER = 2000
POWER_BLOCK = 4
POWER_SQUARINGS = 6
JACOBI_TOL = 1e-13
JACOBI_MAX_SWEEPS = 100

PAULI_I = np.eye(2, dtype=complex)
PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)


def as_operator(M) -> np.ndarray:
    """Return ``M`` as a finite square complex array or raise ``ValueError``."""
    A = np.asarray(M, dtype=complex)
    if A.ndim != 2 or A.shape[0] != A.shape[1] or A.shape[0] < 1:
        raise ValueError(f"expected a non-empty square matrix, got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise ValueError("matrix has non-finite entries")
    return A


def dagger(M: np.ndarray) -> np.ndarray:
    return np.conj(M).T


def is_hermitian(M, tol: float = HERMITIAN_TOL) -> bool:
    A = np.asarray(M, dtype=complex)
    return bool(np.max(np.abs(A - dagger(A)), initial=0.0) <= tol)


def is_unitary(M, tol: float = HERMITIAN_TOL) -> bool:
    A = np.asarray(M, dtype=complex)
    eye = np.eye(A.shape[0])
    return bool(np.max(np.abs(dagger(A) @ A - eye)) <= tol)


def is_projector(M, tol: float = HERMITIAN_TOL) -> bool:
    A = np.asarray(M, dtype=complex)
    return is_hermitian(A, tol) and bool(np.max(np.abs(A @ A - A)) <= tol)


def is_normalized(psi, tol: float = HERMITIAN_TOL) -> bool:
    v = np.asarray(psi, dtype=complex)
    return bool(abs(np.vdot(v, v).real - 1.0) <= tol)


def expm(M) -> np.ndarray:
    """Matrix exponential by scaling and squaring of a truncated Taylor series.

    The matrix is halved ``s`` times until its Frobenius norm (an upper bound
    on the spectral norm) drops below 0.5, the series is summed until the
    next term is negligible, and the result is squared ``s`` times.
    """
    A = as_operator(M)
    d = A.shape[0]
    nrm = np.linalg.norm(A)  # Frobenius
    s = 0
    if nrm > EXPM_SCALE_TARGET:
        s = int(np.ceil(np.log2(nrm / EXPM_SCALE_TARGET)))
    X = A / (2.0**s)
    result = np.eye(d, dtype=complex)
    term = np.eye(d, dtype=complex)
    for n in range(1, 40):
        term = term @ X / n
        result = result + term
        if np.linalg.norm(term) < EXPM_TERM_TOL:
            break
    for _ in range(s):
        result = result @ result
    return result


def evolve(G, duration: float) -> np.ndarray:
    """``exp(-i * duration * G)``."""
    return expm(-1j * duration * np.asarray(G, dtype=complex))


def _column_phase_rotate(cp, cq, g):
    """One Hestenes step: orthogonalize columns ``cp``, ``cq`` with overlap ``g``."""
    a = np.vdot(cp, cp).real
    b = np.vdot(cq, cq).real
    scale = max(abs(g.real), abs(g.imag))
    gs = g / scale  # avoids overflow of conj(g)/|g| for subnormal overlaps
    mag = abs(gs) * scale
    cq = cq * (np.conj(gs) / abs(gs))
    zeta = (b - a) / (2.0 * mag)
    t = (1.0 if zeta >= 0 else -1.0) / (abs(zeta) + np.hypot(1.0, zeta))
    c = 1.0 / np.sqrt(1.0 + t * t)
    s = c * t
    return c * cp - s * cq, s * cp + c * cq


def jacobi_singular_values(M, tol: float = JACOBI_TOL) -> np.ndarray:
    """Singular values (descending) by one-sided Jacobi rotations."""
    U = as_operator(M).copy()
    n = U.shape[1]
    for _ in range(JACOBI_MAX_SWEEPS):
        rotated = False
        for p in range(n - 1):
            for q in range(p + 1, n):
                cp, cq = U[:, p], U[:, q]
                g = np.vdot(cp, cq)
                a = np.vdot(cp, cp).real
                b = np.vdot(cq, cq).real
                if abs(g) <= tol * np.sqrt(a) * np.sqrt(b) or min(a, b) == 0.0:
                    continue
                U[:, p], U[:, q] = _column_phase_rotate(cp, cq, g)
                rotated = True
        if not rotated:
            break
    sv = np.sqrt(np.sum(np.abs(U) ** 2, axis=0))
    return np.sort(sv)[::-1]


def jacobi_eigh(M, tol: float = JACOBI_TOL) -> tuple[np.ndarray, np.ndarray]:
    """Eigen-decomposition of a Hermitian matrix by cyclic two-sided Jacobi.

    Returns ``(w, V)`` with ascending eigenvalues ``w`` and ``M = V diag(w) V^H``.
    """
    A = as_operator(M).copy()
    if not is_hermitian(A, 1e-8):
        raise ValueError("jacobi_eigh requires a Hermitian matrix")
    A = 0.5 * (A + dagger(A))
    n = A.shape[0]
    V = np.eye(n, dtype=complex)
    scale = max(np.linalg.norm(A), 1e-300)
    for _ in range(JACOBI_MAX_SWEEPS):
        off = np.sqrt(np.sum(np.abs(A - np.diag(np.diag(A))) ** 2))
        if off <= tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                g = A[p, q]
                mag = abs(g)
                if mag <= 1e-300:
                    continue
                D = np.eye(n, dtype=complex)
                D[q, q] = np.conj(g) / mag
                app, aqq = A[p, p].real, A[q, q].real
                theta = (aqq - app) / (2.0 * mag)
                t = (1.0 if theta >= 0 else -1.0) / (abs(theta) + np.hypot(theta, 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                Jr = np.eye(n, dtype=complex)
                Jr[p, p] = Jr[q, q] = c
                Jr[p, q] = s
                Jr[q, p] = -s
                G = D @ Jr
                A = dagger(G) @ A @ G
                A[p, q] = A[q, p] = 0.0
                V = V @ G
    w = np.diag(A).real
    order = np.argsort(w)
    return w[order], V[:, order]


def spectral_norm(M) -> float:
    """Largest singular value by block power iteration on ``M^H M``.

    A block of up to four vectors is iterated with a Rayleigh-Ritz step, so
    convergence is governed by the first well-separated eigenvalue rather
    than by the (often tiny) gap between the top two; differences of nearby
    unitaries routinely have near-degenerate top singular pairs.  The start
    block is the dominant columns of ``(M^H M)^(2^s)``, which is
    deterministic and cannot be orthogonal to the top singular subspace.
    """
    A0 = as_operator(M)
    A = dagger(A0) @ A0
    if np.max(np.abs(A)) == 0.0:
        return 0.0
    n = A.shape[0]
    B = A / np.linalg.norm(A)
    for _ in range(POWER_SQUARINGS):
        B = B @ B
        B = B / np.linalg.norm(B)
    cols = np.argsort(-np.sum(np.abs(B) ** 2, axis=0), kind="stable")[: min(n, POWER_BLOCK)]
    V, _ = np.linalg.qr(B[:, np.sort(cols)])
    lam = -1.0
    for _ in range(POWER_ITER_MAXITER):
        V, _ = np.linalg.qr(A @ V)
        T = dagger(V) @ A @ V
        new = float(np.linalg.eigvalsh(0.5 * (T + dagger(T)))[-1])
        if abs(new - lam) <= POWER_ITER_TOL * abs(new):
            lam = new
            break
        lam = new
    return float(np.sqrt(max(lam, 0.0)))


def trace_norm(M) -> float:
    """Sum of singular values."""
    return float(np.sum(jacobi_singular_values(M)))


def commutator(A, B) -> np.ndarray:
    A = np.asarray(A, dtype=complex)
    B = np.asarray(B, dtype=complex)
    if A.shape != B.shape:
        raise ValueError(f"dimension mismatch: {A.shape} vs {B.shape}")
    return A @ B - B @ A


def kron(*ops) -> np.ndarray:
    """Tensor product; the first factor is the most significant index."""
    out = np.asarray(ops[0], dtype=complex)
    for op in ops[1:]:
        out = np.kron(out, np.asarray(op, dtype=complex))
    return out


def time_ordered_propagator(
    gen: Callable[[float], np.ndarray], t_start: float, t_end: float, steps: int
) -> np.ndarray:
    """Time-ordered exponential of ``-i gen(t)`` by the exponential midpoint rule.

    Each slice of width ``h`` contributes ``expm(-i h gen(midpoint))``; later
    slices multiply from the left.
    """
    if steps < 1:
        raise ValueError("steps must be >= 1")
    h = (t_end - t_start) / steps
    U = None
    for j in range(steps):
        G = as_operator(gen(t_start + (j + 0.5) * h))
        if not is_hermitian(G):
            raise ValueError(f"generator is not Hermitian at slice {j}")
        step = evolve(G, h)
        U = step if U is None else step @ U
    return U
