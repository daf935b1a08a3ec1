"""Hamiltonian/projector pairs and their Zeno decomposition."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .operators import (
    HERMITIAN_TOL,
    PAULI_I,
    PAULI_X,
    PAULI_Z,
    as_operator,
    dagger,
    is_hermitian,
    is_projector,
    kron,
    spectral_norm,
)


@dataclass(frozen=True, eq=False)
class SystemModel:
    """A Hamiltonian ``H`` with a measured projector ``P``.

    ``H_Z = PHP + QHQ`` is the block-diagonal (Zeno) part, ``H_PQ`` the
    coupling between the two blocks, and ``R = P - Q`` the reflection that
    flips the sign of the coupling.
    """

    H: np.ndarray
    P: np.ndarray
    Q: np.ndarray
    R: np.ndarray
    H_Z: np.ndarray
    H_PQ: np.ndarray
    beta: float
    J: float

    @property
    def dim(self) -> int:
        return self.H.shape[0]

    @property
    def RHR(self) -> np.ndarray:
        return self.R @ self.H @ self.R

    @property
    def PHP(self) -> np.ndarray:
        return self.P @ self.H @ self.P

    @property
    def norm_H(self) -> float:
        return spectral_norm(self.H)


def build_system(H, P) -> SystemModel:
    H = as_operator(H)
    P = as_operator(P)
    if H.shape != P.shape:
        raise ValueError(f"H and P dimensions differ: {H.shape} vs {P.shape}")
    if not is_hermitian(H, HERMITIAN_TOL):
        raise ValueError("H is not Hermitian")
    if not is_projector(P, HERMITIAN_TOL):
        raise ValueError("P is not a Hermitian projector")
    eye = np.eye(H.shape[0], dtype=complex)
    Q = eye - P
    R = P - Q
    H_Z = P @ H @ P + Q @ H @ Q
    H_PQ = P @ H @ Q + Q @ H @ P
    return SystemModel(
        H=H, P=P, Q=Q, R=R, H_Z=H_Z, H_PQ=H_PQ,
        beta=spectral_norm(H_Z), J=spectral_norm(H_PQ),
    )


def example_zz_x(beta: float, J: float) -> SystemModel:
    """Two qubits, ``H = beta ZZ + J/2 (XI + IX)`` with ``P = (1 + ZZ)/2``."""
    ZZ = kron(PAULI_Z, PAULI_Z)
    H = beta * ZZ + 0.5 * J * (kron(PAULI_X, PAULI_I) + kron(PAULI_I, PAULI_X))
    P = 0.5 * (np.eye(4) + ZZ)
    return build_system(H, P)


def make_rng(seed: int) -> np.random.Generator:
    """Seeded stream used throughout: numpy's Philox-4x64 counter generator."""
    return np.random.Generator(np.random.Philox(seed))


def random_hermitian(dim: int, rng: np.random.Generator) -> np.ndarray:
    G = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    G /= np.sqrt(2.0)
    H = 0.5 * (G + dagger(G))
    return H / spectral_norm(H)


def random_projector(dim: int, rank: int, rng: np.random.Generator) -> np.ndarray:
    vecs = rng.standard_normal((dim, rank)) + 1j * rng.standard_normal((dim, rank))
    # modified Gram-Schmidt
    for j in range(rank):
        for i in range(j):
            vecs[:, j] -= np.vdot(vecs[:, i], vecs[:, j]) * vecs[:, i]
        vecs[:, j] /= np.linalg.norm(vecs[:, j])
    P = vecs @ dagger(vecs)
    return 0.5 * (P + dagger(P))


def random_system(dim: int, rank: int, seed: int) -> SystemModel:
    if not 1 <= rank < dim:
        raise ValueError(f"rank must satisfy 1 <= rank < dim, got rank={rank}, dim={dim}")
    rng = make_rng(seed)
    H = random_hermitian(dim, rng)
    P = random_projector(dim, rank, rng)
    return build_system(H, P)


def random_density_matrix(dim: int, rng: np.random.Generator) -> np.ndarray:
    G = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    rho = G @ dagger(G)
    rho = 0.5 * (rho + dagger(rho))
    return rho / np.trace(rho).real


def random_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    G = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    Qm, Rm = np.linalg.qr(G)
    return Qm * (np.diag(Rm) / np.abs(np.diag(Rm)))


# --- plain-text descriptors -------------------------------------------------

def parse_preset(text: str) -> SystemModel:
    """Parse ``zz_x`` or ``zz_x:beta=1,J=1e-4``."""
    name, _, args = text.strip().partition(":")
    if name != "zz_x":
        raise ValueError(f"unknown system preset {name!r}")
    params = {"beta": 1.0, "J": 1e-4}
    for item in filter(None, (a.strip() for a in args.split(","))):
        key, _, value = item.partition("=")
        if key not in params:
            raise ValueError(f"unknown preset parameter {key!r}")
        params[key] = float(value)
    return example_zz_x(params["beta"], params["J"])


def _parse_matrix(tokens: list[str], dim: int) -> np.ndarray:
    if len(tokens) != dim * dim:
        raise ValueError(f"expected {dim * dim} entries, got {len(tokens)}")
    vals = []
    for tok in tokens:
        re, _, im = tok.partition(",")
        vals.append(complex(float(re), float(im or 0.0)))
    return np.array(vals, dtype=complex).reshape(dim, dim)


def read_descriptor(path: str | Path) -> SystemModel:
    """Read a descriptor file.

    Lines are ``key = value``; ``dim`` is an integer and ``H``/``P`` are
    whitespace-separated ``re,im`` pairs in row-major order.  ``#`` starts a
    comment.
    """
    fields: dict[str, str] = {}
    for raw in Path(path).read_text().splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ValueError(f"malformed descriptor line: {raw!r}")
        fields[key.strip()] = value.strip()
    try:
        dim = int(fields["dim"])
        H = _parse_matrix(fields["H"].split(), dim)
        P = _parse_matrix(fields["P"].split(), dim)
    except KeyError as exc:
        raise ValueError(f"descriptor missing field {exc}") from None
    return build_system(H, P)


def write_descriptor(sys: SystemModel, path: str | Path) -> None:
    def fmt(M):
        return " ".join(f"{float(z.real)!r},{float(z.imag)!r}" for z in M.ravel())

    Path(path).write_text(f"dim = {sys.dim}\nH = {fmt(sys.H)}\nP = {fmt(sys.P)}\n")


def load_system(spec: str) -> SystemModel:
    """A preset string or a path to a descriptor file."""
    if spec.split(":", 1)[0] == "zz_x":
        return parse_preset(spec)
    p = Path(spec)
    if p.exists():
        return read_descriptor(p)
    raise ValueError(f"unknown system {spec!r}: not a preset or readable descriptor")
