import numpy as np
import pytest
import scipy.linalg
from hypothesis import given, strategies as st

from zenolab.operators import (
    PAULI_I, PAULI_X, PAULI_Y, PAULI_Z, as_operator, commutator, dagger, evolve, expm,
    is_hermitian, is_projector, is_unitary, jacobi_eigh, jacobi_singular_values, kron,
    spectral_norm, time_ordered_propagator, trace_norm,
)

from conftest import rand_matrix

seeds = st.integers(0, 2**32 - 1)
dims = st.sampled_from([1, 2, 3, 4, 8])


def eig_expm(H, dt):
    w, V = jacobi_eigh(H)
    return V @ np.diag(np.exp(-1j * dt * w)) @ dagger(V)


def test_expm_trivial():
    assert np.allclose(expm(np.zeros((3, 3))), np.eye(3), atol=0)
    assert np.max(np.abs(expm(-0.5j * np.pi * PAULI_X) + 1j * PAULI_X)) < 1e-15


def test_expm_matches_eigendecomposition_oracle():
    for seed in range(50):
        H = rand_matrix(seed, 4, hermitian=True)
        assert spectral_norm(evolve(H, 0.3) - eig_expm(H, 0.3)) < 1e-12


@given(seeds, dims, st.floats(0.0, 10.0))
def test_expm_relative_accuracy_up_to_norm_10(seed, dim, scale):
    A = rand_matrix(seed, dim)
    A = A * (scale / max(spectral_norm(A), 1e-300))
    ref = scipy.linalg.expm(A)
    assert spectral_norm(expm(A) - ref) <= 1e-12 * max(1.0, spectral_norm(ref))


@given(seeds, dims, st.floats(0.0, 10.0))
def test_expm_inverse_pair(seed, dim, scale):
    H = rand_matrix(seed, dim, hermitian=True)
    H = H * (scale / max(spectral_norm(H), 1e-300))
    assert spectral_norm(expm(-1j * H) @ expm(1j * H) - np.eye(dim)) < 1e-12


@pytest.mark.parametrize("bad", [np.zeros((2, 3)), np.array([[np.nan, 0], [0, 1]]), np.zeros(4)])
def test_invalid_operator_rejected(bad):
    with pytest.raises(ValueError):
        expm(bad)


def test_spectral_norm_trivial():
    assert spectral_norm(np.eye(4)) == pytest.approx(1.0, abs=1e-14)
    assert spectral_norm(kron(PAULI_Z, PAULI_Z)) == pytest.approx(1.0, abs=1e-14)
    assert spectral_norm(np.zeros((3, 3))) == 0.0


@given(seeds, dims)
def test_norms_match_jacobi_svd_oracle(seed, dim):
    A = rand_matrix(seed, dim)
    sv = jacobi_singular_values(A)
    assert abs(spectral_norm(A) - sv[0]) <= 1e-10 * sv[0]
    assert abs(trace_norm(A) - sv.sum()) <= 1e-10 * sv.sum()


@given(seeds, dims)
def test_jacobi_oracles_agree_with_lapack(seed, dim):
    A = rand_matrix(seed, dim)
    assert np.allclose(jacobi_singular_values(A), np.linalg.svd(A, compute_uv=False), atol=1e-11)
    H = rand_matrix(seed, dim, hermitian=True)
    w, V = jacobi_eigh(H)
    assert np.allclose(w, np.linalg.eigvalsh(H), atol=1e-11)
    assert np.allclose(V @ np.diag(w) @ dagger(V), H, atol=1e-11)


def test_spectral_norm_near_degenerate_top_pair():
    # differences of nearby unitaries have almost equal top singular values
    d = np.diag([1.0, 1.0 - 1e-7, 0.5, 0.1]).astype(complex)
    Q = scipy.linalg.qr(rand_matrix(3, 4))[0]
    assert spectral_norm(Q @ d @ dagger(Q)) == pytest.approx(1.0, abs=1e-12)


def test_trace_norm_cases():
    assert trace_norm(np.eye(5)) == pytest.approx(5.0, abs=1e-12)
    v = np.array([1, 1j, 0]) / np.sqrt(2)
    assert trace_norm(np.outer(v, v.conj())) == pytest.approx(1.0, abs=1e-12)
    H = rand_matrix(11, 6, hermitian=True)
    assert trace_norm(H) == pytest.approx(np.sum(np.abs(jacobi_eigh(H)[0])), abs=1e-10)


@given(seeds, st.sampled_from([2, 4, 8]))
def test_submultiplicative(seed, dim):
    A, B = rand_matrix(seed, dim), rand_matrix(seed + 1, dim)
    assert spectral_norm(A @ B) <= spectral_norm(A) * spectral_norm(B) + 1e-10


def test_commutator_cases(zz):
    A = rand_matrix(0, 3)
    assert np.all(commutator(A, A) == 0)
    assert np.allclose(commutator(PAULI_X, PAULI_Y), 2j * PAULI_Z)
    C = commutator(zz.H, zz.RHR)
    assert spectral_norm(C) > 0
    assert spectral_norm(C) == pytest.approx(np.linalg.norm(zz.H @ zz.RHR - zz.RHR @ zz.H, 2), rel=1e-12)
    with pytest.raises(ValueError):
        commutator(np.eye(2), np.eye(3))


def test_kron_cases():
    assert np.array_equal(kron(PAULI_I, PAULI_I), np.eye(4))
    assert np.array_equal(np.diag(kron(PAULI_Z, PAULI_Z)).real, [1, -1, -1, 1])
    assert spectral_norm((kron(PAULI_X, PAULI_I) + kron(PAULI_I, PAULI_X)) / 2) == pytest.approx(1.0)


@given(seeds)
def test_kron_associative(seed):
    # Gaussian-integer entries keep every product exact
    rng = np.random.default_rng(seed)
    A, B, C = (rng.integers(-9, 10, (n, n)) + 1j * rng.integers(-9, 10, (n, n)) for n in (2, 3, 2))
    assert np.array_equal(kron(kron(A, B), C), kron(A, kron(B, C)))


def test_predicates_consistent():
    P = np.diag([1.0, 0.0, 1.0])
    assert is_projector(P) and is_hermitian(P)
    assert not is_projector(np.diag([0.5, 0.0]))
    assert is_unitary(PAULI_Y) and not is_unitary(2 * PAULI_Y)
    with pytest.raises(ValueError):
        as_operator(np.zeros((0, 0)))


@given(seeds, st.integers(1, 20))
def test_propagator_constant_generator(seed, steps):
    H = rand_matrix(seed, 4, hermitian=True)
    U = time_ordered_propagator(lambda t: H, 0.2, 1.4, steps)
    assert spectral_norm(U - evolve(H, 1.2)) < 1e-12
    assert is_unitary(U, 1e-12)


def test_propagator_time_ordering_is_left_multiplication():
    A, B = PAULI_X, PAULI_Z
    U = time_ordered_propagator(lambda t: A if t < 0.5 else B, 0.0, 1.0, 2)
    assert np.allclose(U, evolve(B, 0.5) @ evolve(A, 0.5))


def test_propagator_self_convergence_second_order(zz):
    w = 2 * np.pi
    gen = lambda t: zz.H + 2.4 * w * np.sin(w * t) * zz.P
    ref = time_ordered_propagator(gen, 0.0, 1.0, 640)
    d1 = spectral_norm(time_ordered_propagator(gen, 0.0, 1.0, 32) - ref)
    d2 = spectral_norm(time_ordered_propagator(gen, 0.0, 1.0, 64) - ref)
    assert 3.5 < d1 / d2 < 4.5


def test_propagator_rejects_non_hermitian():
    with pytest.raises(ValueError):
        time_ordered_propagator(lambda t: np.array([[0, 1], [0, 0]]), 0, 1, 3)
    with pytest.raises(ValueError):
        time_ordered_propagator(lambda t: PAULI_X, 0, 1, 0)
