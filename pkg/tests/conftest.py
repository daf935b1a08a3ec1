import numpy as np
import pytest
from hypothesis import settings

from zenolab.system import example_zz_x, random_system

settings.register_profile("zenolab", deadline=None, max_examples=40, derandomize=True)
settings.load_profile("zenolab")


def suite_params(count=200):
    """(dim, rank, seed) triples covering dims 2, 4, 8 and every admissible rank."""
    out = []
    for i in range(count):
        dim = (2, 4, 8)[i % 3]
        out.append((dim, 1 + (i // 3) % (dim - 1), i))
    return out


@pytest.fixture(scope="session")
def random_systems():
    return [random_system(d, r, s) for d, r, s in suite_params()]


@pytest.fixture
def zz():
    return example_zz_x(1.0, 0.1)


def rand_matrix(seed, dim, hermitian=False):
    rng = np.random.default_rng(seed)
    A = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return 0.5 * (A + A.conj().T) if hermitian else A


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda l: int(l.split()[2])):
            terminalreporter.write_line(line)
