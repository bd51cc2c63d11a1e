import numpy as np
import pytest
from hypothesis import strategies as st

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


def random_complex(rng, shape):
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def random_skew_hermitian(rng, n, scale=1.0):
    g = random_complex(rng, (n, n))
    x = (g - g.conj().T) / 2
    return scale * x / max(np.linalg.norm(x, 2), 1e-300)


finite = st.floats(min_value=-10, max_value=10, allow_nan=False, allow_infinity=False)
angles = st.floats(min_value=-2 * np.pi, max_value=2 * np.pi, allow_nan=False)
complexes = st.builds(complex, finite, finite)


unit_floats = st.floats(min_value=-1, max_value=1, allow_nan=False)


@st.composite
def unit_vectors(draw, length):
    re = draw(st.lists(unit_floats, min_size=length, max_size=length))
    im = draw(st.lists(unit_floats, min_size=length, max_size=length))
    v = np.array(re) + 1j * np.array(im)
    norm = np.linalg.norm(v)
    if norm < 1e-3:
        v = np.zeros(length, dtype=complex)
        v[0] = 1.0
        return tuple(v)
    return tuple(v / norm)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
