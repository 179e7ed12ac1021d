import pytest

from oreprimes import build_domain


@pytest.fixture
def zi_d2():
    """Z[i], conjugation, delta(i) = 2 (inner)."""
    return build_domain({'kind': 'GaussianIntegers', 'sigma': 'conjugation',
                         'delta_d': 2})


@pytest.fixture
def zi_d1():
    """Z[i], conjugation, delta(i) = 1 (not inner)."""
    return build_domain({'kind': 'GaussianIntegers', 'sigma': 'conjugation',
                         'delta_d': 1})


@pytest.fixture
def f3_h1():
    """GF(3)[t], sigma(t) = t + 1, delta(t) = 1."""
    return build_domain({'kind': 'PolyOverFiniteField', 'q': 3,
                         'sigma_a': 1, 'sigma_b': 1, 'delta_h': 1})


@pytest.fixture
def f3_ht():
    """GF(3)[t], sigma(t) = t + 1, delta(t) = t."""
    return build_domain({'kind': 'PolyOverFiniteField', 'q': 3,
                         'sigma_a': 1, 'sigma_b': 1, 'delta_h': 't'})


@pytest.fixture
def f4_shift():
    """GF(4)[t], sigma(t) = t + 1, delta(t) = t (prime-power scalars)."""
    return build_domain({'kind': 'PolyOverFiniteField', 'q': 4,
                         'sigma_a': 1, 'sigma_b': 1, 'delta_h': 't'})


@pytest.fixture
def f4_affine():
    """GF(4)[t], sigma(t) = w*t + 1 with w of order 3."""
    return build_domain({'kind': 'PolyOverFiniteField', 'q': 4,
                         'sigma_a': 2, 'sigma_b': 1, 'delta_h': 't'})


@pytest.fixture
def q_scale2():
    """Q[t], sigma(t) = 2t, delta(t) = 1 (infinite sigma-orbits)."""
    return build_domain({'kind': 'PolyOverRationals', 'sigma_a': 2,
                         'sigma_b': 0, 'delta_h': 1})


@pytest.fixture
def q_deriv():
    """Q[t], sigma = identity, delta = d/dt."""
    return build_domain({'kind': 'PolyOverRationals', 'sigma_a': 1,
                         'sigma_b': 0, 'delta_h': 1})
