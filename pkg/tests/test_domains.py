"""Domain construction, sigma/delta operations, and the inner-witness solver.

The delta oracles here are independent of the closed forms inside the
package: delta(a^m) is recomputed by recursive Leibniz splitting using only
delta on the base element, and inner-witness absence is confirmed by
exhaustive search over a small box.
"""

import random

import pytest

from oreprimes import (DomainError, GaussianInt, NotApplicableError,
                       apply_delta, apply_sigma, build_domain,
                       delta_power_expand, inner_witness)
from oreprimes.domains import is_inner_witness
from oreprimes.elements import gaussian_exact_div, parse_poly


def leibniz_power_oracle(dom, a, m):
    """delta(a^m) via delta(a * a^(m-1)) = sigma(a) delta(a^(m-1)) + delta(a) a^(m-1)."""
    if m == 1:
        return apply_delta(dom, a)
    return apply_sigma(dom, a) * leibniz_power_oracle(dom, a, m - 1) \
        + apply_delta(dom, a) * a ** (m - 1)


def test_build_domain_examples(zi_d2, f3_h1):
    # valid configurations construct; the affine map with a = 0 does not
    assert zi_d2.describe()['sigma'] == 'conjugation'
    assert f3_h1.describe()['q'] == 3
    with pytest.raises(DomainError):
        build_domain({'kind': 'PolyOverRationals', 'sigma_a': 0, 'sigma_b': 1})


def test_build_domain_rejects_identity_with_nonzero_gaussian_delta():
    # delta(i*i) = delta(-1) = 0 but Leibniz gives 2*i*d, so d must be 0
    with pytest.raises(DomainError):
        build_domain({'kind': 'GaussianIntegers', 'sigma': 'identity', 'delta_d': 1})
    dom = build_domain({'kind': 'GaussianIntegers', 'sigma': 'identity', 'delta_d': 0})
    assert dom.delta_is_zero


def test_build_domain_rejects_malformed():
    with pytest.raises(DomainError):
        build_domain({'kind': 'NoSuchRing'})
    with pytest.raises(DomainError):
        build_domain({'kind': 'PolyOverFiniteField', 'q': 6, 'sigma_a': 1})
    with pytest.raises(DomainError):
        build_domain({'kind': 'GaussianIntegers', 'delta_d': 'zebra+i'})


def test_apply_sigma_examples(zi_d2, f3_h1):
    assert apply_sigma(zi_d2, GaussianInt(3, 4)) == GaussianInt(3, -4)
    t = f3_h1.gen()
    assert apply_sigma(f3_h1, t, -1) == parse_poly(f3_h1.field, '2 mod 3 + t')
    a = GaussianInt(5, -2)
    assert apply_sigma(zi_d2, a, 0) == a


@pytest.mark.parametrize('fixture', ['zi_d2', 'zi_d1', 'f3_h1', 'f3_ht',
                                     'f4_shift', 'f4_affine', 'q_scale2', 'q_deriv'])
def test_sigma_round_trip(fixture, request):
    dom = request.getfixturevalue(fixture)
    rng = random.Random(11)
    for k in range(-10, 11):
        a = dom.random_element(rng)
        assert apply_sigma(dom, apply_sigma(dom, a, k), -k) == a


def test_apply_delta_examples(zi_d2, f3_h1):
    assert apply_delta(zi_d2, GaussianInt(3, 4)) == GaussianInt(8)
    t = f3_h1.gen()
    assert apply_delta(f3_h1, t * t) == parse_poly(f3_h1.field, '1 mod 3 + (2 mod 3)*t')
    assert not apply_delta(zi_d2, zi_d2.one())
    assert not apply_delta(f3_h1, f3_h1.one())


@pytest.mark.parametrize('fixture', ['zi_d2', 'zi_d1', 'f3_h1', 'f3_ht',
                                     'f4_shift', 'f4_affine', 'q_scale2', 'q_deriv'])
def test_leibniz_rule_sampled(fixture, request):
    dom = request.getfixturevalue(fixture)
    rng = random.Random(23)
    for _ in range(500):
        u, v = dom.random_element(rng), dom.random_element(rng)
        assert apply_delta(dom, u * v) == \
            apply_sigma(dom, u) * apply_delta(dom, v) + apply_delta(dom, u) * v


def test_delta_power_expand_examples(zi_d2, f3_h1):
    i = GaussianInt(0, 1)
    assert delta_power_expand(zi_d2, i, 2) == GaussianInt(0)
    t = f3_h1.gen()
    assert delta_power_expand(f3_h1, t, 3) == f3_h1.one()
    a = GaussianInt(2, 5)
    assert delta_power_expand(zi_d2, a, 1) == apply_delta(zi_d2, a)


@pytest.mark.parametrize('fixture', ['zi_d2', 'zi_d1', 'f3_h1', 'f3_ht',
                                     'f4_shift', 'f4_affine', 'q_scale2', 'q_deriv'])
def test_delta_power_expand_matches_oracles(fixture, request):
    dom = request.getfixturevalue(fixture)
    rng = random.Random(29)
    for _ in range(200):
        a = dom.random_element(rng, 4)
        m = rng.randint(1, 8)
        expanded = delta_power_expand(dom, a, m)
        assert expanded == apply_delta(dom, a ** m)
        assert expanded == leibniz_power_oracle(dom, a, m)


def test_inner_witness_gaussian(zi_d2, zi_d1):
    a = inner_witness(zi_d2)
    assert a == GaussianInt(0, -1)
    # verify the defining identity on the generator, independently
    i = GaussianInt(0, 1)
    assert a * i - apply_sigma(zi_d2, i) * a == GaussianInt(2)
    assert inner_witness(zi_d1) is None


def test_inner_witness_absent_confirmed_by_search(zi_d1):
    # exhaustive: no a with 2*a*i = 1 in a generous box
    for x in range(-4, 5):
        for y in range(-4, 5):
            a = GaussianInt(x, y)
            assert GaussianInt(2) * a * GaussianInt(0, 1) != GaussianInt(1)


def test_inner_witness_poly(f3_h1, f4_shift, q_scale2):
    a = inner_witness(f3_h1)
    assert a == f3_h1.from_int(2)
    t = f3_h1.gen()
    assert a * t - apply_sigma(f3_h1, t) * a == f3_h1.one()
    assert is_inner_witness(f3_h1, a)
    assert inner_witness(f4_shift) is not None
    assert inner_witness(q_scale2) is None  # 1/(t - 2t) is not polynomial


def test_inner_witness_identity_cases(q_deriv):
    with pytest.raises(NotApplicableError):
        inner_witness(q_deriv)  # sigma = id, delta != 0
    trivial = build_domain({'kind': 'PolyOverRationals', 'sigma_a': 1,
                            'sigma_b': 0, 'delta_h': 0})
    assert inner_witness(trivial) == trivial.zero()


@pytest.mark.parametrize('fixture', ['zi_d2', 'f3_h1', 'f3_ht', 'f4_shift'])
def test_inner_witness_identity_on_samples(fixture, request):
    dom = request.getfixturevalue(fixture)
    a = inner_witness(dom)
    assert a is not None
    rng = random.Random(31)
    for _ in range(200):
        b = dom.random_element(rng)
        assert apply_delta(dom, b) == a * b - apply_sigma(dom, b) * a
