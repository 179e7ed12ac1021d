"""Stability, sigma-delta-primeness, largest stable ideals, classification,
inner-case minimal primes, and the extension falsifier."""

import pytest

from oreprimes import (GaussianInt, Ideal, PreconditionError, UndecidedError,
                       VerdictKind, classify_contraction, extend_and_falsify,
                       ideal_contains, ideal_make, ideal_sigma,
                       is_sigma_delta_prime, is_stable_ideal,
                       largest_stable_ideal, minimal_primes_inner)
from oreprimes.elements import parse_poly


def gi(x, y=0):
    return GaussianInt(x, y)


def cubic(dom):
    return ideal_make(dom, [parse_poly(dom.field, 't^3 + 2*t')])


def test_is_stable_examples(f3_h1):
    u = cubic(f3_h1)
    assert is_stable_ideal(f3_h1, u, 'sigma')
    assert is_stable_ideal(f3_h1, u, 'delta')
    assert is_stable_ideal(f3_h1, u, 'sigma_delta')
    t = ideal_make(f3_h1, [f3_h1.gen()])
    assert not is_stable_ideal(f3_h1, t, 'sigma')
    assert is_stable_ideal(f3_h1, Ideal.zero(f3_h1), 'sigma_delta')
    assert is_stable_ideal(f3_h1, Ideal.unit(f3_h1), 'sigma_delta')


def test_is_stable_gaussian(zi_d1, zi_d2):
    ram = ideal_make(zi_d1, [gi(1, 1)])
    assert is_stable_ideal(zi_d1, ram, 'sigma')
    assert not is_stable_ideal(zi_d1, ram, 'delta')   # delta(1+i) = 1
    assert is_stable_ideal(zi_d2, ram, 'delta')       # delta(1+i) = 2
    two = ideal_make(zi_d1, [gi(2)])
    assert is_stable_ideal(zi_d1, two, 'sigma_delta')
    five = ideal_make(zi_d1, [gi(5)])
    assert is_stable_ideal(zi_d1, five, 'sigma_delta')


def test_is_sigma_delta_prime_examples(f3_h1):
    assert is_sigma_delta_prime(f3_h1, cubic(f3_h1))
    assert not is_sigma_delta_prime(f3_h1, ideal_make(f3_h1, [f3_h1.gen()]))
    assert is_sigma_delta_prime(f3_h1, Ideal.zero(f3_h1))
    assert not is_sigma_delta_prime(f3_h1, Ideal.unit(f3_h1))
    u = parse_poly(f3_h1.field, 't^3 + 2*t')
    assert not is_sigma_delta_prime(f3_h1, ideal_make(f3_h1, [u * u]))


def test_is_sigma_delta_prime_ramified_square(zi_d1, zi_d2):
    # with delta(i) = 1, the ramified prime is not stable but its square is,
    # and no stable ideal has odd ramified valuation, so (2) is prime
    two = ideal_make(zi_d1, [gi(2)])
    assert is_sigma_delta_prime(zi_d1, two)
    assert not is_sigma_delta_prime(zi_d1, ideal_make(zi_d1, [gi(4)]))
    # with delta(i) = 2 the ramified prime itself is stable and refutes (2)
    assert is_sigma_delta_prime(zi_d2, ideal_make(zi_d2, [gi(1, 1)]))
    assert not is_sigma_delta_prime(zi_d2, two)


def test_largest_stable_examples(f3_h1, zi_d1, q_scale2):
    t = ideal_make(f3_h1, [f3_h1.gen()])
    assert largest_stable_ideal(f3_h1, t) == cubic(f3_h1)
    split = ideal_make(zi_d1, [gi(2, 1)])
    assert largest_stable_ideal(zi_d1, split) == ideal_make(zi_d1, [gi(5)])
    ram = ideal_make(zi_d1, [gi(1, 1)])
    assert largest_stable_ideal(zi_d1, ram) == ideal_make(zi_d1, [gi(2)])
    tq = q_scale2.gen()
    pm1 = ideal_make(q_scale2, [tq - q_scale2.one()])
    assert largest_stable_ideal(q_scale2, pm1).is_zero


def test_largest_stable_certificates(f3_ht, zi_d2):
    for dom, gens in ((f3_ht, [f3_ht.gen()]), (zi_d2, [gi(3, 2)])):
        p = ideal_make(dom, gens)
        m = largest_stable_ideal(dom, p)
        assert is_stable_ideal(dom, m, 'sigma_delta')
        assert ideal_contains(p, m)


def test_largest_stable_undecided(q_deriv):
    # sigma = id, delta = d/dt over Q: (t) admits no stable power, and the
    # refinement cannot certify ZERO, so the budget surfaces honestly
    p = ideal_make(q_deriv, [q_deriv.gen()])
    with pytest.raises(UndecidedError):
        largest_stable_ideal(q_deriv, p, budget=12)


def test_classify_pinned_cases(f3_h1, zi_d1, q_scale2):
    v1 = classify_contraction(f3_h1, cubic(f3_h1))
    assert v1.kind == VerdictKind.EXTENSION_MINIMAL

    v2 = classify_contraction(f3_h1, ideal_make(f3_h1, [f3_h1.gen()]))
    assert v2.kind == VerdictKind.NOT_MINIMAL
    assert v2.witness == cubic(f3_h1)

    tq = q_scale2.gen()
    v3 = classify_contraction(q_scale2, ideal_make(q_scale2, [tq - q_scale2.one()]))
    assert v3.kind == VerdictKind.CONTRACTION_MINIMAL

    v4 = classify_contraction(zi_d1, ideal_make(zi_d1, [gi(1, 1)]))
    assert v4.kind == VerdictKind.OUTSIDE_DICHOTOMY


def test_classify_witness_obligations(f3_h1, zi_d1):
    v = classify_contraction(f3_h1, ideal_make(f3_h1, [f3_h1.gen()]))
    w = v.witness
    assert not w.is_zero
    assert is_stable_ideal(f3_h1, w, 'sigma_delta')
    assert ideal_contains(v.p, w) and w != v.p

    v2 = classify_contraction(zi_d1, ideal_make(zi_d1, [gi(2, 1)]))
    assert v2.kind == VerdictKind.NOT_MINIMAL
    assert v2.witness == ideal_make(zi_d1, [gi(5)])


def test_classify_rejects_degenerate(f3_h1):
    with pytest.raises(PreconditionError):
        classify_contraction(f3_h1, Ideal.zero(f3_h1))
    with pytest.raises(PreconditionError):
        classify_contraction(f3_h1, Ideal.unit(f3_h1))
    # neither prime nor (sigma, delta)-prime
    u = parse_poly(f3_h1.field, 't^3 + 2*t')
    with pytest.raises(PreconditionError):
        classify_contraction(f3_h1, ideal_make(f3_h1, [u * u]))


def test_classify_sigma_fixed_valid_prime(zi_d1):
    # inert (3): sigma-fixed, delta-stable, hence (sigma, delta)-prime
    v = classify_contraction(zi_d1, ideal_make(zi_d1, [gi(3)]))
    assert v.kind == VerdictKind.EXTENSION_MINIMAL
    # (2) with d = 1 is the exotic (sigma, delta)-prime: still minimal
    v2 = classify_contraction(zi_d1, ideal_make(zi_d1, [gi(2)]))
    assert v2.kind == VerdictKind.EXTENSION_MINIMAL


def test_minimal_primes_inner_pinned(zi_d2):
    got = minimal_primes_inner(zi_d2, 25)
    expected = [ideal_make(zi_d2, [gi(1, 1)]),
                ideal_make(zi_d2, [gi(3)]),
                ideal_make(zi_d2, [gi(5)])]
    assert got == expected
    assert minimal_primes_inner(zi_d2, 1) == []


def test_minimal_primes_inner_f3(f3_h1):
    got = minimal_primes_inner(f3_h1, 27)
    assert cubic(f3_h1) in got
    # every member is sigma-prime: single squarefree orbit
    for q in got:
        assert is_sigma_delta_prime(f3_h1, q) or is_stable_ideal(f3_h1, q, 'sigma')


def test_minimal_primes_inner_rejects_non_inner(zi_d1, q_deriv):
    with pytest.raises(PreconditionError):
        minimal_primes_inner(zi_d1, 25)
    with pytest.raises(PreconditionError):
        minimal_primes_inner(q_deriv, 5)


def test_falsifier_finds_square_witness(f3_h1):
    u = parse_poly(f3_h1.field, 't^3 + 2*t')
    p2 = ideal_make(f3_h1, [u * u])
    w = extend_and_falsify(f3_h1, p2, samples=500, seed=0)
    assert w is not None
    p = cubic(f3_h1)
    from oreprimes import in_extended_ideal, ore_mul
    assert not in_extended_ideal(w.f, p2) and not in_extended_ideal(w.g, p2)
    for r in w.middles:
        assert in_extended_ideal(ore_mul(ore_mul(w.f, r), w.g), p2)


def test_falsifier_silent_on_primes(f3_h1, zi_d1):
    assert extend_and_falsify(f3_h1, cubic(f3_h1), samples=120, seed=3) is None
    assert extend_and_falsify(zi_d1, ideal_make(zi_d1, [gi(2)]),
                              samples=120, seed=3) is None


def test_falsifier_unit_and_unstable(f3_h1):
    assert extend_and_falsify(f3_h1, Ideal.unit(f3_h1), samples=10, seed=0) is None
    with pytest.raises(PreconditionError):
        extend_and_falsify(f3_h1, ideal_make(f3_h1, [f3_h1.gen()]), samples=10, seed=0)


def test_stability_of_orbit_products(f3_h1, zi_d2):
    # products of complete orbits are sigma-stable; partial ones are not
    t = ideal_make(f3_h1, [f3_h1.gen()])
    partial = ideal_make(f3_h1, [f3_h1.gen() * (f3_h1.gen() + f3_h1.one())])
    assert not is_stable_ideal(f3_h1, partial, 'sigma')
    orbit_prod = cubic(f3_h1)
    assert ideal_sigma(f3_h1, orbit_prod) == orbit_prod
    assert ideal_sigma(f3_h1, t) != t
