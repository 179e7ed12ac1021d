"""Brute-force oracle: pinned enumerations, definitional decisions, and
determinism."""

import pytest

from oreprimes import (GaussianInt, Ideal, OracleBudget, PreconditionError,
                       brute_is_sigma_delta_prime, brute_largest_stable,
                       brute_minimality_check, enumerate_stable_ideals,
                       ideal_make)
from oreprimes.elements import parse_poly
from oreprimes.oracle import enumerate_ideals


def gi(x, y=0):
    return GaussianInt(x, y)


def test_enumerate_stable_pinned_f3(f3_h1):
    got = enumerate_stable_ideals(f3_h1, OracleBudget(27))
    assert Ideal.zero(f3_h1) in got
    assert Ideal.unit(f3_h1) in got
    assert ideal_make(f3_h1, [parse_poly(f3_h1.field, 't^3 + 2*t')]) in got


def test_enumerate_stable_trivial_bound(f3_h1):
    got = enumerate_stable_ideals(f3_h1, OracleBudget(1))
    assert got == [Ideal.zero(f3_h1), Ideal.unit(f3_h1)]


def test_enumerate_stable_pinned_gaussian(zi_d1):
    got = enumerate_stable_ideals(zi_d1, OracleBudget(50, max_exponent=6))
    assert ideal_make(zi_d1, [gi(2)]) in got
    assert ideal_make(zi_d1, [gi(5)]) in got
    assert ideal_make(zi_d1, [gi(1, 1)]) not in got


def test_enumerate_q_rejected(q_scale2):
    with pytest.raises(PreconditionError):
        enumerate_stable_ideals(q_scale2, OracleBudget(5))


def test_brute_prime_pinned(f3_h1):
    budget = OracleBudget(729, max_exponent=6)
    u = parse_poly(f3_h1.field, 't^3 + 2*t')
    assert brute_is_sigma_delta_prime(f3_h1, ideal_make(f3_h1, [u]), budget)
    assert not brute_is_sigma_delta_prime(f3_h1, ideal_make(f3_h1, [u * u]), budget)
    assert brute_is_sigma_delta_prime(f3_h1, Ideal.zero(f3_h1), budget)
    assert not brute_is_sigma_delta_prime(f3_h1, Ideal.unit(f3_h1), budget)


def test_brute_largest_pinned(f3_h1, zi_d1):
    best, flagged = brute_largest_stable(
        f3_h1, ideal_make(f3_h1, [f3_h1.gen()]), OracleBudget(729, 6))
    assert best == ideal_make(f3_h1, [parse_poly(f3_h1.field, 't^3 + 2*t')])
    assert not flagged
    best, flagged = brute_largest_stable(
        zi_d1, ideal_make(zi_d1, [gi(2, 1)]), OracleBudget(50, 6))
    assert best == ideal_make(zi_d1, [gi(5)]) and not flagged


def test_brute_largest_flags_out_of_budget(f3_h1):
    # quadratic orbit product has norm 729, far beyond this budget
    quad = ideal_make(f3_h1, [parse_poly(f3_h1.field, 't^2 + 1')])
    best, flagged = brute_largest_stable(f3_h1, quad, OracleBudget(27, 3))
    assert best.is_zero and flagged


def test_brute_minimality(f3_h1, zi_d1):
    budget = OracleBudget(729, 6)
    u = parse_poly(f3_h1.field, 't^3 + 2*t')
    assert brute_minimality_check(f3_h1, ideal_make(f3_h1, [u]), budget)
    assert brute_minimality_check(f3_h1, Ideal.zero(f3_h1), budget)
    with pytest.raises(PreconditionError):
        brute_minimality_check(f3_h1, ideal_make(f3_h1, [u * u]), budget)
    assert brute_minimality_check(zi_d1, ideal_make(zi_d1, [gi(2)]),
                                  OracleBudget(50, 6))


def test_oracle_determinism(f3_h1):
    a = enumerate_stable_ideals(f3_h1, OracleBudget(81, 4, seed=1))
    b = enumerate_stable_ideals(f3_h1, OracleBudget(81, 4, seed=999))
    assert a == b


def test_enumerate_ideals_counts(f3_h1):
    # nonzero ideals of GF(3)[t] with norm <= 3^k are the monic polynomials
    # of degree <= k
    assert len(enumerate_ideals(f3_h1, 3)) == 1 + 3
    assert len(enumerate_ideals(f3_h1, 9)) == 1 + 3 + 9
    assert len(enumerate_ideals(f3_h1, 81)) == 1 + 3 + 9 + 27 + 81
