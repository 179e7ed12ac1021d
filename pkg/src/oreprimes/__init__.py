"""oreprimes: exact skew-polynomial arithmetic over Z[i], GF(q)[t] and Q[t],
with oracle-verified classification of minimal prime contractions.

The coefficient ring D carries an automorphism sigma and a sigma-derivation
delta; the skew polynomial ring D[x; sigma, delta] multiplies by the rule
x*a = sigma(a)*x + delta(a).  This package provides the ideal lattice of D
in canonical factored form, the ring arithmetic of D[x; sigma, delta], the
change of variable to D[y; sigma] when delta is inner, decision procedures
for (sigma, delta)-stability and -primeness, the largest stable ideal inside
a prime, and the classification of contractions of minimal primes -- every
fast decision cross-checked against a definitional brute-force oracle.
"""

__version__ = '0.1.0'

from .domains import (Domain, DomainKind, apply_delta, apply_sigma,
                      build_domain, delta_power_expand, inner_witness)
from .elements import GaussianInt, Poly
from .errors import (DomainError, FactorBudgetError, NotApplicableError,
                     OracleDisagreement, OrePrimesError, ParseError,
                     PreconditionError, UndecidedError)
from .ideals import (Ideal, OrbitResult, OrbitStatus, enumerate_primes,
                     ideal_contains, ideal_factor, ideal_from_json,
                     ideal_intersect, ideal_make, ideal_product, ideal_sigma,
                     sigma_orbit)
from .oracle import (OracleBudget, brute_is_sigma_delta_prime,
                     brute_largest_stable, brute_minimality_check,
                     enumerate_stable_ideals)
from .orepoly import (OrePoly, RingTag, from_pure_sigma,
                      from_right_coefficients, in_extended_ideal, ore_mul,
                      orepoly_from_json, right_coefficients, to_pure_sigma,
                      xn_times_a)
from .primestruct import (FalsifierWitness, Verdict, VerdictKind,
                          classify_contraction, extend_and_falsify,
                          is_sigma_delta_prime, is_stable_ideal,
                          largest_stable_ideal, minimal_primes_inner)

__all__ = [
    '__version__',
    'Domain', 'DomainKind', 'build_domain',
    'apply_sigma', 'apply_delta', 'delta_power_expand', 'inner_witness',
    'GaussianInt', 'Poly',
    'Ideal', 'OrbitResult', 'OrbitStatus',
    'ideal_make', 'ideal_factor', 'ideal_product', 'ideal_intersect',
    'ideal_contains', 'ideal_sigma', 'ideal_from_json',
    'sigma_orbit', 'enumerate_primes',
    'OrePoly', 'RingTag', 'ore_mul', 'xn_times_a', 'right_coefficients',
    'from_right_coefficients', 'in_extended_ideal', 'to_pure_sigma',
    'from_pure_sigma', 'orepoly_from_json',
    'Verdict', 'VerdictKind', 'FalsifierWitness',
    'is_stable_ideal', 'is_sigma_delta_prime', 'largest_stable_ideal',
    'classify_contraction', 'minimal_primes_inner', 'extend_and_falsify',
    'OracleBudget', 'enumerate_stable_ideals', 'brute_is_sigma_delta_prime',
    'brute_largest_stable', 'brute_minimality_check',
    'OrePrimesError', 'ParseError', 'DomainError', 'PreconditionError',
    'NotApplicableError', 'FactorBudgetError', 'UndecidedError',
    'OracleDisagreement',
]
