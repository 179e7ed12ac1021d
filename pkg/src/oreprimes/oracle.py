"""Brute-force reference implementations over bounded instances.

The oracle shares the Ideal container but none of the fast-path logic:
stability, containment and products are decided at the generator level (ring
element arithmetic and exact division only), and primeness is the definition
quantified over every enumerated stable pair.  Exhaustive within a budget
and deterministic, so any disagreement with a fast path is a defect in one
of the two routes.
"""

from .domains import DomainKind
from .errors import PreconditionError
from .ideals import Ideal, enumerate_primes
from .elements import gaussian_exact_div, poly_exact_div


class OracleBudget:
    """Bounds for exhaustive enumeration: ideal norm, exponent cap, sample
    count and seed for any randomized caller."""

    __slots__ = ('norm_bound', 'max_exponent', 'sample_count', 'seed')

    def __init__(self, norm_bound, max_exponent=3, sample_count=500, seed=0):
        if norm_bound < 1 or max_exponent < 1 or sample_count < 1:
            raise PreconditionError('oracle budget fields must be positive')
        self.norm_bound = norm_bound
        self.max_exponent = max_exponent
        self.sample_count = sample_count
        self.seed = seed

    def to_json(self):
        return {'norm_bound': self.norm_bound, 'max_exponent': self.max_exponent,
                'sample_count': self.sample_count, 'seed': self.seed}


def _check_oracle_domain(dom):
    if dom.kind is DomainKind.POLY_Q:
        raise PreconditionError('the oracle enumerates GF(q)[t] and Z[i] only '
                                '(Q[t] has unbounded coefficient heights)')


def _divides(dom, a, b):
    """Whether the element a divides the element b."""
    if dom.kind is DomainKind.GAUSSIAN:
        return gaussian_exact_div(b, a) is not None
    return poly_exact_div(b, a) is not None


def _gen_contains(dom, I_gen, elem):
    """elem in (I_gen), decided by exact division (unit/zero generators
    mean the whole ring / the zero ideal)."""
    if not I_gen:
        return not elem
    return _divides(dom, I_gen, elem)


def _gen_subset(dom, J_gen, I_gen):
    """(J_gen) subset of (I_gen) at the generator level."""
    if not J_gen:
        return True  # zero ideal sits inside everything
    if not I_gen:
        return False
    return _divides(dom, I_gen, J_gen)


def _is_stable_by_definition(dom, I):
    """Generator-level stability: sigma(g) and delta(g) land back in (g).

    sigma is a ring map, so sigma(r*g) = sigma(r)*sigma(g) keeps the check on
    the generator; for delta, delta(r*g) = sigma(r)*delta(g) + delta(r)*g."""
    if I.is_zero:
        return True
    g = I.generator()
    return (_gen_contains(dom, g, dom.sigma(g))
            and _gen_contains(dom, g, dom.delta(g)))


def enumerate_ideals(dom, norm_bound, max_exponent=None):
    """All nonzero ideals of norm <= norm_bound (including the unit ideal),
    optionally capping exponents; deterministic order.

    Iterative multiset walk over the norm-sorted primes: each stack entry
    may only add primes with a higher index, so every ideal appears once,
    and the sorted norms let a whole tail be pruned at once."""
    _check_oracle_domain(dom)
    primes = enumerate_primes(dom, norm_bound)
    gens = [p.primes()[0] for p in primes]
    norms = [p.norm() for p in primes]
    out = []
    stack = [(0, (), 1)]
    while stack:
        idx, factors, norm = stack.pop()
        out.append(Ideal(dom, factors))
        for j in range(idx, len(primes)):
            pn = norms[j]
            acc = norm * pn
            if acc > norm_bound:
                break
            e = 1
            while acc <= norm_bound and (max_exponent is None or e <= max_exponent):
                stack.append((j + 1, factors + ((gens[j], e),), acc))
                e += 1
                acc *= pn
    out.sort(key=lambda I: (I.norm(), str(I)))
    return out


_stable_cache = {}


def enumerate_stable_ideals(dom, budget):
    """All (sigma, delta)-stable ideals within the budget, ZERO included,
    each certified by the definitional generator-level check.

    The sweep over all in-budget ideals is cached per (domain, bounds);
    results are immutable Ideal values, and the exhaustive enumeration is
    seed-independent by construction."""
    _check_oracle_domain(dom)
    key = (dom, budget.norm_bound, budget.max_exponent)
    cached = _stable_cache.get(key)
    if cached is None:
        cached = [Ideal.zero(dom)]
        for I in enumerate_ideals(dom, budget.norm_bound, budget.max_exponent):
            if _is_stable_by_definition(dom, I):
                cached.append(I)
        _stable_cache[key] = cached
    return list(cached)


def brute_is_sigma_delta_prime(dom, I, budget):
    """Definitional (sigma, delta)-primeness quantified over every stable
    pair within the budget."""
    if I.is_zero:
        return True  # D is a domain: J*K = 0 forces J = 0 or K = 0
    if not _is_stable_by_definition(dom, I):
        return False
    if I.is_unit:
        return False
    stable = enumerate_stable_ideals(dom, budget)
    gI = I.generator()
    gens = [J.generator() for J in stable]
    for gJ in gens:
        for gK in gens:
            prod = gJ * gK
            if _gen_subset(dom, prod, gI):
                if not (_gen_subset(dom, gJ, gI) or _gen_subset(dom, gK, gI)):
                    return False
    return True


def brute_largest_stable(dom, p, budget):
    """The containment-maximum over enumerated stable ideals inside the
    nonzero prime p.  Returns (ideal, flagged); `flagged` marks runs where
    the true maximum may exceed the enumeration (no nonzero stable
    candidate was found, or the orbit mass already exceeds the budget)."""
    _check_oracle_domain(dom)
    if not p.is_prime_ideal():
        raise PreconditionError('brute_largest_stable expects a nonzero prime ideal')
    gP = p.generator()
    candidates = []
    for I in enumerate_stable_ideals(dom, budget):
        if not I.is_zero and not I.is_unit and _gen_subset(dom, I.generator(), gP):
            candidates.append(I)
    if not candidates:
        return Ideal.zero(dom), True
    best = candidates[0]
    for I in candidates[1:]:
        if _gen_subset(dom, best.generator(), I.generator()):
            best = I
    # the maximum is unique: it must contain every other candidate
    for I in candidates:
        if not _gen_subset(dom, I.generator(), best.generator()):
            raise AssertionError('stable candidates under p have no unique maximum')
    return best, False


def brute_minimality_check(dom, p, budget):
    """No nonzero (sigma, delta)-prime strictly inside p within the budget.

    Precondition: p is (sigma, delta)-prime (definitionally); ZERO is
    vacuously minimal."""
    if p.is_zero:
        return True
    if not brute_is_sigma_delta_prime(dom, p, budget):
        raise PreconditionError('brute_minimality_check expects a (sigma, delta)-prime ideal')
    gP = p.generator()
    for q in enumerate_stable_ideals(dom, budget):
        if q.is_zero or q == p:
            continue
        gQ = q.generator()
        if _gen_subset(dom, gQ, gP) and not _gen_subset(dom, gP, gQ):
            if brute_is_sigma_delta_prime(dom, q, budget):
                return False
    return True


__all__ = [
    'OracleBudget', 'enumerate_ideals', 'enumerate_stable_ideals',
    'brute_is_sigma_delta_prime', 'brute_largest_stable',
    'brute_minimality_check',
]
