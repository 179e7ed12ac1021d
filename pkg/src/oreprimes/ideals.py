"""Exact ideal arithmetic in the coefficient domains.

All three coefficient rings are principal ideal (in fact Euclidean or
nearly-Euclidean) Dedekind domains, so an ideal is either ZERO or a product
of prime-power factors with a canonical generator per prime:

* Z[i]: the unique associate with real part > 0 and imaginary part >= 0;
* GF(q)[t] and Q[t]: the monic irreducible generator.

Ideals are stored in factored form -- a sorted tuple of (prime generator,
exponent) pairs -- so product, intersection, containment and equality are
exponent arithmetic.  The norm is the residue-ring cardinality for Z[i] and
GF(q)[t]; Q[t] has no finite residue rings, so a height surrogate
(degree + coefficient height per prime) bounds searches there.

Factoring a generator:

* Z[i]: factor the integer norm (sympy.factorint), then split each rational
  prime into its Gaussian primes (sqrt of -1 mod p for split primes) and
  read off exponents by exact division.
* GF(q)[t]: trial division by the monic irreducibles enumerated in
  increasing degree (desk-scale degrees, and the sieve is cached).
* Q[t]: content extraction plus rational-root splitting; inputs that do not
  split into linear factors raise FactorBudgetError.
"""

from fractions import Fraction
from functools import lru_cache

from sympy import divisors, factorint, isprime, primerange, sqrt_mod

from .domains import DomainKind
from .elements import (GaussianInt, Poly, gaussian_canonical_associate,
                       gaussian_exact_div, gaussian_gcd, poly_exact_div,
                       poly_gcd, poly_height, rational_height)
from .errors import FactorBudgetError, PreconditionError
from .scalars import QQ as QQ_FIELD

_Q_ROOT_CANDIDATE_BUDGET = 20_000


class Ideal:
    """An ideal of a coefficient domain in canonical factored form."""

    __slots__ = ('domain', 'is_zero', 'factors')

    def __init__(self, domain, factors=(), is_zero=False):
        self.domain = domain
        self.is_zero = is_zero
        if is_zero:
            self.factors = ()
        else:
            kept = [(p, e) for p, e in factors if e > 0]
            kept.sort(key=lambda pe: _prime_key(domain, pe[0]))
            self.factors = tuple(kept)

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, domain):
        return cls(domain, is_zero=True)

    @classmethod
    def unit(cls, domain):
        return cls(domain, ())

    @classmethod
    def principal(cls, domain, g):
        return ideal_make(domain, [g])

    # -- structure -----------------------------------------------------------

    @property
    def is_unit(self):
        return not self.is_zero and not self.factors

    def is_proper(self):
        return not self.is_unit

    def is_prime_ideal(self):
        """A nonzero prime ideal: exactly one factor with exponent 1."""
        return len(self.factors) == 1 and self.factors[0][1] == 1

    def exponent_of(self, prime):
        for p, e in self.factors:
            if p == prime:
                return e
        return 0

    def primes(self):
        return [p for p, _ in self.factors]

    def generator(self):
        """A canonical principal generator (0 for ZERO, 1 for the unit ideal)."""
        if self.is_zero:
            return self.domain.zero()
        g = self.domain.one()
        for p, e in self.factors:
            g = g * p ** e
        return g

    def norm(self):
        """Residue-ring cardinality (Z[i], GF(q)[t]); height surrogate (Q[t]).

        Multiplicative over the factored form; 0 for the ZERO ideal."""
        if self.is_zero:
            return 0
        n = 1
        for p, e in self.factors:
            n *= prime_norm(self.domain, p) ** e
        return n

    def radical(self):
        if self.is_zero:
            return self
        return Ideal(self.domain, [(p, 1) for p, _ in self.factors])

    def contains_element(self, a):
        if self.is_zero:
            return not a
        if self.is_unit:
            return True
        return _exact_div(self.domain, a, self.generator()) is not None

    def __eq__(self, other):
        return (isinstance(other, Ideal) and self.domain == other.domain
                and self.is_zero == other.is_zero and self.factors == other.factors)

    def __hash__(self):
        return hash((self.is_zero, self.factors))

    def __str__(self):
        if self.is_zero:
            return '(0)'
        if self.is_unit:
            return '(1)'
        parts = []
        for p, e in self.factors:
            gen = self.domain.format_element(p)
            parts.append(f'({gen})' if e == 1 else f'({gen})^{e}')
        return '*'.join(parts)

    def __repr__(self):
        return f'Ideal[{self}]'

    def to_json(self):
        """Spec wire format: {"zero": true} / {"unit": true} / factor list."""
        if self.is_zero:
            return {'zero': True}
        if self.is_unit:
            return {'unit': True}
        return [{'prime': self.domain.format_element(p), 'exp': e}
                for p, e in self.factors]


def ideal_from_json(domain, data):
    if isinstance(data, dict):
        if data.get('zero'):
            return Ideal.zero(domain)
        if data.get('unit'):
            return Ideal.unit(domain)
        raise PreconditionError(f'bad ideal serialization: {data!r}')
    factors = [(domain.parse_element(item['prime']), int(item['exp']))
               for item in data]
    return Ideal(domain, factors)


def _prime_key(domain, p):
    return (prime_norm(domain, p), domain.format_element(p))


def _exact_div(domain, a, b):
    if domain.kind is DomainKind.GAUSSIAN:
        return gaussian_exact_div(a, b)
    return poly_exact_div(a, b)


def element_valuation(domain, a, prime, cap=64):
    """v_prime(a) for a nonzero element, None (infinity) for a = 0."""
    if not a:
        return None
    v = 0
    while v < cap:
        q = _exact_div(domain, a, prime)
        if q is None:
            return v
        a = q
        v += 1
    raise PreconditionError('valuation exceeded cap; input out of desk scale')


def prime_norm(domain, p):
    if domain.kind is DomainKind.GAUSSIAN:
        return p.norm()
    if domain.kind is DomainKind.POLY_FQ:
        return domain.field.q ** p.degree
    return p.degree + poly_height(p)


# ---------------------------------------------------------------------------
# Canonical generators and factorization

def canonical_prime(domain, p):
    if domain.kind is DomainKind.GAUSSIAN:
        return gaussian_canonical_associate(p)
    return p.monic()


def _factor_gaussian(g):
    """Factor a nonzero, non-unit Gaussian integer into canonical primes."""
    out = {}
    remaining = g
    for p, _ in sorted(factorint(g.norm()).items()):
        if p == 2:
            pi = GaussianInt(1, 1)
            cands = [pi]
        elif p % 4 == 3:
            cands = [GaussianInt(p)]
        else:
            u = sqrt_mod(-1, p)
            pi = gaussian_canonical_associate(gaussian_gcd(GaussianInt(p), GaussianInt(u, 1)))
            cands = [pi, gaussian_canonical_associate(pi.conjugate())]
        for pi in cands:
            e = 0
            while True:
                q = gaussian_exact_div(remaining, pi)
                if q is None:
                    break
                remaining, e = q, e + 1
            if e:
                out[pi] = e
    assert remaining.is_unit(), 'Gaussian factorization left a non-unit cofactor'
    return sorted(out.items(), key=lambda pe: (pe[0].norm(), pe[0].x, pe[0].y))


@lru_cache(maxsize=None)
def _monic_irreducibles(field, max_degree):
    """All monic irreducibles over GF(q) of degree <= max_degree, by degree.

    Sieve by trial division: a reducible polynomial of degree d has an
    irreducible factor of degree <= d/2, which was already enumerated."""
    out = []
    for d in range(1, max_degree + 1):
        for enc in range(field.q ** d):
            coeffs = []
            n = enc
            for _ in range(d):
                n, r = divmod(n, field.q)
                coeffs.append(r)
            f = Poly(field, coeffs + [field.one])
            if all(poly_exact_div(f, g) is None for g in out if 2 * g.degree <= d):
                out.append(f)
    return tuple(out)


def _factor_fq_poly(field, f):
    """Factor a monic polynomial over GF(q) by trial division."""
    out = []
    remaining = f
    for p in _monic_irreducibles(field, max(1, f.degree)):
        if p.degree > remaining.degree:
            break
        e = 0
        while True:
            q = poly_exact_div(remaining, p)
            if q is None:
                break
            remaining, e = q, e + 1
        if e:
            out.append((p, e))
        if remaining.degree == 0:
            break
    assert remaining.degree <= 0, 'GF(q)[t] factorization left a cofactor'
    return out


def _rational_root_candidates(f):
    """Rational-root-theorem candidates for a polynomial with rational
    coefficients (cleared to integers first)."""
    lcm = 1
    for c in f.coeffs:
        lcm = lcm * c.denominator // _gcd_int(lcm, c.denominator)
    ints = [int(c * lcm) for c in f.coeffs]
    lead = abs(ints[-1])
    k = 0
    while ints[k] == 0:
        k += 1
    const = abs(ints[k])
    num_divs, den_divs = divisors(const), divisors(lead)
    if len(num_divs) * len(den_divs) * 2 > _Q_ROOT_CANDIDATE_BUDGET:
        raise FactorBudgetError('rational root search budget exceeded')
    cands = set()
    for n in num_divs:
        for d in den_divs:
            cands.add(Fraction(n, d))
            cands.add(Fraction(-n, d))
    return cands


def _gcd_int(a, b):
    while b:
        a, b = b, a % b
    return a


def _factor_q_poly(f):
    """Split a monic rational polynomial into linear factors, or raise."""
    out = {}
    remaining = f
    t = Poly.gen(QQ_FIELD)
    # factor out t^k
    k = 0
    while remaining.coeffs and remaining.coeffs[0] == Fraction(0) and remaining.degree > 0:
        remaining = poly_exact_div(remaining, t)
        k += 1
    if k:
        out[t] = k
    while remaining.degree >= 1:
        found = None
        for c in sorted(_rational_root_candidates(remaining),
                        key=lambda fr: (rational_height(fr), fr)):
            if remaining.eval_at(c) == Fraction(0):
                found = c
                break
        if found is None:
            raise FactorBudgetError(
                'Q[t] factorization supports only inputs that split into '
                f'linear factors; irreducible cofactor of degree {remaining.degree}')
        lin = Poly(QQ_FIELD, [-found, Fraction(1)])
        e = 0
        while True:
            q = poly_exact_div(remaining, lin)
            if q is None:
                break
            remaining, e = q, e + 1
        out[lin] = out.get(lin, 0) + e
    return sorted(out.items(), key=lambda pe: (pe[0].degree + poly_height(pe[0]),
                                               str(pe[0])))


def ideal_make(dom, gens):
    """The ideal generated by gens, in canonical factored form."""
    if not gens:
        raise PreconditionError('ideal_make needs at least one generator')
    nonzero = [g for g in gens if g]
    if not nonzero:
        return Ideal.zero(dom)
    g = nonzero[0]
    for other in nonzero[1:]:
        if dom.kind is DomainKind.GAUSSIAN:
            g = gaussian_gcd(g, other)
        else:
            g = poly_gcd(g, other)
    g = canonical_prime(dom, g)
    if dom.is_unit(g):
        return Ideal.unit(dom)
    if dom.kind is DomainKind.GAUSSIAN:
        factors = _factor_gaussian(g)
    elif dom.kind is DomainKind.POLY_FQ:
        factors = _factor_fq_poly(dom.field, g.monic())
    else:
        factors = _factor_q_poly(g.monic())
    return Ideal(dom, factors)


def ideal_factor(I):
    """Canonical factorization as a list of (prime Ideal, exponent) pairs.

    Each listed prime is re-verified (irreducibility / Gaussian-prime test)."""
    if I.is_zero:
        raise PreconditionError('the zero ideal has no factorization')
    out = []
    for p, e in I.factors:
        if not _verify_prime(I.domain, p):
            raise AssertionError(f'factor failed the primality recheck: {p}')
        out.append((Ideal(I.domain, [(p, 1)]), e))
    return out


def _verify_prime(domain, p):
    if domain.kind is DomainKind.GAUSSIAN:
        n = p.norm()
        if isprime(n):
            return True
        # inert rational prime: norm p^2 with p = 3 mod 4
        root = int(round(n ** 0.5))
        return root * root == n and isprime(root) and root % 4 == 3 and p.y == 0
    if domain.kind is DomainKind.POLY_FQ:
        if p.degree < 1:
            return False
        return all(poly_exact_div(p, g) is None
                   for g in _monic_irreducibles(domain.field, p.degree // 2))
    return p.degree == 1  # linear monic over Q


# ---------------------------------------------------------------------------
# Lattice operations (exponent arithmetic on factored forms)

def _check_same_domain(I, J):
    if I.domain != J.domain:
        raise PreconditionError('ideals live in different domains')


def ideal_product(I, J):
    _check_same_domain(I, J)
    if I.is_zero or J.is_zero:
        return Ideal.zero(I.domain)
    exps = dict(I.factors)
    for p, e in J.factors:
        exps[p] = exps.get(p, 0) + e
    return Ideal(I.domain, exps.items())


def ideal_intersect(I, J):
    _check_same_domain(I, J)
    if I.is_zero or J.is_zero:
        return Ideal.zero(I.domain)
    exps = dict(I.factors)
    for p, e in J.factors:
        exps[p] = max(exps.get(p, 0), e)
    return Ideal(I.domain, exps.items())


def ideal_contains(I, J):
    """True iff J is a subset of I (I divides J in the factored order)."""
    _check_same_domain(I, J)
    if J.is_zero:
        return True
    if I.is_zero:
        return False
    return all(J.exponent_of(p) >= e for p, e in I.factors)


def ideal_sigma(dom, I, k=1):
    """The image ideal sigma^k(I), computed on canonical prime generators."""
    if I.is_zero:
        return I
    factors = [(canonical_prime(dom, dom.sigma(p, k)), e) for p, e in I.factors]
    return Ideal(dom, factors)


# ---------------------------------------------------------------------------
# Sigma-orbits of primes

class OrbitStatus:
    FINITE = 'FINITE'
    INFINITE = 'INFINITE'
    UNKNOWN = 'UNKNOWN'


class OrbitResult:
    """Orbit of a prime ideal under sigma: the closed orbit list when finite,
    or an INFINITE/UNKNOWN tag."""

    __slots__ = ('status', 'ideals', 'period')

    def __init__(self, status, ideals=None, period=None):
        self.status = status
        self.ideals = ideals or []
        self.period = period

    def intersection(self):
        if self.status != OrbitStatus.FINITE:
            raise PreconditionError('orbit intersection needs a finite orbit')
        out = self.ideals[0]
        for p in self.ideals[1:]:
            out = ideal_intersect(out, p)
        return out

    def __repr__(self):
        if self.status == OrbitStatus.FINITE:
            return f'OrbitResult(FINITE, period={self.period}, {self.ideals})'
        return f'OrbitResult({self.status})'


def sigma_map_order(dom):
    """Order of sigma as a permutation of prime ideals, or None if infinite.

    The identity has order 1 and conjugation order 2.  An affine map
    t -> a*t + b over a field has order ord(a) for a != 1, and order char(p)
    (or 1 when b = 0) for a = 1; over Q that leaves only a = -1 or the
    identity with finite order."""
    if dom.kind is DomainKind.GAUSSIAN:
        return 2 if dom.sigma_conjugation else 1
    f = dom.field
    a, b = dom.sigma_a, dom.sigma_b
    if a == f.one:
        if b == f.zero:
            return 1
        return f.char if f.char else None
    if dom.kind is DomainKind.POLY_FQ:
        return f.mult_order(a)
    return 2 if a == Fraction(-1) else None


def _q_linear_orbit_infinite(dom, p):
    """Analytic proof of non-closure for a linear prime over Q.

    sigma sends (t - c) to the monic ideal (t - tau(c)) with
    tau(c) = (c - b)/a; the orbit of c under an infinite-order affine map is
    infinite unless c is the fixed point."""
    if p.degree != 1:
        return False
    if sigma_map_order(dom) is not None:
        return False
    a, b = dom.sigma_a, dom.sigma_b
    c = -p.coeffs[0]
    if a == Fraction(1):
        return b != Fraction(0)  # translation: c - k*b never returns
    fixed = b / (1 - a)
    return c != fixed


def sigma_orbit(dom, p, bound=64):
    """Orbit [p, sigma(p), ...] of a prime ideal p under sigma.

    FINITE with the exact period when the orbit closes within `bound` steps
    (or within the known finite order of sigma); INFINITE when the analytic
    order test proves non-closure; UNKNOWN otherwise."""
    if not p.is_prime_ideal():
        raise PreconditionError('sigma_orbit expects a prime ideal')
    order = sigma_map_order(dom)
    limit = bound if order is None else min(bound, order)
    ideals = [p]
    cur = ideal_sigma(dom, p)
    while cur != p and len(ideals) < limit:
        ideals.append(cur)
        cur = ideal_sigma(dom, cur)
    if cur == p:
        return OrbitResult(OrbitStatus.FINITE, ideals, period=len(ideals))
    if order is not None and order <= bound:
        raise AssertionError('orbit must close within the order of sigma')
    if dom.kind is DomainKind.POLY_Q and _q_linear_orbit_infinite(dom, p.primes()[0]):
        return OrbitResult(OrbitStatus.INFINITE)
    return OrbitResult(OrbitStatus.UNKNOWN)


# ---------------------------------------------------------------------------
# Prime enumeration

def enumerate_primes(dom, norm_bound):
    """All prime ideals of norm <= norm_bound, canonical and norm-sorted.

    Q[t] enumeration is limited to monic linear primes of bounded height."""
    if norm_bound < 1:
        raise PreconditionError('norm bound must be positive')
    if dom.kind is DomainKind.GAUSSIAN:
        primes = _gaussian_primes(norm_bound)
    elif dom.kind is DomainKind.POLY_FQ:
        q = dom.field.q
        max_deg = 0
        while q ** (max_deg + 1) <= norm_bound:
            max_deg += 1
        primes = [p for p in _monic_irreducibles(dom.field, max_deg)] if max_deg else []
    else:
        primes = _q_linear_primes(norm_bound)
    ideals = [Ideal(dom, [(p, 1)]) for p in primes]
    ideals.sort(key=lambda I: (I.norm(), str(I)))
    return ideals


def _gaussian_primes(norm_bound):
    out = []
    if norm_bound >= 2:
        out.append(GaussianInt(1, 1))
    for p in primerange(3, norm_bound + 1):
        if p % 4 == 1:
            u = sqrt_mod(-1, p)
            pi = gaussian_canonical_associate(gaussian_gcd(GaussianInt(p), GaussianInt(u, 1)))
            out.append(pi)
            out.append(gaussian_canonical_associate(pi.conjugate()))
    for p in primerange(3, int(norm_bound ** 0.5) + 1):
        if p % 4 == 3 and p * p <= norm_bound:
            out.append(GaussianInt(p))
    return out


def _q_linear_primes(norm_bound):
    max_height = norm_bound - 1
    if max_height < 1:
        return []
    roots = {Fraction(0)}
    for num in range(1, max_height + 1):
        for den in range(1, max_height + 1):
            if _gcd_int(num, den) == 1:
                roots.add(Fraction(num, den))
                roots.add(Fraction(-num, den))
    out = []
    for c in roots:
        f = Poly(QQ_FIELD, [-c, Fraction(1)])
        if f.degree + poly_height(f) <= norm_bound:
            out.append(f)
    return out


__all__ = [
    'Ideal', 'OrbitResult', 'OrbitStatus',
    'ideal_make', 'ideal_factor', 'ideal_product', 'ideal_intersect',
    'ideal_contains', 'ideal_sigma', 'ideal_from_json',
    'sigma_orbit', 'sigma_map_order', 'enumerate_primes',
    'element_valuation', 'prime_norm', 'canonical_prime',
]
