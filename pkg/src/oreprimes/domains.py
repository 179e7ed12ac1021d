"""Coefficient domains packaged with their skew pair (sigma, delta).

Three exact Dedekind domains are supported:

* ``GaussianIntegers`` -- Z[i]; sigma is the identity or complex
  conjugation; delta is pinned down by the single value d = delta(i), which
  extends additively via delta(x + y*i) = y*d.  With sigma the identity the
  relation on i*i forces d = 0.
* ``PolyOverFiniteField`` -- GF(q)[t] for a prime power q; sigma(t) = a*t + b
  with a a unit; for sigma != identity, delta = h * (sigma(f) - f)/(sigma(t) - t)
  (every sigma-derivation has this shape, with h = delta(t)); for sigma the
  identity, delta = h * d/dt.
* ``PolyOverRationals`` -- Q[t], same affine sigma / delta parameterization
  with rational scalars.

``build_domain`` validates that sigma is an automorphism and that the
generator-level Leibniz constraints hold; the remaining operations iterate
sigma (any signed power), apply delta, expand delta on powers, and solve for
an inner-derivation witness a with delta(b) = a*b - sigma(b)*a.
"""

import random
from enum import Enum

from .elements import (GaussianInt, Poly, format_gaussian, format_poly,
                       parse_gaussian, parse_poly, poly_exact_div)
from .errors import (DomainError, NotApplicableError, ParseError,
                     PreconditionError)
from .scalars import QQ, PrimePowerField


class DomainKind(Enum):
    GAUSSIAN = 'GaussianIntegers'
    POLY_FQ = 'PolyOverFiniteField'
    POLY_Q = 'PolyOverRationals'


_INNER_CHECK_SEED = 0x5eed


class Domain:
    """A coefficient ring with its automorphism sigma and sigma-derivation
    delta.  Immutable; construct through :func:`build_domain`."""

    __slots__ = ('kind', 'field', 'sigma_conjugation', 'sigma_a', 'sigma_b',
                 'delta_d', 'delta_h')

    def __init__(self, kind, field=None, sigma_conjugation=False,
                 sigma_a=None, sigma_b=None, delta_d=None, delta_h=None):
        self.kind = kind
        self.field = field
        self.sigma_conjugation = sigma_conjugation
        self.sigma_a = sigma_a
        self.sigma_b = sigma_b
        self.delta_d = delta_d
        self.delta_h = delta_h

    # -- basic elements ----------------------------------------------------

    def zero(self):
        if self.kind is DomainKind.GAUSSIAN:
            return GaussianInt(0)
        return Poly(self.field, [])

    def one(self):
        if self.kind is DomainKind.GAUSSIAN:
            return GaussianInt(1)
        return Poly.const(self.field, self.field.one)

    def gen(self):
        """The ring generator: i for Z[i], t for polynomial kinds."""
        if self.kind is DomainKind.GAUSSIAN:
            return GaussianInt(0, 1)
        return Poly.gen(self.field)

    def from_int(self, n):
        if self.kind is DomainKind.GAUSSIAN:
            return GaussianInt(n)
        return Poly.from_int(self.field, n)

    def is_unit(self, a):
        return a.is_unit()

    @property
    def sigma_is_identity(self):
        if self.kind is DomainKind.GAUSSIAN:
            return not self.sigma_conjugation
        return self.sigma_a == self.field.one and self.sigma_b == self.field.zero

    @property
    def delta_is_zero(self):
        if self.kind is DomainKind.GAUSSIAN:
            return not self.delta_d
        return not self.delta_h

    # -- sigma and delta ---------------------------------------------------

    def sigma(self, a, k=1):
        """sigma^k(a) for any signed integer k."""
        if self.kind is DomainKind.GAUSSIAN:
            if self.sigma_conjugation and k % 2:
                return a.conjugate()
            return a
        if k == 0 or self.sigma_is_identity:
            return a
        f = self.field
        sa, sb = self.sigma_a, self.sigma_b
        if k < 0:
            # inverse of t -> a*t + b is t -> (t - b)/a
            sa, sb = f.inv(sa), f.neg(f.div(sb, sa))
            k = -k
        # compose the affine map k times, then substitute once
        ca, cb = f.one, f.zero
        for _ in range(k):
            ca, cb = f.mul(sa, ca), f.add(f.mul(sa, cb), sb)
        return a.subst_affine(ca, cb)

    def sigma_gen_image(self):
        """sigma(t) as an element (polynomial kinds only)."""
        return Poly(self.field, [self.sigma_b, self.sigma_a])

    def delta(self, a):
        """delta(a)."""
        if self.kind is DomainKind.GAUSSIAN:
            return self.from_int(a.y) * self.delta_d
        if self.sigma_is_identity:
            return self.delta_h * a.derivative()
        num = self.sigma(a) - a
        den = self.sigma_gen_image() - Poly.gen(self.field)
        quot = poly_exact_div(num, den)
        assert quot is not None, 'sigma(f) - f is always divisible by sigma(t) - t'
        return self.delta_h * quot

    def delta_iter(self, a, n):
        """delta^n(a)."""
        for _ in range(n):
            a = self.delta(a)
        return a

    # -- sampling and text -------------------------------------------------

    def random_element(self, rng, size=6):
        if self.kind is DomainKind.GAUSSIAN:
            return GaussianInt(rng.randint(-size, size), rng.randint(-size, size))
        deg = rng.randint(0, max(1, size // 2))
        return Poly(self.field, [self.field.random(rng) for _ in range(deg + 1)])

    def format_element(self, a):
        if self.kind is DomainKind.GAUSSIAN:
            return format_gaussian(a)
        return format_poly(a)

    def parse_element(self, s):
        if self.kind is DomainKind.GAUSSIAN:
            return parse_gaussian(s)
        return parse_poly(self.field, s)

    def describe(self):
        """Canonical echo of the domain configuration (for reports)."""
        if self.kind is DomainKind.GAUSSIAN:
            sigma = 'conjugation' if self.sigma_conjugation else 'identity'
            return {'kind': self.kind.value, 'sigma': sigma,
                    'delta_d': format_gaussian(self.delta_d)}
        out = {'kind': self.kind.value,
               'sigma_a': self.field.fmt(self.sigma_a),
               'sigma_b': self.field.fmt(self.sigma_b),
               'delta_h': format_poly(self.delta_h)}
        if self.kind is DomainKind.POLY_FQ:
            out['q'] = self.field.q
        return out

    def __eq__(self, other):
        return isinstance(other, Domain) and self.describe() == other.describe()

    def __hash__(self):
        return hash(str(self.describe()))

    def __repr__(self):
        return f'Domain({self.describe()})'


# ---------------------------------------------------------------------------
# Construction and validation

def build_domain(spec):
    """Build and validate a Domain from a description mapping.

    Keys: ``kind`` (one of the DomainKind values), then per kind:
    Gaussian -- ``sigma``: "identity" | "conjugation", ``delta_d``: Gaussian
    string or int; polynomial kinds -- ``q`` (finite field only), ``sigma_a``,
    ``sigma_b``: scalar strings or ints, ``delta_h``: polynomial string.

    Raises DomainError when sigma is not an automorphism or the
    generator-level Leibniz constraints fail.
    """
    try:
        kind = DomainKind(spec['kind'])
    except (KeyError, ValueError) as exc:
        raise DomainError(f'unknown or missing domain kind in {spec!r}') from exc

    if kind is DomainKind.GAUSSIAN:
        sigma = spec.get('sigma', 'identity')
        if sigma not in ('identity', 'conjugation'):
            raise DomainError(f'unsupported sigma for Z[i]: {sigma!r}')
        d = spec.get('delta_d', 0)
        if isinstance(d, int):
            d = GaussianInt(d)
        elif isinstance(d, str):
            try:
                d = parse_gaussian(d)
            except ParseError as exc:
                raise DomainError(str(exc)) from exc
        elif not isinstance(d, GaussianInt):
            raise DomainError(f'malformed delta_d: {d!r}')
        dom = Domain(kind, sigma_conjugation=(sigma == 'conjugation'), delta_d=d)
    else:
        if kind is DomainKind.POLY_FQ:
            try:
                field = PrimePowerField(int(spec['q']))
            except (KeyError, ValueError, TypeError) as exc:
                raise DomainError(f'missing or malformed field modulus in {spec!r}') from exc
        else:
            field = QQ
        try:
            a = _coerce_scalar(field, spec.get('sigma_a', 1))
            b = _coerce_scalar(field, spec.get('sigma_b', 0))
        except ParseError as exc:
            raise DomainError(str(exc)) from exc
        if a == field.zero:
            raise DomainError('sigma(t) = a*t + b needs a unit leading '
                              'coefficient; a = 0 is not invertible')
        h = spec.get('delta_h', 0)
        if isinstance(h, int):
            h = Poly.from_int(field, h)
        elif isinstance(h, str):
            try:
                h = parse_poly(field, h)
            except ParseError as exc:
                raise DomainError(str(exc)) from exc
        elif not isinstance(h, Poly) or h.field != field:
            raise DomainError(f'malformed delta_h: {h!r}')
        dom = Domain(kind, field=field, sigma_a=a, sigma_b=b, delta_h=h)

    _validate_generators(dom)
    return dom


def _coerce_scalar(field, v):
    if isinstance(v, int):
        return field.from_encoding(v)
    if isinstance(v, str):
        return field.parse(v)
    if isinstance(v, type(field.zero)):
        return field.check(v)
    raise ParseError(f'malformed scalar: {v!r}')


def _validate_generators(dom):
    """Automorphism and Leibniz checks on the ring generators."""
    one, g = dom.one(), dom.gen()
    if dom.sigma(one) != one:
        raise DomainError('sigma(1) != 1')
    if dom.sigma(dom.sigma(g), -1) != g or dom.sigma(dom.sigma(g, -1)) != g:
        raise DomainError('sigma is not invertible on the generator')
    # sigma multiplicative on the generator
    if dom.sigma(g * g) != dom.sigma(g) * dom.sigma(g):
        raise DomainError('sigma is not multiplicative')
    if dom.delta(one):
        raise DomainError('delta(1) != 0')
    # Leibniz on the generator pair (g, g); for Z[i] with sigma = identity
    # this is exactly the constraint that forces d = 0.
    lhs = dom.delta(g * g)
    rhs = dom.sigma(g) * dom.delta(g) + dom.delta(g) * g
    if lhs != rhs:
        raise DomainError('delta violates the sigma-Leibniz rule on the generator')


# ---------------------------------------------------------------------------
# Public operations

def apply_sigma(dom, a, k=1):
    """sigma^k(a), any signed k."""
    return dom.sigma(a, k)


def apply_delta(dom, a):
    """delta(a)."""
    return dom.delta(a)


def delta_power_expand(dom, a, m):
    """sum_{i=0}^{m-1} sigma(a)^i * delta(a) * a^(m-1-i); equals delta(a^m)."""
    if m < 1:
        raise PreconditionError('delta_power_expand needs m >= 1')
    sa, da = dom.sigma(a), dom.delta(a)
    total = dom.zero()
    for i in range(m):
        total = total + sa ** i * da * a ** (m - 1 - i)
    return total


def inner_witness(dom, verify_samples=200):
    """An element a with delta(b) = a*b - sigma(b)*a for all b, or None.

    Solved exactly on the ring generator (a sigma-derivation is determined by
    its generator values), then re-verified on a deterministic random sample.
    Raises NotApplicableError when sigma is the identity but delta != 0
    (an inner derivation would force delta = 0).
    """
    if dom.sigma_is_identity:
        if not dom.delta_is_zero:
            raise NotApplicableError(
                'inner witness not applicable: sigma is the identity, so '
                'a*b - sigma(b)*a vanishes identically but delta != 0')
        return dom.zero()

    if dom.kind is DomainKind.GAUSSIAN:
        # delta(i) = a*i - sigma(i)*a = 2*a*i, so a = d / (2i) = -d*i / 2
        from .elements import gaussian_exact_div
        a = gaussian_exact_div(dom.delta_d * GaussianInt(0, -1), GaussianInt(2))
    else:
        # delta(t) = a*(t - sigma(t)) with delta(t) = h
        den = Poly.gen(dom.field) - dom.sigma_gen_image()
        a = poly_exact_div(dom.delta_h, den)
    if a is None:
        return None

    rng = random.Random(_INNER_CHECK_SEED)
    for _ in range(verify_samples):
        b = dom.random_element(rng)
        if dom.delta(b) != a * b - dom.sigma(b) * a:
            raise AssertionError('inner witness failed verification; '
                                 'generator solve is inconsistent')
    return a


def is_inner_witness(dom, a):
    """Exact check that a is an inner witness, decided on the generators."""
    if a is None:
        return False
    g = dom.gen()
    if dom.delta(g) != a * g - dom.sigma(g) * a:
        return False
    one = dom.one()
    return dom.delta(one) == a * one - dom.sigma(one) * a


__all__ = [
    'Domain', 'DomainKind', 'build_domain',
    'apply_sigma', 'apply_delta', 'delta_power_expand',
    'inner_witness', 'is_inner_witness',
]
