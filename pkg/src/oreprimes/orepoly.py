"""The skew polynomial ring D[x; sigma, delta] in left standard form.

Elements are stored as dense coefficient lists f_0..f_n (coefficients on the
left, no trailing zero), multiplied by rewriting x*a -> sigma(a)*x + delta(a).
A ring tag distinguishes the general ring from its pure-automorphism sibling
D[y; sigma] (delta = 0, commutation y*b = sigma(b)*y), which is the target of
the change of variable x -> y + a available whenever delta is inner with
witness a.

Multiplication expands x^i * c through an incremental lift table (one row per
power of x, built per product), so the rewrite cost stays polynomial in the
degrees.  Because sigma is an automorphism and the coefficients form a
domain, degrees add under multiplication and the leading coefficient of f*g
is f_m * sigma^m(g_n).
"""

from .domains import is_inner_witness
from .errors import PreconditionError
from .ideals import Ideal
from .stability import is_stable_ideal


class RingTag:
    X_SIGMA_DELTA = 'x-sigma-delta'
    Y_SIGMA = 'y-sigma'


class OrePoly:
    """A skew polynomial over a coefficient Domain, left standard form."""

    __slots__ = ('domain', 'coeffs', 'ring')

    def __init__(self, domain, coeffs, ring=RingTag.X_SIGMA_DELTA):
        cs = list(coeffs)
        zero = domain.zero()
        while cs and cs[-1] == zero:
            cs.pop()
        self.domain = domain
        self.coeffs = tuple(cs)
        self.ring = ring

    @classmethod
    def zero(cls, domain, ring=RingTag.X_SIGMA_DELTA):
        return cls(domain, [], ring)

    @classmethod
    def const(cls, domain, a, ring=RingTag.X_SIGMA_DELTA):
        return cls(domain, [a], ring)

    @classmethod
    def one(cls, domain, ring=RingTag.X_SIGMA_DELTA):
        return cls(domain, [domain.one()], ring)

    @classmethod
    def gen(cls, domain, ring=RingTag.X_SIGMA_DELTA):
        """x (or y in the pure-automorphism ring)."""
        return cls(domain, [domain.zero(), domain.one()], ring)

    @property
    def degree(self):
        """Degree, -1 for the zero element."""
        return len(self.coeffs) - 1

    def coeff(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.domain.zero()

    def leading(self):
        if not self.coeffs:
            return self.domain.zero()
        return self.coeffs[-1]

    def __bool__(self):
        return bool(self.coeffs)

    def _check_compatible(self, other):
        if self.domain != other.domain or self.ring != other.ring:
            raise PreconditionError('skew polynomials from different rings')

    def __add__(self, other):
        self._check_compatible(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return OrePoly(self.domain,
                       [self.coeff(i) + other.coeff(i) for i in range(n)],
                       self.ring)

    def __sub__(self, other):
        self._check_compatible(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return OrePoly(self.domain,
                       [self.coeff(i) - other.coeff(i) for i in range(n)],
                       self.ring)

    def __neg__(self):
        return OrePoly(self.domain, [-c for c in self.coeffs], self.ring)

    def __mul__(self, other):
        return ore_mul(self, other)

    def __pow__(self, n):
        out = OrePoly.one(self.domain, self.ring)
        base = self
        while n:
            if n & 1:
                out = ore_mul(out, base)
            base = ore_mul(base, base)
            n >>= 1
        return out

    def left_scale(self, a):
        """a * f for a coefficient a (left D-linearity)."""
        return OrePoly(self.domain, [a * c for c in self.coeffs], self.ring)

    def __eq__(self, other):
        return (isinstance(other, OrePoly) and self.domain == other.domain
                and self.ring == other.ring and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.ring, self.coeffs))

    def __str__(self):
        if not self.coeffs:
            return '0'
        var = 'x' if self.ring == RingTag.X_SIGMA_DELTA else 'y'
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == self.domain.zero():
                continue
            cs = self.domain.format_element(c)
            if k == 0:
                parts.append(cs)
            else:
                xp = var if k == 1 else f'{var}^{k}'
                parts.append(xp if cs == '1' else f'({cs})*{xp}')
        return ' + '.join(parts)

    def __repr__(self):
        return f'OrePoly<{self.ring}>[{self}]'

    def to_json(self):
        return {'ring': self.ring,
                'coeffs': [self.domain.format_element(c) for c in self.coeffs]}


def orepoly_from_json(domain, data):
    coeffs = [domain.parse_element(s) for s in data['coeffs']]
    return OrePoly(domain, coeffs, data['ring'])


def _lift_once(dom, row, with_delta):
    """Coefficients of x * (sum row[k] x^k) in left standard form."""
    zero = dom.zero()
    out = [zero] * (len(row) + 1)
    for k, c in enumerate(row):
        out[k + 1] = out[k + 1] + dom.sigma(c)
        if with_delta:
            out[k] = out[k] + dom.delta(c)
    return out


def ore_mul(f, g):
    """The product f*g under x*a = sigma(a)*x + delta(a).

    In the pure-automorphism ring the delta half of the rewrite is skipped."""
    f._check_compatible(g)
    dom = f.domain
    if not f.coeffs or not g.coeffs:
        return OrePoly.zero(dom, f.ring)
    with_delta = f.ring == RingTag.X_SIGMA_DELTA
    zero = dom.zero()
    out = [zero] * (len(f.coeffs) + len(g.coeffs) - 1)
    for j, gj in enumerate(g.coeffs):
        if gj == zero:
            continue
        row = [gj]  # x^i * gj, lifted incrementally over i
        for i, fi in enumerate(f.coeffs):
            if fi != zero:
                for k, c in enumerate(row):
                    if c != zero:
                        out[j + k] = out[j + k] + fi * c
            if i + 1 < len(f.coeffs):
                row = _lift_once(dom, row, with_delta)
    return OrePoly(dom, out, f.ring)


def xn_times_a(dom, n, a, ring=RingTag.X_SIGMA_DELTA):
    """Left standard form of x^n * a.

    The x^0 coefficient is delta^n(a) and the x^n coefficient is sigma^n(a)."""
    if n < 0:
        raise PreconditionError('xn_times_a needs n >= 0')
    row = [a]
    with_delta = ring == RingTag.X_SIGMA_DELTA
    for _ in range(n):
        row = _lift_once(dom, row, with_delta)
    return OrePoly(dom, row, ring)


def right_coefficients(f):
    """Coefficients b_0..b_n with f = sum x^k * b_k.

    Peels the top term using b_n = sigma^{-n}(f_n); expanding the right-hand
    form back into left standard form reproduces f exactly."""
    dom = f.domain
    if not f.coeffs:
        return []
    rem = f
    out = [dom.zero()] * len(f.coeffs)
    while rem.coeffs:
        n = rem.degree
        b = dom.sigma(rem.leading(), -n)
        out[n] = b
        rem = rem - xn_times_a(dom, n, b, f.ring)
        if rem.degree >= n and rem.coeffs:
            raise AssertionError('top-term elimination must lower the degree')
    return out


def from_right_coefficients(dom, bs, ring=RingTag.X_SIGMA_DELTA):
    """Left standard form of sum x^k * b_k."""
    out = OrePoly.zero(dom, ring)
    for k, b in enumerate(bs):
        out = out + xn_times_a(dom, k, b, ring)
    return out


def in_extended_ideal(f, p):
    """Membership of f in the two-sided ideal p*R = p[x; sigma, delta].

    Valid (and checked) only for a (sigma, delta)-stable ideal p, where
    membership is coefficientwise."""
    if not isinstance(p, Ideal):
        raise PreconditionError('in_extended_ideal expects an Ideal')
    if not is_stable_ideal(f.domain, p, 'sigma_delta'):
        raise PreconditionError(
            'coefficientwise membership needs a (sigma, delta)-stable ideal')
    return all(p.contains_element(c) for c in f.coeffs)


def to_pure_sigma(f, a):
    """Image of f in D[y; sigma] under the ring isomorphism fixing D and
    sending x to y + a, for a verified inner witness a."""
    dom = f.domain
    if f.ring != RingTag.X_SIGMA_DELTA:
        raise PreconditionError('to_pure_sigma expects an element of D[x; sigma, delta]')
    if not is_inner_witness(dom, a):
        raise PreconditionError('not an inner-derivation witness; refusing the map')
    image_of_x = OrePoly(dom, [a, dom.one()], RingTag.Y_SIGMA)
    return _substitute(f, image_of_x, RingTag.Y_SIGMA)


def from_pure_sigma(f, a):
    """Inverse isomorphism D[y; sigma] -> D[x; sigma, delta], y -> x - a."""
    dom = f.domain
    if f.ring != RingTag.Y_SIGMA:
        raise PreconditionError('from_pure_sigma expects an element of D[y; sigma]')
    if not is_inner_witness(dom, a):
        raise PreconditionError('not an inner-derivation witness; refusing the map')
    image_of_y = OrePoly(dom, [-a, dom.one()], RingTag.X_SIGMA_DELTA)
    return _substitute(f, image_of_y, RingTag.X_SIGMA_DELTA)


def _substitute(f, image, ring):
    out = OrePoly.zero(f.domain, ring)
    power = OrePoly.one(f.domain, ring)
    for c in f.coeffs:
        out = out + power.left_scale(c)
        power = ore_mul(power, image)
    return out


__all__ = [
    'OrePoly', 'RingTag', 'ore_mul', 'xn_times_a',
    'right_coefficients', 'from_right_coefficients',
    'in_extended_ideal', 'to_pure_sigma', 'from_pure_sigma',
    'orepoly_from_json',
]
