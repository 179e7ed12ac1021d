"""Scalar fields used as polynomial coefficients: GF(q) for a prime power q,
and the rationals.

GF(q) scalars are encoded as integers in {0, ..., q-1}.  For q = p^k with
k > 1 the integer is read in base p; the digit vector is the coefficient
vector of a residue polynomial modulo a fixed irreducible polynomial of
degree k over GF(p) (the lexicographically smallest monic one, so the
encoding is reproducible).  Rational scalars are `fractions.Fraction`.

A field object provides the arithmetic; scalar values themselves stay plain
(int / Fraction) so they hash and compare naturally.
"""

from fractions import Fraction
from functools import lru_cache

from sympy import factorint

from .errors import DomainError, ParseError


# ---------------------------------------------------------------------------
# GF(p) polynomial helpers on plain coefficient lists (trailing zeros trimmed)

def _pp_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pp_add(a, b, p):
    n = max(len(a), len(b))
    c = [0] * n
    for i, x in enumerate(a):
        c[i] = x
    for i, x in enumerate(b):
        c[i] = (c[i] + x) % p
    return _pp_trim(c)


def _pp_mul(a, b, p):
    if not a or not b:
        return []
    c = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                c[i + j] = (c[i + j] + x * y) % p
    return _pp_trim(c)


def _pp_divmod(a, b, p):
    a = _pp_trim(a[:])
    b = _pp_trim(b[:])
    if not b:
        raise ZeroDivisionError('polynomial division by zero')
    inv = pow(b[-1], p - 2, p)
    q = [0] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b):
        coef = (a[-1] * inv) % p
        shift = len(a) - len(b)
        q[shift] = coef
        for i, y in enumerate(b):
            a[shift + i] = (a[shift + i] - coef * y) % p
        _pp_trim(a)
    return _pp_trim(q), a


def _pp_is_irreducible(f, p):
    # trial division by all monic polynomials of degree <= deg(f)/2
    deg = len(f) - 1
    if deg <= 0:
        return False
    for d in range(1, deg // 2 + 1):
        for enc in range(p ** d):
            g = _decode_base(enc, p, d) + [1]
            if not _pp_divmod(f, g, p)[1]:
                return False
    return True


def _decode_base(n, p, width):
    digits = []
    for _ in range(width):
        n, r = divmod(n, p)
        digits.append(r)
    return digits


def _encode_base(digits, p):
    n = 0
    for d in reversed(digits):
        n = n * p + d
    return n


@lru_cache(maxsize=None)
def _modulus_poly(p, k):
    """Lexicographically smallest monic irreducible of degree k over GF(p)."""
    for enc in range(p ** k):
        f = _decode_base(enc, p, k) + [1]
        if _pp_is_irreducible(f, p):
            return tuple(f)
    raise DomainError(f'no irreducible polynomial of degree {k} over GF({p})')


# ---------------------------------------------------------------------------

class PrimePowerField:
    """Arithmetic for GF(q), q = p^k, on int-encoded scalars."""

    __slots__ = ('q', 'p', 'k', '_mod')

    def __init__(self, q):
        if q < 2:
            raise DomainError(f'field modulus must be a prime power, got {q}')
        fac = factorint(q)
        if len(fac) != 1:
            raise DomainError(f'field modulus must be a prime power, got {q}')
        (self.p, self.k), = fac.items()
        self.q = q
        self._mod = list(_modulus_poly(self.p, self.k)) if self.k > 1 else None

    zero = 0
    one = 1

    @property
    def char(self):
        return self.p

    def check(self, a):
        if not isinstance(a, int) or not 0 <= a < self.q:
            raise ParseError(f'not a canonical residue mod {self.q}: {a!r}')
        return a

    def coerce_int(self, n):
        """Image of the rational integer n under the unique ring map Z -> GF(q)."""
        if self.k == 1:
            return n % self.p
        return _encode_base([n % self.p], self.p)

    def from_encoding(self, r):
        """The scalar whose canonical residue encoding is r (taken mod q).

        For prime q this is the ring image of r; for q = p^k the base-p
        digits of r are the coefficient vector of the residue polynomial."""
        return r % self.q

    def add(self, a, b):
        if self.k == 1:
            return (a + b) % self.p
        p = self.p
        return _encode_base(_pp_add(_decode_base(a, p, self.k),
                                    _decode_base(b, p, self.k), p), p)

    def neg(self, a):
        if self.k == 1:
            return (-a) % self.p
        p = self.p
        return _encode_base([(-d) % p for d in _decode_base(a, p, self.k)], p)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.k == 1:
            return (a * b) % self.p
        p = self.p
        prod = _pp_mul(_decode_base(a, p, self.k), _decode_base(b, p, self.k), p)
        _, rem = _pp_divmod(prod, self._mod, p)
        return _encode_base(rem, p)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError(f'0 has no inverse in GF({self.q})')
        if self.k == 1:
            return pow(a, self.p - 2, self.p)
        # extended Euclid in GF(p)[u] against the modulus
        p = self.p
        r0, r1 = self._mod[:], _decode_base(a, p, self.k)
        s0, s1 = [], [1]
        while r1:
            q, r = _pp_divmod(r0, r1, p)
            r0, r1 = r1, r
            s0, s1 = s1, _pp_add(s0, [(-c) % p for c in _pp_mul(q, s1, p)], p)
        # r0 is a nonzero constant gcd
        c_inv = pow(r0[0], p - 2, p)
        return _encode_base([(c_inv * c) % p for c in s0], p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, n):
        out = self.one
        base = a
        while n:
            if n & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            n >>= 1
        return out

    def mult_order(self, a):
        """Order of a in the multiplicative group (a must be nonzero)."""
        if a == 0:
            raise ZeroDivisionError('0 has no multiplicative order')
        n, x = 1, a
        while x != self.one:
            x = self.mul(x, a)
            n += 1
        return n

    def elements(self):
        return range(self.q)

    def random(self, rng):
        return rng.randrange(self.q)

    def fmt(self, a):
        return f'{a} mod {self.q}'

    def parse(self, s):
        s = s.strip()
        if s.startswith('(') and s.endswith(')'):
            s = s[1:-1].strip()
        if 'mod' in s:
            left, _, right = s.partition('mod')
            try:
                r, q = int(left.strip()), int(right.strip())
            except ValueError as exc:
                raise ParseError(f'bad residue: {s!r}') from exc
            if q != self.q:
                raise ParseError(f'residue modulus {q} does not match field GF({self.q})')
            return self.from_encoding(r)
        try:
            return self.from_encoding(int(s))
        except ValueError as exc:
            raise ParseError(f'bad residue: {s!r}') from exc

    def __eq__(self, other):
        return isinstance(other, PrimePowerField) and other.q == self.q

    def __hash__(self):
        return hash(('PrimePowerField', self.q))

    def __repr__(self):
        return f'GF({self.q})'


class RationalField:
    """Arithmetic for Q on `fractions.Fraction` scalars."""

    __slots__ = ()

    zero = Fraction(0)
    one = Fraction(1)

    @property
    def char(self):
        return 0

    def check(self, a):
        if not isinstance(a, Fraction):
            raise ParseError(f'not a rational scalar: {a!r}')
        return a

    def coerce_int(self, n):
        return Fraction(n)

    def from_encoding(self, r):
        return Fraction(r)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError('0 has no inverse in Q')
        return 1 / a

    def div(self, a, b):
        return a / b

    def pow(self, a, n):
        return a ** n

    def random(self, rng):
        return Fraction(rng.randint(-9, 9), rng.randint(1, 5))

    def fmt(self, a):
        return str(a)  # Fraction prints p/q in lowest terms, or just p

    def parse(self, s):
        s = s.strip()
        if s.startswith('(') and s.endswith(')'):
            s = s[1:-1].strip()
        try:
            return Fraction(s)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f'bad rational: {s!r}') from exc

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash('RationalField')

    def __repr__(self):
        return 'Q'


QQ = RationalField()
