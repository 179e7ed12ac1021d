"""Exact ring elements of the three coefficient domains.

Two element classes:

* ``GaussianInt`` -- x + y*i with arbitrary-precision integer parts.
* ``Poly`` -- a dense polynomial in t over a scalar field (GF(q) or Q),
  stored as a tuple of scalars indexed by degree with no trailing zeros.

Both are immutable, support +, -, *, ** and ==, and are hashable, so they
can serve as ideal generators and skew-polynomial coefficients.  There is no
rounding anywhere; every operation is exact.

Canonical text forms (used by the CLI and reports):

* Gaussian integers: ``"3+4*i"``, ``"3-4*i"``, ``"-2*i"``, ``"7"``.
* Polynomials: ascending-degree terms joined by ``+``/``-``, coefficients
  rendered ``"r mod q"`` for GF(q) (parenthesized when multiplied by a power
  of t) and ``"p/q"`` in lowest terms for Q, e.g. ``"1 mod 3 + (2 mod 3)*t"``
  or ``"1/2 - 3*t^2"``.
"""

from fractions import Fraction

from .errors import ParseError
from .scalars import QQ, PrimePowerField


class GaussianInt:
    """A Gaussian integer x + y*i."""

    __slots__ = ('x', 'y')

    def __init__(self, x, y=0):
        self.x = x
        self.y = y

    def __add__(self, other):
        return GaussianInt(self.x + other.x, self.y + other.y)

    def __sub__(self, other):
        return GaussianInt(self.x - other.x, self.y - other.y)

    def __neg__(self):
        return GaussianInt(-self.x, -self.y)

    def __mul__(self, other):
        return GaussianInt(self.x * other.x - self.y * other.y,
                           self.x * other.y + self.y * other.x)

    def __pow__(self, n):
        out, base = GaussianInt(1), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        return isinstance(other, GaussianInt) and self.x == other.x and self.y == other.y

    def __hash__(self):
        return hash((self.x, self.y))

    def __bool__(self):
        return bool(self.x or self.y)

    def conjugate(self):
        return GaussianInt(self.x, -self.y)

    def norm(self):
        return self.x * self.x + self.y * self.y

    def is_unit(self):
        return self.norm() == 1

    def __repr__(self):
        return f'GaussianInt({self.x}, {self.y})'

    def __str__(self):
        return format_gaussian(self)


def gaussian_divmod(a, b):
    """Quotient and remainder with N(remainder) <= N(b)/2 (rounded division)."""
    if not b:
        raise ZeroDivisionError('division by zero Gaussian integer')
    n = b.norm()
    prod = a * b.conjugate()
    # round each coordinate to the nearest integer
    qx = (2 * prod.x + n) // (2 * n)
    qy = (2 * prod.y + n) // (2 * n)
    q = GaussianInt(qx, qy)
    return q, a - q * b


def gaussian_exact_div(a, b):
    """a / b if b divides a exactly, else None."""
    if not b:
        return None
    n = b.norm()
    prod = a * b.conjugate()
    if prod.x % n or prod.y % n:
        return None
    return GaussianInt(prod.x // n, prod.y // n)


def gaussian_gcd(a, b):
    while b:
        _, r = gaussian_divmod(a, b)
        a, b = b, r
    return a


def gaussian_canonical_associate(z):
    """The associate with real part > 0 and imaginary part >= 0 (zero fixed)."""
    if not z:
        return z
    for _ in range(4):
        if z.x > 0 and z.y >= 0:
            return z
        z = GaussianInt(-z.y, z.x)  # multiply by i
    raise AssertionError('unreachable: one associate per quadrant')


class Poly:
    """A polynomial in t over a scalar field, coefficients ascending."""

    __slots__ = ('field', 'coeffs')

    def __init__(self, field, coeffs):
        cs = list(coeffs)
        while cs and cs[-1] == field.zero:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, field, scalar):
        return cls(field, [scalar])

    @classmethod
    def from_int(cls, field, n):
        return cls(field, [field.coerce_int(n)])

    @classmethod
    def gen(cls, field):
        return cls(field, [field.zero, field.one])

    @property
    def degree(self):
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self.field.zero

    def leading(self):
        if not self.coeffs:
            return self.field.zero
        return self.coeffs[-1]

    def __add__(self, other):
        f = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(f, [f.add(self[i], other[i]) for i in range(n)])

    def __sub__(self, other):
        f = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(f, [f.sub(self[i], other[i]) for i in range(n)])

    def __neg__(self):
        f = self.field
        return Poly(f, [f.neg(c) for c in self.coeffs])

    def __mul__(self, other):
        f = self.field
        if not self.coeffs or not other.coeffs:
            return Poly(f, [])
        out = [f.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == f.zero:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = f.add(out[i + j], f.mul(a, b))
        return Poly(f, out)

    def __pow__(self, n):
        out, base = Poly.const(self.field, self.field.one), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def scale(self, scalar):
        f = self.field
        return Poly(f, [f.mul(scalar, c) for c in self.coeffs])

    def __eq__(self, other):
        return (isinstance(other, Poly) and self.field == other.field
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def is_unit(self):
        return len(self.coeffs) == 1

    def monic(self):
        if not self.coeffs or self.leading() == self.field.one:
            return self
        return self.scale(self.field.inv(self.leading()))

    def subst_affine(self, a, b):
        """f(a*t + b) by Horner's rule; a, b are scalars."""
        f = self.field
        lin = Poly(f, [b, a])
        out = Poly(f, [])
        for c in reversed(self.coeffs):
            out = out * lin + Poly.const(f, c)
        return out

    def eval_at(self, scalar):
        f = self.field
        out = f.zero
        for c in reversed(self.coeffs):
            out = f.add(f.mul(out, scalar), c)
        return out

    def derivative(self):
        f = self.field
        out = []
        for k in range(1, len(self.coeffs)):
            kf = f.coerce_int(k)
            out.append(f.mul(kf, self.coeffs[k]))
        return Poly(f, out)

    def __repr__(self):
        return f'Poly({self.field!r}, {list(self.coeffs)!r})'

    def __str__(self):
        return format_poly(self)


def poly_divmod(a, b):
    if not b:
        raise ZeroDivisionError('division by zero polynomial')
    f = a.field
    rem = list(a.coeffs)
    db, lead_inv = b.degree, f.inv(b.leading())
    q = [f.zero] * max(0, len(rem) - db)
    while len(rem) - 1 >= db and rem:
        c = f.mul(rem[-1], lead_inv)
        shift = len(rem) - 1 - db
        q[shift] = c
        for i in range(db + 1):
            rem[shift + i] = f.sub(rem[shift + i], f.mul(c, b.coeffs[i]))
        while rem and rem[-1] == f.zero:
            rem.pop()
    return Poly(f, q), Poly(f, rem)


def poly_exact_div(a, b):
    """a / b if b divides a exactly, else None."""
    if not b:
        return None
    q, r = poly_divmod(a, b)
    return q if not r else None


def poly_gcd(a, b):
    while b:
        _, r = poly_divmod(a, b)
        a, b = b, r
    return a.monic() if a else a


# ---------------------------------------------------------------------------
# Canonical text forms

def format_gaussian(z):
    if z.y == 0:
        return str(z.x)
    imag = f'{z.y}*i'
    if z.x == 0:
        return imag
    if z.y < 0:
        return f'{z.x}-{-z.y}*i'
    return f'{z.x}+{imag}'


def parse_gaussian(s):
    text = s.replace(' ', '')
    if not text:
        raise ParseError('empty Gaussian integer')
    # split into signed terms
    terms, cur = [], ''
    for ch in text:
        if ch in '+-' and cur and cur[-1] not in '+-':
            terms.append(cur)
            cur = ch
        else:
            cur += ch
    terms.append(cur)
    x = y = 0
    for term in terms:
        try:
            if term.endswith('i'):
                body = term[:-1].rstrip('*')
                if body in ('', '+'):
                    y += 1
                elif body == '-':
                    y -= 1
                else:
                    y += int(body)
            else:
                x += int(term)
        except ValueError as exc:
            raise ParseError(f'bad Gaussian integer: {s!r}') from exc
    return GaussianInt(x, y)


def _fmt_coeff_for_term(field, c):
    text = field.fmt(c)
    if isinstance(field, PrimePowerField):
        return f'({text})'
    return text


def format_poly(poly):
    field = poly.field
    if not poly.coeffs:
        return field.fmt(field.zero)
    parts = []
    for k, c in enumerate(poly.coeffs):
        if c == field.zero:
            continue
        negative = isinstance(c, Fraction) and c < 0
        mag = -c if negative else c
        if k == 0:
            term = field.fmt(mag)
        else:
            tpow = 't' if k == 1 else f't^{k}'
            if mag == field.one:
                term = tpow
            else:
                term = f'{_fmt_coeff_for_term(field, mag)}*{tpow}'
        if not parts:
            parts.append(f'-{term}' if negative else term)
        else:
            parts.append(f'- {term}' if negative else f'+ {term}')
    return ' '.join(parts)


def _split_top_level_terms(s):
    """Split on +/- separators that are not inside parentheses and not part
    of a fraction sign; returns a list of signed term strings."""
    terms, cur, depth = [], '', 0
    for ch in s:
        if ch == '(':
            depth += 1
        elif ch == ')':
            depth -= 1
        if ch in '+-' and depth == 0 and cur.strip() and cur.rstrip()[-1] not in '+-*/(':
            terms.append(cur)
            cur = ch
        else:
            cur += ch
    if cur.strip():
        terms.append(cur)
    return terms


def parse_poly(field, s):
    if not s.strip():
        raise ParseError('empty polynomial')
    coeffs = {}
    for raw in _split_top_level_terms(s):
        term = raw.strip()
        sign = 1
        while term and term[0] in '+-':
            if term[0] == '-':
                sign = -sign
            term = term[1:].strip()
        if not term:
            raise ParseError(f'bad polynomial term in {s!r}')
        if 't' in term:
            head, _, tail = term.partition('t')
            head = head.strip().rstrip('*').strip()
            tail = tail.strip()
            if tail.startswith('^'):
                try:
                    k = int(tail[1:].strip())
                except ValueError as exc:
                    raise ParseError(f'bad exponent in {raw!r}') from exc
            elif tail:
                raise ParseError(f'bad polynomial term {raw!r}')
            else:
                k = 1
            coef = field.one if not head else field.parse(head)
        else:
            k = 0
            coef = field.parse(term)
        if sign < 0:
            coef = field.neg(coef)
        coeffs[k] = field.add(coeffs.get(k, field.zero), coef)
    out = [field.zero] * (max(coeffs) + 1)
    for k, c in coeffs.items():
        out[k] = c
    return Poly(field, out)


def rational_height(fr):
    """max(|numerator|, denominator) of a Fraction in lowest terms."""
    return max(abs(fr.numerator), fr.denominator)


def poly_height(poly):
    """Greatest coefficient height of a rational polynomial (min 1)."""
    h = 1
    for c in poly.coeffs:
        h = max(h, rational_height(c))
    return h


__all__ = [
    'GaussianInt', 'Poly', 'QQ', 'PrimePowerField',
    'gaussian_divmod', 'gaussian_exact_div', 'gaussian_gcd',
    'gaussian_canonical_associate',
    'poly_divmod', 'poly_exact_div', 'poly_gcd',
    'format_gaussian', 'parse_gaussian', 'format_poly', 'parse_poly',
    'rational_height', 'poly_height',
]
