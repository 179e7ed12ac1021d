"""Stability of ideals under sigma and delta.

For an automorphism sigma, sigma(I) is contained in I exactly when
sigma(I) = I (sigma permutes primes and preserves the total exponent mass),
so the sigma check is factored-form equality.  For delta, an ideal of a
principal ideal domain is delta-stable exactly when delta maps one principal
generator g into the ideal: delta(r*g) = sigma(r)*delta(g) + delta(r)*g, and
the second term is always in (g).
"""

from .errors import PreconditionError
from .ideals import ideal_sigma


def is_stable_ideal(dom, I, mode='sigma_delta'):
    """Whether I is stable under sigma, delta, or both.

    mode is one of 'sigma', 'delta', 'sigma_delta'."""
    if mode not in ('sigma', 'delta', 'sigma_delta'):
        raise PreconditionError(f'unknown stability mode {mode!r}')
    if I.is_zero:
        return True
    if mode in ('sigma', 'sigma_delta') and ideal_sigma(dom, I) != I:
        return False
    if mode in ('delta', 'sigma_delta'):
        g = I.generator()
        if not I.contains_element(dom.delta(g)):
            return False
    return True


__all__ = ['is_stable_ideal']
