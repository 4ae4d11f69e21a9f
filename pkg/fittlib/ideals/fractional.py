# -*- coding: utf-8 -*-

"""Fractional ideals with denominators g (1+T)^(p^k) - 1."""


#------------------------------------------------------------------------------
# Imports
#------------------------------------------------------------------------------

from collections import Counter
import logging

import numpy as np

from fittlib.ring.element import ContextError
from .ideal import IdealHandle, ideal_equal

logger = logging.getLogger(__name__)


DEFAULT_SLACK = 2


class PrecisionError(ValueError):
    """Raised when the T-precision is too small to certify an equality."""


class DenominatorError(ValueError):
    """Raised on a denominator outside the family g (1+T)^(p^k) - 1."""


#------------------------------------------------------------------------------
# Denominator factors
#------------------------------------------------------------------------------

def factor_element(factor, ctx):
    """The ring element g (1+T)^(p^k) - 1 of a factor `(g_index, k)`."""
    g, k = factor
    return ctx.element(ctx.group.element_at(g)) * ctx.one_plus_t_power(ctx.p ** k) - 1


def as_factor(x):
    """Recognize x = g (1+T)^(p^k) - 1 and return `(g_index, k)`."""
    ctx = x.context
    y = x + 1
    d = y.t_degree
    if d < 1:
        raise DenominatorError("%s is not of the form g (1+T)^(p^k) - 1." % x.render())
    k = 0
    while ctx.p ** k < d:
        k += 1
    nz = np.flatnonzero(y.coeffs[0])
    if ctx.p ** k != d or len(nz) != 1 or y.coeffs[0, nz[0]] != 1:
        raise DenominatorError("%s is not of the form g (1+T)^(p^k) - 1." % x.render())
    factor = (int(nz[0]), k)
    if factor_element(factor, ctx) != x:
        raise DenominatorError("%s is not of the form g (1+T)^(p^k) - 1." % x.render())
    return factor


def render_factor(factor, ctx, names=None):
    g, k = factor
    if g == 0 and k == 0:
        return 'T'
    gamma = '(1+T)' if k == 0 else '(1+T)^%d' % (ctx.p ** k)
    if g:
        gamma = ctx.group.element_at(g).render(names) + '*' + gamma
    return '(%s - 1)' % gamma


def _product(factors, ctx):
    out = ctx.one()
    for f in sorted(factors.elements()):
        out = out * factor_element(f, ctx)
    return out


#------------------------------------------------------------------------------
# Fractional ideal
#------------------------------------------------------------------------------

class FractionalIdeal(object):
    """The fractional ideal I / d, d a product of designated non-zero-divisors.

    Parameters
    ----------

    numerator : IdealHandle
    denominator : iterable
        Factors `(g_index, k)` standing for g (1+T)^(p^k) - 1, or ring elements of that form.

    """
    def __init__(self, numerator, denominator=()):
        self.numerator = numerator
        self.context = numerator.context
        factors = Counter()
        for f in denominator:
            if not isinstance(f, tuple):
                f = as_factor(self.context.coerce(f))
            factors[f] += 1
        self.denominator = factors

    @property
    def precision(self):
        return self.context.precision

    @property
    def denominator_element(self):
        return _product(self.denominator, self.context)

    @property
    def denominator_factors(self):
        return sorted(self.denominator.elements())

    def render(self, names=None):
        num = self.numerator.render(names)
        if not self.denominator:
            return num
        parts = []
        for f, mult in sorted(self.denominator.items()):
            s = render_factor(f, self.context, names)
            parts.append(s if mult == 1 else '%s^%d' % (s, mult))
        return '%s / %s' % (num, '*'.join(parts))

    def __repr__(self):
        return '<FractionalIdeal %s at (N, M) = %s>' % (self.render(), self.precision)

    def __eq__(self, other):
        return isinstance(other, FractionalIdeal) and frac_ideal_equal(self, other)

    def __ne__(self, other):
        return not self == other

    def __mul__(self, other):
        return frac_product(self, other)

    def __add__(self, other):
        return frac_sum(self, other)


def from_terms(ctx, terms):
    """Sum of fractional ideals given as `(generators, denominator factors)` pairs."""
    out = None
    for gens, den in terms:
        x = FractionalIdeal(IdealHandle(ctx, gens), den)
        out = x if out is None else frac_sum(out, x)
    return out if out is not None else FractionalIdeal(IdealHandle(ctx, []))


def integral(ideal):
    return FractionalIdeal(ideal, ())


def _check_same(x, y):
    if x.context.precision != y.context.precision or x.context.group != y.context.group:
        raise ContextError("Fractional ideals live in different rings.")


def frac_product(x, y):
    _check_same(x, y)
    return FractionalIdeal(x.numerator * y.numerator,
                           list((x.denominator + y.denominator).elements()))


def frac_sum(x, y):
    """Sum over the least common multiple of both denominators."""
    _check_same(x, y)
    ctx = x.context
    lcm = x.denominator | y.denominator
    fx = _product(lcm - x.denominator, ctx)
    fy = _product(lcm - y.denominator, ctx)
    gens = ([g * fx for g in x.numerator.effective_generators] +
            [g * fy for g in y.numerator.effective_generators])
    return FractionalIdeal(IdealHandle(ctx, gens), list(lcm.elements()))


def cross_multiplied(x, y):
    """The ideals num(x) d_y and num(y) d_x after cancelling the common factors."""
    _check_same(x, y)
    ctx = x.context
    common = x.denominator & y.denominator
    dx = _product(x.denominator - common, ctx)
    dy = _product(y.denominator - common, ctx)
    ix = IdealHandle(ctx, [g * dy for g in x.numerator.effective_generators])
    iy = IdealHandle(ctx, [g * dx for g in y.numerator.effective_generators])
    return ix, iy


def frac_ideal_equal(x, y, slack=DEFAULT_SLACK):
    """Whether d_y I_x = d_x I_y modulo (p^N, T^M).

    Raises `PrecisionError` when a generator of either cross-multiplied side has T-degree
    above M - slack.

    """
    ix, iy = cross_multiplied(x, y)
    m = x.context.t_precision
    degree = max([g.t_degree for g in ix.generators + iy.generators] or [-1])
    if m < degree + slack:
        raise PrecisionError(
            "T-precision %d is too small for generators of T-degree %d (slack %d)." % (
                m, degree, slack))
    return ideal_equal(ix, iy)


def frac_ideal_witness(x, y):
    """A kept generator of one cross-multiplied side missing from the other, or None."""
    ix, iy = cross_multiplied(x, y)
    for a, b in ((ix, iy), (iy, ix)):
        missing = a.missing(b)
        if missing:
            return missing[0]
    return None
