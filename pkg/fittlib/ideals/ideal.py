# -*- coding: utf-8 -*-

"""Finitely generated ideals of (Z/p^N)[G][T], compared modulo T^M."""


#------------------------------------------------------------------------------
# Imports
#------------------------------------------------------------------------------

import logging

import numpy as np

from fittlib.ring.element import ContextError
from fittlib.linalg.howell import HowellForm, stack_form

logger = logging.getLogger(__name__)


#------------------------------------------------------------------------------
# Canonical spans
#------------------------------------------------------------------------------

def _padded(x, t_precision):
    n = x.context.group.order
    out = np.zeros((t_precision, n), dtype=np.int64)
    d = min(t_precision, len(x.coeffs))
    out[:d] = x.coeffs[:d]
    return out


def _multiples(x, t_precision):
    """Rows `x g T^j` for all g in G and j < M, flattened T-degree-major and truncated."""
    group = x.context.group
    n = group.order
    m = t_precision
    a = _padded(x, m)
    # perm[t, g, c] is the coefficient of c T^t in x g.
    perm = a[:, group.sub_table.T]
    out = np.zeros((m, n, m, n), dtype=np.int64)
    for j in range(m):
        out[j, :, j:, :] = perm[:m - j].transpose(1, 0, 2)
    return out.reshape((m * n, m * n))


def _is_homogeneous(x):
    """Whether x is a group ring element times a power of T."""
    return len(np.flatnonzero(x.coeffs.any(axis=1))) == 1


def _leading_degree(x):
    return int(np.flatnonzero(x.coeffs.any(axis=1))[0])


def _graded_form(ctx, generators):
    """Canonical span of homogeneous generators: the ideal is graded in T.

    The degree j component is the group ring ideal spanned by the generators of degree at
    most j, so the form is block diagonal.

    """
    group = ctx.group
    n = group.order
    m = ctx.t_precision
    modulus = ctx.modulus
    kept = []
    current = HowellForm.empty(modulus, n)
    blocks = []
    by_degree = {}
    for x in generators:
        by_degree.setdefault(_leading_degree(x), []).append(x)
    for j in range(m):
        for x in by_degree.get(j, ()):
            v = x.coeffs[j]
            if current.contains_all(v):
                continue
            orbit = v[group.sub_table.T]
            current = stack_form(current, orbit)
            kept.append(x)
        blocks.append(current.rows)
    rows = np.zeros((sum(len(b) for b in blocks), m * n), dtype=np.int64)
    i = 0
    for j, b in enumerate(blocks):
        rows[i:i + len(b), j * n:(j + 1) * n] = b
        i += len(b)
    return HowellForm(rows, modulus, m * n), kept


def _general_form(ctx, generators):
    m = ctx.t_precision
    n = ctx.group.order
    form = HowellForm.empty(ctx.modulus, m * n)
    kept = []
    for x in generators:
        if form.contains_all(x.to_vector(m)):
            continue
        block = form.reduce(_multiples(x, m))
        block = block[block.any(axis=1)]
        form = stack_form(form, block)
        kept.append(x)
    return form, kept


def _degree_key(x):
    return (x.t_degree, len(np.flatnonzero(x.coeffs)))


#------------------------------------------------------------------------------
# Ideal handle
#------------------------------------------------------------------------------

class IdealHandle(object):
    """An ideal given by generators, with the Howell form of its truncation cached.

    The truncated ideal is spanned over Z/p^N by the products `x g T^j` (x a generator,
    g in G, j < M), flattened in the basis `(T^j, g)`. Generators lying in the span of the
    previous ones are skipped, so `basis` lists the generators actually needed.

    """
    def __init__(self, context, generators=()):
        self.context = context
        gens = [context.coerce(x) for x in generators]
        self.generators = tuple(x for x in gens if not x.is_zero)
        # Low degrees first, so that the kept basis has small T-degree.
        m = context.t_precision
        order = sorted(self.generators, key=_degree_key)
        # Generators divisible by T^M are invisible at this precision.
        self.vanishing = tuple(x for x in order if _leading_degree(x) >= m)
        order = [x for x in order if _leading_degree(x) < m]
        if all(_is_homogeneous(x) for x in order):
            self.form, kept = _graded_form(context, order)
        else:
            self.form, kept = _general_form(context, order)
        self.basis = tuple(kept)
        logger.debug("Ideal with %d generators, %d kept, span p^%d.",
                     len(self.generators), len(self.basis), self.form.log_size)

    @property
    def precision(self):
        return self.context.precision

    @property
    def log_size(self):
        return self.form.log_size

    @property
    def is_zero(self):
        return self.form.log_size == 0

    @property
    def is_unit_ideal(self):
        return self.contains(self.context.one())

    @property
    def max_degree(self):
        """Largest T-degree among the kept generators, -1 for the zero ideal.

        Generators vanishing modulo T^M count with their T-adic order.

        """
        degrees = [x.t_degree for x in self.basis]
        degrees += [_leading_degree(x) for x in self.vanishing]
        return max(degrees or [-1])

    @property
    def effective_generators(self):
        return self.basis + self.vanishing

    def contains(self, x):
        x = self.context.coerce(x)
        return self.form.contains_all(x.to_vector(self.context.t_precision))

    def issubset(self, other):
        _check_same(self, other)
        return other.form.contains_all(self.form.rows)

    def missing(self, other):
        """Kept generators of self that do not lie in other."""
        return [x for x in self.basis if not other.contains(x)]

    def with_t_precision(self, t_precision):
        return IdealHandle(self.context.with_t_precision(t_precision), self.generators)

    def __eq__(self, other):
        return isinstance(other, IdealHandle) and ideal_equal(self, other)

    def __ne__(self, other):
        return not self == other

    def __add__(self, other):
        return ideal_sum(self, other)

    def __mul__(self, other):
        return ideal_product(self, other)

    def render(self, names=None):
        gens = sorted(self.basis, key=lambda x: x.sort_key())
        return '(' + ', '.join(x.render(names) for x in gens) + ')' if gens else '(0)'

    def __repr__(self):
        return '<Ideal %s at (N, M) = %s>' % (self.render(), self.precision)


def _check_same(i, j):
    if i.context.precision != j.context.precision or i.context.group != j.context.group:
        raise ContextError("Ideals live in different truncated rings: %r and %r." % (
            i.context, j.context))


def ideal(ctx, generators):
    return IdealHandle(ctx, generators)


def unit_ideal(ctx):
    return IdealHandle(ctx, [ctx.one()])


def zero_ideal(ctx):
    return IdealHandle(ctx, [])


def ideal_equal(i, j):
    """Equality of the images of both ideals in (Z/p^N)[G][T]/(T^M)."""
    _check_same(i, j)
    return i.form == j.form


def ideal_sum(i, j):
    _check_same(i, j)
    return IdealHandle(i.context, i.effective_generators + j.effective_generators)


def ideal_product(i, j):
    _check_same(i, j)
    gens = [x * y for x in i.effective_generators for y in j.effective_generators]
    return IdealHandle(i.context, gens)


def ideal_scale(i, x):
    """The ideal x I."""
    return IdealHandle(i.context, [y * x for y in i.effective_generators])


def ideals_sum(ideals, ctx):
    gens = []
    for i in ideals:
        gens.extend(i.effective_generators)
    return IdealHandle(ctx, gens)
