# -*- coding: utf-8 -*-

"""Finite layers Z_p[H x C_{p^n}] of the truncated Iwasawa algebra."""


#------------------------------------------------------------------------------
# Imports
#------------------------------------------------------------------------------

import logging

import numpy as np

from .element import RingContext, RingElement, gamma_power_poly
from .group import PGroup, Subgroup

logger = logging.getLogger(__name__)


#------------------------------------------------------------------------------
# Level ring
#------------------------------------------------------------------------------

class LevelRing(object):
    """The quotient of the Iwasawa algebra by (1+T)^(p^n) - 1.

    It is realised as the group ring of G_n = H x C_{p^n}, the last factor being generated by
    gamma = 1 + T. At n = 0 it is the group ring of H itself.

    """
    def __init__(self, ctx, n=0):
        assert n >= 0
        self.iwasawa = ctx
        self.n = n
        self.H = ctx.group
        self.degree = ctx.p ** n if n else 1
        if n:
            group = self.H.product(PGroup(ctx.p, (ctx.p ** n,), allow_even=True))
        else:
            group = self.H
        self.group = group
        self.context = RingContext(group, ctx.coeff_precision, 1)
        self.w = gamma_power_poly(n, ctx)

    def __repr__(self):
        return '<LevelRing n=%d over %s>' % (self.n, self.H)

    def embed(self, h):
        """The image of an element of H in G_n."""
        assert h.group == self.H
        if not self.n:
            return h
        return self.group.element(tuple(h.exponents) + (0,))

    @property
    def gamma(self):
        """The image of 1 + T, as a group element of G_n."""
        if not self.n:
            return self.group.identity
        return self.group.generator(self.group.rank - 1)

    def subgroup(self, generators):
        return Subgroup(self.group, generators)

    def specialize(self, x):
        """Map an element of the Iwasawa context to G_n by T -> gamma - 1."""
        ctx = self.context
        if x.is_zero:
            return ctx.zero()
        if not self.n:
            return RingElement(ctx, x.coeffs[:1])
        d = self.degree
        k = self.H.order
        out = ctx.zero()
        t = ctx.element(self.gamma) - 1
        t_power = ctx.one()
        for j in range(len(x.coeffs)):
            row = x.coeffs[j]
            if row.any():
                # H-part sits in the slow index, the new cyclic factor in the fast one.
                a = np.zeros((k, d), dtype=np.int64)
                a[:, 0] = row
                out = out + RingElement(ctx, a.reshape((1, -1))) * t_power
            t_power = t_power * t
        return out

    def lift(self, y):
        """Canonical lift of an element of the group ring of G_n: (h, c) -> h (1+T)^c."""
        ctx = self.iwasawa
        if y.is_zero:
            return ctx.zero()
        assert y.is_t_free
        if not self.n:
            return RingElement(ctx, y.coeffs)
        a = y.coeffs[0].reshape((self.H.order, self.degree))
        out = ctx.zero()
        for c in range(self.degree):
            if a[:, c].any():
                out = out + RingElement(ctx, a[:, c][np.newaxis, :]) * ctx.one_plus_t_power(c)
        return out
