# -*- coding: utf-8 -*-

"""Admissible nu-monomials, (tau, nu)-monomials and the sets M(d, l)."""


#------------------------------------------------------------------------------
# Imports
#------------------------------------------------------------------------------

from itertools import combinations
import logging

import numpy as np

from fittlib.ring.group import GroupElement, Subgroup
from fittlib.ring.element import norm_element
from fittlib.complexes.builders import compositions
from fittlib.ideals.ideal import IdealHandle

logger = logging.getLogger(__name__)


#------------------------------------------------------------------------------
# Monomials
#------------------------------------------------------------------------------

def _render_part(name, exponents):
    out = []
    for i, k in enumerate(exponents):
        if k:
            out.append('%s%d' % (name, i + 1) if k == 1 else '%s%d^%d' % (name, i + 1, k))
    return out


class NuMonomial(object):
    """nu_1^f_1 ... nu_r^f_r."""
    def __init__(self, exponents):
        self.exponents = tuple(int(f) for f in exponents)
        assert all(f >= 0 for f in self.exponents)

    @property
    def r(self):
        return len(self.exponents)

    @property
    def degree(self):
        return sum(self.exponents)

    @property
    def support(self):
        return frozenset(i for i, f in enumerate(self.exponents) if f)

    @property
    def n_distinct(self):
        """Number of distinct nu_i occurring in the monomial."""
        return len(self.support)

    def __eq__(self, other):
        return isinstance(other, NuMonomial) and self.exponents == other.exponents

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(('nu', self.exponents))

    def render(self):
        return '*'.join(_render_part('nu', self.exponents)) or '1'

    def __repr__(self):
        return '<NuMonomial %s>' % self.render()


class TauNuMonomial(object):
    """A product of a tau-monomial and a nu-monomial with disjoint supports."""
    def __init__(self, tau, nu):
        self.tau = tuple(int(f) for f in tau)
        self.nu = NuMonomial(nu)
        assert len(self.tau) == self.nu.r
        if any(a and b for a, b in zip(self.tau, self.nu.exponents)):
            raise ValueError("tau_i and nu_i cannot both occur in a (tau, nu)-monomial.")

    @property
    def r(self):
        return len(self.tau)

    @property
    def degree(self):
        return sum(self.tau) + self.nu.degree

    def sort_key(self):
        return (self.degree, tuple(-f for f in self.nu.exponents), tuple(-f for f in self.tau))

    def __eq__(self, other):
        return (isinstance(other, TauNuMonomial) and self.tau == other.tau and
                self.nu == other.nu)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.tau, self.nu.exponents))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def render(self):
        parts = _render_part('tau', self.tau) + _render_part('nu', self.nu.exponents)
        return '*'.join(parts) or '1'

    def __repr__(self):
        return '<TauNuMonomial %s>' % self.render()

    def element(self, taus, nus, ctx):
        """Evaluate in the ring, given the elements tau_i and nu_i."""
        x = ctx.one()
        for t, k in zip(taus, self.tau):
            if k:
                x = x * t ** k
        for n, k in zip(nus, self.nu.exponents):
            if k:
                x = x * n ** k
        return x


#------------------------------------------------------------------------------
# Admissibility
#------------------------------------------------------------------------------

def is_admissible(m):
    """Whether the exponents, sorted decreasingly, have partial sums bounded by those of
    (r - 1, r - 2, ..., 0)."""
    if not isinstance(m, NuMonomial):
        m = NuMonomial(m)
    r = m.r
    f = np.cumsum(sorted(m.exponents, reverse=True))
    bound = np.cumsum(np.arange(r - 1, -1, -1))
    return bool(np.all(f <= bound))


def enumerate_M(d, l, r):
    """The (tau, nu)-monomials of degree d in r indices with an admissible nu-part
    containing at least l distinct nu_i, sorted.

    With l <= 0 there is no constraint on the number of nu_i.

    """
    out = []
    for comp in compositions(d, r):
        support = [i for i, k in enumerate(comp) if k]
        for size in range(max(l, 0), len(support) + 1):
            for nus in combinations(support, size):
                nu = [comp[i] if i in nus else 0 for i in range(r)]
                if not is_admissible(nu):
                    continue
                tau = [0 if i in nus else comp[i] for i in range(r)]
                out.append(TauNuMonomial(tau, nu))
    return sorted(out)


#------------------------------------------------------------------------------
# Interpretation in the group ring
#------------------------------------------------------------------------------

def resolve_sigmas(group, sigmas=None):
    """The elements sigma_i, by default the generators of the cyclic factors of the group."""
    if sigmas is None:
        return list(group.generators)
    return [s if isinstance(s, GroupElement) else group.element(s) for s in sigmas]


def tau_nu_elements(ctx, sigmas=None):
    """The elements tau_i = sigma_i - 1 and nu_i = norm of <sigma_i>."""
    group = ctx.group
    sigmas = resolve_sigmas(group, sigmas)
    taus = [ctx.element(s) - 1 for s in sigmas]
    nus = [norm_element(Subgroup(group, [s]), ctx) for s in sigmas]
    return taus, nus


def monomial_ideal(monomials, ctx, sigmas=None):
    """The ideal generated by (tau, nu)-monomials evaluated in the ring."""
    taus, nus = tau_nu_elements(ctx, sigmas)
    return IdealHandle(ctx, [m.element(taus, nus, ctx) for m in monomials])
