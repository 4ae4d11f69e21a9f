# -*- coding: utf-8 -*-

"""Finite abelian p-groups, their elements and subgroups."""


#------------------------------------------------------------------------------
# Imports
#------------------------------------------------------------------------------

import logging

import numpy as np

from fittlib.utils._types import _as_int_tuple

logger = logging.getLogger(__name__)


#------------------------------------------------------------------------------
# Utils
#------------------------------------------------------------------------------

def _is_prime(p):
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


def _is_power_of(q, p):
    """Return whether q = p^a with a >= 1."""
    if q < p:
        return False
    while q % p == 0:
        q //= p
    return q == 1


def _valuation(q, p):
    a = 0
    while q % p == 0 and q > 0:
        q //= p
        a += 1
    return a


#------------------------------------------------------------------------------
# Group
#------------------------------------------------------------------------------

class PGroup(object):
    """A finite abelian p-group written as a product of cyclic factors of p-power order.

    Elements are indexed by the lexicographic order of their exponent tuples.

    """
    def __init__(self, p, factor_orders=(), allow_even=False):
        p = int(p)
        factor_orders = _as_int_tuple(factor_orders)
        if not _is_prime(p):
            raise ValueError("%d is not a prime number." % p)
        if p == 2:
            if not allow_even:
                raise ValueError("p must be odd; pass allow_even=True to experiment with p=2.")
            logger.warning("Using p=2: the identities of the odd case are not asserted.")
        for o in factor_orders:
            if not _is_power_of(o, p):
                raise ValueError("Factor order %d is not a positive power of %d." % (o, p))
        self.p = p
        self.factor_orders = factor_orders
        self.rank = len(factor_orders)
        self.order = int(np.prod(factor_orders, dtype=np.int64)) if factor_orders else 1
        self._strides = np.array(
            [int(np.prod(factor_orders[j + 1:], dtype=np.int64)) for j in range(self.rank)],
            dtype=np.int64)
        self._exponents = None
        self._add = None
        self._sub = None

    def __eq__(self, other):
        return (isinstance(other, PGroup) and self.p == other.p and
                self.factor_orders == other.factor_orders)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.p, self.factor_orders))

    def __repr__(self):
        return '<PGroup p=%d orders=%s>' % (self.p, self.factor_orders)

    def __getstate__(self):
        # Tables are rebuilt lazily in worker processes.
        state = self.__dict__.copy()
        state.update(_exponents=None, _add=None, _sub=None)
        return state

    # Indexing
    # -------------------------------------------------------------------------

    @property
    def exponents(self):
        """Array `(order, rank)` with the exponent tuple of every element, in index order."""
        if self._exponents is None:
            if self.rank == 0:
                self._exponents = np.zeros((1, 0), dtype=np.int64)
            else:
                grid = np.indices(self.factor_orders, dtype=np.int64)
                self._exponents = grid.reshape((self.rank, -1)).T.copy()
        return self._exponents

    def index(self, exponents):
        """Index of the element with the given exponent tuple."""
        e = np.asarray(exponents, dtype=np.int64) % np.asarray(self.factor_orders, dtype=np.int64)
        return int(e.dot(self._strides)) if self.rank else 0

    def _index_array(self, exponents):
        orders = np.asarray(self.factor_orders, dtype=np.int64)
        return (exponents % orders).dot(self._strides) if self.rank else \
            np.zeros(exponents.shape[:-1], dtype=np.int64)

    @property
    def add_table(self):
        """`add_table[a, b]` is the index of the product of elements a and b."""
        if self._add is None:
            e = self.exponents
            self._add = self._index_array(e[:, np.newaxis, :] + e[np.newaxis, :, :])
        return self._add

    @property
    def sub_table(self):
        """`sub_table[a, b]` is the index of the quotient a / b."""
        if self._sub is None:
            e = self.exponents
            self._sub = self._index_array(e[:, np.newaxis, :] - e[np.newaxis, :, :])
        return self._sub

    # Elements
    # -------------------------------------------------------------------------

    def element(self, *exponents):
        if len(exponents) == 1 and not np.isscalar(exponents[0]):
            exponents = exponents[0]
        return GroupElement(self, exponents)

    def element_at(self, index):
        return GroupElement(self, self.exponents[index])

    @property
    def identity(self):
        return GroupElement(self, (0,) * self.rank)

    def generator(self, j):
        """The generator of the j-th cyclic factor."""
        e = [0] * self.rank
        e[j] = 1
        return GroupElement(self, e)

    @property
    def generators(self):
        return [self.generator(j) for j in range(self.rank)]

    def product(self, other):
        """The product group with the factors of `self` first."""
        assert self.p == other.p
        return PGroup(self.p, self.factor_orders + other.factor_orders, allow_even=True)

    def exponent_valuation(self, j):
        return _valuation(self.factor_orders[j], self.p)


def group_elements(g):
    """All elements of a group, in lexicographic order."""
    return [g.element_at(i) for i in range(g.order)]


class GroupElement(object):
    """An element of a `PGroup`, written multiplicatively."""
    def __init__(self, group, exponents):
        exponents = _as_int_tuple(exponents)
        if len(exponents) != group.rank:
            raise ValueError("Expected %d exponents, got %d." % (group.rank, len(exponents)))
        self.group = group
        self.exponents = tuple(e % o for e, o in zip(exponents, group.factor_orders))

    @property
    def index(self):
        return self.group.index(self.exponents)

    def __mul__(self, other):
        assert self.group == other.group
        return GroupElement(self.group, [a + b for a, b in zip(self.exponents, other.exponents)])

    def __pow__(self, k):
        return GroupElement(self.group, [k * a for a in self.exponents])

    def inverse(self):
        return self ** -1

    @property
    def order(self):
        out = 1
        for e, o in zip(self.exponents, self.group.factor_orders):
            k = o // np.gcd(e, o)
            out = max(out, int(k))
        return out

    @property
    def is_identity(self):
        return not any(self.exponents)

    def __eq__(self, other):
        return (isinstance(other, GroupElement) and self.group == other.group and
                self.exponents == other.exponents)

    def __ne__(self, other):
        return not self == other

    def __lt__(self, other):
        return self.exponents < other.exponents

    def __hash__(self):
        return hash((self.group, self.exponents))

    def render(self, names=None):
        names = names or ['g%d' % (j + 1) for j in range(self.group.rank)]
        parts = []
        for name, e in zip(names, self.exponents):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append('%s^%d' % (name, e))
        return '*'.join(parts) or '1'

    def __repr__(self):
        return self.render()


#------------------------------------------------------------------------------
# Subgroups
#------------------------------------------------------------------------------

class Subgroup(object):
    """The subgroup of a `PGroup` generated by a list of elements."""
    def __init__(self, parent, generators=()):
        self.parent = parent
        gens = []
        for g in generators:
            if not isinstance(g, GroupElement):
                g = parent.element(g)
            if g.group != parent:
                raise ValueError("Generator %s does not lie in %s." % (g, parent))
            gens.append(g)
        self.generators = gens
        self._indices = self._closure()
        self.order = len(self._indices)
        assert parent.order % self.order == 0

    def _closure(self):
        add = self.parent.add_table
        current = np.array([0], dtype=np.int64)
        gens = np.array([g.index for g in self.generators], dtype=np.int64)
        if not len(gens):
            return current
        while True:
            new = np.union1d(current, add[np.ix_(current, gens)].ravel())
            if len(new) == len(current):
                return new
            current = new

    @property
    def indices(self):
        """Sorted element indices in the parent group."""
        return self._indices

    @property
    def elements(self):
        return [self.parent.element_at(i) for i in self._indices]

    def __contains__(self, x):
        return bool(np.isin(x.index, self._indices))

    def __eq__(self, other):
        return (isinstance(other, Subgroup) and self.parent == other.parent and
                np.array_equal(self._indices, other._indices))

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.parent, tuple(self._indices)))

    def issubset(self, other):
        return bool(np.all(np.isin(self._indices, other._indices)))

    @property
    def is_cyclic(self):
        return self.order == 1 or any(x.order == self.order for x in self.elements)

    @property
    def cyclic_generator(self):
        """The first element, in lexicographic order, that generates the subgroup."""
        for x in self.elements:
            if x.order == self.order:
                return x
        raise ValueError("The subgroup is not cyclic.")

    @property
    def index_in_parent(self):
        return self.parent.order // self.order

    def __repr__(self):
        return '<Subgroup of order %d in %s>' % (self.order, self.parent)


def whole_group(g):
    return Subgroup(g, g.generators)


def subgroup_elements(h):
    """The set of elements of a subgroup."""
    return set(h.elements)


def coset_labels(g, h):
    """Return `(representatives, labels)`.

    `representatives` holds the least element index of every coset of h, in increasing order,
    and `labels[i]` is the position of the coset of element i in that list.

    """
    labels = -np.ones(g.order, dtype=np.int64)
    reps = []
    add = g.add_table
    for i in range(g.order):
        if labels[i] < 0:
            labels[add[i, h.indices]] = len(reps)
            reps.append(i)
    return np.array(reps, dtype=np.int64), labels


def coset_transversal(g, h):
    """One representative per coset of h in g, the least one in lexicographic order."""
    if h.parent != g:
        raise ValueError("The subgroup does not lie in this group.")
    reps, _ = coset_labels(g, h)
    return [g.element_at(i) for i in reps]
