# -*- coding: utf-8 -*-

"""Free complexes over group rings, in the row vector convention."""


#------------------------------------------------------------------------------
# Imports
#------------------------------------------------------------------------------

import logging

from fittlib.ring.matrix import (zero_matrix, identity_matrix, mat_mul, matrices_equal,
                                 is_t_free_matrix, map_matrix, block_matrix, render_matrix,
                                 vstack)

logger = logging.getLogger(__name__)


DEFAULT_MAX_DEGREE = 4


class ComplexError(ValueError):
    """Raised on an inconsistent complex or a degree that was not built."""


class MorphismError(ValueError):
    """Raised when the squares of a morphism of complexes do not commute."""


#------------------------------------------------------------------------------
# Free complex
#------------------------------------------------------------------------------

def _default_labels(ranks):
    return [['e%d_%d' % (k, i) for i in range(r)] for k, r in enumerate(ranks)]


class FreeComplex(object):
    """A complex ... -> C^2 -> C^1 -> C^0 -> 0 of free modules, built up to a top degree.

    The boundary `d_k: C^k -> C^(k-1)` is a `rank(k) x rank(k-1)` matrix acting on row
    vectors. A complex is `bounded` when all components above the top degree vanish;
    otherwise it is a truncation and degrees above the top are unknown.

    Parameters
    ----------

    context : RingContext
    ranks : list
        Ranks of the degrees 0 to top.
    boundaries : dict
        Matrices `d_k` for 1 <= k <= top.
    labels : list
        Basis labels of every degree.
    keys : list
        Hashable basis keys of every degree, used to locate basis elements.

    """
    def __init__(self, context, ranks, boundaries, labels=None, keys=None, name=None,
                 bounded=False, check=True):
        self.context = context
        self.ranks = [int(r) for r in ranks]
        self.top = len(self.ranks) - 1
        self.name = name or 'C'
        self.bounded = bounded
        self.labels = labels or _default_labels(self.ranks)
        self.keys = keys or [list(range(r)) for r in self.ranks]
        self._index = [{key: i for i, key in enumerate(ks)} for ks in self.keys]
        self.boundaries = {}
        for k in range(1, self.top + 1):
            d = boundaries[k]
            if d.shape != (self.ranks[k], self.ranks[k - 1]):
                raise ComplexError("Boundary d_%d has shape %s, expected %s." % (
                    k, d.shape, (self.ranks[k], self.ranks[k - 1])))
            self.boundaries[k] = d
        for k, r in enumerate(self.ranks):
            if len(self.labels[k]) != r or len(self.keys[k]) != r:
                raise ComplexError("Degree %d has rank %d but %d labels." % (
                    k, r, len(self.labels[k])))
        if check:
            self.check()

    def __repr__(self):
        return '<FreeComplex %s ranks=%s>' % (self.name, self.ranks)

    # Components
    # -------------------------------------------------------------------------

    def _check_built(self, k):
        if k > self.top and not self.bounded:
            raise ComplexError("Degree %d of %s was not built (top degree %d)." % (
                k, self.name, self.top))

    def rank(self, k):
        self._check_built(k)
        return self.ranks[k] if 0 <= k <= self.top else 0

    def boundary(self, k):
        """The matrix of d_k, empty outside the built range."""
        if 1 <= k <= self.top:
            return self.boundaries[k]
        self._check_built(k)
        return zero_matrix(self.context, self.rank(k), self.rank(k - 1))

    def index(self, k, key):
        return self._index[k][key]

    @property
    def degrees(self):
        return range(self.top + 1)

    @property
    def is_t_free(self):
        return all(is_t_free_matrix(d) for d in self.boundaries.values())

    def check(self):
        """Raise `ComplexError` unless every composite d_(k-1) d_k vanishes exactly."""
        for k in range(2, self.top + 1):
            dd = mat_mul(self.boundaries[k], self.boundaries[k - 1], self.context)
            if not all(x.is_zero for x in dd.flat):
                raise ComplexError("d_%d d_%d is not zero in %s." % (k - 1, k, self.name))

    def map_entries(self, f, context, name=None):
        """The complex with a ring map applied to every boundary entry."""
        return FreeComplex(context, self.ranks,
                           {k: map_matrix(f, d) for k, d in self.boundaries.items()},
                           labels=self.labels, keys=self.keys, name=name or self.name,
                           bounded=self.bounded)

    def truncated(self, top):
        """The same complex built up to a lower top degree."""
        assert 0 <= top <= self.top
        return FreeComplex(self.context, self.ranks[:top + 1],
                           {k: self.boundaries[k] for k in range(1, top + 1)},
                           labels=self.labels[:top + 1], keys=self.keys[:top + 1],
                           name=self.name, check=False)

    def describe(self, names=None):
        """Plain-text description: ranks, labels and boundary entries per degree."""
        lines = ['complex %s' % self.name]
        for k in self.degrees:
            lines.append('degree %d: rank %d [%s]' % (
                k, self.ranks[k], ', '.join(self.labels[k])))
        for k in range(1, self.top + 1):
            lines.append('d_%d:' % k)
            if self.boundaries[k].size:
                lines.append(render_matrix(self.boundaries[k], names))
        return '\n'.join(lines)


#------------------------------------------------------------------------------
# Morphisms
#------------------------------------------------------------------------------

class ComplexMorphism(object):
    """A degree-wise map of complexes: `maps[k]` is a `rank_src(k) x rank_tgt(k)` matrix."""
    def __init__(self, source, target, maps, check=True):
        self.source = source
        self.target = target
        self.top = min(source.top, target.top)
        self.maps = {}
        for k in range(self.top + 1):
            m = maps[k]
            assert m.shape == (source.rank(k), target.rank(k))
            self.maps[k] = m
        if check:
            self.check()

    def __repr__(self):
        return '<ComplexMorphism %s -> %s>' % (self.source.name, self.target.name)

    def __getitem__(self, k):
        return self.maps[k]

    def check(self):
        """Raise `MorphismError` unless d_src f = f d_tgt in every built degree."""
        ctx = self.target.context
        for k in range(1, self.top + 1):
            left = mat_mul(self.source.boundary(k), self.maps[k - 1], ctx)
            right = mat_mul(self.maps[k], self.target.boundary(k), ctx)
            if not matrices_equal(left, right):
                raise MorphismError("The square in degree %d does not commute for %r." % (
                    k, self))


def identity_morphism(c):
    return ComplexMorphism(c, c, {k: identity_matrix(c.context, c.rank(k)) for k in c.degrees})


#------------------------------------------------------------------------------
# Direct sums
#------------------------------------------------------------------------------

def _sum_labels(complexes, k):
    labels = [l for c in complexes for l in c.labels[k]]
    if len(set(labels)) == len(labels):
        return labels
    return ['%d:%s' % (i + 1, l) for i, c in enumerate(complexes) for l in c.labels[k]]


def direct_sum_complexes(complexes, name=None):
    """The direct sum, with block diagonal boundaries and the summands in order."""
    assert complexes
    ctx = complexes[0].context
    top = min(c.top for c in complexes)
    ranks = [sum(c.rank(k) for c in complexes) for k in range(top + 1)]
    boundaries = {}
    for k in range(1, top + 1):
        blocks = [[c.boundary(k) if i == j else None for j, c in enumerate(complexes)]
                  for i, _ in enumerate(complexes)]
        boundaries[k] = block_matrix(ctx, blocks, [c.rank(k) for c in complexes],
                                     [c.rank(k - 1) for c in complexes])
    labels = [_sum_labels(complexes, k) for k in range(top + 1)]
    keys = [[(i, key) for i, c in enumerate(complexes) for key in c.keys[k]]
            for k in range(top + 1)]
    name = name or ' + '.join(c.name for c in complexes)
    return FreeComplex(ctx, ranks, boundaries, labels=labels, keys=keys, name=name,
                       bounded=all(c.bounded for c in complexes))


def direct_sum_morphisms(morphisms):
    """The block diagonal morphism between the direct sums of sources and targets."""
    source = direct_sum_complexes([f.source for f in morphisms])
    target = direct_sum_complexes([f.target for f in morphisms])
    ctx = target.context
    maps = {}
    for k in range(min(source.top, target.top) + 1):
        blocks = [[f[k] if i == j else None for j, f in enumerate(morphisms)]
                  for i, _ in enumerate(morphisms)]
        maps[k] = block_matrix(ctx, blocks, [f.source.rank(k) for f in morphisms],
                               [f.target.rank(k) for f in morphisms])
    return ComplexMorphism(source, target, maps)


def stack_morphisms(morphisms):
    """The morphism from the direct sum of the sources to their common target."""
    target = morphisms[0].target
    assert all(f.target is target for f in morphisms)
    source = direct_sum_complexes([f.source for f in morphisms])
    maps = {k: vstack([f[k] for f in morphisms], target.rank(k))
            for k in range(min(source.top, target.top) + 1)}
    return ComplexMorphism(source, target, maps)
