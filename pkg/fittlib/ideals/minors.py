# -*- coding: utf-8 -*-

"""Minor ideals and Fitting ideals of matrices over group rings."""


#------------------------------------------------------------------------------
# Imports
#------------------------------------------------------------------------------

from itertools import combinations
import logging

import numpy as np

from fittlib.utils import parallel_map, chunks
from .determinant import determinant, MAX_DIM
from .ideal import IdealHandle, unit_ideal, zero_ideal

logger = logging.getLogger(__name__)


#------------------------------------------------------------------------------
# Minor enumeration
#------------------------------------------------------------------------------

def _nonzero_rows(m, rows, cols):
    """Rows of the selection that are not identically zero on the selected columns."""
    return [i for i in rows if any(not m[i, j].is_zero for j in cols)]


def _minor_chunk(args):
    m, ctx, e, pairs = args
    out = []
    for rows, cols in pairs:
        sub = m[np.ix_(rows, cols)]
        x = determinant(sub, ctx, max_dim=MAX_DIM)
        if not x.is_zero:
            out.append(x)
    return out


def subsets(m, e):
    """All pairs (row subset, column subset) of size e, in lexicographic order.

    Pairs whose submatrix has a zero row are skipped.

    """
    n_rows, n_cols = m.shape
    out = []
    for cols in combinations(range(n_cols), e):
        live = set(_nonzero_rows(m, range(n_rows), cols))
        for rows in combinations(range(n_rows), e):
            if all(i in live for i in rows):
                out.append((rows, cols))
    out.sort()
    return out


def minor_list(m, e, ctx, jobs=1):
    """The nonzero e-minors of m, in lexicographic (rows, columns) order."""
    assert m.ndim == 2
    if e == 0:
        return [ctx.one()]
    if e > min(m.shape):
        return []
    pairs = subsets(m, e)
    n_chunks = 1 if jobs == 1 else 4 * jobs
    parts = parallel_map(_minor_chunk, [(m, ctx, e, c) for c in chunks(pairs, n_chunks)],
                         jobs=jobs)
    out = [x for part in parts for x in part]
    logger.debug("%d nonzero %d-minors out of %d for a %dx%d matrix.",
                 len(out), e, len(pairs), m.shape[0], m.shape[1])
    return out


def minors(m, e, ctx, jobs=1):
    """The ideal Min_e(m) generated by the e-minors, (1) for e = 0, (0) beyond the shape."""
    if e == 0:
        return unit_ideal(ctx)
    if e > min(m.shape):
        return zero_ideal(ctx)
    return IdealHandle(ctx, minor_list(m, e, ctx, jobs=jobs))


class MinorProfile(object):
    """The ideals Min_e(m) for 0 <= e <= min(rows, cols)."""
    def __init__(self, m, ctx, jobs=1, max_size=None):
        self.shape = m.shape
        self.context = ctx
        top = min(m.shape) if max_size is None else min(min(m.shape), max_size)
        self.ideals = {e: minors(m, e, ctx, jobs=jobs) for e in range(top + 1)}

    def __getitem__(self, e):
        if e < 0:
            raise KeyError(e)
        if e in self.ideals:
            return self.ideals[e]
        if e > min(self.shape):
            return zero_ideal(self.context)
        raise KeyError(e)

    def __len__(self):
        return len(self.ideals)

    def __iter__(self):
        return iter(sorted(self.ideals))

    def sizes(self):
        """log_p of the span size of every Min_e."""
        return [self.ideals[e].log_size for e in sorted(self.ideals)]

    def __eq__(self, other):
        return (isinstance(other, MinorProfile) and
                sorted(self.ideals) == sorted(other.ideals) and
                all(self.ideals[e] == other.ideals[e] for e in self.ideals))

    def __ne__(self, other):
        return not self == other


def minor_profile(m, ctx, jobs=1, max_size=None):
    return MinorProfile(m, ctx, jobs=jobs, max_size=max_size)


def fitt0(presentation, ctx, n_generators=None, jobs=1):
    """Fitt_0 of the module presented by the rows of the matrix: Min_b, b the number of
    generators. It is (0) when there are fewer than b relations."""
    b = presentation.shape[1] if n_generators is None else n_generators
    if b == 0:
        return unit_ideal(ctx)
    return minors(presentation, b, ctx, jobs=jobs)


def fitting_ideal(presentation, ctx, k=0, jobs=1):
    """Fitt_k = Min_{b-k}."""
    b = presentation.shape[1]
    if k >= b:
        return unit_ideal(ctx)
    return minors(presentation, b - k, ctx, jobs=jobs)
