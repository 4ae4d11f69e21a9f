# -*- coding: utf-8 -*-

"""Gaussian elimination of free complexes over finite group rings."""


#------------------------------------------------------------------------------
# Imports
#------------------------------------------------------------------------------

import logging

import numpy as np

from fittlib.ring.element import RingElement
from fittlib.ring.matrix import to_tensor, from_tensor, tensor_product
from .complex import FreeComplex

logger = logging.getLogger(__name__)


#------------------------------------------------------------------------------
# Minimal models
#------------------------------------------------------------------------------

def _markowitz_pivot(t, p):
    """Unit entry of a coefficient tensor with the smallest fill-in, or None."""
    units = t.sum(axis=2) % p != 0
    if not units.any():
        return None
    nz = t.any(axis=2)
    cost = (nz.sum(axis=1)[:, np.newaxis] - 1) * (nz.sum(axis=0)[np.newaxis, :] - 1)
    cost = np.where(units, cost, cost.max() + 1)
    i, j = np.unravel_index(np.argmin(cost), cost.shape)
    return int(i), int(j)


def _schur_update(t, i, j, ctx):
    """Subtract `t[:, j] u^-1 t[i, :]` from t, u = t[i, j]."""
    group, modulus = ctx.group, ctx.modulus
    u_inv = RingElement(ctx, t[i, j][np.newaxis, :]).inverse().group_coeffs
    rows = np.flatnonzero(t[:, j].any(axis=1))
    cols = np.flatnonzero(t[i].any(axis=1))
    col = tensor_product(t[rows][:, [j]], u_inv.reshape((1, 1, -1)), group, modulus)
    update = tensor_product(col, t[[i]][:, cols], group, modulus)
    t[np.ix_(rows, cols)] = (t[np.ix_(rows, cols)] - update) % modulus


def minimal_model(c, name=None):
    """Cancel the unit entries of all boundaries of a T-free complex.

    Every cancellation removes a contractible pair of basis elements in adjacent degrees,
    so homology and freeness are preserved. The result has no unit entry left.

    """
    assert c.is_t_free
    ctx = c.context
    p = ctx.p
    tensors = {k: to_tensor(c.boundary(k), ctx) for k in range(1, c.top + 1)}
    labels = [list(l) for l in c.labels]
    keys = [list(k) for k in c.keys]
    count = 0
    for k in range(1, c.top + 1):
        while tensors[k].size:
            pivot = _markowitz_pivot(tensors[k], p)
            if pivot is None:
                break
            i, j = pivot
            _schur_update(tensors[k], i, j, ctx)
            tensors[k] = np.delete(np.delete(tensors[k], i, axis=0), j, axis=1)
            if k + 1 in tensors:
                tensors[k + 1] = np.delete(tensors[k + 1], i, axis=1)
            if k - 1 in tensors:
                tensors[k - 1] = np.delete(tensors[k - 1], j, axis=0)
            del labels[k][i], keys[k][i], labels[k - 1][j], keys[k - 1][j]
            count += 1
    ranks = [len(l) for l in labels]
    logger.debug("Cancelled %d pairs, ranks %s -> %s.", count, c.ranks, ranks)
    return FreeComplex(ctx, ranks, {k: from_tensor(t, ctx) for k, t in tensors.items()},
                       labels=labels, keys=keys, name=name or c.name)
