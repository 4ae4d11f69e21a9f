# -*- coding: utf-8 -*-

"""Matrices of ring elements, stored as NumPy object arrays."""


#------------------------------------------------------------------------------
# Imports
#------------------------------------------------------------------------------

import logging

import numpy as np

from .element import RingElement, max_terms

logger = logging.getLogger(__name__)


#------------------------------------------------------------------------------
# Construction
#------------------------------------------------------------------------------

def zero_matrix(ctx, n_rows, n_cols):
    out = np.empty((n_rows, n_cols), dtype=object)
    zero = ctx.zero()
    for i in range(n_rows):
        for j in range(n_cols):
            out[i, j] = zero
    return out


def identity_matrix(ctx, n):
    out = zero_matrix(ctx, n, n)
    one = ctx.one()
    for i in range(n):
        out[i, i] = one
    return out


def ring_matrix(ctx, rows, n_cols=None):
    """Build a matrix from nested lists of ring elements, integers, group elements or None."""
    rows = list(rows)
    if n_cols is None:
        n_cols = len(rows[0]) if rows else 0
    out = zero_matrix(ctx, len(rows), n_cols)
    for i, row in enumerate(rows):
        assert len(row) == n_cols
        for j, x in enumerate(row):
            if x is not None:
                out[i, j] = ctx.coerce(x)
    return out


def column(ctx, entries):
    return ring_matrix(ctx, [[x] for x in entries], n_cols=1)


def map_matrix(f, m):
    out = np.empty(m.shape, dtype=object)
    for idx in np.ndindex(*m.shape):
        out[idx] = f(m[idx])
    return out


def scale_matrix(m, x):
    return map_matrix(lambda y: y * x, m)


def vstack(blocks, n_cols):
    blocks = [b for b in blocks if b.shape[0]]
    if not blocks:
        return np.empty((0, n_cols), dtype=object)
    assert all(b.shape[1] == n_cols for b in blocks)
    return np.concatenate(blocks, axis=0)


def hstack(blocks, n_rows):
    blocks = [b for b in blocks if b.shape[1]]
    if not blocks:
        return np.empty((n_rows, 0), dtype=object)
    assert all(b.shape[0] == n_rows for b in blocks)
    return np.concatenate(blocks, axis=1)


def block_matrix(ctx, blocks, row_sizes, col_sizes):
    """Assemble a 2D grid of blocks, where None stands for a zero block."""
    rows = []
    for i, block_row in enumerate(blocks):
        parts = []
        for j, b in enumerate(block_row):
            if b is None:
                b = zero_matrix(ctx, row_sizes[i], col_sizes[j])
            assert b.shape == (row_sizes[i], col_sizes[j])
            parts.append(b)
        rows.append(hstack(parts, row_sizes[i]))
    return vstack(rows, sum(col_sizes))


#------------------------------------------------------------------------------
# Predicates
#------------------------------------------------------------------------------

def is_zero_matrix(m):
    return all(x.is_zero for x in m.flat)


def matrices_equal(a, b):
    return a.shape == b.shape and all(x == y for x, y in zip(a.flat, b.flat))


def is_t_free_matrix(m):
    return all(x.is_t_free for x in m.flat)


def max_t_degree(m):
    return max([x.t_degree for x in m.flat] or [-1])


#------------------------------------------------------------------------------
# Dense coefficient tensors
#------------------------------------------------------------------------------

def to_tensor(m, ctx):
    """Coefficients of a T-free matrix as an integer array `(rows, cols, |G|)`."""
    out = np.zeros(m.shape + (ctx.group.order,), dtype=np.int64)
    for idx in np.ndindex(*m.shape):
        x = m[idx]
        assert x.is_t_free, "Expected a T-free matrix."
        if not x.is_zero:
            out[idx] = x.coeffs[0]
    return out


def from_tensor(t, ctx):
    out = np.empty(t.shape[:2], dtype=object)
    zero = ctx.zero()
    for idx in np.ndindex(*t.shape[:2]):
        v = t[idx]
        out[idx] = RingElement(ctx, v[np.newaxis, :]) if v.any() else zero
    return out


def regular_tensor(t, group):
    """`out[..., g, c] = t[..., c - g]`: multiplication by t as a matrix acting on rows."""
    return t[..., group.sub_table.T]


def tensor_product(a, b, group, modulus):
    """Matrix product of coefficient tensors `(r, k, |G|)` and `(k, c, |G|)`."""
    if not a.size or not b.size:
        return np.zeros((a.shape[0], b.shape[1], group.order), dtype=np.int64)
    reg = regular_tensor(b, group)
    # Each partial sum over the inner index stays within int64.
    step = max(1, (max_terms(modulus) - 1) // group.order)
    out = np.zeros((a.shape[0], b.shape[1], group.order), dtype=np.int64)
    for k in range(0, a.shape[1], step):
        out += np.einsum('abg,bcgh->ach', a[:, k:k + step], reg[k:k + step])
        out %= modulus
    return out


#------------------------------------------------------------------------------
# Products
#------------------------------------------------------------------------------

def mat_mul(a, b, ctx):
    """Matrix product, through coefficient tensors when both factors are T-free."""
    assert a.shape[1] == b.shape[0]
    if is_t_free_matrix(a) and is_t_free_matrix(b):
        out = tensor_product(to_tensor(a, ctx), to_tensor(b, ctx), ctx.group, ctx.modulus)
        return from_tensor(out, ctx)
    out = zero_matrix(ctx, a.shape[0], b.shape[1])
    for i in range(a.shape[0]):
        nz = [k for k in range(a.shape[1]) if not a[i, k].is_zero]
        for j in range(b.shape[1]):
            acc = out[i, j]
            for k in nz:
                if not b[k, j].is_zero:
                    acc = acc + a[i, k] * b[k, j]
            out[i, j] = acc
    return out


def render_matrix(m, names=None):
    return '\n'.join('[' + ', '.join(x.render(names) for x in row) + ']' for row in m)
