# -*- coding: utf-8 -*-

"""Tests of matrices over the ring."""

#------------------------------------------------------------------------------
# Imports
#------------------------------------------------------------------------------

import numpy as np

from ..group import PGroup
from ..element import RingContext, RingElement
from ..matrix import (
    zero_matrix, identity_matrix, ring_matrix, block_matrix, is_zero_matrix, matrices_equal,
    to_tensor, from_tensor, mat_mul, max_t_degree, render_matrix)


#------------------------------------------------------------------------------
# Tests
#------------------------------------------------------------------------------

def _random_matrix(ctx, n_rows, n_cols):
    t = np.random.randint(0, ctx.modulus, size=(n_rows, n_cols, ctx.group.order))
    t[np.random.rand(n_rows, n_cols) < .4] = 0
    return from_tensor(t, ctx)


def _naive_product(a, b, ctx):
    out = zero_matrix(ctx, a.shape[0], b.shape[1])
    for i in range(a.shape[0]):
        for j in range(b.shape[1]):
            out[i, j] = sum((a[i, k] * b[k, j] for k in range(a.shape[1])), ctx.zero())
    return out


def test_tensor_roundtrip_shape():
    ctx = RingContext(PGroup(3, (3,)), 2)
    m = _random_matrix(ctx, 2, 3)
    assert to_tensor(m, ctx).shape == (2, 3, 3)
    assert matrices_equal(from_tensor(to_tensor(m, ctx), ctx), m)


def test_mat_mul():
    ctx = RingContext(PGroup(3, (3, 3)), 2)
    for _ in range(10):
        a = _random_matrix(ctx, 3, 4)
        b = _random_matrix(ctx, 4, 2)
        assert matrices_equal(mat_mul(a, b, ctx), _naive_product(a, b, ctx))
    a = identity_matrix(ctx, 4)
    assert matrices_equal(mat_mul(a, b, ctx), b)


def test_mat_mul_with_t():
    ctx = RingContext(PGroup(3, (3,)), 2)
    a = ring_matrix(ctx, [[ctx.T(), 1], [None, ctx.element((1,))]])
    b = ring_matrix(ctx, [[1], [ctx.T()]])
    c = mat_mul(a, b, ctx)
    assert c[0, 0] == 2 * ctx.T()
    assert c[1, 0] == ctx.element((1,)) * ctx.T()
    assert max_t_degree(c) == 1


def test_block_matrix():
    ctx = RingContext(PGroup(3, (3,)), 2)
    i2 = identity_matrix(ctx, 2)
    m = block_matrix(ctx, [[i2, None], [None, identity_matrix(ctx, 1)]], [2, 1], [2, 1])
    assert matrices_equal(m, identity_matrix(ctx, 3))
    assert is_zero_matrix(zero_matrix(ctx, 2, 3))
    assert not is_zero_matrix(m)
    empty = block_matrix(ctx, [[zero_matrix(ctx, 0, 2)]], [0], [2])
    assert empty.shape == (0, 2)
    assert render_matrix(i2) == '[1, 0]\n[0, 1]'
