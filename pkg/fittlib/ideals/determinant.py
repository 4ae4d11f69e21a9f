# -*- coding: utf-8 -*-

"""Division-free determinants over commutative rings with zero divisors."""


#------------------------------------------------------------------------------
# Imports
#------------------------------------------------------------------------------

import logging

logger = logging.getLogger(__name__)


COFACTOR_MAX_DIM = 8
MAX_DIM = 12


class DimensionError(ValueError):
    """Raised on a matrix whose shape is not allowed by the operation."""


#------------------------------------------------------------------------------
# Cofactor expansion
#------------------------------------------------------------------------------

def _det_cofactor(m, ctx):
    """Laplace expansion along rows, memoized on the set of remaining columns."""
    n = m.shape[0]
    memo = {}
    # Nonzero entries per row, to skip structural zeros.
    support = [[j for j in range(n) if not m[i, j].is_zero] for i in range(n)]

    def _det(k, cols):
        # Determinant of rows k.. restricted to the sorted column tuple `cols`.
        if k == n:
            return ctx.one()
        if cols in memo:
            return memo[cols]
        acc = ctx.zero()
        for pos, j in enumerate(cols):
            if j not in support[k]:
                continue
            sub = _det(k + 1, cols[:pos] + cols[pos + 1:])
            if sub.is_zero:
                continue
            term = m[k, j] * sub
            acc = acc - term if pos % 2 else acc + term
        memo[cols] = acc
        return acc

    return _det(0, tuple(range(n)))


#------------------------------------------------------------------------------
# Berkowitz
#------------------------------------------------------------------------------

def _mat_vec(a, v, ctx):
    out = []
    for i in range(len(a)):
        acc = ctx.zero()
        for j, x in enumerate(v):
            if not a[i][j].is_zero and not x.is_zero:
                acc = acc + a[i][j] * x
        out.append(acc)
    return out


def _berkowitz_vector(a, ctx):
    """Coefficients of det(t I - a), highest degree first."""
    n = len(a)
    if n == 0:
        return [ctx.one()]
    if n == 1:
        return [ctx.one(), -a[0][0]]
    #
    # Partition a = [ a_11  R ]
    #               [ C     A ]
    #
    a11 = a[0][0]
    r = a[0][1:]
    c = [a[i][0] for i in range(1, n)]
    sub = [row[1:] for row in a[1:]]
    # Diagonals of the Toeplitz matrix: 1, -a_11, -R C, -R A C, -R A^2 C, ...
    diags = [ctx.one(), -a11]
    v = c
    for _ in range(n - 1):
        acc = ctx.zero()
        for x, y in zip(r, v):
            acc = acc + x * y
        diags.append(-acc)
        v = _mat_vec(sub, v, ctx)
    prev = _berkowitz_vector(sub, ctx)
    out = []
    for i in range(n + 1):
        acc = ctx.zero()
        for j in range(min(i + 1, n)):
            acc = acc + diags[i - j] * prev[j]
        out.append(acc)
    return out


def _det_berkowitz(m, ctx):
    a = [[m[i, j] for j in range(m.shape[1])] for i in range(m.shape[0])]
    vec = _berkowitz_vector(a, ctx)
    det = vec[-1]
    return -det if len(a) % 2 else det


#------------------------------------------------------------------------------
# Public functions
#------------------------------------------------------------------------------

def determinant(m, ctx, max_dim=MAX_DIM, method=None):
    """Exact determinant of a square matrix of ring elements.

    Parameters
    ----------

    m : ndarray of RingElement
    ctx : RingContext
    max_dim : int
        Larger matrices raise `DimensionError`.
    method : str
        `'cofactor'` or `'berkowitz'`. By default, cofactor expansion up to dimension 8.

    """
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionError("Expected a square matrix, got %s." % (m.shape,))
    n = m.shape[0]
    if n > max_dim:
        raise DimensionError("Matrix dimension %d exceeds the maximum %d." % (n, max_dim))
    if n == 0:
        return ctx.one()
    method = method or ('cofactor' if n <= COFACTOR_MAX_DIM else 'berkowitz')
    if method == 'cofactor':
        return _det_cofactor(m, ctx)
    elif method == 'berkowitz':
        return _det_berkowitz(m, ctx)
    raise ValueError("Unknown method `%s`." % method)
