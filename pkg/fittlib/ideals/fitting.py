# -*- coding: utf-8 -*-

"""Shifted Fitting ideals from free resolutions and from complexes."""


#------------------------------------------------------------------------------
# Imports
#------------------------------------------------------------------------------

import logging

import numpy as np

from fittlib.ring.element import RingElement, norm_element
from fittlib.ring.matrix import ring_matrix, map_matrix, is_t_free_matrix
from fittlib.linalg.modules import (PermutationModule, elements_to_vector,
                                    vectors_to_elements, greedy_generators)
from .determinant import DimensionError
from .fractional import FractionalIdeal, as_factor, factor_element
from .ideal import IdealHandle
from .minors import minor_profile

logger = logging.getLogger(__name__)


#------------------------------------------------------------------------------
# Presentation reduction
#------------------------------------------------------------------------------

def _markowitz_unit(a):
    """Position of the unit entry with the smallest fill-in cost, or None."""
    nz = np.array([[not x.is_zero for x in row] for row in a], dtype=bool).reshape(a.shape)
    rows = nz.sum(axis=1)
    cols = nz.sum(axis=0)
    best, best_cost = None, None
    for i in range(a.shape[0]):
        for j in range(a.shape[1]):
            x = a[i, j]
            if nz[i, j] and x.is_t_free and x.is_unit:
                cost = (rows[i] - 1) * (cols[j] - 1)
                if best_cost is None or cost < best_cost:
                    best, best_cost = (i, j), cost
    return best


def eliminate_units(a):
    """Cancel unit entries of a T-free matrix by Schur complements.

    Every cancellation removes one row and one column. Returns `(matrix, count)`.

    """
    a = a.copy()
    count = 0
    while a.shape[0] and a.shape[1]:
        pos = _markowitz_unit(a)
        if pos is None:
            break
        i, j = pos
        u_inv = a[i, j].inverse()
        pivot_cols = [l for l in range(a.shape[1]) if l != j and not a[i, l].is_zero]
        for k in range(a.shape[0]):
            if k == i or a[k, j].is_zero:
                continue
            f = a[k, j] * u_inv
            for l in pivot_cols:
                a[k, l] = a[k, l] - f * a[i, l]
        a = np.delete(np.delete(a, i, axis=0), j, axis=1)
        count += 1
    logger.debug("Cancelled %d unit entries.", count)
    return a, count


def reduce_presentation(a, ctx):
    """Cancel unit entries, then replace the rows by minimal generators of their span.

    The matrix lives over the group ring of `ctx` (T-free entries). The returned matrix
    presents the same cokernel and has fewer columns whenever a unit entry existed.

    """
    assert is_t_free_matrix(a)
    a, _ = eliminate_units(a)
    t2 = a.shape[1]
    if not a.shape[0] or not t2:
        return a
    free = PermutationModule.free(ctx.group, t2, ctx.modulus)
    rows = np.array([elements_to_vector(row, ctx) for row in a], dtype=np.int64)
    gens = greedy_generators(free.orbit_blocks(rows), free)
    out = ring_matrix(ctx, vectors_to_elements(gens, t2, ctx), n_cols=t2) if len(gens) else \
        np.empty((0, t2), dtype=object)
    logger.debug("Presentation reduced from %d to %d rows.", a.shape[0], out.shape[0])
    return out


#------------------------------------------------------------------------------
# Shifted Fitting ideals
#------------------------------------------------------------------------------

def _minor_ideals(a, ctx, level=None, jobs=1):
    """Generators of Min_e(A~) in the Iwasawa context, for 0 <= e <= columns.

    A T-free matrix over the group ring of H is lifted as it is. A matrix over the group
    ring of a finite layer G_n (n > 0) is lifted entry-wise through `level.lift`.

    """
    t2 = a.shape[1]
    entries = [x for x in a.flat]
    group = entries[0].context.group if entries else ctx.group
    if level is not None and level.n > 0 and group == level.group:
        a = map_matrix(level.lift, a)
    elif is_t_free_matrix(a):
        # Minors of T-free matrices are T-free: compute them in the group ring.
        small = ctx.with_t_precision(1)
        profile = minor_profile(map_matrix(small.coerce, a), small, jobs=jobs)
        return [[RingElement(ctx, x.coeffs) for x in profile[e].effective_generators]
                for e in range(t2 + 1)]
    a = map_matrix(ctx.coerce, a)
    profile = minor_profile(a, ctx, jobs=jobs)
    return [list(profile[e].effective_generators) for e in range(t2 + 1)]


def shifted_ideal(mins, t2, shift, w_factor, ctx):
    """The fractional ideal w^(-shift) * sum_e w^(t2 - e) Min_e."""
    nonzero = [e for e in range(t2 + 1) if mins[e]]
    e_max = max(nonzero)
    # Every term is divisible by w^(t2 - e_max).
    den_power = shift - (t2 - e_max)
    w = factor_element(w_factor, ctx)
    gens = []
    for e in range(e_max, -1, -1):
        power = (e_max - e) + max(0, -den_power)
        wp = w ** power
        gens.extend(x * wp for x in mins[e])
    num = IdealHandle(ctx, gens)
    return FractionalIdeal(num, [w_factor] * max(den_power, 0))


def fitt_shift1_from_resolution(a, t1, t2, t3, ctx, n=0, level=None, w=None, reduce=False,
                                jobs=1):
    """Fitt^[1] of Z from an exact sequence R^t3 -> R^t2 -> R^t1 -> Z -> 0.

    Parameters
    ----------

    a : ndarray of RingElement
        The t3 x t2 matrix of the first map, over the group ring of H (n = 0), of the layer
        G_n (pass `level`), or over the Iwasawa context itself.
    ctx : RingContext
        The Iwasawa context where the fractional ideal lives.
    n : int
        Layer index, w = (1+T)^(p^n) - 1.
    w : RingElement
        Overrides w by another element g (1+T)^(p^k) - 1.
    reduce : bool
        Cancel unit entries and minimize the relations first (T-free matrices only).

    Returns
    -------

    fitt : FractionalIdeal
        w^(t2 - t1) sum_e w^(-e) Min_e(A~).

    """
    if a.shape != (t3, t2):
        raise DimensionError("Expected a %dx%d matrix, got %s." % (t3, t2, a.shape))
    w_factor = as_factor(ctx.coerce(w)) if w is not None else (0, n)
    if level is not None:
        assert level.n == n
    if reduce and is_t_free_matrix(a) and a.size:
        rctx = a.flat[0].context
        a = reduce_presentation(a, rctx)
        t2 = a.shape[1]
    mins = _minor_ideals(a, ctx, level=level, jobs=jobs)
    return shifted_ideal(mins, t2, t1, w_factor, ctx)


def fitt_shift1_from_complex(d, ctx, n=0, level=None, reduce=True, jobs=1):
    """Fitt^[1] from a free complex D exact except in degree 1, with H_1(D) = Z.

    Uses w^(t2 - t1 + t0) sum_e w^(-e) Min_e(A~), A the boundary from degree 3 to 2.

    """
    if reduce and d.is_t_free:
        from fittlib.complexes.reduction import minimal_model
        d = minimal_model(d)
    t0, t1, t2 = d.rank(0), d.rank(1), d.rank(2)
    a = d.boundary(3)
    if reduce and a.size and is_t_free_matrix(a):
        # Same cokernel, far fewer rows after the bar construction.
        a = reduce_presentation(a, a.flat[0].context)
        t2 = a.shape[1]
    mins = _minor_ideals(a, ctx, level=level, jobs=jobs)
    return shifted_ideal(mins, t2, t1 - t0, (0, n), ctx)


#------------------------------------------------------------------------------
# The modules Z_v
#------------------------------------------------------------------------------

def zv_fitt1(tv, frobenius_lift, ctx):
    """Fitt^[1](Z_v) = (sigma - 1)^(-1) (N_Tv, sigma - 1), sigma the Frobenius lift."""
    if not tv.is_cyclic:
        raise ValueError("The inertia group must be cyclic.")
    s = ctx.coerce(frobenius_lift) - 1
    factor = as_factor(s)
    return FractionalIdeal(IdealHandle(ctx, [norm_element(tv, ctx), s]), [factor])


def zv_fitt1_from_resolution(tv, frobenius_lift, ctx):
    """Fitt^[1](Z_v) from the resolution by Lambda/(sigma - 1) with maps N_Tv and delta - 1.

    Over Lambda/(sigma - 1) the three terms are free of rank one, so the formula applies with
    w = sigma - 1 and the 1x1 matrix (N_Tv).

    """
    if not tv.is_cyclic:
        raise ValueError("The inertia group must be cyclic.")
    a = ring_matrix(ctx, [[norm_element(tv, ctx)]])
    return fitt_shift1_from_resolution(
        a, 1, 1, 1, ctx, w=ctx.coerce(frobenius_lift) - 1)
