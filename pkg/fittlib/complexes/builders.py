# -*- coding: utf-8 -*-

"""Builders of free complexes: cyclic, tensor, bar, cokernel and cone constructions."""


#------------------------------------------------------------------------------
# Imports
#------------------------------------------------------------------------------

from itertools import product
import logging

import numpy as np

from fittlib.ring.group import PGroup, GroupElement, whole_group
from fittlib.ring.element import ContextError, RingElement, power_sum
from fittlib.ring.matrix import (zero_matrix, identity_matrix, ring_matrix, scale_matrix,
                                 block_matrix, hstack, mat_mul, from_tensor)
from .complex import (FreeComplex, ComplexMorphism, direct_sum_complexes, stack_morphisms,
                      DEFAULT_MAX_DEGREE)

logger = logging.getLogger(__name__)


DEFAULT_BUDGET = 2000


class BudgetError(ValueError):
    """Raised when a complex would exceed the configured rank budget."""


class NotInjectiveError(ValueError):
    """Raised when a morphism has no unit pivot in some row, so its cokernel is not free."""


#------------------------------------------------------------------------------
# Labels
#------------------------------------------------------------------------------

def _power(variable, k):
    return variable if k == 1 else '%s^%d' % (variable, k)


def monomial_label(exponents, variables):
    """Render `x1^2*x3` from an exponent tuple, `1` for the empty monomial."""
    out = '*'.join(_power(v, k) for v, k in zip(variables, exponents) if k)
    return out or '1'


def compositions(n, r):
    """Tuples of r non-negative integers summing to n, in decreasing lexicographic order."""
    if r == 0:
        if n == 0:
            yield ()
        return
    for k in range(n, -1, -1):
        for rest in compositions(n - k, r - 1):
            yield (k,) + rest


#------------------------------------------------------------------------------
# Cyclic complexes
#------------------------------------------------------------------------------

def periodic_complex(ctx, odd, even, max_degree=DEFAULT_MAX_DEGREE, variable='x', name=None):
    """Rank one in every degree, with d_n = odd for n odd and d_n = even for n even."""
    odd, even = ctx.coerce(odd), ctx.coerce(even)
    ranks = [1] * (max_degree + 1)
    boundaries = {n: ring_matrix(ctx, [[odd if n % 2 else even]])
                  for n in range(1, max_degree + 1)}
    labels = [[monomial_label((n,), (variable,))] for n in range(max_degree + 1)]
    return FreeComplex(ctx, ranks, boundaries, labels=labels, name=name)


def cyclic_complex(sigma, ctx, max_degree=DEFAULT_MAX_DEGREE, variable='x', name=None):
    """The complex ... -> R -> R -> R with boundaries sigma - 1 and the norm of <sigma>.

    Its homology is R / (sigma - 1) in degree 0 and vanishes elsewhere.

    """
    if not isinstance(sigma, GroupElement):
        sigma = ctx.group.element(sigma)
    if sigma.group != ctx.group:
        raise ContextError("%s does not lie in %s." % (sigma, ctx.group))
    return periodic_complex(ctx, ctx.element(sigma) - 1, power_sum(sigma, sigma.order, ctx),
                            max_degree=max_degree, variable=variable,
                            name=name or 'E(%s)' % sigma.render())


#------------------------------------------------------------------------------
# Tensor products
#------------------------------------------------------------------------------

def _check_contexts(complexes):
    ctx = complexes[0].context
    for c in complexes[1:]:
        if c.context != ctx:
            raise ContextError("Cannot combine complexes over %r and %r." % (ctx, c.context))
    return ctx


def _tensor_keys(complexes, top):
    r = len(complexes)
    keys = []
    for n in range(top + 1):
        ks = []
        for comp in compositions(n, r):
            ranges = [range(c.rank(k)) for c, k in zip(complexes, comp)]
            for idx in product(*ranges):
                ks.append(tuple(zip(comp, idx)))
        keys.append(ks)
    return keys


def _tensor_label(complexes, key, variables, monomial):
    if monomial:
        return monomial_label([k for k, _ in key], variables)
    return '(%s)' % '|'.join(c.labels[k][i] for c, (k, i) in zip(complexes, key))


def tensor_complexes(complexes, variables=None, name=None):
    """Tensor product over the ring context, with the Koszul sign rule.

    The degree-n basis is indexed by keys `((k_1, i_1), ..., (k_r, i_r))` with
    `sum(k) = n`, compositions in decreasing lexicographic order. When every factor has rank
    at most one, basis elements are labelled by monomials in `variables`.

    """
    complexes = list(complexes)
    assert complexes
    ctx = _check_contexts(complexes)
    r = len(complexes)
    top = min(c.top for c in complexes)
    variables = variables or ['x%d' % (i + 1) for i in range(r)]
    monomial = all(max(c.ranks[:top + 1]) <= 1 for c in complexes)
    keys = _tensor_keys(complexes, top)
    labels = [[_tensor_label(complexes, key, variables, monomial) for key in ks] for ks in keys]
    boundaries = {}
    for n in range(1, top + 1):
        index = {key: i for i, key in enumerate(keys[n - 1])}
        d = zero_matrix(ctx, len(keys[n]), len(keys[n - 1]))
        for row, key in enumerate(keys[n]):
            sign = 1
            for j, (k, i) in enumerate(key):
                if k:
                    dj = complexes[j].boundary(k)
                    for l in range(dj.shape[1]):
                        x = dj[i, l]
                        if x.is_zero:
                            continue
                        col = index[key[:j] + ((k - 1, l),) + key[j + 1:]]
                        d[row, col] = d[row, col] + (x if sign > 0 else -x)
                if k % 2:
                    sign = -sign
        boundaries[n] = d
    name = name or ' x '.join(c.name for c in complexes)
    logger.debug("Tensor product of %d complexes with ranks %s.", r, [len(k) for k in keys])
    return FreeComplex(ctx, [len(k) for k in keys], boundaries, labels=labels, keys=keys,
                       name=name)


def tensor_morphisms(morphisms, variables=None):
    """Tensor product of morphisms: entries multiply, no sign since morphisms have degree 0."""
    morphisms = list(morphisms)
    source = tensor_complexes([f.source for f in morphisms], variables=variables)
    target = tensor_complexes([f.target for f in morphisms], variables=variables)
    ctx = target.context
    maps = {}
    for n in range(min(source.top, target.top) + 1):
        m = zero_matrix(ctx, source.rank(n), target.rank(n))
        for row, key in enumerate(source.keys[n]):
            choices = []
            for f, (k, i) in zip(morphisms, key):
                fk = f[k]
                choices.append([(l, fk[i, l]) for l in range(fk.shape[1])
                                if not fk[i, l].is_zero])
            for choice in product(*choices):
                x = ctx.one()
                for _, y in choice:
                    x = x * y
                tkey = tuple((k, l) for (k, _), (l, _) in zip(key, choice))
                col = target.index(n, tkey)
                m[row, col] = m[row, col] + x
        maps[n] = m
    return ComplexMorphism(source, target, maps)


def pure_power_morphism(e, c, factor):
    """Map a rank-one complex to the pure powers of one tensor factor of c."""
    ctx = c.context
    r = len(c.keys[0][0])
    top = min(e.top, c.top)
    maps = {}
    for n in range(top + 1):
        m = zero_matrix(ctx, e.rank(n), c.rank(n))
        key = tuple((n, 0) if j == factor else (0, 0) for j in range(r))
        m[0, c.index(n, key)] = ctx.one()
        maps[n] = m
    return ComplexMorphism(e, c, maps)


def morphism_tensor_f(sources, c):
    """The morphism from the direct sum of the factors of c to c, onto the pure powers."""
    return stack_morphisms([pure_power_morphism(e, c, i) for i, e in enumerate(sources)])


#------------------------------------------------------------------------------
# Bar resolution
#------------------------------------------------------------------------------

def _encode(tuples, m):
    k = tuples.shape[1]
    if not k:
        return np.zeros(len(tuples), dtype=np.int64)
    return tuples.dot(m ** np.arange(k - 1, -1, -1, dtype=np.int64))


def bar_resolution(h, ctx, max_degree=DEFAULT_MAX_DEGREE, budget=DEFAULT_BUDGET):
    """The standard resolution of the trivial module over the group ring of `ctx`.

    The degree-n component is free on the n-tuples of elements of the subgroup h (or of a
    whole group), with

        d(g_1, ..., g_n) = g_1 (g_2, ..., g_n)
                           + sum_j (-1)^j (..., g_j g_(j+1), ...)
                           + (-1)^n (g_1, ..., g_(n-1)).

    Keys are tuples of element indices in the group of `ctx`.

    """
    if isinstance(h, PGroup):
        h = whole_group(h)
    if h.parent != ctx.group:
        raise ContextError("The subgroup does not lie in %s." % ctx.group)
    m = h.order
    for n in range(max_degree + 1):
        if m ** n > budget:
            raise BudgetError("Degree %d of the bar resolution has rank %d, over the budget "
                              "of %d." % (n, m ** n, budget))
    group = ctx.group
    elements = np.asarray(h.indices, dtype=np.int64)
    position = -np.ones(group.order, dtype=np.int64)
    position[elements] = np.arange(m)
    prod = position[group.add_table[np.ix_(elements, elements)]]
    tuples = {0: np.zeros((1, 0), dtype=np.int64)}
    boundaries = {}
    for n in range(1, max_degree + 1):
        tup = np.indices((m,) * n).reshape((n, -1)).T
        tuples[n] = tup
        rows = np.arange(m ** n)
        t = np.zeros((m ** n, m ** (n - 1), group.order), dtype=np.int64)
        np.add.at(t, (rows, _encode(tup[:, 1:], m), elements[tup[:, 0]]), 1)
        for j in range(1, n):
            merged = np.hstack([tup[:, :j - 1], prod[tup[:, j - 1], tup[:, j]][:, np.newaxis],
                                tup[:, j + 1:]])
            np.add.at(t, (rows, _encode(merged, m), 0), (-1) ** j)
        np.add.at(t, (rows, _encode(tup[:, :-1], m), 0), (-1) ** n)
        boundaries[n] = from_tensor(t % ctx.modulus, ctx)
    keys = [[tuple(int(i) for i in elements[row]) for row in tuples[n]]
            for n in range(max_degree + 1)]
    labels = [['(%s)' % ','.join(group.element_at(i).render() for i in key) for key in ks]
              for ks in keys]
    logger.debug("Bar resolution of a group of order %d up to degree %d.", m, max_degree)
    return FreeComplex(ctx, [m ** n for n in range(max_degree + 1)], boundaries,
                       labels=labels, keys=keys, name='Bar(%d)' % m)


def induce_complex(c, ctx, images=None):
    """Extend the scalars of a complex from a smaller group ring to the one of `ctx`.

    `images` lists the images in `ctx.group` of the generators of the group of c. Without
    images, both groups must be equal.

    """
    small = c.context.group
    if images is None:
        if small != ctx.group:
            raise ContextError("Pass the generator images to induce from %s." % small)
        return c.map_entries(ctx.coerce, ctx)
    if c.context.coeff_precision != ctx.coeff_precision:
        raise ContextError("Coefficient precisions differ.")
    images = [g if isinstance(g, GroupElement) else ctx.group.element(g) for g in images]
    assert len(images) == small.rank
    for img, order in zip(images, small.factor_orders):
        if not (img ** order).is_identity:
            raise ValueError("%s does not define a homomorphism." % img)
    index = np.zeros(small.order, dtype=np.int64)
    for i, e in enumerate(small.exponents):
        g = ctx.group.identity
        for img, k in zip(images, e):
            g = g * img ** int(k)
        index[i] = g.index

    def _induce(x):
        if x.is_zero:
            return ctx.zero()
        out = np.zeros((len(x.coeffs), ctx.group.order), dtype=np.int64)
        for i in np.flatnonzero(x.coeffs.any(axis=0)):
            out[:, index[i]] += x.coeffs[:, i]
        return RingElement(ctx, out)

    return c.map_entries(_induce, ctx)


#------------------------------------------------------------------------------
# Cokernels and cones
#------------------------------------------------------------------------------

def _unit_pivots(m, degree):
    """One pivot column per row: a T-free unit entry, zero in every other row."""
    pivots = []
    used = set()
    for row in range(m.shape[0]):
        for j in range(m.shape[1]):
            x = m[row, j]
            if j in used or x.is_zero or not x.is_t_free or not x.is_unit:
                continue
            if all(m[l, j].is_zero for l in range(m.shape[0]) if l != row):
                pivots.append(j)
                used.add(j)
                break
        else:
            raise NotInjectiveError(
                "Row %d of the morphism in degree %d has no unit pivot." % (row, degree))
    return pivots


def cokernel_complex(f, name=None):
    """The degree-wise cokernel of a morphism whose rows carry unit pivots.

    Pivot columns are dropped. A pivot basis element e_j of row r is identified with
    `-u^-1 sum_(c kept) f[r, c] e_c`, u = f[r, j].

    """
    tgt = f.target
    ctx = tgt.context
    keeps, projections = [], []
    for k in range(f.top + 1):
        m = f[k]
        pivots = _unit_pivots(m, k)
        keep = [c for c in range(tgt.rank(k)) if c not in set(pivots)]
        proj = zero_matrix(ctx, tgt.rank(k), len(keep))
        for pos, c in enumerate(keep):
            proj[c, pos] = ctx.one()
        for row, j in enumerate(pivots):
            u_inv = m[row, j].inverse()
            for pos, c in enumerate(keep):
                if not m[row, c].is_zero:
                    proj[j, pos] = -(m[row, c] * u_inv)
        keeps.append(np.asarray(keep, dtype=np.int64))
        projections.append(proj)
    boundaries = {k: mat_mul(tgt.boundary(k)[keeps[k], :], projections[k - 1], ctx)
                  for k in range(1, f.top + 1)}
    labels = [[tgt.labels[k][c] for c in keeps[k]] for k in range(f.top + 1)]
    keys = [[tgt.keys[k][c] for c in keeps[k]] for k in range(f.top + 1)]
    ranks = [len(keep) for keep in keeps]
    logger.debug("Cokernel complex with ranks %s.", ranks)
    return FreeComplex(ctx, ranks, boundaries, labels=labels, keys=keys,
                       name=name or 'coker')


def identity_pair_complex(ctx, r, top, variable='y'):
    """The complex R^r -> R^r in degrees 1 and 0 with identity boundary, zero above."""
    ranks = [r, r] + [0] * (top - 1)
    boundaries = {1: identity_matrix(ctx, r)}
    for k in range(2, top + 1):
        boundaries[k] = zero_matrix(ctx, ranks[k], ranks[k - 1])
    names = ['%s%d' % (variable, i + 1) for i in range(r)]
    labels = [names, names] + [[] for _ in range(top - 1)]
    return FreeComplex(ctx, ranks, boundaries, labels=labels, name='Y', bounded=True)


def pruned_complex_D(f, name='D'):
    """The cokernel of f' from the sum of the factors to C + Y.

    Y is the identity complex on R^r in degrees 1 and 0, so that f' is split injective in
    degree 0 too: `f'^0 = (f^0, 1)`, `f'^1 = (f^1, d^1)`, `f'^k = f^k` above. The degree-n
    basis of the result is the set of monomials that are not pure powers (n >= 2),
    `y_1, ..., y_r` in degree 1 and the empty monomial in degree 0.

    """
    source, target = f.source, f.target
    ctx = target.context
    r = source.rank(0)
    top = f.top
    assert top >= 1
    y = identity_pair_complex(ctx, r, top)
    cprime = direct_sum_complexes([target, y], name='C + Y')
    maps = {0: hstack([f[0], identity_matrix(ctx, r)], r),
            1: hstack([f[1], source.boundary(1)], source.rank(1))}
    for k in range(2, top + 1):
        maps[k] = f[k]
    fprime = ComplexMorphism(source, cprime, maps)
    return cokernel_complex(fprime, name=name)


def product_complex_D(sigmas, ctx, max_degree=DEFAULT_MAX_DEGREE):
    """Pruned complex of the cyclic complexes of commuting generators, with f and C."""
    es = [cyclic_complex(s, ctx, max_degree=max_degree, variable='x%d' % (i + 1))
          for i, s in enumerate(sigmas)]
    c = tensor_complexes(es)
    f = morphism_tensor_f(es, c)
    return pruned_complex_D(f), f


def mapping_cone(f, name=None):
    """The cone of f: degree n is `target^n + source^(n-1)` with boundary

        [[d_target^n, 0], [f^(n-1), -d_source^(n-1)]].

    """
    src, tgt = f.source, f.target
    ctx = tgt.context
    top = min(tgt.top, f.top + 1)
    ranks = [tgt.rank(n) + src.rank(n - 1) for n in range(top + 1)]
    boundaries = {}
    for n in range(1, top + 1):
        blocks = [[tgt.boundary(n), None],
                  [f[n - 1], scale_matrix(src.boundary(n - 1), -1)]]
        boundaries[n] = block_matrix(ctx, blocks, [tgt.rank(n), src.rank(n - 1)],
                                     [tgt.rank(n - 1), src.rank(n - 2)])
    labels = [tgt.labels[n] + ['s(%s)' % l for l in (src.labels[n - 1] if n else [])]
              for n in range(top + 1)]
    keys = [[('t', k) for k in tgt.keys[n]] + [('s', k) for k in (src.keys[n - 1] if n else [])]
            for n in range(top + 1)]
    return FreeComplex(ctx, ranks, boundaries, labels=labels, keys=keys,
                       name=name or 'cone(%s)' % f.source.name)


def bar_morphism(subgroups, ctx, max_degree=3, budget=DEFAULT_BUDGET):
    """The inclusion of the bar resolutions of subgroups into the one of the whole group."""
    target = bar_resolution(ctx.group, ctx, max_degree=max_degree, budget=budget)
    morphisms = []
    for h in subgroups:
        source = bar_resolution(h, ctx, max_degree=max_degree, budget=budget)
        maps = {}
        for n in range(max_degree + 1):
            m = zero_matrix(ctx, source.rank(n), target.rank(n))
            for row, key in enumerate(source.keys[n]):
                m[row, target.index(n, key)] = ctx.one()
            maps[n] = m
        morphisms.append(ComplexMorphism(source, target, maps))
    return stack_morphisms(morphisms)


def bar_cone_D(subgroups, ctx, max_degree=3, budget=DEFAULT_BUDGET):
    """Cone of the sum of the subgroup bar resolutions into the bar resolution of the group.

    Its first homology is the kernel of the augmentation on the sum of the coset modules.

    """
    return mapping_cone(bar_morphism(subgroups, ctx, max_degree=max_degree, budget=budget),
                        name='D')
