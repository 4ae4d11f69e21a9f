# -*- coding: utf-8 -*-

"""Cones over towers of cyclic subgroups, and the complexes of a finite layer."""


#------------------------------------------------------------------------------
# Imports
#------------------------------------------------------------------------------

import logging

from fittlib.utils import Bunch
from fittlib.ring.element import power_sum
from fittlib.ring.matrix import ring_matrix, map_matrix, scale_matrix, identity_matrix, vstack
from fittlib.ideals.minors import minors
from fittlib.ideals.fractional import FractionalIdeal
from .complex import ComplexMorphism, DEFAULT_MAX_DEGREE
from .builders import (cyclic_complex, tensor_complexes, tensor_morphisms, mapping_cone,
                       pure_power_morphism, cokernel_complex)

logger = logging.getLogger(__name__)


#------------------------------------------------------------------------------
# Subgroup towers
#------------------------------------------------------------------------------

def special_morphism_s(sigma, m, ctx, max_degree=DEFAULT_MAX_DEGREE):
    """The morphism from the cyclic complex of sigma^m to the one of sigma.

    It is the identity in even degrees and multiplication by 1 + sigma + ... + sigma^(m-1)
    in odd degrees.

    """
    assert m >= 1
    e = cyclic_complex(sigma, ctx, max_degree=max_degree)
    e1 = cyclic_complex(sigma ** m, ctx, max_degree=max_degree)
    mu = power_sum(sigma, m, ctx)
    maps = {k: ring_matrix(ctx, [[mu if k % 2 else 1]]) for k in range(max_degree + 1)}
    return ComplexMorphism(e1, e, maps)


def tower_cone(tower, ctx, max_degree=DEFAULT_MAX_DEGREE):
    """Cone of the tensor product of the tower morphisms.

    `tower` is a list of pairs `(sigma, m)`: the cyclic group generated by sigma, of index m
    over the subgroup generated by sigma^m. The factors must generate independent subgroups.

    """
    morphisms = [special_morphism_s(sigma, m, ctx, max_degree=max_degree)
                 for sigma, m in tower]
    f = tensor_morphisms(morphisms)
    cone = mapping_cone(f, name='D')
    logger.debug("Tower cone with %d factors and ranks %s.", len(tower), cone.ranks)
    return cone


def tower_cone_matrix(tower, ctx):
    """The boundary from degree 3 to degree 2 of the tower cone."""
    return tower_cone(tower, ctx, max_degree=3).boundary(3)


#------------------------------------------------------------------------------
# Finite layers
#------------------------------------------------------------------------------

def layer_complexes(level, delta, max_degree=DEFAULT_MAX_DEGREE):
    """Complexes C1 -> C over the group ring of a finite layer, and the cokernel D.

    C is the tensor product of the cyclic complexes of gamma and of the generator delta
    of H. C1 is the cyclic complex of delta, mapped onto the pure powers of its variable.

    Returns
    -------

    complexes : Bunch
        With keys `c1`, `c`, `f` and `d`.

    """
    ctx = level.context
    if delta.group != ctx.group:
        delta = level.embed(delta)
    e_gamma = cyclic_complex(level.gamma, ctx, max_degree=max_degree, variable='x1')
    e_h = cyclic_complex(delta, ctx, max_degree=max_degree, variable='x2')
    c = tensor_complexes([e_gamma, e_h])
    f = pure_power_morphism(e_h, c, 1)
    d = cokernel_complex(f, name='D')
    return Bunch(c1=e_h, c=c, f=f, d=d)


def layer_presentation(d, level):
    """Lift of the boundary from degree 3 to degree 2, stacked on w times the identity."""
    ctx = level.iwasawa
    t2 = d.rank(2)
    lifted = map_matrix(level.lift, d.boundary(3))
    return vstack([lifted, scale_matrix(identity_matrix(ctx, t2), level.w)], t2)


def layer_fitt1(level, delta, jobs=1):
    """Fitt^[1] of the augmentation kernel of the layer, w^(-1) times the maximal minors."""
    d = layer_complexes(level, delta, max_degree=3).d
    a = layer_presentation(d, level)
    num = minors(a, a.shape[1], level.iwasawa, jobs=jobs)
    return FractionalIdeal(num, [(0, level.n)])
