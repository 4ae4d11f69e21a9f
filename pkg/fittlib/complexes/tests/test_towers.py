# -*- coding: utf-8 -*-

"""Tests of tower cones and finite-layer complexes."""

#------------------------------------------------------------------------------
# Imports
#------------------------------------------------------------------------------

from pytest import mark

from fittlib.ring import (PGroup, Subgroup, RingContext, LevelRing, ring_matrix, matrices_equal,
                          norm_element, power_sum, whole_group, gamma_power_poly)
from fittlib.ideals import IdealHandle, minors, from_terms, fitt_shift1_from_complex
from ..towers import (special_morphism_s, tower_cone, tower_cone_matrix, layer_complexes,
                      layer_presentation, layer_fitt1)


#------------------------------------------------------------------------------
# Tests
#------------------------------------------------------------------------------

def test_special_morphism():
    ctx = RingContext(PGroup(3, (9,)), 2, 1)
    g = ctx.group.generator(0)
    f = special_morphism_s(g, 3, ctx)
    assert f[1][0, 0] == power_sum(g, 3, ctx)
    assert f[2][0, 0] == ctx.one()
    assert f[3][0, 0] == power_sum(g, 3, ctx)
    assert f.source.boundary(1)[0, 0] == ctx.element(g ** 3) - 1
    assert f.source.boundary(2)[0, 0] == norm_element(Subgroup(ctx.group, [g ** 3]), ctx)
    ident = special_morphism_s(g, 1, ctx)
    assert all(ident[k][0, 0] == ctx.one() for k in range(5))


def test_tower_cone_single():
    ctx = RingContext(PGroup(3, (9,)), 3, 8)
    g = ctx.group.generator(0)
    cone = tower_cone([(g, 3)], ctx, max_degree=3)
    assert cone.ranks == [1, 2, 2, 2]
    tau = ctx.element(g) - 1
    nu = norm_element(Subgroup(ctx.group, [g ** 3]), ctx)
    assert matrices_equal(cone.boundary(3), ring_matrix(ctx, [[tau, 0], [1, -nu]]))
    fitt = fitt_shift1_from_complex(cone, ctx)
    assert fitt == from_terms(ctx, [([1], []), ([nu * tau], [(0, 0)])])


def test_tower_cone_two_factors():
    ctx = RingContext(PGroup(3, (9, 9)), 2, 1)
    tower = [(g, 3) for g in ctx.group.generators]
    assert tower_cone(tower, ctx, max_degree=3).ranks == [1, 3, 5, 7]
    a = tower_cone_matrix(tower, ctx)
    assert a.shape == (7, 5)
    assert minors(a, 5, ctx).is_zero
    assert not minors(a, 1, ctx).is_zero


@mark.parametrize('n,orders', [(0, (3,)), (1, (3,)), (0, (9,)), (1, (9,))])
def test_layer_minors(n, orders):
    ctx = RingContext(PGroup(3, orders), 2, 2 * 3 ** n + 4)
    level = LevelRing(ctx, n)
    delta = ctx.group.generator(0)
    d = layer_complexes(level, delta).d
    assert d.ranks == [0, 1, 2, 3, 4]
    assert d.labels[2] == ['x1^2', 'x1*x2']
    a = layer_presentation(d, level)
    assert a.shape == (5, 2)
    nu = norm_element(whole_group(ctx.group), ctx)
    w = gamma_power_poly(n, ctx)
    assert minors(a, 2, ctx) == IdealHandle(ctx, [w, nu * ctx.T()])
    expected = from_terms(ctx, [([1], []), ([nu * ctx.T()], [(0, n)])])
    assert layer_fitt1(level, delta) == expected
