# -*- coding: utf-8 -*-

"""Tests of Fitt^[1](Z^0) and its closed forms."""

#------------------------------------------------------------------------------
# Imports
#------------------------------------------------------------------------------

from pytest import raises, mark

from fittlib.ring import PGroup, Subgroup, RingContext, norm_element
from fittlib.ideals import (IdealHandle, minors, from_terms, fitt_shift1_from_complex,
                            zv_fitt1, zv_fitt1_from_resolution)
from fittlib.complexes import product_complex_D
from fittlib.monomials.conjectures import build_A
from ..config import PlaceDatum
from ..modules import HypothesisError
from ..identities import (
    MethodError, applicable_methods, fitt1_Z0, fitt1_Z, places_fitt1, split_fitt1,
    privileged_candidates, privileged_place_rhs, sum_form_rhs, ramification_matrix,
    ramification_generators, ramification_case_minor, ramification_fitt1, independence_check,
    two_factor_ideal, three_factor_ideals)
from .conftest import make_config


#------------------------------------------------------------------------------
# Utils
#------------------------------------------------------------------------------

def _ramified(r, n=2, m=12):
    """Places with only ramification and splitting in C_9, mixing inertia orders and layers."""
    places = [('v1', [(3,)], None, 0), ('v2', [(1,)], None, 1), ('v3', [(3,)], None, 1)]
    if r == 1:
        places = [('v1', [(1,)], None, 1)]
    return make_config((9,), places[:r], n=n, m=m)


def _unramified(cfg, count):
    return [PlaceDatum.from_exponents(cfg.group, 'u%d' % (i + 1)) for i in range(count)]


#------------------------------------------------------------------------------
# Methods
#------------------------------------------------------------------------------

def test_applicable_methods(product_cfg, nested_cfg, tower_cfg):
    assert applicable_methods(product_cfg) == ['tensor', 'bar', 'direct']
    assert applicable_methods(nested_cfg) == ['direct']
    assert applicable_methods(tower_cfg) == ['cone', 'bar', 'direct']


def test_method_errors(product_cfg, nested_cfg):
    with raises(MethodError):
        fitt1_Z0(product_cfg, method='cone')
    with raises(MethodError):
        fitt1_Z0(nested_cfg, method='tensor')
    with raises(MethodError):
        fitt1_Z0(product_cfg, method='magic')


@mark.parametrize('orders,n,m', [((3, 3), 2, 6), ((3, 3), 4, 8), ((9, 3), 2, 6),
                                 ((9, 9), 2, 6), ((9, 3), 4, 8), ((9, 9), 4, 8)])
def test_two_factor_tensor(orders, n, m):
    cfg = make_config(orders, [('v1', [(1, 0)], None, 0), ('v2', [(0, 1)], None, 0)],
                      n=n, m=m)
    out = fitt1_Z0(cfg, method='tensor')
    assert out.method == 'tensor'
    assert out.fitt == two_factor_ideal(cfg.context)


def test_two_factor_methods(product_cfg):
    expected = two_factor_ideal(product_cfg.context)
    tensor = fitt1_Z0(product_cfg, method='tensor').fitt
    direct = fitt1_Z0(product_cfg, method='direct').fitt
    bar = fitt1_Z0(product_cfg, method='bar').fitt
    assert tensor == expected
    assert direct == expected
    assert bar == tensor


def test_tower_methods(tower_cfg):
    ctx = tower_cfg.context
    g = ctx.group.generator(0)
    nu = norm_element(Subgroup(ctx.group, [g ** 3]), ctx)
    tau = ctx.element(g) - 1
    expected = from_terms(ctx, [([1], []), ([nu * tau], [(0, 0)])])
    assert fitt1_Z0(tower_cfg, method='cone').fitt == expected
    assert fitt1_Z0(tower_cfg, method='direct').fitt == expected


def test_unramified_bar():
    cfg = make_config((3,), [('v', [], None, 0)])
    assert fitt1_Z0(cfg, method='bar').fitt == fitt1_Z0(cfg, method='direct').fitt


def test_single_place():
    cfg = make_config((3,), [('v', [(1,)], None, 1)], n=2, m=10)
    ctx = cfg.context
    v = cfg.places[0]
    expected = zv_fitt1(v.inertia, v.frobenius_lift(ctx), ctx)
    assert expected == zv_fitt1_from_resolution(v.inertia, v.frobenius_lift(ctx), ctx)
    assert fitt1_Z(cfg) == expected


def test_places_fitt1():
    cfg = make_config((3, 3), [('v1', [(1, 0)], None, 0), ('v2', [(0, 1)], None, 0)], m=8)
    assert fitt1_Z(cfg) == places_fitt1(cfg)


#------------------------------------------------------------------------------
# Privileged place
#------------------------------------------------------------------------------

def test_privileged_place(nested_cfg):
    assert privileged_candidates(nested_cfg) == ['v1']
    rhs = privileged_place_rhs(nested_cfg)
    assert fitt1_Z0(nested_cfg).fitt == rhs
    assert split_fitt1(nested_cfg) == rhs


def test_privileged_place_single():
    # At n_v = 0 the factor T / (sigma - 1) is one.
    cfg = make_config((3,), [('v', [(1,)], None, 0)])
    ctx = cfg.context
    nu = norm_element(Subgroup(ctx.group, [(1,)]), ctx)
    assert privileged_place_rhs(cfg, 'v') == from_terms(ctx, [([1, nu], [])])


def test_privileged_place_errors(nested_cfg, product_cfg):
    with raises(HypothesisError):
        privileged_place_rhs(nested_cfg, 'v2')
    with raises(HypothesisError):
        privileged_place_rhs(product_cfg)
    assert privileged_candidates(product_cfg) == []


@mark.parametrize('places,candidates', [
    ([('v1', [(1,)], None, 0), ('v2', [(1,)], None, 1)], ['v1']),
    ([('v1', [(1,)], None, 1), ('v2', [(1,)], (1,), 1)], ['v1', 'v2']),
    ([('v1', [(1,)], None, 0), ('v2', [(1,)], None, 0), ('v3', [(1,)], None, 1)],
     ['v1', 'v2']),
])
def test_sum_form(places, candidates):
    cfg = make_config((3,), places, n=2, m=10)
    assert privileged_candidates(cfg) == candidates
    lhs = sum_form_rhs(cfg)
    for label in candidates:
        assert lhs == privileged_place_rhs(cfg, label)


def test_sum_form_errors(product_cfg):
    with raises(HypothesisError):
        sum_form_rhs(product_cfg)


#------------------------------------------------------------------------------
# Ramification and splitting only
#------------------------------------------------------------------------------

@mark.parametrize('r', [1, 2, 3])
def test_ramification_generators(r):
    cfg = _ramified(r)
    b = ramification_matrix(cfg)
    assert b.shape == (2 * r + 2, r + 1)
    gens = ramification_generators(cfg)
    assert len(gens) == 2 ** r + 1
    assert minors(b, r + 1, cfg.context) == IdealHandle(cfg.context, gens)


@mark.parametrize('subset,l,rows', [((), 0, [0, 3, 4]), ((1,), 0, [0, 1, 3]),
                                    ((0,), 1, [0, 1, 4])])
def test_ramification_case_minor(subset, l, rows):
    cfg = _ramified(2)
    out = ramification_case_minor(cfg, subset, l)
    assert out.rows == rows
    assert out.minor == out.expected or out.minor == -out.expected


def test_ramification_direct():
    cfg = _ramified(2, m=14)
    assert ramification_fitt1(cfg) == fitt1_Z0(cfg).fitt


def test_ramification_single_place():
    cfg = make_config((3,), [('v', [(1,)], None, 1)], n=2, m=10)
    assert ramification_fitt1(cfg) == privileged_place_rhs(cfg, 'v')


def test_ramification_errors(product_cfg):
    with raises(HypothesisError):
        ramification_matrix(product_cfg)
    cfg = make_config((9,), [('v', [(3,)], (1,), 0)])
    with raises(HypothesisError):
        ramification_generators(cfg)


#------------------------------------------------------------------------------
# Independence of the set of places
#------------------------------------------------------------------------------

def test_independence_empty(product_cfg):
    out = independence_check(product_cfg, [], method='tensor')
    assert out.passed
    assert out.witness is None


@mark.parametrize('count', [1, 2])
def test_independence(count):
    cfg = make_config((3, 3), [('v1', [(1, 0)], None, 0), ('v2', [(0, 1)], None, 0)],
                      n=3, m=10)
    out = independence_check(cfg, _unramified(cfg, count), method='tensor')
    assert out.passed
    assert out.witness is None
    base = fitt1_Z0(cfg, method='tensor').fitt
    assert (out.rhs.denominator_factors.count((0, 0)) ==
            base.denominator_factors.count((0, 0)) + count)


def test_independence_ramified(product_cfg):
    extra = PlaceDatum.from_exponents(product_cfg.group, 'u', [(1, 1)])
    with raises(HypothesisError):
        independence_check(product_cfg, [extra])


#------------------------------------------------------------------------------
# Products of cyclic groups
#------------------------------------------------------------------------------

def test_three_factor_minors():
    ctx = RingContext(PGroup(3, (3, 3, 3)), 2, 1)
    out = three_factor_ideals(ctx)
    a = build_A(ctx)
    for e in range(4):
        assert minors(a, e, ctx) == out.minors[e]


@mark.parametrize('orders', [(3, 3, 3), (9, 3, 3)])
def test_three_factor_fitt(orders):
    ctx = RingContext(PGroup(3, orders), 2, 6)
    d, _ = product_complex_D(ctx.group.generators, ctx, max_degree=3)
    assert fitt_shift1_from_complex(d, ctx) == three_factor_ideals(ctx).fitt


def test_two_versus_three_factors():
    ctx = RingContext(PGroup(3, (3, 3)), 2, 6)
    sigmas = ctx.group.generators
    two = two_factor_ideal(ctx)
    three = three_factor_ideals(ctx, sigmas + [sigmas[0] * sigmas[1]]).fitt
    assert two != three
