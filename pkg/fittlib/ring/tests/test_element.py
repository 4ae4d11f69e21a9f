# -*- coding: utf-8 -*-

"""Tests of the ring arithmetic."""

#------------------------------------------------------------------------------
# Imports
#------------------------------------------------------------------------------

import numpy as np
from numpy.testing import assert_array_equal as ae
from pytest import raises

from ..group import PGroup, Subgroup, whole_group
from ..element import (
    RingContext, RingElement, ContextError, norm_element, power_sum, gamma_power_poly,
    augmentation, max_terms)


#------------------------------------------------------------------------------
# Utils
#------------------------------------------------------------------------------

def _random_element(ctx, n_terms=2, max_degree=0):
    a = np.zeros((max_degree + 1, ctx.group.order), dtype=np.int64)
    for _ in range(n_terms):
        j = np.random.randint(0, max_degree + 1)
        g = np.random.randint(0, ctx.group.order)
        a[j, g] += np.random.randint(1, ctx.modulus)
    return RingElement(ctx, a)


def _product_oracle(x, y):
    ctx = x.context
    g = ctx.group
    out = np.zeros((max(x.t_degree + y.t_degree + 1, 0), g.order), dtype=np.int64)
    for j1, g1, c1 in x.terms():
        for j2, g2, c2 in y.terms():
            k = g.index(np.array(g.exponents[g1]) + np.array(g.exponents[g2]))
            out[j1 + j2, k] = (out[j1 + j2, k] + c1 * c2) % ctx.modulus
    return RingElement(ctx, out)


def _substitute(f, u):
    """Evaluate a group-trivial polynomial f(T) at T = u."""
    out = u.context.zero()
    power = u.context.one()
    for j in range(f.t_degree + 1):
        out = out + power * int(f.coeffs[j, 0])
        power = power * u
    return out


#------------------------------------------------------------------------------
# Tests
#------------------------------------------------------------------------------

def test_context():
    ctx = RingContext(PGroup(3, (3,)), 2, 5)
    assert ctx.modulus == 9
    assert ctx.precision == (2, 5)
    assert ctx.with_t_precision(1).compatible(ctx)
    assert ctx.with_t_precision(1) != ctx
    with raises(ValueError):
        RingContext(PGroup(3, (3,)), 0, 5)


def test_one_and_zero():
    ctx = RingContext(PGroup(3, (3, 3)), 2, 4)
    x = _random_element(ctx, 4, 2)
    assert ctx.one() * x == x
    assert x * 1 == x
    assert (x + ctx.zero()) == x
    assert (x - x).is_zero
    assert ctx.zero().t_degree == -1
    assert sum([x, x]) == 2 * x


def test_norm_kills_tau():
    ctx = RingContext(PGroup(3, (3, 3)), 2, 4)
    g = ctx.group
    for sigma in g.generators:
        h = Subgroup(g, [sigma])
        tau = ctx.element(sigma) - 1
        assert (norm_element(h, ctx) * tau).is_zero


def test_tau_nu_all_subgroups():
    ctx = RingContext(PGroup(3, (9, 3)), 2, 4)
    for sigma in [ctx.group.element_at(i) for i in range(ctx.group.order)]:
        m = sigma.order
        assert ((ctx.element(sigma) - 1) * power_sum(sigma, m, ctx)).is_zero


def test_product_oracle_sparse():
    ctx = RingContext(PGroup(3, (3,)), 2, 4)
    for _ in range(100):
        x = _random_element(ctx, 2)
        y = _random_element(ctx, 2)
        assert x * y == _product_oracle(x, y)


def test_product_oracle_dense():
    ctx = RingContext(PGroup(3, (9, 3)), 2, 4)
    for _ in range(20):
        x = _random_element(ctx, 20, 2)
        y = _random_element(ctx, 15, 1)
        assert x * y == _product_oracle(x, y)


def test_large_modulus():
    with raises(ValueError):
        RingContext(PGroup(3, (3,)), 20, 2)
    with raises(ValueError):
        RingContext(PGroup(3, (9, 3)), 19, 2)
    ctx = RingContext(PGroup(3, (3,)), 19, 2)
    minus_one = ctx.scalar(ctx.modulus - 1)
    assert minus_one * minus_one == ctx.one()
    ctx = RingContext(PGroup(3, (9, 3)), 18, 4)
    assert max_terms(ctx.modulus) >= ctx.group.order + 1
    for _ in range(100):
        x = _random_element(ctx, 20, 2)
        y = _random_element(ctx, 15, 1)
        assert x * y == _product_oracle(x, y)


def test_ring_axioms():
    ctx = RingContext(PGroup(3, (3, 3)), 2, 4)
    for _ in range(100):
        x, y, z = [_random_element(ctx, 3, 1) for _ in range(3)]
        assert x * y == y * x
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert augmentation(x * y) == (augmentation(x) * augmentation(y)) % ctx.modulus


def test_context_mismatch():
    x = RingContext(PGroup(3, (3,)), 2).one()
    y = RingContext(PGroup(3, (3,)), 3).one()
    z = RingContext(PGroup(3, (9,)), 2).one()
    with raises(ContextError):
        x * y
    with raises(ContextError):
        x + z
    # Only the T-precision differs.
    w = RingContext(PGroup(3, (3,)), 2, 1).one()
    assert (x * w) == x


def test_norm_element():
    ctx = RingContext(PGroup(3, (3,)), 2)
    assert norm_element(Subgroup(ctx.group), ctx) == ctx.one()
    sigma = ctx.group.generator(0)
    assert norm_element(whole_group(ctx.group), ctx) == \
        ctx.one() + ctx.element(sigma) + ctx.element(sigma ** 2)

    ctx = RingContext(PGroup(3, (9, 3)), 2)
    for gens in ([], [(3, 0)], [(1, 0)], [(1, 0), (0, 1)]):
        h = Subgroup(ctx.group, gens)
        assert augmentation(norm_element(h, ctx)) == h.order % 9
    with raises(ContextError):
        norm_element(h, RingContext(PGroup(3, (3,)), 2))


def test_gamma_power_poly():
    ctx = RingContext(PGroup(3, (3,)), 2)
    assert gamma_power_poly(0, ctx) == ctx.T()
    T = ctx.T()
    assert gamma_power_poly(1, ctx) == 3 * T + 3 * T * T + T ** 3
    assert gamma_power_poly(1, ctx).t_degree == 3
    assert gamma_power_poly(2, ctx).t_degree == 9
    for n in range(3):
        assert augmentation(gamma_power_poly(n, ctx)) == 0


def test_gamma_power_composition():
    ctx = RingContext(PGroup(5, ()), 3)
    u = gamma_power_poly(1, ctx)
    for n in range(1, 3):
        assert _substitute(gamma_power_poly(n - 1, ctx), u) == gamma_power_poly(n, ctx)


def test_augmentation():
    ctx = RingContext(PGroup(3, (9, 3)), 2)
    sigma, delta = ctx.group.generators
    assert augmentation(norm_element(Subgroup(ctx.group, [sigma]), ctx)) == 0
    assert augmentation(ctx.element(sigma) - 1) == 0
    assert augmentation((ctx.element(sigma) - 1) * (ctx.element(delta) - 1)) == 0
    assert augmentation(ctx.T() + 5) == 5


def test_inverse():
    ctx = RingContext(PGroup(3, (3, 3)), 3)
    n_units = 0
    for _ in range(100):
        x = _random_element(ctx, 3)
        if not x.is_unit:
            with raises(ValueError):
                x.inverse()
            continue
        n_units += 1
        assert x * x.inverse() == ctx.one()
    assert n_units > 0
    with raises(ValueError):
        (ctx.T() + 1).inverse()


def test_shift_and_vector():
    ctx = RingContext(PGroup(3, (3,)), 2, 3)
    x = ctx.element((1,), 2)
    assert x.shift(2) == x * ctx.T(2)
    ae(x.shift(1).to_vector(), [0, 0, 0, 0, 2, 0, 0, 0, 0])
    assert x.shift(5).to_vector().sum() == 0


def test_render():
    ctx = RingContext(PGroup(3, (3, 3)), 2)
    sigma = ctx.group.generator(0)
    assert (ctx.element(sigma) - 1).render() == '-1 + g1'
    assert gamma_power_poly(1, ctx).render() == '3*T + 3*T^2 + T^3'
    assert ctx.zero().render() == '0'
    assert (ctx.element((2, 1)) * ctx.T()).render(['s', 'd']) == 's^2*d*T'
    assert (-ctx.T(2)).render() == '-T^2'
