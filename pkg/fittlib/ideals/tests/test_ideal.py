# -*- coding: utf-8 -*-

"""Tests of ideal handles."""

#------------------------------------------------------------------------------
# Imports
#------------------------------------------------------------------------------

import numpy as np
from pytest import raises

from fittlib.ring import PGroup, Subgroup, RingContext, RingElement, ContextError, norm_element
from ..ideal import (IdealHandle, ideal_equal, ideal_sum, ideal_product, unit_ideal,
                     zero_ideal, ideal_scale)


#------------------------------------------------------------------------------
# Utils
#------------------------------------------------------------------------------

def _taus_nus(ctx):
    g = ctx.group
    taus = [ctx.element(s) - 1 for s in g.generators]
    nus = [norm_element(Subgroup(g, [s]), ctx) for s in g.generators]
    return taus, nus


#------------------------------------------------------------------------------
# Tests
#------------------------------------------------------------------------------

def test_ideal_trivial():
    ctx = RingContext(PGroup(3, (3,)), 2, 4)
    one = unit_ideal(ctx)
    zero = zero_ideal(ctx)
    assert one.is_unit_ideal
    assert zero.is_zero
    assert one.log_size == 2 * 3 * 4
    assert zero.render() == '(0)'
    assert one.render() == '(1)'
    assert ideal_sum(one, zero) == one
    assert ideal_product(one, zero) == zero


def test_ideal_unit_multiple():
    ctx = RingContext(PGroup(3, (3,)), 2, 4)
    (tau,), (nu,) = _taus_nus(ctx)
    u = ctx.one() + tau
    assert u.is_unit
    assert IdealHandle(ctx, [tau]) == IdealHandle(ctx, [u * tau])
    assert IdealHandle(ctx, [tau]) != IdealHandle(ctx, [nu])
    # (tau) + (nu) contains 3 = nu - tau * (...) up to T-free terms.
    i = IdealHandle(ctx, [tau, nu])
    assert i.contains(ctx.scalar(3))
    assert not i.contains(ctx.one())


def test_ideal_redundant_generator():
    ctx = RingContext(PGroup(3, (3, 3, 3)), 2, 3)
    taus, nus = _taus_nus(ctx)
    j = IdealHandle(ctx, nus + taus)
    j2 = IdealHandle(ctx, nus + taus + [nus[0] * nus[1]])
    assert ideal_equal(j, j2)
    assert j.form == j2.form
    assert len(j2.basis) == len(j.basis)
    assert j.contains(nus[0] * nus[1])


def test_ideal_distinct_norms():
    ctx = RingContext(PGroup(3, (3, 3)), 2, 2)
    _, nus = _taus_nus(ctx)
    i1 = IdealHandle(ctx, [nus[0]])
    i2 = IdealHandle(ctx, [nus[1]])
    assert i1 != i2
    assert i1.log_size == i2.log_size
    assert not i1.issubset(i2)


def test_ideal_context_mismatch():
    g = PGroup(3, (3,))
    i = unit_ideal(RingContext(g, 2, 3))
    j = unit_ideal(RingContext(g, 2, 4))
    with raises(ContextError):
        ideal_equal(i, j)
    with raises(ContextError):
        ideal_sum(i, unit_ideal(RingContext(g, 3, 3)))


def test_ideal_t_powers():
    ctx = RingContext(PGroup(3, (3,)), 2, 5)
    t = ctx.T()
    i = IdealHandle(ctx, [t ** 2, t * 3])
    assert i.contains(t ** 3)
    assert i.contains(t * 6)
    assert not i.contains(t)
    assert i.max_degree == 2
    # T^6 vanishes at this precision but still counts for the degree.
    k = IdealHandle(ctx, [t ** 6])
    assert k.is_zero
    assert k.max_degree == 6


def test_ideal_graded_matches_general():
    ctx = RingContext(PGroup(3, (3,)), 2, 4)
    for _ in range(100):
        gens = [RingElement(ctx, np.random.randint(0, 9, size=(1, 3))).shift(
            np.random.randint(0, 3)) for _ in range(2)]
        i = IdealHandle(ctx, gens)
        # Adding a non-homogeneous element of the ideal forces the general path.
        extra = gens[0] + gens[1] * ctx.T()
        j = IdealHandle(ctx, gens + [extra])
        assert i == j


def test_ideal_sum_product():
    ctx = RingContext(PGroup(3, (3, 3)), 2, 3)
    taus, nus = _taus_nus(ctx)
    i = IdealHandle(ctx, [taus[0]])
    j = IdealHandle(ctx, [nus[0]])
    assert ideal_product(i, j).is_zero
    assert ideal_sum(i, j) == IdealHandle(ctx, [taus[0], nus[0]])
    assert ideal_product(i, unit_ideal(ctx)) == i
    assert ideal_scale(j, taus[1]) == IdealHandle(ctx, [nus[0] * taus[1]])
    assert (i + j) * j == IdealHandle(ctx, [nus[0] * nus[0]])


def test_truncation_consistency():
    ctx = RingContext(PGroup(3, (3, 3)), 2, 6)
    taus, nus = _taus_nus(ctx)
    factors = taus + nus + [ctx.scalar(3)]

    def _random_generator():
        x = RingElement(ctx, np.random.randint(0, ctx.modulus, size=(2, ctx.group.order)))
        return x * factors[np.random.randint(len(factors))]

    for _ in range(100):
        i = IdealHandle(ctx, [_random_generator() for _ in range(2)])
        j = i + IdealHandle(ctx, [_random_generator() * ctx.T(int(np.random.randint(0, 6)))])
        x = _random_generator()
        sizes, equal = [], []
        for m in range(1, 7):
            im, jm = i.with_t_precision(m), j.with_t_precision(m)
            assert im.precision == (2, m)
            assert im.issubset(jm)
            sizes.append(im.log_size)
            equal.append(im == jm)
            # Membership at a T-precision implies membership at every lower one.
            if im.contains(x):
                assert all(i.with_t_precision(k).contains(x) for k in range(1, m))
        assert sizes == sorted(sizes)
        # Unequal ideals stay unequal at higher T-precision.
        for a, b in zip(equal, equal[1:]):
            assert a or not b
