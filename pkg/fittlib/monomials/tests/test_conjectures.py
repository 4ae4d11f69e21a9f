# -*- coding: utf-8 -*-

"""Tests of the minor ideal checks."""

#------------------------------------------------------------------------------
# Imports
#------------------------------------------------------------------------------

from pytest import raises, mark

from fittlib.ring import PGroup, RingContext, ring_matrix, matrices_equal
from fittlib.ideals import IdealHandle, minors, from_terms
from fittlib.complexes import product_complex_D
from fittlib.utils.testing import captured_logging
from ..admissible import tau_nu_elements, enumerate_M, monomial_ideal
from ..conjectures import (build_Mtilde, build_A, gkt_minor_check, gkt_minor_sweep,
                           strong_conjecture_check, weak_conjecture_check,
                           weak_conjecture_ideal, check_rank, _witness)


#------------------------------------------------------------------------------
# Utils
#------------------------------------------------------------------------------

def _context(r, t_precision=1):
    return RingContext(PGroup(3, (3,) * r), 2, t_precision)


#------------------------------------------------------------------------------
# Matrices
#------------------------------------------------------------------------------

def test_mtilde_r2():
    ctx = _context(2)
    (tau1, tau2), (nu1, nu2) = tau_nu_elements(ctx)
    expected = ring_matrix(ctx, [[tau1, 0, 0], [tau2, nu1, 0], [0, -nu2, tau1], [0, 0, tau2]])
    assert matrices_equal(build_Mtilde(ctx), expected)
    assert matrices_equal(build_A(ctx), ring_matrix(ctx, [[nu1], [-nu2]]))


@mark.parametrize('r,shape', [(3, (7, 3)), (4, (16, 6))])
def test_build_A_shapes(r, shape):
    ctx = _context(r)
    a = build_A(ctx)
    assert a.shape == shape
    assert build_Mtilde(ctx).shape == (shape[0] + r, shape[1] + r)


def test_build_A_is_pruned_boundary():
    ctx = _context(3)
    d, _ = product_complex_D(ctx.group.generators, ctx, max_degree=3)
    a = build_A(ctx)
    assert matrices_equal(a, d.boundary(3))
    # A is a submatrix of M~: its minors lie in the admissible ideals.
    for e in range(4):
        assert minors(a, e, ctx).issubset(monomial_ideal(enumerate_M(e, 0, 3), ctx))


def test_three_factor_minors():
    ctx = _context(3)
    taus, nus = tau_nu_elements(ctx)
    j = IdealHandle(ctx, taus + nus)
    a = build_A(ctx)
    assert minors(a, 1, ctx) == j
    assert minors(a, 2, ctx) == IdealHandle(ctx, [n * x for n in nus for x in taus + nus])
    pairs = [nus[0] * nus[1], nus[1] * nus[2], nus[2] * nus[0]]
    assert minors(a, 3, ctx) == IdealHandle(ctx, [n * x for n in pairs for x in taus + nus])


#------------------------------------------------------------------------------
# Checks
#------------------------------------------------------------------------------

def test_gkt_r2():
    ctx = _context(2)
    report = gkt_minor_sweep(ctx)
    assert report.passed
    assert [row.e for row in report.rows] == [0, 1, 2]
    assert report.rows[2].n_monomials == 5
    beyond = gkt_minor_check(ctx, 3)
    assert beyond.passed
    assert beyond.n_monomials == 0


def test_gkt_r3():
    ctx = _context(3)
    row = gkt_minor_check(ctx, 3)
    assert row.passed
    assert row.witness is None
    assert gkt_minor_check(ctx, 0).passed


def test_strong_r2():
    ctx = _context(2, t_precision=4)
    report = strong_conjecture_check(ctx)
    assert report.passed
    assert [row.e for row in report.rows] == [0, 1]
    assert report.rows[1].n_monomials == 2
    assert strong_conjecture_check(ctx, jobs=2) == report


def test_strong_r3():
    report = strong_conjecture_check(_context(3))
    assert report.passed
    assert len(report.rows) == 4
    assert all(row.orders == [3, 3, 3] for row in report.rows)


def test_strong_r4():
    report = strong_conjecture_check(_context(4), jobs=4)
    assert report.r == 4
    assert [row.e for row in report.rows] == list(range(7))
    assert all(row.passed for row in report.rows)
    assert report.passed


def test_witness():
    ctx = _context(2)
    (tau1, tau2), _ = tau_nu_elements(ctx)
    w = _witness(IdealHandle(ctx, [tau1]), IdealHandle(ctx, [tau1, tau2]))
    assert w.kind == 'monomial'
    assert w.generator == tau2.render()
    assert _witness(IdealHandle(ctx, [tau1]), IdealHandle(ctx, [tau1])) is None


def test_weak_r2():
    ctx = RingContext(PGroup(3, (9, 3)), 2, 6)
    _, (nu1, nu2) = tau_nu_elements(ctx)
    report = weak_conjecture_check(ctx)
    assert report.passed
    expected = from_terms(ctx, [([1], []), ([nu1, nu2], [(0, 0)])])
    assert report.fitt == expected
    assert weak_conjecture_ideal(ctx) == expected


def test_weak_r3():
    report = weak_conjecture_check(_context(3, t_precision=6))
    assert report.passed
    assert report.witness is None


def test_check_rank():
    check_rank(4)
    with raises(ValueError):
        check_rank(5)
    with raises(ValueError):
        check_rank(6)
    with captured_logging('fittlib') as buf:
        check_rank(5, allow_r5=True)
    assert 'r = 5' in buf.getvalue()
