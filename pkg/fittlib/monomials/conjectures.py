# -*- coding: utf-8 -*-

"""Checkers comparing minor ideals with ideals generated by admissible monomials."""


#------------------------------------------------------------------------------
# Imports
#------------------------------------------------------------------------------

import logging

import numpy as np

from fittlib.utils import Bunch, parallel_map
from fittlib.complexes.builders import cyclic_complex, tensor_complexes, product_complex_D
from fittlib.ideals.ideal import zero_ideal
from fittlib.ideals.minors import minors
from fittlib.ideals.fractional import factor_element, from_terms, frac_ideal_witness
from fittlib.ideals.fitting import fitt_shift1_from_complex
from .admissible import enumerate_M, monomial_ideal, tau_nu_elements, resolve_sigmas

logger = logging.getLogger(__name__)


MAX_RANK = 4


#------------------------------------------------------------------------------
# Utils
#------------------------------------------------------------------------------

def check_rank(r, allow_r5=False):
    """Sweeps run up to r = 4, r = 5 on request only."""
    if r < 1 or r > 5:
        raise ValueError("The number of cyclic factors must lie between 1 and 5, got %d." % r)
    if r > MAX_RANK:
        if not allow_r5:
            raise ValueError("r = 5 sweeps must be explicitly allowed.")
        logger.warning("Running an r = 5 sweep, this may take a very long time.")


def _t2(r):
    return r * (r - 1) // 2


def _is_pure(key):
    return sum(1 for k, _ in key if k) == 1


def _witness(lhs, rhs):
    """A kept generator of one side missing from the other, rendered."""
    for a, b, kind in ((lhs, rhs, 'minor'), (rhs, lhs, 'monomial')):
        missing = a.missing(b)
        if missing:
            return Bunch(kind=kind, generator=missing[0].render())
    return None


def _row(ctx, r, e, monomials, lhs, rhs):
    passed = lhs == rhs
    return Bunch(r=r, orders=list(ctx.group.factor_orders), e=e,
                 n_monomials=len(monomials), sizes=[lhs.log_size, rhs.log_size],
                 passed=passed, witness=None if passed else _witness(lhs, rhs))


#------------------------------------------------------------------------------
# Matrices
#------------------------------------------------------------------------------

def tensor_complex_C(ctx, sigmas=None, max_degree=3):
    """The tensor product of the cyclic complexes of the sigma_i."""
    sigmas = resolve_sigmas(ctx.group, sigmas)
    es = [cyclic_complex(s, ctx, max_degree=max_degree, variable='x%d' % (i + 1))
          for i, s in enumerate(sigmas)]
    return tensor_complexes(es, name='C')


def build_Mtilde(ctx, sigmas=None):
    """The boundary from degree 3 to degree 2 of the tensor complex C.

    Rows are the degree-3 monomials in x_1, ..., x_r, columns the degree-2 ones.

    """
    return tensor_complex_C(ctx, sigmas).boundary(3)


def build_A(ctx, sigmas=None):
    """M~ without the rows of pure cubes and the columns of pure squares."""
    c = tensor_complex_C(ctx, sigmas)
    rows = [i for i, key in enumerate(c.keys[3]) if not _is_pure(key)]
    cols = [j for j, key in enumerate(c.keys[2]) if not _is_pure(key)]
    return c.boundary(3)[np.ix_(rows, cols)]


#------------------------------------------------------------------------------
# Minor checks
#------------------------------------------------------------------------------

def gkt_minor_check(ctx, e, sigmas=None, jobs=1):
    """Compare Min_e(M~) with the ideal of degree-e (tau, nu)-monomials with admissible
    nu-part.

    M~ has rank t2 + 1 at every character, so above that size its minors vanish and the
    comparison is made with the zero ideal.

    """
    small = ctx.with_t_precision(1)
    m = build_Mtilde(small, sigmas)
    r = small.group.rank if sigmas is None else len(sigmas)
    assert 0 <= e <= min(m.shape)
    lhs = minors(m, e, small, jobs=jobs)
    if e <= _t2(r) + 1:
        monomials = enumerate_M(e, 0, r)
        rhs = monomial_ideal(monomials, small, sigmas)
    else:
        monomials = []
        rhs = zero_ideal(small)
    return _row(small, r, e, monomials, lhs, rhs)


def gkt_minor_sweep(ctx, sigmas=None, jobs=1, allow_r5=False):
    r = ctx.group.rank if sigmas is None else len(sigmas)
    check_rank(r, allow_r5=allow_r5)
    rows = [gkt_minor_check(ctx, e, sigmas=sigmas, jobs=jobs) for e in range(_t2(r) + 2)]
    return Bunch(kind='gkt-minors', r=r, passed=all(row.passed for row in rows), rows=rows)


def _strong_row(args):
    a, ctx, sigmas, e, r = args
    monomials = enumerate_M(e, r - 1 - _t2(r) + e, r)
    lhs = minors(a, e, ctx)
    rhs = monomial_ideal(monomials, ctx, sigmas)
    logger.debug("Strong form, e = %d: %d monomials.", e, len(monomials))
    return _row(ctx, r, e, monomials, lhs, rhs)


def strong_conjecture_check(ctx, sigmas=None, jobs=1, allow_r5=False):
    """Compare Min_e(A) with the ideal generated by M(e, r - 1 - t2 + e) for 0 <= e <= t2.

    Every e is an independent job. A failing row carries a witness generator.

    """
    small = ctx.with_t_precision(1)
    sigmas = resolve_sigmas(small.group, sigmas)
    r = len(sigmas)
    check_rank(r, allow_r5=allow_r5)
    a = build_A(small, sigmas)
    rows = parallel_map(_strong_row, [(a, small, sigmas, e, r) for e in range(_t2(r) + 1)],
                        jobs=jobs)
    return Bunch(kind='strong-conjecture', r=r, passed=all(row.passed for row in rows),
                 rows=rows)


#------------------------------------------------------------------------------
# Weak form
#------------------------------------------------------------------------------

def weak_conjecture_ideal(ctx, n=0, sigmas=None):
    """The fractional ideal generated by the sets w^(j - r) M(t2 + 1 - j, r - j),
    1 <= j <= t2 + 1, with w = (1+T)^(p^n) - 1."""
    sigmas = resolve_sigmas(ctx.group, sigmas)
    r = len(sigmas)
    taus, nus = tau_nu_elements(ctx, sigmas)
    w = factor_element((0, n), ctx)
    terms = []
    for j in range(1, _t2(r) + 2):
        monomials = enumerate_M(_t2(r) + 1 - j, r - j, r)
        if not monomials:
            continue
        power = j - r
        scale = w ** max(power, 0)
        gens = [m.element(taus, nus, ctx) * scale for m in monomials]
        terms.append((gens, [(0, n)] * max(-power, 0)))
    return from_terms(ctx, terms)


def weak_conjecture_check(ctx, n=0, sigmas=None, jobs=1, allow_r5=False):
    """Compare Fitt^[1] computed from the pruned complex D with the weak-form ideal."""
    sigmas = resolve_sigmas(ctx.group, sigmas)
    r = len(sigmas)
    check_rank(r, allow_r5=allow_r5)
    d, _ = product_complex_D(sigmas, ctx, max_degree=3)
    lhs = fitt_shift1_from_complex(d, ctx, n=n, jobs=jobs)
    rhs = weak_conjecture_ideal(ctx, n=n, sigmas=sigmas)
    passed = lhs == rhs
    witness = None
    if not passed:
        x = frac_ideal_witness(lhs, rhs)
        witness = x.render() if x is not None else None
    return Bunch(kind='weak-conjecture', r=r, orders=list(ctx.group.factor_orders), n=n,
                 passed=passed, fitt=lhs, conjectured=rhs, witness=witness)
