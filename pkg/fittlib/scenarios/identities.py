# -*- coding: utf-8 -*-

"""Fitt^[1] of Z^0 by several constructions, and the closed forms it is compared with."""


#------------------------------------------------------------------------------
# Imports
#------------------------------------------------------------------------------

from itertools import combinations
import logging

import numpy as np

from fittlib.utils import Bunch
from fittlib.ring.group import Subgroup, whole_group
from fittlib.ring.element import norm_element
from fittlib.ring.matrix import ring_matrix
from fittlib.ideals.ideal import IdealHandle, unit_ideal
from fittlib.ideals.determinant import determinant
from fittlib.ideals.minors import minors
from fittlib.ideals.fractional import FractionalIdeal, from_terms, frac_ideal_witness
from fittlib.ideals.fitting import (fitt_shift1_from_resolution, fitt_shift1_from_complex,
                                    zv_fitt1)
from fittlib.complexes.builders import product_complex_D, bar_cone_D, DEFAULT_BUDGET
from fittlib.complexes.towers import tower_cone
from fittlib.monomials.admissible import tau_nu_elements
from .modules import (HypothesisError, build_Z, build_Z0, resolution, check_nested,
                      scenario_level)

logger = logging.getLogger(__name__)


METHODS = ('tensor', 'cone', 'bar', 'direct')


class MethodError(ValueError):
    """Raised when a construction does not apply to a scenario."""


#------------------------------------------------------------------------------
# Applicability
#------------------------------------------------------------------------------

def _require_group_ring(cfg, method):
    """The complex constructions need every Z_v to be Z_p[H / T_v]."""
    for v in cfg.places:
        if v.n_v or v.frobenius not in v.inertia:
            raise MethodError("The %s method needs n_v = 0 and a Frobenius in the inertia "
                              "group, which fails at %s." % (method, v.label))


def _tensor_generators(cfg):
    _require_group_ring(cfg, 'tensor')
    group = cfg.group
    deltas = [v.delta for v in cfg.places]
    if any(v.is_unramified for v in cfg.places):
        raise MethodError("The tensor method needs ramified places.")
    size = int(np.prod([v.inertia.order for v in cfg.places]))
    if size != group.order or Subgroup(group, deltas).order != group.order:
        raise MethodError("The tensor method needs H to be the product of the inertia groups.")
    return deltas


def _tower(cfg):
    """The pairs (sigma_j, m_j) with T_v the product of the subgroups <sigma_j^m_j>."""
    _require_group_ring(cfg, 'cone')
    if cfg.r != 1:
        raise MethodError("The cone method needs a single place.")
    v = cfg.places[0]
    tower, size = [], 1
    for sigma in cfg.group.generators:
        m = 1
        while (sigma ** m) not in v.inertia:
            m += 1
        tower.append((sigma, m))
        size *= sigma.order // m
    if size != v.inertia.order:
        raise MethodError("The inertia group of %s does not split along the cyclic factors."
                          % v.label)
    return tower


def applicable_methods(cfg):
    """The methods of `fitt1_Z0()` whose structural hypotheses hold."""
    out = []
    for method, check in (('tensor', _tensor_generators), ('cone', _tower),
                          ('bar', lambda c: _require_group_ring(c, 'bar'))):
        try:
            check(cfg)
        except MethodError:
            continue
        out.append(method)
    return out + ['direct']


#------------------------------------------------------------------------------
# Fitt^[1](Z^0)
#------------------------------------------------------------------------------

def _direct(cfg, jobs=1):
    res = resolution(build_Z0(cfg))
    level = res.level
    return fitt_shift1_from_resolution(res.a, res.t1, res.t2, res.t3, cfg.context, n=level.n,
                                       level=level, reduce=True, jobs=jobs)


def fitt1_Z0(cfg, method='direct', jobs=1, budget=DEFAULT_BUDGET):
    """Fitt^[1] of the augmentation kernel Z^0.

    Parameters
    ----------

    method : str
        `'tensor'`: pruned tensor product of the cyclic complexes of the inertia generators
        (H the product of the inertia groups). `'cone'`: cone over the tower of cyclic
        subgroups of a single place. `'bar'`: cone of the bar resolutions of the inertia
        groups into the one of H. `'direct'`: free resolution of Z^0 over a finite layer.

    Returns
    -------

    out : Bunch
        With keys `method` and `fitt`.

    """
    cfg.require_places()
    ctx = cfg.context
    if method == 'tensor':
        d, _ = product_complex_D(_tensor_generators(cfg), ctx, max_degree=3)
    elif method == 'cone':
        d = tower_cone(_tower(cfg), ctx, max_degree=3)
    elif method == 'bar':
        _require_group_ring(cfg, 'bar')
        d = bar_cone_D([v.inertia for v in cfg.places], ctx, max_degree=3, budget=budget)
    elif method == 'direct':
        return Bunch(method=method, fitt=_direct(cfg, jobs=jobs))
    else:
        raise MethodError("Unknown method `%s`, expected one of %s." % (method, METHODS))
    logger.debug("Complex D of ranks %s by the %s method.", d.ranks, method)
    return Bunch(method=method, fitt=fitt_shift1_from_complex(d, ctx, n=0, jobs=jobs))


def fitt1_Z(cfg, jobs=1):
    """Fitt^[1] of the sum of the Z_v, from a free resolution over a finite layer."""
    res = resolution(build_Z(cfg))
    level = res.level
    return fitt_shift1_from_resolution(res.a, res.t1, res.t2, res.t3, cfg.context, n=level.n,
                                       level=level, reduce=True, jobs=jobs)


def places_fitt1(cfg, places=None):
    """The product of the Fitt^[1](Z_v) = (1, nu_v / (sigma_v - 1))."""
    ctx = cfg.context
    out = FractionalIdeal(unit_ideal(ctx))
    for v in (cfg.places if places is None else places):
        out = out * zv_fitt1(v.inertia, v.frobenius_lift(ctx), ctx)
    return out


def split_fitt1(cfg, v_star=None, method='direct', jobs=1):
    """Fitt^[1](Z^0) as Fitt^[1](Z^0_{v*}) times the Fitt^[1](Z_v) of the other places."""
    v_star = cfg.place(v_star if v_star is not None else cfg.v_star)
    check_nested(cfg, v_star)
    local = fitt1_Z0(cfg.restricted([v_star.label]), method=method, jobs=jobs).fitt
    return local * places_fitt1(cfg, [v for v in cfg.places if v is not v_star])


#------------------------------------------------------------------------------
# Privileged place
#------------------------------------------------------------------------------

def _totally_ramified_term(v, ctx):
    """(1, nu_H T / (sigma_v - 1))."""
    nu = norm_element(whole_group(ctx.group), ctx)
    return from_terms(ctx, [([1], []), ([nu * ctx.T()], [v.factor])])


def privileged_candidates(cfg):
    """Totally ramified places whose decomposition group contains all the others."""
    level = scenario_level(cfg)
    out = []
    for v in cfg.places:
        if not v.is_totally_ramified:
            continue
        try:
            check_nested(cfg, v, level)
        except HypothesisError:
            continue
        out.append(v.label)
    return out


def privileged_place_rhs(cfg, v_star=None):
    """(1, nu_H T / (sigma_{v*} - 1)) times the Fitt^[1](Z_v) of the other places.

    v* must be totally ramified, with a decomposition group containing all the others.

    """
    label = v_star if v_star is not None else cfg.v_star
    if label is None:
        raise HypothesisError("No privileged place was given.")
    v_star = cfg.place(label)
    if not v_star.is_totally_ramified:
        raise HypothesisError("%s is not totally ramified." % v_star.label)
    check_nested(cfg, v_star)
    others = [v for v in cfg.places if v is not v_star]
    return _totally_ramified_term(v_star, cfg.context) * places_fitt1(cfg, others)


def sum_form_rhs(cfg):
    """The sum over v' of (1, nu_H T / (sigma_v' - 1)) times the other Fitt^[1](Z_v).

    Every place must be totally ramified.

    """
    cfg.require_places()
    for v in cfg.places:
        if not v.is_totally_ramified:
            raise HypothesisError("%s is not totally ramified." % v.label)
    out = None
    for w in cfg.places:
        others = [v for v in cfg.places if v is not w]
        term = _totally_ramified_term(w, cfg.context) * places_fitt1(cfg, others)
        out = term if out is None else out + term
    return out


#------------------------------------------------------------------------------
# Ramification and splitting only
#------------------------------------------------------------------------------

def _check_ramification(cfg):
    cfg.require_places()
    group = cfg.group
    if not whole_group(group).is_cyclic:
        raise HypothesisError("H must be cyclic.")
    for v in cfg.places:
        if not v.is_group_trivial:
            raise HypothesisError("The inertial degree of %s is not 1." % v.label)
    return group.generators[0] if group.rank else group.identity


def ramification_matrix(cfg):
    """The (2r + 2) x (r + 1) presentation B of the cokernel of the top boundary.

    Row i < r holds -nu_i in column i and 1 in the last column, row r holds delta - 1 in
    the last column, row r + 1 + i holds sigma_i - 1 in column i, and the last row holds T
    in the last column.

    """
    delta = _check_ramification(cfg)
    ctx = cfg.context
    r = cfg.r
    rows = []
    for i, v in enumerate(cfg.places):
        row = [None] * (r + 1)
        row[i] = -v.norm(ctx)
        row[r] = 1
        rows.append(row)
    rows.append([None] * r + [ctx.element(delta) - 1])
    for i, v in enumerate(cfg.places):
        row = [None] * (r + 1)
        row[i] = v.frobenius_lift(ctx) - 1
        rows.append(row)
    rows.append([None] * r + [ctx.T()])
    return ring_matrix(ctx, rows, n_cols=r + 1)


def _mixed_product(cfg, subset):
    """The product of nu_i over i in the subset and of sigma_i - 1 over the other places."""
    ctx = cfg.context
    x = ctx.one()
    for i, v in enumerate(cfg.places):
        x = x * (v.norm(ctx) if i in subset else v.frobenius_lift(ctx) - 1)
    return x


def ramification_generators(cfg):
    """T prod nu_i, (delta - 1) prod nu_i, and the mixed products over proper subsets."""
    delta = _check_ramification(cfg)
    ctx = cfg.context
    r = cfg.r
    nus = _mixed_product(cfg, set(range(r)))
    out = [ctx.T() * nus, (ctx.element(delta) - 1) * nus]
    for size in range(r):
        for subset in combinations(range(r), size):
            out.append(_mixed_product(cfg, set(subset)))
    return out


def ramification_case_minor(cfg, subset, l):
    """The maximal minor of B on the rows of `subset` and l, and the rows r + 1 + i, i not in
    `subset` (indices start at 0).

    Returns a Bunch with the `rows`, the `minor` and the `expected` mixed product; the two
    agree up to sign.

    """
    _check_ramification(cfg)
    r = cfg.r
    subset = set(subset)
    assert 0 <= l < r and l not in subset and subset <= set(range(r))
    rows = sorted(subset | {l} | {r + 1 + i for i in range(r) if i not in subset})
    b = ramification_matrix(cfg)
    minor = determinant(b[rows, :], cfg.context)
    return Bunch(rows=rows, minor=minor, expected=_mixed_product(cfg, subset))


def ramification_fitt1(cfg, jobs=1):
    """Min_(r+1)(B) divided by the product of the sigma_i - 1."""
    b = ramification_matrix(cfg)
    num = minors(b, cfg.r + 1, cfg.context, jobs=jobs)
    return FractionalIdeal(num, [v.factor for v in cfg.places])


#------------------------------------------------------------------------------
# Independence of the set of places
#------------------------------------------------------------------------------

def independence_check(cfg, extra_places, method='direct', jobs=1):
    """Compare Fitt^[1] with extra unramified places to the base value times the
    (sigma_v - 1)^(-1)."""
    for v in extra_places:
        if not v.is_unramified:
            raise HypothesisError("The extra place %s is ramified." % v.label)
    base = fitt1_Z0(cfg, method=method, jobs=jobs).fitt
    if not extra_places:
        return Bunch(passed=True, lhs=base, rhs=base, witness=None)
    lhs = fitt1_Z0(cfg.extended(extra_places), method='direct', jobs=jobs).fitt
    rhs = base * FractionalIdeal(unit_ideal(cfg.context), [v.factor for v in extra_places])
    passed = lhs == rhs
    witness = None
    if not passed:
        x = frac_ideal_witness(lhs, rhs)
        witness = x.render() if x is not None else None
    return Bunch(passed=passed, lhs=lhs, rhs=rhs, witness=witness)


#------------------------------------------------------------------------------
# Products of cyclic groups
#------------------------------------------------------------------------------

def two_factor_ideal(ctx, sigmas=None):
    """(1, nu_1 / T, nu_2 / T)."""
    _, nus = tau_nu_elements(ctx, sigmas)
    assert len(nus) == 2
    return from_terms(ctx, [([1], []), (nus, [(0, 0)])])


def three_factor_ideals(ctx, sigmas=None):
    """The minor ideals of A for three cyclic factors, and the resulting Fitt^[1].

    With J = (nu_i, tau_i), Min_1 = J, Min_2 = (nu_i) J, Min_3 = (nu_i nu_j) J, and
    Fitt^[1] = T^-2 (nu_i nu_j) J + T^-1 (nu_i) J + J + (T).

    """
    taus, nus = tau_nu_elements(ctx, sigmas)
    assert len(nus) == 3
    j = taus + nus
    pairs = [nus[0] * nus[1], nus[1] * nus[2], nus[2] * nus[0]]
    single = [n * x for n in nus for x in j]
    double = [n * x for n in pairs for x in j]
    mins = [unit_ideal(ctx), IdealHandle(ctx, j), IdealHandle(ctx, single),
            IdealHandle(ctx, double)]
    fitt = from_terms(ctx, [(double, [(0, 0)] * 2), (single, [(0, 0)]), (j, []),
                            ([ctx.T()], [])])
    return Bunch(minors=mins, fitt=fitt)
