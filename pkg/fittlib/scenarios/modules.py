# -*- coding: utf-8 -*-

"""The modules Z_v, Z and Z^0 of a scenario, as permutation modules of a finite layer."""


#------------------------------------------------------------------------------
# Imports
#------------------------------------------------------------------------------

import logging

import numpy as np

from fittlib.utils import Bunch
from fittlib.ring.group import coset_labels
from fittlib.ring.level import LevelRing
from fittlib.ring.matrix import ring_matrix
from fittlib.linalg.howell import howell_form, kernel
from fittlib.linalg.modules import (PermutationModule, direct_sum, greedy_generators,
                                    relation_vectors, vectors_to_elements)

logger = logging.getLogger(__name__)


class HypothesisError(ValueError):
    """Raised when the group data violate the hypotheses of a construction."""


#------------------------------------------------------------------------------
# Single places
#------------------------------------------------------------------------------

def build_Zv(v, ctx):
    """Presentation of Z_v = Lambda / (sigma - 1, delta - 1): one generator, two relations."""
    return ring_matrix(ctx, [[v.frobenius_lift(ctx) - 1], [ctx.element(v.delta) - 1]])


def scenario_level(cfg):
    """The finite layer where every Z_v is a module, at least the configured layer."""
    m = max([cfg.layer] + [v.height for v in cfg.places])
    return LevelRing(cfg.context, m)


def coset_module(v, level):
    """Z_v as the coset module (Z/p^N)[G_m / D_v]."""
    return PermutationModule.cosets(
        level.group, v.decomposition_subgroup(level), level.context.modulus)


def z0_rank(cfg):
    """Z_p-rank of Z^0, the sum of the ranks of the Z_v minus one."""
    cfg.require_places()
    return sum(v.rank for v in cfg.places) - 1


def rank_parity(cfg):
    """Check rank(Z^0) = -1 mod p, which holds as soon as no place has Z_v = Z_p."""
    rank = z0_rank(cfg)
    applicable = all(v.rank > 1 for v in cfg.places)
    return Bunch(rank=rank, applicable=applicable,
                 holds=(rank + 1) % cfg.context.p == 0)


#------------------------------------------------------------------------------
# Z and Z^0
#------------------------------------------------------------------------------

def _generated(level, module, rows, rank):
    """Minimal generators and relations of the submodule spanned by `rows`."""
    gens = greedy_generators(rows, module)
    rels, free = relation_vectors(gens, module)
    t1 = len(gens)
    elements = vectors_to_elements(rels, t1, level.context) if len(rels) else []
    pres = ring_matrix(level.context, elements, n_cols=t1)
    logger.debug("Rank %d module at layer %d: %d generators, %d relations.",
                 rank, level.n, t1, len(rels))
    return Bunch(level=level, module=module, kernel=rows, generators=gens, relations=rels,
                 free=free, presentation=pres, rank=rank)


def _sum_of_places(cfg):
    cfg.require_places()
    level = scenario_level(cfg)
    return level, direct_sum([coset_module(v, level) for v in cfg.places])


def build_Z(cfg):
    """Generators and relations of the sum of the Z_v."""
    level, module = _sum_of_places(cfg)
    rows = np.eye(module.dim, dtype=np.int64)
    return _generated(level, module, rows, module.dim)


def build_Z0(cfg):
    """Generators and relations of the augmentation kernel Z^0 of the sum of the Z_v.

    Everything is computed in the group ring of the finite layer returned by
    `scenario_level()`, where the Z_v are coset modules.

    Returns
    -------

    z0 : Bunch
        With keys `level`, `module` (the sum of the Z_v), `kernel` (Z/p^N-basis of Z^0),
        `generators`, `relations` (rows of the free module `free`), `presentation` (matrix
        over the layer), `rank` and `expected_rank`.

    """
    level, module = _sum_of_places(cfg)
    modulus = level.context.modulus
    ones = np.ones((module.dim, 1), dtype=np.int64)
    rows = kernel(ones, modulus, 1)
    log_size = howell_form(rows, modulus, module.dim).log_size
    n = level.context.coeff_precision
    assert log_size % n == 0
    rank = log_size // n
    expected = z0_rank(cfg)
    assert rank == expected, (rank, expected)
    out = _generated(level, module, rows, rank)
    out.expected_rank = expected
    return out


def resolution(m):
    """Three terms R^t3 -> R^t2 -> R^t1 of a free resolution over the group ring of the layer.

    `m` is the output of `build_Z()` or `build_Z0()`. Returns a Bunch with the matrix `a`
    of the first map and the ranks `t1`, `t2`, `t3`.

    """
    level = m.level
    t1 = len(m.generators)
    t2 = len(m.relations)
    if t2:
        rels2, _ = relation_vectors(m.relations, m.free)
    else:
        rels2 = np.zeros((0, 0), dtype=np.int64)
    t3 = len(rels2)
    rows = vectors_to_elements(rels2, t2, level.context) if t3 else []
    a = ring_matrix(level.context, rows, n_cols=t2)
    logger.debug("Resolution with ranks (%d, %d, %d).", t1, t2, t3)
    return Bunch(level=level, a=a, t1=t1, t2=t2, t3=t3)



#------------------------------------------------------------------------------
# Splitting
#------------------------------------------------------------------------------

def check_nested(cfg, v_star, level=None):
    """Raise `HypothesisError` unless every decomposition group lies in the one of v*."""
    level = level or scenario_level(cfg)
    v_star = cfg.place(v_star)
    big = v_star.decomposition_subgroup(level)
    for v in cfg.places:
        if not v.decomposition_subgroup(level).issubset(big):
            raise HypothesisError(
                "The decomposition group of %s is not contained in the one of %s." % (
                    v.label, v_star.label))


def _projection(v, v_star, level):
    """Basis map Z_v -> Z_{v*} induced by G_m / D_v -> G_m / D_{v*}."""
    reps, _ = coset_labels(level.group, v.decomposition_subgroup(level))
    _, labels = coset_labels(level.group, v_star.decomposition_subgroup(level))
    return labels[reps]


def split_Z0(cfg, v_star=None):
    """The splitting Z^0 = Z^0_{v*} + sum of the Z_v, v != v*.

    The section s sends x in the sum of the Z_v (v != v*) to the vector equal to x outside
    v* and to minus the sum of the projections of x_v at v*.

    Returns
    -------

    split : Bunch
        `section` is the matrix of s (rows: basis of the Z_v, v != v*; columns: basis of the
        sum of all Z_v). `is_section`, `in_kernel` and `equivariant` report the checks.

    """
    cfg.require_places()
    v_star = cfg.place(v_star if v_star is not None else cfg.v_star)
    level = scenario_level(cfg)
    check_nested(cfg, v_star, level)
    modulus = level.context.modulus
    modules = [coset_module(v, level) for v in cfg.places]
    offsets = np.cumsum([0] + [m.dim for m in modules])
    dim = int(offsets[-1])
    i_star = cfg.places.index(v_star)
    others = [i for i in range(cfg.r) if i != i_star]

    blocks = []
    for i in others:
        v = cfg.places[i]
        s = np.zeros((modules[i].dim, dim), dtype=np.int64)
        k = np.arange(modules[i].dim)
        s[k, offsets[i] + k] = 1
        s[k, offsets[i_star] + _projection(v, v_star, level)] = -1
        blocks.append(s % modulus)
    section = np.vstack(blocks) if blocks else np.zeros((0, dim), dtype=np.int64)

    total = direct_sum(modules)
    cols = np.concatenate([np.arange(offsets[i], offsets[i + 1]) for i in others]) \
        if others else np.zeros(0, dtype=np.int64)
    is_section = np.array_equal(section[:, cols], np.eye(len(cols), dtype=np.int64))
    in_kernel = not (section.sum(axis=1) % modulus).any()
    equivariant = True
    if others:
        sub = direct_sum([modules[i] for i in others])
        for g in level.group.generators:
            equivariant &= np.array_equal(section[sub.perm[g.index]],
                                          total.act(g.index, section))
    logger.debug("Split Z0 at %s with %d extra summands.", v_star.label, len(others))
    return Bunch(v_star=v_star.label, others=[cfg.places[i].label for i in others],
                 level=level, section=section, is_section=is_section, in_kernel=in_kernel,
                 equivariant=bool(equivariant),
                 ranks=[v_star.rank - 1] + [cfg.places[i].rank for i in others])
