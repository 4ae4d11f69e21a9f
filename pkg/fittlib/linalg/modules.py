# -*- coding: utf-8 -*-

"""Permutation modules over (Z/p^N)[G], module generators and presentations."""


#------------------------------------------------------------------------------
# Imports
#------------------------------------------------------------------------------

import logging

import numpy as np

from fittlib.ring.group import coset_labels
from fittlib.ring.element import RingElement
from fittlib.ring.matrix import regular_tensor
from .howell import howell_form, kernel, stack_form, prime_power, _as_residues

logger = logging.getLogger(__name__)


#------------------------------------------------------------------------------
# Flattening
#------------------------------------------------------------------------------

def flatten_tensor(t, group):
    """Z/p^N-matrix of a coefficient tensor `(rows, cols, |G|)` acting on row vectors.

    Row `(i, g)` is the image of `g * e_i`, and column `(j, c)` is the coefficient of
    `c * e_j`.

    """
    r, c, n = t.shape
    if not r or not c:
        return np.zeros((r * n, c * n), dtype=np.int64)
    return regular_tensor(t, group).transpose(0, 2, 1, 3).reshape((r * n, c * n))


def vectors_to_elements(vectors, rank, ctx):
    """Turn rows of the free module R^rank into lists of ring elements."""
    n = ctx.group.order
    out = []
    for v in np.atleast_2d(vectors):
        v = v.reshape((rank, n))
        out.append([RingElement(ctx, v[i][np.newaxis, :]) for i in range(rank)])
    return out


def elements_to_vector(elements, ctx):
    """Concatenate the group coefficients of T-free ring elements."""
    return np.concatenate([ctx.coerce(x).group_coeffs for x in elements]).astype(np.int64)


#------------------------------------------------------------------------------
# Permutation modules
#------------------------------------------------------------------------------

class PermutationModule(object):
    """A direct sum of modules (Z/p^N)[G/L], the group acting by permuting the basis.

    `perm[g, k]` is the basis index of `g` times the basis vector `k`. A free module of rank t
    is the case of t trivial subgroups L.

    """
    def __init__(self, group, perm, modulus, summands=None):
        self.group = group
        self.perm = np.asarray(perm, dtype=np.int64)
        self.modulus = modulus
        self.dim = self.perm.shape[1]
        self.summands = summands or [(0, self.dim)]
        assert self.perm.shape[0] == group.order

    @classmethod
    def free(cls, group, rank, modulus):
        n = group.order
        add = group.add_table
        perm = np.hstack([i * n + add for i in range(rank)]) if rank else \
            np.zeros((n, 0), dtype=np.int64)
        return cls(group, perm, modulus, summands=[(i * n, n) for i in range(rank)])

    @classmethod
    def cosets(cls, group, subgroup, modulus):
        reps, labels = coset_labels(group, subgroup)
        perm = labels[group.add_table[:, reps]]
        return cls(group, perm, modulus)

    def __repr__(self):
        return '<PermutationModule dim=%d over %s>' % (self.dim, self.group)

    def act(self, g, vectors):
        """Multiply a batch of vectors by the group element of index g."""
        v = _as_residues(vectors, self.modulus, self.dim)
        out = np.zeros_like(v)
        out[:, self.perm[g]] = v
        return out

    def act_element(self, x, vectors):
        """Multiply a batch of vectors by a T-free ring element."""
        v = _as_residues(vectors, self.modulus, self.dim)
        out = np.zeros_like(v)
        for g in np.flatnonzero(x.group_coeffs):
            out[:, self.perm[g]] += int(x.group_coeffs[g]) * v
            out %= self.modulus
        return out

    def orbit_block(self, v):
        """The rows `g v` for all g: their Z/p^N-span is the submodule generated by v."""
        v = _as_residues(v, self.modulus, self.dim)[0]
        out = np.zeros((self.group.order, self.dim), dtype=np.int64)
        out[np.arange(self.group.order)[:, np.newaxis], self.perm] = v
        return out

    def orbit_blocks(self, vectors):
        vectors = _as_residues(vectors, self.modulus, self.dim)
        if not len(vectors):
            return np.zeros((0, self.dim), dtype=np.int64)
        return np.vstack([self.orbit_block(v) for v in vectors])

    def radical_rows(self, vectors):
        """Rows spanning m V, m the maximal ideal of (Z/p^N)[G], V the span of `vectors`."""
        p, _ = prime_power(self.modulus)
        v = _as_residues(vectors, self.modulus, self.dim)
        rows = [(p * v) % self.modulus]
        for gen in self.group.generators:
            rows.append((self.act(gen.index, v) - v) % self.modulus)
        return np.vstack(rows)


def direct_sum(modules):
    """The direct sum of permutation modules over the same group."""
    assert modules
    group = modules[0].group
    modulus = modules[0].modulus
    perms, summands = [], []
    offset = 0
    for m in modules:
        assert m.group == group and m.modulus == modulus
        perms.append(m.perm + offset)
        summands.append((offset, m.dim))
        offset += m.dim
    return PermutationModule(group, np.hstack(perms), modulus, summands=summands)


#------------------------------------------------------------------------------
# Generators and presentations
#------------------------------------------------------------------------------

def greedy_generators(candidates, module, base=None):
    """Minimal generators of a G-stable submodule K modulo a submodule I.

    `candidates` Z/p^N-span K, `base` spans I (contained in K). A candidate is kept when it
    does not lie in the span of the kept orbits, I, and the radical m K; by Nakayama's lemma
    the kept vectors then form a minimal generating set of K / I.

    """
    cands = howell_form(candidates, module.modulus, module.dim).rows
    base = _as_residues(base if base is not None else np.zeros((0, module.dim)),
                        module.modulus, module.dim)
    if not len(cands):
        return np.zeros((0, module.dim), dtype=np.int64)
    current = howell_form(np.vstack([base, module.radical_rows(cands)]),
                          module.modulus, module.dim)
    chosen = []
    for v in cands:
        if current.contains_all(v):
            continue
        chosen.append(v)
        current = stack_form(current, module.orbit_block(v))
    logger.debug("Kept %d generators out of %d candidates.", len(chosen), len(cands))
    return np.array(chosen, dtype=np.int64).reshape((len(chosen), module.dim))


def relation_vectors(generators, module, base=None):
    """Relations among module generators, as rows of the free module R^t.

    Returns `(relations, free)` where `free` is the free module of rank t and `relations`
    is a minimal generating set of the kernel of R^t -> module / base, e_i -> generators[i].

    """
    gens = _as_residues(generators, module.modulus, module.dim)
    t = len(gens)
    free = PermutationModule.free(module.group, t, module.modulus)
    if not t:
        return np.zeros((0, 0), dtype=np.int64), free
    phi = module.orbit_blocks(gens)
    if base is not None and len(base):
        base = _as_residues(base, module.modulus, module.dim)
        # (a, b) with a phi + b base = 0: a is a relation modulo the base.
        ker = kernel(np.vstack([phi, base]), module.modulus, module.dim)[:, :len(phi)]
    else:
        ker = kernel(phi, module.modulus, module.dim)
    rels = greedy_generators(ker, free)
    return rels, free


def presentation(generators, module, ctx, base=None):
    """Presentation matrix (relations x generators) of ring elements of `ctx`."""
    rels, free = relation_vectors(generators, module, base=base)
    t = free.dim // module.group.order
    rows = vectors_to_elements(rels, t, ctx) if len(rels) else []
    out = np.empty((len(rows), t), dtype=object)
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            out[i, j] = x
    return out


def elementary_divisors(k_rows, i_rows, modulus, n_cols):
    """Exponents a_i, in decreasing order, with K / I = sum of Z/p^(a_i).

    Uses the sizes s_j = log_p |p^j K + I| - log_p |I|.

    """
    p, n = prime_power(modulus)
    k_rows = _as_residues(k_rows, modulus, n_cols)
    i_rows = _as_residues(i_rows, modulus, n_cols)
    log_i = howell_form(i_rows, modulus, n_cols).log_size
    s = []
    for j in range(n + 2):
        stacked = np.vstack([(k_rows * p ** j) % modulus, i_rows])
        s.append(howell_form(stacked, modulus, n_cols).log_size - log_i)
    out = []
    for a in range(n, 0, -1):
        count = (s[a - 1] - s[a]) - (s[a] - s[a + 1])
        out.extend([a] * count)
    return out
