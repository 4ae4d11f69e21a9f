# -*- coding: utf-8 -*-

"""Howell normal form, kernels and spans over Z/p^N."""


#------------------------------------------------------------------------------
# Imports
#------------------------------------------------------------------------------

from functools import lru_cache
import logging

import numpy as np

logger = logging.getLogger(__name__)


#------------------------------------------------------------------------------
# Residue tables
#------------------------------------------------------------------------------

@lru_cache(maxsize=None)
def prime_power(modulus):
    """Return (p, N) with modulus = p^N."""
    modulus = int(modulus)
    if modulus < 2:
        raise ValueError("The modulus must be a prime power.")
    p = 2
    while modulus % p:
        p += 1
    q, n = modulus, 0
    while q % p == 0:
        q //= p
        n += 1
    if q != 1:
        raise ValueError("%d is not a prime power." % modulus)
    return p, n


@lru_cache(maxsize=None)
def _powers(modulus):
    p, n = prime_power(modulus)
    return np.array([p ** k for k in range(n + 1)], dtype=np.int64)


def valuations(x, modulus):
    """p-adic valuations of residues modulo p^N, with v(0) = N."""
    p, n = prime_power(modulus)
    x = np.asarray(np.asarray(x, dtype=np.int64) % modulus)
    out = np.zeros(x.shape, dtype=np.int64)
    rest = x.copy()
    for _ in range(n - 1):
        divisible = (rest % p == 0) & (rest != 0)
        if not divisible.any():
            break
        out[divisible] += 1
        rest[divisible] //= p
    out[x == 0] = n
    return out


def _unit_inverse(x, k, modulus):
    """Inverse modulo p^N of the unit part x / p^k."""
    return pow(int(x) // int(_powers(modulus)[k]), -1, modulus)


def _as_residues(m, modulus, n_cols=None):
    m = np.asarray(m, dtype=np.int64)
    if m.ndim == 1:
        m = m.reshape((-1, n_cols if n_cols is not None else m.shape[0]))
    if m.size == 0:
        m = m.reshape((m.shape[0], n_cols if n_cols is not None else m.shape[1]))
    return m % modulus


#------------------------------------------------------------------------------
# Howell form
#------------------------------------------------------------------------------

class HowellForm(object):
    """Canonical generating rows of a submodule of (Z/p^N)^n.

    Every row starts with a pivot equal to a power of p, pivots sit in strictly increasing
    columns, entries above a pivot p^k are reduced below p^k, and the row set has the Howell
    property: the span elements vanishing before column c are spanned by the rows whose pivot
    is at or after c.

    """
    def __init__(self, rows, modulus, n_cols):
        self.modulus = modulus
        self.n_cols = n_cols
        self.rows = rows
        self.rows.flags.writeable = False
        self.p, self.N = prime_power(modulus)
        self.pivots = []
        for row in rows:
            c = int(np.flatnonzero(row)[0])
            self.pivots.append((c, int(valuations(row[c], modulus))))

    @classmethod
    def empty(cls, modulus, n_cols):
        return cls(np.zeros((0, n_cols), dtype=np.int64), modulus, n_cols)

    def __len__(self):
        return len(self.rows)

    def __eq__(self, other):
        return (isinstance(other, HowellForm) and self.modulus == other.modulus and
                self.rows.shape == other.rows.shape and np.array_equal(self.rows, other.rows))

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return '<HowellForm %d rows x %d cols mod %d>' % (
            len(self.rows), self.n_cols, self.modulus)

    @property
    def log_size(self):
        """log_p of the number of elements of the span."""
        return sum(self.N - k for _, k in self.pivots)

    def reduce(self, vectors):
        """Reduce a batch of row vectors against the pivots; members reduce to zero."""
        v = _as_residues(vectors, self.modulus, self.n_cols)
        if v.shape[1] != self.n_cols:
            raise ValueError("Expected vectors of width %d, got %d." % (self.n_cols, v.shape[1]))
        for row, (c, k) in zip(self.rows, self.pivots):
            q = v[:, c] // self.p ** k
            if q.any():
                v = (v - q[:, np.newaxis] * row) % self.modulus
        return v

    def contains(self, vectors):
        """Boolean array telling which rows of `vectors` lie in the span."""
        return ~self.reduce(vectors).any(axis=1)

    def contains_all(self, vectors):
        return bool(np.all(self.contains(vectors)))


def howell_form(m, modulus, n_cols=None):
    """Compute the Howell normal form of the row span of an integer matrix modulo p^N."""
    a = _as_residues(m, modulus, n_cols)
    n_rows, n_cols = a.shape
    p, n = prime_power(modulus)
    powers = _powers(modulus)
    start = a[a.any(axis=1)]
    # Working rows; at most one extra row is appended per pivot column.
    buf = np.zeros((len(start) + n_cols, n_cols), dtype=np.int64)
    buf[:len(start)] = start
    count = len(start)
    done = []
    for c in range(n_cols):
        if not count:
            break
        act = buf[:count]
        col = act[:, c].copy()
        nz = np.flatnonzero(col)
        if not len(nz):
            continue
        # Pivot: the entry with the smallest valuation, first in row order.
        i = nz[np.argmin(valuations(col[nz], modulus))]
        k = int(valuations(col[i], modulus))
        pivot = np.zeros(n_cols, dtype=np.int64)
        pivot[c:] = (act[i, c:] * _unit_inverse(col[i], k, modulus)) % modulus
        hit = nz[nz != i]
        if len(hit):
            q = (col[hit] // powers[k])[:, np.newaxis]
            act[hit, c:] = (act[hit, c:] - q * pivot[c:]) % modulus
        act[i] = act[count - 1]
        count -= 1
        # p^(N-k) times the pivot row vanishes at c, and may carry information further right.
        if k > 0:
            extra = (pivot * powers[n - k]) % modulus
            if extra.any():
                buf[count] = extra
                count += 1
        done.append((c, k, pivot))
    # Reduce the entries above each pivot.
    rows = np.zeros((len(done), n_cols), dtype=np.int64)
    for i, (_, _, row) in enumerate(done):
        rows[i] = row
    for i, (c, k, _) in enumerate(done):
        if i:
            q = rows[:i, c] // powers[k]
            rows[:i] = (rows[:i] - q[:, np.newaxis] * rows[i]) % modulus
    return HowellForm(rows, modulus, n_cols)


def membership(v, h):
    """Return whether a vector lies in the span of a Howell form."""
    v = np.asarray(v, dtype=np.int64)
    if v.ndim != 1 or v.shape[0] != h.n_cols:
        raise ValueError("Expected a vector of width %d." % h.n_cols)
    return bool(h.contains(v[np.newaxis, :])[0])


def kernel(m, modulus, n_cols=None):
    """Generators of the left kernel {x : x m = 0}, as rows."""
    a = _as_residues(m, modulus, n_cols)
    n_rows, n_cols = a.shape
    if n_rows == 0:
        return np.zeros((0, 0), dtype=np.int64)
    aug = np.hstack([a, np.eye(n_rows, dtype=np.int64)])
    h = howell_form(aug, modulus)
    keep = [i for i, (c, _) in enumerate(h.pivots) if c >= n_cols]
    return h.rows[keep][:, n_cols:].copy().reshape((len(keep), n_rows))


def span_equal(a, b, modulus, n_cols=None):
    return howell_form(a, modulus, n_cols) == howell_form(b, modulus, n_cols)


def span_size(h):
    """Number of elements of the span."""
    return h.p ** h.log_size


def stack_form(h, block):
    """Howell form of the span of a form together with extra rows."""
    block = _as_residues(block, h.modulus, h.n_cols)
    return howell_form(np.vstack([h.rows, block]), h.modulus, h.n_cols)
