# -*- coding: utf-8 -*-

"""Exact arithmetic in (Z/p^N)[G][T]."""


#------------------------------------------------------------------------------
# Imports
#------------------------------------------------------------------------------

import logging

import numpy as np
from scipy.special import comb

from .group import GroupElement, Subgroup

logger = logging.getLogger(__name__)


DEFAULT_COEFF_PRECISION = 4
DEFAULT_T_PRECISION = 6

_INT64_MAX = int(np.iinfo(np.int64).max)

# Below this number of nonzero terms, products loop over the terms of the sparser factor.
_SPARSE_TERMS = 8


class ContextError(ValueError):
    """Raised when elements of incompatible rings are combined."""


def max_terms(modulus):
    """Number of products of two residues that can be summed in int64 without overflow."""
    return _INT64_MAX // max(1, (int(modulus) - 1) ** 2)


#------------------------------------------------------------------------------
# Ring context
#------------------------------------------------------------------------------

class RingContext(object):
    """The coefficient ring (Z/p^N)[G][T], with ideal tests truncated at T^M.

    Parameters
    ----------

    group : PGroup
    coeff_precision : int
        N, coefficients live in Z/p^N.
    t_precision : int
        M, ideal membership and equality are decided modulo T^M.

    """
    def __init__(self, group, coeff_precision=DEFAULT_COEFF_PRECISION,
                 t_precision=DEFAULT_T_PRECISION):
        if coeff_precision < 1 or t_precision < 1:
            raise ValueError("Both precisions must be positive.")
        self.group = group
        self.p = group.p
        self.coeff_precision = int(coeff_precision)
        self.t_precision = int(t_precision)
        self.modulus = self.p ** self.coeff_precision
        # A group-algebra product sums |G| residue products onto a reduced residue.
        if max_terms(self.modulus) < group.order + 1:
            raise ValueError("The modulus %d^%d is too large for int64 arithmetic over a group "
                             "of order %d." % (self.p, self.coeff_precision, group.order))

    def __eq__(self, other):
        return (isinstance(other, RingContext) and self.group == other.group and
                self.coeff_precision == other.coeff_precision and
                self.t_precision == other.t_precision)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.group, self.coeff_precision, self.t_precision))

    def __repr__(self):
        return '<RingContext p=%d orders=%s N=%d M=%d>' % (
            self.p, self.group.factor_orders, self.coeff_precision, self.t_precision)

    def compatible(self, other):
        """Same group and coefficient precision; the T-precision may differ."""
        return self.group == other.group and self.coeff_precision == other.coeff_precision

    def with_t_precision(self, t_precision):
        return RingContext(self.group, self.coeff_precision, t_precision)

    @property
    def precision(self):
        return (self.coeff_precision, self.t_precision)

    # Constructors
    # -------------------------------------------------------------------------

    def zero(self):
        return RingElement(self, np.zeros((0, self.group.order), dtype=np.int64))

    def scalar(self, c):
        a = np.zeros((1, self.group.order), dtype=np.int64)
        a[0, 0] = c
        return RingElement(self, a)

    def one(self):
        return self.scalar(1)

    def T(self, k=1):
        """The monomial T^k."""
        a = np.zeros((k + 1, self.group.order), dtype=np.int64)
        a[k, 0] = 1
        return RingElement(self, a)

    def element(self, g, c=1):
        """The ring element c*g for a group element or exponent tuple g."""
        if not isinstance(g, GroupElement):
            g = self.group.element(g)
        if g.group != self.group:
            raise ContextError("%s does not lie in %s." % (g, self.group))
        a = np.zeros((1, self.group.order), dtype=np.int64)
        a[0, g.index] = c
        return RingElement(self, a)

    def coerce(self, x):
        """Turn integers and group elements into ring elements of this context."""
        if isinstance(x, RingElement):
            if x.context == self:
                return x
            if not self.compatible(x.context):
                raise ContextError("Cannot move %r to %r." % (x.context, self))
            return RingElement(self, x.coeffs)
        elif isinstance(x, GroupElement):
            return self.element(x)
        elif isinstance(x, (int, np.integer)):
            return self.scalar(int(x))
        raise TypeError("Cannot coerce %r." % (x,))

    def one_plus_t_power(self, k):
        """The polynomial (1+T)^k."""
        a = np.zeros((k + 1, self.group.order), dtype=np.int64)
        a[:, 0] = [comb(k, j, exact=True) % self.modulus for j in range(k + 1)]
        return RingElement(self, a)


#------------------------------------------------------------------------------
# Ring element
#------------------------------------------------------------------------------

def _convolve(group, a, b, modulus):
    """Product of two dense coefficient arrays of shape (T-degree + 1, |G|)."""
    n = group.order
    if len(a) == 0 or len(b) == 0:
        return np.zeros((0, n), dtype=np.int64)
    if np.count_nonzero(b) < np.count_nonzero(a):
        a, b = b, a
    out = np.zeros((len(a) + len(b) - 1, n), dtype=np.int64)
    db = len(b)
    nz = np.nonzero(a)
    if len(nz[0]) <= _SPARSE_TERMS:
        add = group.add_table
        for j, g in zip(*nz):
            out[j:j + db][:, add[g]] += a[j, g] * b
            out %= modulus
        return out
    sub = group.sub_table
    for j in range(len(a)):
        if a[j].any():
            # Regular representation: reg[c, h] = a_j[c - h].
            reg = a[j][sub]
            out[j:j + db] += b.dot(reg.T)
            out[j:j + db] %= modulus
    return out


class RingElement(object):
    """An immutable element of (Z/p^N)[G][T].

    Coefficients are stored as a dense array of shape `(t_degree + 1, |G|)`, with the group
    index in lexicographic order. The zero element has shape `(0, |G|)`.

    """
    __slots__ = ('context', 'coeffs', '_hash')

    def __init__(self, context, coeffs):
        coeffs = np.asarray(coeffs, dtype=np.int64) % context.modulus
        assert coeffs.ndim == 2 and coeffs.shape[1] == context.group.order
        nz = np.flatnonzero(coeffs.any(axis=1))
        coeffs = coeffs[:nz[-1] + 1] if len(nz) else coeffs[:0]
        coeffs.flags.writeable = False
        self.context = context
        self.coeffs = coeffs
        self._hash = None

    def __getstate__(self):
        return (self.context, self.coeffs)

    def __setstate__(self, state):
        self.context, self.coeffs = state
        self._hash = None

    # Properties
    # -------------------------------------------------------------------------

    @property
    def t_degree(self):
        """T-degree, -1 for the zero element."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self):
        return len(self.coeffs) == 0

    @property
    def is_t_free(self):
        return len(self.coeffs) <= 1

    @property
    def group_coeffs(self):
        """The T-degree 0 slice as a vector of length |G|."""
        if self.is_zero:
            return np.zeros(self.context.group.order, dtype=np.int64)
        return self.coeffs[0]

    def augmentation(self):
        return int(self.group_coeffs.sum() % self.context.modulus)

    @property
    def is_unit(self):
        return self.augmentation() % self.context.p != 0

    def to_vector(self, t_precision=None):
        """Flattened coefficients, T-degree-major, truncated at T^M."""
        m = t_precision or self.context.t_precision
        n = self.context.group.order
        out = np.zeros((m, n), dtype=np.int64)
        d = min(m, len(self.coeffs))
        out[:d] = self.coeffs[:d]
        return out.ravel()

    def terms(self):
        """Iterate over the nonzero terms as `(t_degree, group_index, coefficient)`."""
        for j, g in zip(*np.nonzero(self.coeffs)):
            yield int(j), int(g), int(self.coeffs[j, g])

    # Arithmetic
    # -------------------------------------------------------------------------

    def _other(self, other):
        if isinstance(other, RingElement):
            if not self.context.compatible(other.context):
                raise ContextError("Cannot combine %r and %r." % (self.context, other.context))
            return other
        return self.context.coerce(other)

    def _padded(self, other):
        d = max(len(self.coeffs), len(other.coeffs))
        a = np.zeros((d, self.coeffs.shape[1]), dtype=np.int64)
        b = a.copy()
        a[:len(self.coeffs)] = self.coeffs
        b[:len(other.coeffs)] = other.coeffs
        return a, b

    def __add__(self, other):
        other = self._other(other)
        a, b = self._padded(other)
        return RingElement(self.context, a + b)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._other(other)
        a, b = self._padded(other)
        return RingElement(self.context, a - b)

    def __rsub__(self, other):
        return self._other(other) - self

    def __neg__(self):
        return RingElement(self.context, -self.coeffs)

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)):
            return RingElement(self.context, self.coeffs * (int(other) % self.context.modulus))
        other = self._other(other)
        ctx = self.context
        return RingElement(ctx, _convolve(ctx.group, self.coeffs, other.coeffs, ctx.modulus))

    __rmul__ = __mul__

    def __pow__(self, k):
        assert k >= 0
        out, base = self.context.one(), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, np.integer, GroupElement)):
            other = self.context.coerce(other)
        if not isinstance(other, RingElement):
            return NotImplemented
        return (self.context.compatible(other.context) and
                self.coeffs.shape == other.coeffs.shape and
                bool(np.array_equal(self.coeffs, other.coeffs)))

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.coeffs.shape, self.coeffs.tobytes()))
        return self._hash

    def shift(self, k):
        """Multiply by T^k."""
        if self.is_zero or k == 0:
            return self
        n = self.coeffs.shape[1]
        return RingElement(
            self.context, np.vstack([np.zeros((k, n), dtype=np.int64), self.coeffs]))

    def inverse(self):
        """Inverse of a T-free unit, by Neumann series on the nilpotent maximal ideal."""
        ctx = self.context
        if not self.is_t_free or not self.is_unit:
            raise ValueError("Only T-free units of the group ring can be inverted.")
        a_inv = pow(self.augmentation(), -1, ctx.modulus)
        y = ctx.one() - self * a_inv
        out = ctx.scalar(a_inv)
        while not y.is_zero:
            out = out * (y + 1)
            y = y * y
        return out

    # Rendering
    # -------------------------------------------------------------------------

    def sort_key(self):
        """(lowest T-degree, lowest group index, coefficient) of the leading term."""
        if self.is_zero:
            return (-1, -1, 0, b'')
        j, g = next(zip(*np.nonzero(self.coeffs)))
        return (int(j), int(g), int(self.coeffs[j, g]), self.coeffs.tobytes())

    def render(self, names=None):
        """Signed sum of monomials `c*g1^e1*...*T^j`, coefficients in a symmetric range."""
        if self.is_zero:
            return '0'
        mod = self.context.modulus
        group = self.context.group
        out = ''
        for j, g, c in self.terms():
            if c > mod // 2:
                c -= mod
            sign = '-' if c < 0 else '+'
            c = abs(c)
            factors = []
            if g:
                factors.append(group.element_at(g).render(names))
            if j == 1:
                factors.append('T')
            elif j > 1:
                factors.append('T^%d' % j)
            if c != 1 or not factors:
                factors.insert(0, str(c))
            term = '*'.join(factors)
            if not out:
                out = term if sign == '+' else '-' + term
            else:
                out += ' %s %s' % (sign, term)
        return out

    def __repr__(self):
        return self.render()


#------------------------------------------------------------------------------
# Named elements
#------------------------------------------------------------------------------

def norm_element(h, ctx):
    """Sum of the elements of a subgroup."""
    if not isinstance(h, Subgroup):
        raise TypeError("Expected a subgroup.")
    if h.parent != ctx.group:
        raise ContextError("The subgroup does not lie in the context group.")
    a = np.zeros((1, ctx.group.order), dtype=np.int64)
    a[0, h.indices] = 1
    return RingElement(ctx, a)


def power_sum(sigma, k, ctx):
    """1 + sigma + ... + sigma^(k-1)."""
    a = np.zeros((1, ctx.group.order), dtype=np.int64)
    for i in range(k):
        a[0, (sigma ** i).index] += 1
    return RingElement(ctx, a)


def gamma_power_poly(n, ctx):
    """The polynomial (1+T)^(p^n) - 1."""
    return ctx.one_plus_t_power(ctx.p ** n) - 1


def augmentation(x):
    return x.augmentation()
