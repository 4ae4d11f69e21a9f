# -*- coding: utf-8 -*-

"""Homology of T-free complexes over (Z/p^N)[G]."""


#------------------------------------------------------------------------------
# Imports
#------------------------------------------------------------------------------

from functools import partial
import logging

import numpy as np

from fittlib.utils import Bunch, parallel_map
from fittlib.ring.matrix import to_tensor
from fittlib.linalg.howell import howell_form, kernel
from fittlib.linalg.modules import (PermutationModule, flatten_tensor, greedy_generators,
                                    presentation, elementary_divisors)
from fittlib.ideals.ideal import unit_ideal
from fittlib.ideals.minors import minors
from .complex import ComplexError

logger = logging.getLogger(__name__)


#------------------------------------------------------------------------------
# Homology
#------------------------------------------------------------------------------

def _flat_boundary(c, k):
    ctx = c.context
    return flatten_tensor(to_tensor(c.boundary(k), ctx), ctx.group)


def homology_profile(c, k):
    """Describe the homology K / I in degree k, K = ker d_k and I = im d_(k+1).

    The kernel is computed over Z/p^N on the flattened bases; a minimal set of R-module
    generators of K / I is selected and presented.

    Returns
    -------

    profile : Bunch
        `trivial`, `divisors` (elementary divisors over Z/p^N, decreasing),
        `generators`, `presentation` (relations x generators) and `fitting`
        (the list Fitt_0, Fitt_1).

    """
    if not c.is_t_free:
        raise ComplexError("Homology is only computed for T-free complexes.")
    if k >= c.top:
        raise ComplexError("Homology in degree %d needs d_%d, the top degree is %d." % (
            k, k + 1, c.top))
    ctx = c.context.with_t_precision(1)
    group, modulus = ctx.group, ctx.modulus
    dim = c.rank(k) * group.order
    if k == 0 or not c.rank(k - 1):
        kern = np.eye(dim, dtype=np.int64)
    else:
        kern = kernel(_flat_boundary(c, k), modulus, c.rank(k - 1) * group.order)
    image = _flat_boundary(c, k + 1)
    trivial = howell_form(kern, modulus, dim) == howell_form(image, modulus, dim)
    divisors = elementary_divisors(kern, image, modulus, dim)
    free = PermutationModule.free(group, c.rank(k), modulus)
    gens = greedy_generators(kern, free, base=image)
    pres = presentation(gens, free, ctx, base=image)
    m = len(gens)
    fitting = [minors(pres, m - e, ctx) if m >= e else unit_ideal(ctx) for e in (0, 1)]
    logger.debug("Homology of %s in degree %d: %d generators, divisors %s.",
                 c.name, k, m, divisors)
    return Bunch(degree=k, trivial=trivial, divisors=divisors, generators=gens,
                 presentation=pres, fitting=fitting)


def _trivial_in_degree(c, k):
    return homology_profile(c, k).trivial


def check_exactness(c, allowed=(), jobs=1):
    """Check that the homology vanishes in every built degree outside `allowed`.

    Degrees below the top degree are checked, concurrently when `jobs > 1`.

    """
    degrees = [k for k in range(c.top) if k not in set(allowed)]
    results = parallel_map(partial(_trivial_in_degree, c), degrees, jobs=jobs)
    failed = [k for k, ok in zip(degrees, results) if not ok]
    if failed:
        logger.debug("%s is not exact in degrees %s.", c.name, failed)
    return Bunch(passed=not failed, degrees=degrees, failed=failed)
