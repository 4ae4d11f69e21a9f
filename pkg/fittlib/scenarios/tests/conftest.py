# -*- coding: utf-8 -*-

"""Test fixtures."""

#------------------------------------------------------------------------------
# Imports
#------------------------------------------------------------------------------

import logging

from pytest import fixture

from fittlib.ring import PGroup, RingContext
from ..config import PlaceDatum, ScenarioConfig

logger = logging.getLogger(__name__)


#------------------------------------------------------------------------------
# Fixtures
#------------------------------------------------------------------------------

def make_config(orders, places, n=2, m=6, **kwargs):
    """A scenario from `(label, inertia_generators, frobenius, n_v)` tuples."""
    group = PGroup(3, orders)
    ctx = RingContext(group, n, m)
    places = [PlaceDatum.from_exponents(group, label, gens, frobenius=g, n_v=n_v)
              for label, gens, g, n_v in places]
    return ScenarioConfig(ctx, places, **kwargs)


@fixture
def product_cfg():
    """Two places whose inertia groups are the two factors of C_3 x C_3."""
    return make_config((3, 3), [('v1', [(1, 0)], None, 0), ('v2', [(0, 1)], None, 0)])


@fixture
def nested_cfg():
    """A totally ramified place and an unramified one, both split at the first layer."""
    return make_config((3,), [('v1', [(1,)], None, 1), ('v2', [], None, 1)], n=3, m=10,
                       v_star='v1')


@fixture
def tower_cfg():
    """One place with inertia of index 3 in C_9."""
    return make_config((9,), [('v', [(3,)], None, 0)], n=2, m=8)
