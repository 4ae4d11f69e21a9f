# -*- coding: utf-8 -*-

"""Place data and scenario configurations."""


#------------------------------------------------------------------------------
# Imports
#------------------------------------------------------------------------------

import logging

from fittlib.utils import Bunch, load_json, _is_integer, _is_list
from fittlib.ring.group import PGroup, Subgroup, whole_group
from fittlib.ring.element import (RingContext, norm_element, DEFAULT_COEFF_PRECISION,
                                  DEFAULT_T_PRECISION)

logger = logging.getLogger(__name__)


DEFAULT_P = 3

_KEYS = ('p', 'coeff_precision', 't_precision', 'group_orders', 'layer', 'allow_even_p',
         'v_star', 'places', 'tasks')


class ConfigError(ValueError):
    """Raised on an invalid scenario configuration, with the location of the faulty value."""
    def __init__(self, message, location=None):
        self.message = message
        self.location = location
        super(ConfigError, self).__init__(
            '%s: %s' % (location, message) if location else message)


#------------------------------------------------------------------------------
# Places
#------------------------------------------------------------------------------

class PlaceDatum(object):
    """Group data of a place v: cyclic inertia group T_v and Frobenius lift.

    The Frobenius lift is g (1+T)^(p^n_v), with g in H. Over the Iwasawa algebra the module
    of the place is Z_v = Lambda / (sigma - 1, delta - 1), delta a generator of T_v.

    """
    def __init__(self, label, inertia, frobenius=None, n_v=0):
        if not inertia.is_cyclic:
            raise ValueError("The inertia group of %s must be cyclic." % label)
        if n_v < 0:
            raise ValueError("The layer index of %s must be nonnegative." % label)
        self.label = label
        self.group = inertia.parent
        self.inertia = inertia
        self.delta = inertia.cyclic_generator
        self.frobenius = frobenius if frobenius is not None else self.group.identity
        assert self.frobenius.group == self.group
        self.n_v = int(n_v)

    @classmethod
    def from_exponents(cls, group, label, inertia_generators=(), frobenius=None, n_v=0):
        inertia = Subgroup(group, [group.element(e) for e in inertia_generators])
        g = group.element(frobenius) if frobenius is not None else None
        return cls(label, inertia, frobenius=g, n_v=n_v)

    def __repr__(self):
        return '<Place %s |T|=%d frob=%s n=%d>' % (
            self.label, self.inertia.order, self.frobenius, self.n_v)

    @property
    def is_unramified(self):
        return self.inertia.order == 1

    @property
    def is_totally_ramified(self):
        return self.inertia == whole_group(self.group)

    @property
    def is_group_trivial(self):
        """Whether the Frobenius lift lies in 1 + T, i.e. g = 1."""
        return self.frobenius.is_identity

    @property
    def residue_order(self):
        """Order of g modulo T_v."""
        k = 1
        while (self.frobenius ** k) not in self.inertia:
            k += 1
        return k

    @property
    def height(self):
        """Smallest n such that gamma^(p^n) acts trivially on Z_v."""
        k, a = self.residue_order, 0
        while k > 1:
            k //= self.group.p
            a += 1
        return self.n_v + a

    @property
    def rank(self):
        """Z_p-rank of Z_v, that is [H : T_v] p^n_v."""
        return self.group.order // self.inertia.order * self.group.p ** self.n_v

    @property
    def factor(self):
        """The denominator factor of sigma - 1."""
        return (self.frobenius.index, self.n_v)

    def frobenius_lift(self, ctx):
        return ctx.element(self.frobenius) * ctx.one_plus_t_power(ctx.p ** self.n_v)

    def norm(self, ctx):
        return norm_element(self.inertia, ctx)

    def decomposition_subgroup(self, level):
        """The image of the decomposition group in the finite layer G_m."""
        assert level.n >= self.height
        sigma = level.embed(self.frobenius) * level.gamma ** (self.group.p ** self.n_v)
        return level.subgroup([level.embed(self.delta), sigma])

    def to_dict(self):
        return {
            'label': self.label,
            'inertia_generators': [list(self.delta.exponents)] if self.inertia.order > 1 else [],
            'frobenius': {'group_element': list(self.frobenius.exponents), 'n_v': self.n_v},
        }


#------------------------------------------------------------------------------
# Scenario configuration
#------------------------------------------------------------------------------

class ScenarioConfig(object):
    """A ring context, the places of S' and scenario options.

    Parameters
    ----------

    context : RingContext
    places : list of PlaceDatum
    v_star : str
        Label of the privileged place, if any.
    layer : int
        Lowest finite layer used for direct computations.
    tasks : list
        Raw task descriptions, validated by the command-line front end.

    """
    def __init__(self, context, places, v_star=None, layer=0, tasks=(), source=None):
        self.context = context
        self.places = list(places)
        self.v_star = v_star
        self.layer = int(layer)
        self.tasks = list(tasks)
        self.source = source
        labels = [v.label for v in self.places]
        if len(set(labels)) != len(labels):
            raise ConfigError("Place labels must be unique.", 'places')
        for v in self.places:
            if v.group != context.group:
                raise ConfigError("Place %s lives in another group." % v.label, 'places')
        if v_star is not None and v_star not in labels:
            raise ConfigError("Unknown place `%s`." % v_star, 'v_star')

    def __repr__(self):
        return '<ScenarioConfig %r with %d places>' % (self.context, len(self.places))

    @property
    def group(self):
        return self.context.group

    @property
    def labels(self):
        return [v.label for v in self.places]

    @property
    def r(self):
        return len(self.places)

    def place(self, label):
        if isinstance(label, PlaceDatum):
            return label
        for v in self.places:
            if v.label == label:
                return v
        raise KeyError(label)

    def require_places(self):
        if not self.places:
            raise ConfigError("At least one place is required.", 'places')

    def restricted(self, labels):
        """The scenario with only some of the places."""
        places = [self.place(l) for l in labels]
        v_star = self.v_star if self.v_star in [v.label for v in places] else None
        return ScenarioConfig(self.context, places, v_star=v_star, layer=self.layer)

    def extended(self, places):
        """The scenario with extra places appended."""
        return ScenarioConfig(self.context, self.places + list(places), v_star=self.v_star,
                              layer=self.layer)

    def to_dict(self):
        ctx = self.context
        return {
            'p': ctx.p,
            'coeff_precision': ctx.coeff_precision,
            't_precision': ctx.t_precision,
            'group_orders': list(ctx.group.factor_orders),
            'layer': self.layer,
            'v_star': self.v_star,
            'places': [v.to_dict() for v in self.places],
        }


#------------------------------------------------------------------------------
# Parsing
#------------------------------------------------------------------------------

def _int(value, location, minimum=None):
    if not _is_integer(value):
        raise ConfigError("Expected an integer, got %r." % (value,), location)
    if minimum is not None and value < minimum:
        raise ConfigError("Expected an integer >= %d, got %d." % (minimum, value), location)
    return int(value)


def _exponents(value, group, location):
    if not _is_list(value) or len(value) != group.rank:
        raise ConfigError("Expected a list of %d exponents." % group.rank, location)
    return group.element([_int(x, '%s[%d]' % (location, i)) for i, x in enumerate(value)])


def _parse_place(data, i, group, prefix='places'):
    location = '%s[%d]' % (prefix, i)
    if not isinstance(data, dict):
        raise ConfigError("Expected an object.", location)
    for key in data:
        if key not in ('label', 'inertia_generators', 'frobenius'):
            raise ConfigError("Unknown key.", '%s.%s' % (location, key))
    label = data.get('label', 'v%d' % (i + 1))
    if not isinstance(label, str):
        raise ConfigError("Expected a string.", location + '.label')
    gens = data.get('inertia_generators', [])
    if not _is_list(gens):
        raise ConfigError("Expected a list.", location + '.inertia_generators')
    gens = [_exponents(g, group, '%s.inertia_generators[%d]' % (location, j))
            for j, g in enumerate(gens)]
    inertia = Subgroup(group, gens)
    if not inertia.is_cyclic:
        raise ConfigError("The inertia group must be cyclic.", location + '.inertia_generators')
    frob = data.get('frobenius', {})
    if not isinstance(frob, dict):
        raise ConfigError("Expected an object.", location + '.frobenius')
    g = frob.get('group_element')
    g = _exponents(g, group, location + '.frobenius.group_element') if g is not None else None
    n_v = _int(frob.get('n_v', 0), location + '.frobenius.n_v', minimum=0)
    return PlaceDatum(label, inertia, frobenius=g, n_v=n_v)


def parse_places(items, group, location='places'):
    """Place data from a list of objects; errors point at `location[i]`."""
    if not _is_list(items):
        raise ConfigError("Expected a list.", location)
    return [_parse_place(v, i, group, prefix=location) for i, v in enumerate(items)]


def parse_config(data, overrides=None, source=None):
    """Build a scenario configuration from a dictionary.

    Values of `overrides` that are not None take precedence over the dictionary, which
    itself takes precedence over the library defaults.

    """
    if not isinstance(data, dict):
        raise ConfigError("The configuration must be an object.")
    for key in data:
        if key not in _KEYS:
            raise ConfigError("Unknown key.", key)
    params = Bunch(p=DEFAULT_P, coeff_precision=DEFAULT_COEFF_PRECISION,
                   t_precision=DEFAULT_T_PRECISION, group_orders=None, layer=0,
                   allow_even_p=False, v_star=None, places=[], tasks=[])
    params.update(data)
    params.update({k: v for k, v in (overrides or {}).items() if v is not None})

    p = _int(params.p, 'p', minimum=2)
    if p == 2 and not params.allow_even_p:
        raise ConfigError("p must be odd; set allow_even_p to experiment with p=2.", 'p')
    orders = params.group_orders
    if orders is None:
        raise ConfigError("Missing group orders.", 'group_orders')
    if not _is_list(orders):
        raise ConfigError("Expected a list of factor orders.", 'group_orders')
    orders = [_int(o, 'group_orders[%d]' % i, minimum=2) for i, o in enumerate(orders)]
    try:
        group = PGroup(p, orders, allow_even=bool(params.allow_even_p))
    except ValueError as e:
        raise ConfigError(str(e), 'group_orders')
    coeff_precision = _int(params.coeff_precision, 'coeff_precision', minimum=1)
    t_precision = _int(params.t_precision, 't_precision', minimum=1)
    try:
        ctx = RingContext(group, coeff_precision, t_precision)
    except ValueError as e:
        raise ConfigError(str(e), 'coeff_precision')

    places = parse_places(params.places, group)
    if not _is_list(params.tasks):
        raise ConfigError("Expected a list.", 'tasks')
    for i, task in enumerate(params.tasks):
        if not isinstance(task, dict) or 'kind' not in task:
            raise ConfigError("Expected an object with a `kind` key.", 'tasks[%d]' % i)
    v_star = params.v_star
    if v_star is not None and not isinstance(v_star, str):
        raise ConfigError("Expected a place label.", 'v_star')
    cfg = ScenarioConfig(ctx, places, v_star=v_star,
                         layer=_int(params.layer, 'layer', minimum=0),
                         tasks=[Bunch(t) for t in params.tasks], source=source)
    logger.debug("Loaded %r.", cfg)
    return cfg


def load_config(path, overrides=None):
    """Load a scenario configuration from a JSON file."""
    try:
        data = load_json(path)
    except ValueError as e:
        raise ConfigError("Invalid JSON (%s)." % e, str(path))
    return parse_config(data, overrides=overrides, source=str(path))
