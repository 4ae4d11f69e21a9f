# -*- coding: utf-8 -*-

"""Tests of place data and configuration parsing."""

#------------------------------------------------------------------------------
# Imports
#------------------------------------------------------------------------------

from pytest import raises, mark

from fittlib.utils import save_json
from fittlib.ring import PGroup, Subgroup, LevelRing, RingContext
from ..config import PlaceDatum, ScenarioConfig, ConfigError, parse_config, load_config


#------------------------------------------------------------------------------
# Utils
#------------------------------------------------------------------------------

def _data(**kwargs):
    data = {
        'p': 3,
        'coeff_precision': 2,
        't_precision': 6,
        'group_orders': [3, 3],
        'places': [
            {'label': 'v1', 'inertia_generators': [[1, 0]]},
            {'label': 'v2', 'inertia_generators': [[0, 1]],
             'frobenius': {'group_element': [0, 1], 'n_v': 0}},
        ],
        'tasks': [{'kind': 'fitt1', 'method': 'tensor'}],
    }
    data.update(kwargs)
    return data


#------------------------------------------------------------------------------
# Places
#------------------------------------------------------------------------------

def test_place_datum():
    group = PGroup(3, (9,))
    v = PlaceDatum.from_exponents(group, 'v', [(3,)], frobenius=(1,), n_v=1)
    assert v.inertia.order == 3
    assert v.delta.order == 3
    assert not v.is_unramified
    assert not v.is_totally_ramified
    assert not v.is_group_trivial
    # g has order 3 modulo T_v, which costs one more layer.
    assert v.residue_order == 3
    assert v.height == 2
    assert v.rank == 9
    assert v.factor == (1, 1)
    ctx = RingContext(group, 2, 6)
    assert v.frobenius_lift(ctx) == ctx.element(group.element(1)) * ctx.one_plus_t_power(3)

    level = LevelRing(ctx, v.height)
    d = v.decomposition_subgroup(level)
    assert level.group.order // d.order == v.rank


def test_place_errors():
    group = PGroup(3, (3, 3))
    with raises(ValueError):
        PlaceDatum('v', Subgroup(group, [(1, 0), (0, 1)]))
    with raises(ValueError):
        PlaceDatum('v', Subgroup(group, [(1, 0)]), n_v=-1)


def test_unramified_place():
    group = PGroup(3, (3,))
    v = PlaceDatum.from_exponents(group, 'v')
    assert v.is_unramified
    assert v.is_group_trivial
    assert v.height == 0
    assert v.rank == 3
    assert v.to_dict() == {'label': 'v', 'inertia_generators': [],
                           'frobenius': {'group_element': [0], 'n_v': 0}}


#------------------------------------------------------------------------------
# Configurations
#------------------------------------------------------------------------------

def test_parse_config():
    cfg = parse_config(_data())
    assert cfg.context.precision == (2, 6)
    assert cfg.group.factor_orders == (3, 3)
    assert cfg.labels == ['v1', 'v2']
    assert cfg.r == 2
    assert cfg.place('v2').frobenius.exponents == (0, 1)
    assert cfg.tasks[0].kind == 'fitt1'
    assert cfg.to_dict()['places'][0]['inertia_generators'] == [[1, 0]]
    assert cfg.restricted(['v2']).labels == ['v2']


def test_parse_overrides():
    cfg = parse_config(_data(), overrides={'t_precision': 9, 'p': None})
    assert cfg.context.precision == (2, 9)
    cfg = parse_config(_data(t_precision=4))
    assert cfg.context.t_precision == 4


def test_parse_defaults():
    cfg = parse_config({'group_orders': [3]})
    assert cfg.context.precision == (4, 6)
    assert cfg.places == []
    with raises(ConfigError):
        cfg.require_places()


@mark.parametrize('kwargs,location', [
    ({'group_orders': None}, 'group_orders'),
    ({'group_orders': [3, 4]}, 'group_orders'),
    ({'p': 2, 'group_orders': [2]}, 'p'),
    ({'t_precision': 0}, 't_precision'),
    ({'coeff_precision': 40}, 'coeff_precision'),
    ({'places': [{'inertia_generators': [[1, 0]]}, {'inertia_generators': [[1]]}]},
     'places[1].inertia_generators[0]'),
    ({'places': [{'inertia_generators': [[1, 0], [0, 1]]}]}, 'places[0].inertia_generators'),
    ({'places': [{'frobenius': {'n_v': -1}}]}, 'places[0].frobenius.n_v'),
    ({'places': [{'colour': 'red'}]}, 'places[0].colour'),
    ({'tasks': [{'method': 'bar'}]}, 'tasks[0]'),
    ({'v_star': 'v9'}, 'v_star'),
    ({'colour': 'red'}, 'colour'),
])
def test_parse_errors(kwargs, location):
    with raises(ConfigError) as e:
        parse_config(_data(**kwargs))
    assert e.value.location == location
    assert str(e.value).startswith(location)


def test_even_prime():
    cfg = parse_config({'p': 2, 'group_orders': [2], 'allow_even_p': True})
    assert cfg.context.p == 2


def test_duplicate_labels():
    group = PGroup(3, (3,))
    ctx = RingContext(group, 2, 4)
    v = PlaceDatum.from_exponents(group, 'v')
    with raises(ConfigError):
        ScenarioConfig(ctx, [v, v])


def test_load_config(tempdir):
    save_json(tempdir / 'cfg.json', _data())
    cfg = load_config(tempdir / 'cfg.json', overrides={'coeff_precision': 3})
    assert cfg.context.precision == (3, 6)
    assert cfg.source.endswith('cfg.json')

    (tempdir / 'bad.json').write_text('{"p": 3,')
    with raises(ConfigError):
        load_config(tempdir / 'bad.json')
    with raises(IOError):
        load_config(tempdir / 'missing.json')
