# -*- coding: utf-8 -*-

"""Tasks run by the command-line front end."""


#------------------------------------------------------------------------------
# Imports
#------------------------------------------------------------------------------

import logging
import time

from scipy.special import comb

from fittlib.utils import Bunch, _is_integer, _is_list
from fittlib.ring import PGroup, Subgroup, RingContext, LevelRing, norm_element, whole_group
from fittlib.ideals import (IdealHandle, FractionalIdeal, minors, from_terms,
                            fitt_shift1_from_complex, frac_ideal_witness, zv_fitt1,
                            zv_fitt1_from_resolution)
from fittlib.complexes import (bar_resolution, cyclic_complex, product_complex_D, tower_cone,
                               tower_cone_matrix, layer_complexes, layer_presentation,
                               layer_fitt1, check_exactness, DEFAULT_BUDGET,
                               DEFAULT_MAX_DEGREE)
from fittlib.monomials import (build_A, build_Mtilde, strong_conjecture_check,
                               weak_conjecture_check, gkt_minor_sweep)
from fittlib.scenarios import (
    PlaceDatum, ScenarioConfig, ConfigError, HypothesisError, parse_places, METHODS,
    applicable_methods, fitt1_Z0, fitt1_Z, privileged_candidates, privileged_place_rhs,
    sum_form_rhs, ramification_matrix, ramification_generators, ramification_fitt1,
    independence_check, two_factor_ideal, three_factor_ideals)

logger = logging.getLogger(__name__)


PASS, FAIL, ERROR = 'PASS', 'FAIL', 'ERROR'

EXAMPLES = ('two-factor', 'three-factor', 'single-place', 'tower-s1', 'tower-s2-minors',
            'layer-minors', 'ramification-B', 'independence')

# Alternative names of task kinds and reproduced examples.
KIND_ALIASES = {'thm46': 'privileged-place', 'thm45': 'sum-form', 'thm47': 'ramification'}
EXAMPLE_ALIASES = {
    'ex-4.5': 'two-factor',
    'ex-4.6': 'three-factor',
    'prop-1.9': 'single-place',
    's1': 'tower-s1',
    's2-5minors': 'tower-s2-minors',
    'thm46-minors': 'layer-minors',
    'thm47-B': 'ramification-B',
}

# Accepted parameters of every task kind, besides `kind` and `id`.
TASK_PARAMS = {
    'fitt1': ('methods',),
    'minors': ('matrix', 'sizes'),
    'strong-conjecture': ('allow_r5',),
    'weak-conjecture': ('n', 'allow_r5'),
    'gkt-minors': ('allow_r5',),
    'privileged-place': ('v_star', 'compare'),
    'sum-form': (),
    'ramification': ('compare',),
    'independence': ('extra_places', 'method'),
    'exactness': ('complexes',),
    'reproduce': ('example',),
}

MATRICES = ('A', 'Mtilde', 'B')
COMPLEXES = ('bar', 'cyclic', 'pruned')


def default_settings(**kwargs):
    settings = Bunch(jobs=1, max_degree=DEFAULT_MAX_DEGREE, budget=DEFAULT_BUDGET)
    settings.update(kwargs)
    return settings


#------------------------------------------------------------------------------
# Task validation
#------------------------------------------------------------------------------

def _check_choices(values, choices, location):
    if not _is_list(values):
        raise ConfigError("Expected a list.", location)
    for j, x in enumerate(values):
        if x not in choices:
            raise ConfigError("Expected one of %s, got %r." % (', '.join(choices), x),
                              '%s[%d]' % (location, j))
    return list(values)


def parse_task(data, i, cfg):
    """Validate one task description of a scenario configuration."""
    location = 'tasks[%d]' % i
    kind = data.get('kind')
    if isinstance(kind, str):
        kind = KIND_ALIASES.get(kind, kind)
    if not isinstance(kind, str) or kind not in TASK_PARAMS:
        raise ConfigError("Unknown task kind %r." % (kind,), location + '.kind')
    for key in data:
        if key not in ('kind', 'id') + TASK_PARAMS[kind]:
            raise ConfigError("Unknown key for a %s task." % kind, '%s.%s' % (location, key))
    task = Bunch(id=str(data.get('id', i + 1)), kind=kind)

    def loc(key):
        return '%s.%s' % (location, key)

    if kind == 'fitt1':
        methods = data.get('methods')
        task.methods = _check_choices(methods, METHODS, loc('methods')) if methods else None
    elif kind == 'minors':
        task.matrix = data.get('matrix', 'A')
        if task.matrix not in MATRICES:
            raise ConfigError("Expected one of %s." % ', '.join(MATRICES), loc('matrix'))
        sizes = data.get('sizes')
        if sizes is not None and (not _is_list(sizes) or
                                  not all(_is_integer(e) and e >= 0 for e in sizes)):
            raise ConfigError("Expected a list of nonnegative integers.", loc('sizes'))
        task.sizes = sizes
    elif kind in ('strong-conjecture', 'weak-conjecture', 'gkt-minors'):
        task.allow_r5 = bool(data.get('allow_r5', False))
        n = data.get('n', 0)
        if not _is_integer(n) or n < 0:
            raise ConfigError("Expected a nonnegative integer.", loc('n'))
        task.n = int(n)
    elif kind == 'privileged-place':
        v_star = data.get('v_star', cfg.v_star)
        if v_star is not None and v_star not in cfg.labels:
            raise ConfigError("Unknown place %r." % (v_star,), loc('v_star'))
        task.v_star = v_star
        task.compare = bool(data.get('compare', True))
    elif kind == 'ramification':
        task.compare = bool(data.get('compare', False))
    elif kind == 'independence':
        extra = data.get('extra_places', [{'label': 'u1'}])
        task.extra_places = parse_places(extra, cfg.group, loc('extra_places'))
        task.method = data.get('method', 'direct')
        if task.method not in METHODS:
            raise ConfigError("Expected one of %s." % ', '.join(METHODS), loc('method'))
    elif kind == 'exactness':
        task.complexes = _check_choices(data.get('complexes', list(COMPLEXES)), COMPLEXES,
                                        loc('complexes'))
    elif kind == 'reproduce':
        example = data.get('example')
        if isinstance(example, str):
            example = EXAMPLE_ALIASES.get(example, example)
        if example not in EXAMPLES:
            raise ConfigError("Expected one of %s." % ', '.join(EXAMPLES), loc('example'))
        task.example = example
    return task


# Parameter set by the argument of `--task KIND:ARG`.
_FLAG_PARAMS = {
    'fitt1': 'methods',
    'minors': 'matrix',
    'weak-conjecture': 'n',
    'privileged-place': 'v_star',
    'independence': 'method',
    'exactness': 'complexes',
    'reproduce': 'example',
}


def task_from_flag(text):
    """Raw task description from a `KIND[:ARG]` command-line value.

    Examples: `reproduce:two-factor`, `fitt1:tensor,direct`, `weak-conjecture:1`.

    """
    kind, _, arg = text.partition(':')
    kind = KIND_ALIASES.get(kind, kind)
    data = {'kind': kind}
    if not arg:
        return data
    key = _FLAG_PARAMS.get(kind)
    if key is None:
        raise ConfigError("The %s task takes no argument." % kind, '--task ' + text)
    if key in ('methods', 'complexes'):
        data[key] = arg.split(',')
    elif key == 'n':
        if not arg.isdigit():
            raise ConfigError("Expected a nonnegative integer.", '--task ' + text)
        data[key] = int(arg)
    else:
        data[key] = arg
    return data


def parse_tasks(cfg):
    tasks = [parse_task(t, i, cfg) for i, t in enumerate(cfg.tasks)]
    ids = [t.id for t in tasks]
    if len(set(ids)) != len(ids):
        raise ConfigError("Task ids must be unique.", 'tasks')
    return tasks


#------------------------------------------------------------------------------
# Results
#------------------------------------------------------------------------------

def _generators(ideal):
    return [x.render() for x in sorted(ideal.basis, key=lambda x: x.sort_key())]


def ideal_entry(role, x):
    """Rendering of an ideal or a fractional ideal, with a role such as `tensor` or `rhs`."""
    if isinstance(x, FractionalIdeal):
        den = None
        if x.denominator:
            den = x.render().split(' / ', 1)[1]
        return Bunch(role=role, generators=_generators(x.numerator), denominator=den)
    return Bunch(role=role, generators=_generators(x), denominator=None)


def _result(passed, precision, ideals=(), witness=None, message=None):
    return Bunch(status=PASS if passed else FAIL, precision=tuple(precision),
                 ideals=[ideal_entry(role, x) for role, x in ideals], witness=witness,
                 message=message)


def _compare_all(values):
    """Whether all (role, ideal) pairs are equal, and a witness against the first one."""
    (role0, x0), rest = values[0], values[1:]
    for role, x in rest:
        if x != x0:
            if isinstance(x, FractionalIdeal):
                w = frac_ideal_witness(x0, x)
            else:
                missing = x0.missing(x) or x.missing(x0)
                w = missing[0] if missing else None
            text = w.render() if w is not None else '?'
            return False, '%s differs from %s: %s' % (role, role0, text)
    return True, None


def _scenario(orders, places, n, m):
    group = PGroup(3, orders)
    ctx = RingContext(group, n, m)
    places = [PlaceDatum.from_exponents(group, label, gens, frobenius=g, n_v=n_v)
              for label, gens, g, n_v in places]
    return ScenarioConfig(ctx, places)


#------------------------------------------------------------------------------
# Scenario tasks
#------------------------------------------------------------------------------

def _fitt1(cfg, task, settings):
    methods = task.methods or applicable_methods(cfg)
    values = [(m, fitt1_Z0(cfg, method=m, jobs=settings.jobs, budget=settings.budget).fitt)
              for m in methods]
    passed, witness = _compare_all(values)
    return _result(passed, cfg.context.precision, values, witness)


def _minors(cfg, task, settings):
    ctx = cfg.context
    if task.matrix == 'A':
        a = build_A(ctx)
    elif task.matrix == 'Mtilde':
        a = build_Mtilde(ctx)
    else:
        a = ramification_matrix(cfg)
    sizes = task.sizes if task.sizes is not None else range(min(a.shape) + 1)
    values = [('Min_%d' % e, minors(a, e, ctx, jobs=settings.jobs)) for e in sizes]
    return _result(True, ctx.precision, values,
                   message='%s is %dx%d' % (task.matrix, a.shape[0], a.shape[1]))


def _sweep_result(report, ctx):
    failed = [row for row in report.rows if not row.passed]
    witness = None
    if failed:
        row = failed[0]
        witness = 'e=%d' % row.e
        if row.witness is not None:
            witness += ': %s %s' % (row.witness.kind, row.witness.generator)
    return _result(report.passed, (ctx.coeff_precision, 1), witness=witness,
                   message='e = 0..%d checked' % report.rows[-1].e)


def _strong(cfg, task, settings):
    report = strong_conjecture_check(cfg.context, jobs=settings.jobs, allow_r5=task.allow_r5)
    return _sweep_result(report, cfg.context)


def _gkt(cfg, task, settings):
    report = gkt_minor_sweep(cfg.context, jobs=settings.jobs, allow_r5=task.allow_r5)
    return _sweep_result(report, cfg.context)


def _weak(cfg, task, settings):
    report = weak_conjecture_check(cfg.context, n=task.n, jobs=settings.jobs,
                                   allow_r5=task.allow_r5)
    return _result(report.passed, cfg.context.precision,
                   [('fitt', report.fitt), ('conjectured', report.conjectured)],
                   witness=report.witness)


def _privileged(cfg, task, settings):
    labels = [task.v_star] if task.v_star else privileged_candidates(cfg)
    if not labels:
        raise HypothesisError("No place is totally ramified with a maximal decomposition "
                              "group.")
    values = [('v*=%s' % label, privileged_place_rhs(cfg, label)) for label in labels]
    if task.compare:
        values.append(('direct', fitt1_Z0(cfg, jobs=settings.jobs).fitt))
    passed, witness = _compare_all(values)
    return _result(passed, cfg.context.precision, values, witness)


def _sum_form(cfg, task, settings):
    values = [('sum-form', sum_form_rhs(cfg))]
    values += [('v*=%s' % label, privileged_place_rhs(cfg, label))
               for label in privileged_candidates(cfg)]
    passed, witness = _compare_all(values)
    return _result(passed, cfg.context.precision, values, witness)


def _ramification(cfg, task, settings):
    ctx = cfg.context
    b = ramification_matrix(cfg)
    values = [('Min_%d(B)' % (cfg.r + 1), minors(b, cfg.r + 1, ctx, jobs=settings.jobs)),
              ('generators', IdealHandle(ctx, ramification_generators(cfg)))]
    passed, witness = _compare_all(values)
    fitt = ramification_fitt1(cfg, jobs=settings.jobs)
    values.append(('fitt1', fitt))
    if passed and task.compare:
        passed, witness = _compare_all([('fitt1', fitt),
                                        ('direct', fitt1_Z0(cfg, jobs=settings.jobs).fitt)])
    return _result(passed, ctx.precision, values, witness)


def _independence(cfg, task, settings):
    out = independence_check(cfg, task.extra_places, method=task.method, jobs=settings.jobs)
    return _result(out.passed, cfg.context.precision, [('lhs', out.lhs), ('rhs', out.rhs)],
                   witness=out.witness,
                   message='extra places: ' + ', '.join(v.label for v in task.extra_places))


def _exactness(cfg, task, settings):
    ctx = cfg.context
    d = settings.max_degree
    checks = []
    if 'bar' in task.complexes:
        checks.append(('bar', bar_resolution(ctx.group, ctx, max_degree=d,
                                             budget=settings.budget), (0,)))
    if 'cyclic' in task.complexes:
        checks += [('cyclic(%s)' % g.render(), cyclic_complex(g, ctx, max_degree=d), (0,))
                   for g in ctx.group.generators]
    if 'pruned' in task.complexes:
        checks.append(('pruned', product_complex_D(ctx.group.generators, ctx,
                                                   max_degree=d)[0], (1,)))
    failed = []
    for name, c, allowed in checks:
        out = check_exactness(c, allowed=allowed, jobs=settings.jobs)
        if not out.passed:
            failed.append('%s in degrees %s' % (name, out.failed))
    return _result(not failed, ctx.precision, witness='; '.join(failed) or None,
                   message='%d complexes up to degree %d' % (len(checks), d))


#------------------------------------------------------------------------------
# Reproductions
#------------------------------------------------------------------------------

def _two_factor(settings):
    cfg = _scenario((3, 3), [('v1', [(1, 0)], None, 0), ('v2', [(0, 1)], None, 0)], 2, 6)
    values = [('tensor', fitt1_Z0(cfg, method='tensor', jobs=settings.jobs).fitt),
              ('expected', two_factor_ideal(cfg.context))]
    passed, witness = _compare_all(values)
    return _result(passed, cfg.context.precision, values, witness)


def _three_factor(settings):
    group = PGroup(3, (3, 3, 3))
    small = RingContext(group, 2, 1)
    expected = three_factor_ideals(small)
    a = build_A(small)
    for e in range(4):
        passed, witness = _compare_all([('Min_%d(A)' % e, minors(a, e, small)),
                                        ('expected', expected.minors[e])])
        if not passed:
            return _result(False, small.precision, witness=witness)
    ctx = RingContext(group, 2, 6)
    d, _ = product_complex_D(group.generators, ctx, max_degree=3)
    values = [('fitt1', fitt_shift1_from_complex(d, ctx, jobs=settings.jobs)),
              ('expected', three_factor_ideals(ctx).fitt)]
    passed, witness = _compare_all(values)
    return _result(passed, ctx.precision, values, witness)


def _single_place(settings):
    cfg = _scenario((3,), [('v', [(1,)], None, 1)], 2, 10)
    ctx = cfg.context
    v = cfg.places[0]
    values = [('formula', zv_fitt1(v.inertia, v.frobenius_lift(ctx), ctx)),
              ('resolution', zv_fitt1_from_resolution(v.inertia, v.frobenius_lift(ctx), ctx)),
              ('direct', fitt1_Z(cfg, jobs=settings.jobs))]
    passed, witness = _compare_all(values)
    return _result(passed, ctx.precision, values, witness)


def _tower_s1(settings):
    ctx = RingContext(PGroup(3, (9,)), 3, 8)
    g = ctx.group.generator(0)
    nu = norm_element(Subgroup(ctx.group, [g ** 3]), ctx)
    tau = ctx.element(g) - 1
    cone = tower_cone([(g, 3)], ctx, max_degree=3)
    values = [('cone', fitt_shift1_from_complex(cone, ctx, jobs=settings.jobs)),
              ('expected', from_terms(ctx, [([1], []), ([nu * tau], [(0, 0)])]))]
    passed, witness = _compare_all(values)
    return _result(passed, ctx.precision, values, witness)


def _tower_s2(settings):
    ctx = RingContext(PGroup(3, (9, 9)), 2, 1)
    a = tower_cone_matrix([(g, 3) for g in ctx.group.generators], ctx)
    n_rows, n_cols = a.shape
    count = comb(n_rows, 5, exact=True) * comb(n_cols, 5, exact=True)
    zero = minors(a, 5, ctx, jobs=settings.jobs).is_zero
    return _result(zero, ctx.precision, [('Min_4', minors(a, 4, ctx, jobs=settings.jobs))],
                   witness=None if zero else 'a 5-minor does not vanish',
                   message='all %d 5-minors of the %dx%d matrix vanish' % (
                       count, n_rows, n_cols) if zero else None)


def _layer_minors(settings):
    values = []
    for n in (0, 1):
        for order in (3, 9):
            ctx = RingContext(PGroup(3, (order,)), 2, 2 * 3 ** n + 4)
            level = LevelRing(ctx, n)
            delta = ctx.group.generator(0)
            a = layer_presentation(layer_complexes(level, delta, max_degree=3).d, level)
            nu = norm_element(whole_group(ctx.group), ctx)
            key = 'C%d, n=%d' % (order, n)
            expected = IdealHandle(ctx, [level.w, nu * ctx.T()])
            passed, witness = _compare_all([('Min_2 ' + key, minors(a, 2, ctx)),
                                            ('expected', expected)])
            fitt = layer_fitt1(level, delta, jobs=settings.jobs)
            if passed:
                rhs = from_terms(ctx, [([1], []), ([nu * ctx.T()], [(0, n)])])
                passed, witness = _compare_all([('fitt1 ' + key, fitt), ('expected', rhs)])
            if not passed:
                return _result(False, ctx.precision, witness=witness)
            values.append(('fitt1 ' + key, fitt))
    return _result(True, ctx.precision, values)


def _ramification_configs():
    places = [('v1', [(3,)], None, 0), ('v2', [(1,)], None, 1), ('v3', [(3,)], None, 1)]
    yield _scenario((9,), [('v1', [(1,)], None, 1)], 2, 12)
    yield _scenario((9,), places[:2], 2, 12)
    yield _scenario((9,), places, 2, 12)


def _ramification_B(settings):
    values = []
    for cfg in _ramification_configs():
        ctx = cfg.context
        b = ramification_matrix(cfg)
        lhs = minors(b, cfg.r + 1, ctx, jobs=settings.jobs)
        passed, witness = _compare_all(
            [('Min_%d(B)' % (cfg.r + 1), lhs),
             ('generators', IdealHandle(ctx, ramification_generators(cfg)))])
        if not passed:
            return _result(False, ctx.precision, witness='r=%d: %s' % (cfg.r, witness))
        values.append(('Min_%d(B)' % (cfg.r + 1), lhs))
    return _result(True, ctx.precision, values)


def _independence_example(settings):
    cfg = _scenario((3, 3), [('v1', [(1, 0)], None, 0), ('v2', [(0, 1)], None, 0)], 3, 10)
    values = []
    for count in (1, 2):
        extra = [PlaceDatum.from_exponents(cfg.group, 'u%d' % (i + 1)) for i in range(count)]
        out = independence_check(cfg, extra, method='tensor', jobs=settings.jobs)
        if not out.passed:
            return _result(False, cfg.context.precision, witness=out.witness)
        values.append(('%d extra' % count, out.lhs))
    return _result(True, cfg.context.precision, values)


_EXAMPLE_FUNCTIONS = {
    'two-factor': _two_factor,
    'three-factor': _three_factor,
    'single-place': _single_place,
    'tower-s1': _tower_s1,
    'tower-s2-minors': _tower_s2,
    'layer-minors': _layer_minors,
    'ramification-B': _ramification_B,
    'independence': _independence_example,
}


def _reproduce(cfg, task, settings):
    return _EXAMPLE_FUNCTIONS[task.example](settings)


_TASK_FUNCTIONS = {
    'fitt1': _fitt1,
    'minors': _minors,
    'strong-conjecture': _strong,
    'weak-conjecture': _weak,
    'gkt-minors': _gkt,
    'privileged-place': _privileged,
    'sum-form': _sum_form,
    'ramification': _ramification,
    'independence': _independence,
    'exactness': _exactness,
    'reproduce': _reproduce,
}


#------------------------------------------------------------------------------
# Running
#------------------------------------------------------------------------------

def run_task(cfg, task, settings=None):
    """Run a validated task and return its result.

    User-level failures (ValueError and its subclasses) give an ERROR result carrying the
    message, other exceptions propagate.

    """
    settings = settings or default_settings()
    logger.info("Starting task %s (%s).", task.id, task.kind)
    t0 = time.time()
    try:
        out = _TASK_FUNCTIONS[task.kind](cfg, task, settings)
    except ValueError as e:
        logger.debug("Task %s failed with %s.", task.id, e.__class__.__name__)
        out = Bunch(status=ERROR, precision=cfg.context.precision, ideals=[], witness=None,
                    message='%s: %s' % (e.__class__.__name__, e))
    out.id = task.id
    out.kind = task.kind
    out.label = task.kind + (' ' + task.example if task.kind == 'reproduce' else '')
    out.millis = int(round(1000 * (time.time() - t0)))
    logger.info("Task %s: %s.", task.id, out.status)
    return out
