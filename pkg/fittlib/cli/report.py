# -*- coding: utf-8 -*-

"""Command-line front end: run the tasks of a scenario and report the results."""


#------------------------------------------------------------------------------
# Imports
#------------------------------------------------------------------------------

import argparse
from functools import partial
import logging
import sys
import time

from tqdm import tqdm

from fittlib import __version__, add_default_handler, _add_log_file
from fittlib.utils import parallel_map, save_json
from fittlib.complexes import DEFAULT_BUDGET, DEFAULT_MAX_DEGREE
from fittlib.scenarios import ConfigError, parse_config, load_config
from .tasks import PASS, FAIL, ERROR, default_settings, parse_tasks, run_task, task_from_flag

logger = logging.getLogger(__name__)


# Group used when neither a configuration file nor --group is given.
DEFAULT_GROUP_ORDERS = [3]

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_ERROR = 0, 1, 2, 3

NOTE = ("Only the algebraic ideal factor is computed; the analytic factor of the "
        "Fitting ideal is not.")


#------------------------------------------------------------------------------
# Arguments
#------------------------------------------------------------------------------

def _group_orders(text):
    try:
        orders = [int(x) for x in text.split(',')]
    except ValueError:
        raise argparse.ArgumentTypeError("expected comma-separated orders such as 9,3")
    return orders


def _positive(text):
    try:
        value = int(text)
    except ValueError:
        value = 0
    if value < 1:
        raise argparse.ArgumentTypeError("expected a positive integer, got %r" % text)
    return value


def make_parser():
    parser = argparse.ArgumentParser(
        prog='fittlib',
        description="Compute shifted Fitting ideals and check ideal identities at a finite "
                    "precision (N, M).")
    parser.add_argument('config', nargs='?', help="scenario configuration (JSON)")
    parser.add_argument('--task', action='append', metavar='KIND[:ARG]',
                        help="task to run instead of the configured ones (repeatable)")
    parser.add_argument('--p', type=_positive, help="the prime p")
    parser.add_argument('--coeff-precision', type=_positive, metavar='N',
                        help="coefficients are computed modulo p^N")
    parser.add_argument('--t-precision', type=_positive, metavar='M',
                        help="power series are truncated modulo T^M")
    parser.add_argument('--group', type=_group_orders, metavar='ORDERS',
                        help="orders of the cyclic factors, e.g. 9,3")
    parser.add_argument('--allow-even-p', action='store_true', default=None,
                        help="allow p = 2")
    parser.add_argument('--jobs', type=_positive, default=1, help="number of parallel jobs")
    parser.add_argument('--max-degree', type=_positive, default=DEFAULT_MAX_DEGREE,
                        help="top degree of the complexes checked for exactness")
    parser.add_argument('--budget', type=_positive, default=DEFAULT_BUDGET,
                        help="largest rank allowed in a degree of the bar resolution")
    parser.add_argument('--json', metavar='PATH', help="also write a JSON report")
    parser.add_argument('--debug', action='store_true', help="debug logging")
    parser.add_argument('--log-file', metavar='PATH', help="write a DEBUG log file")
    return parser


def load_scenario(args):
    """The scenario and its validated tasks, with flags overriding the file values."""
    overrides = {
        'p': args.p,
        'coeff_precision': args.coeff_precision,
        't_precision': args.t_precision,
        'group_orders': args.group,
        'allow_even_p': args.allow_even_p,
    }
    if args.task:
        overrides['tasks'] = [task_from_flag(t) for t in args.task]
    if args.config:
        cfg = load_config(args.config, overrides=overrides)
    else:
        cfg = parse_config({'group_orders': DEFAULT_GROUP_ORDERS}, overrides=overrides)
    tasks = parse_tasks(cfg)
    if not tasks:
        raise ConfigError("No task to run.", 'tasks')
    return cfg, tasks


#------------------------------------------------------------------------------
# Running
#------------------------------------------------------------------------------

def _run_one(cfg, settings, task):
    return run_task(cfg, task, settings)


def run_tasks(cfg, tasks, jobs=1, max_degree=DEFAULT_MAX_DEGREE, budget=DEFAULT_BUDGET):
    """Run tasks, in parallel across tasks when `jobs > 1`.

    Results come back in task order, whatever the number of jobs.

    """
    outer = min(jobs, len(tasks))
    inner = jobs if outer == 1 else 1
    settings = default_settings(jobs=inner, max_degree=max_degree, budget=budget)
    if outer > 1:
        return parallel_map(partial(_run_one, cfg, settings), tasks, jobs=outer)
    results = []
    # The bar only shows on a terminal.
    with tqdm(desc="Running tasks", total=len(tasks), disable=None) as bar:
        for task in tasks:
            results.append(run_task(cfg, task, settings))
            bar.update(1)
    return results


def exit_code(results):
    statuses = [r.status for r in results]
    if ERROR in statuses:
        return EXIT_ERROR
    if FAIL in statuses:
        return EXIT_FAIL
    return EXIT_OK


#------------------------------------------------------------------------------
# Rendering
#------------------------------------------------------------------------------

def _render_entry(entry):
    num = '(' + ', '.join(entry.generators) + ')' if entry.generators else '(0)'
    if entry.denominator:
        num += ' / ' + entry.denominator
    return '%s: %s' % (entry.role, num)


def _render_place(v):
    d = v.to_dict()
    gens = ', '.join(str(tuple(g)) for g in d['inertia_generators']) or '1'
    frob = d['frobenius']
    return '%s: inertia <%s>, frobenius %s, n_v = %d' % (
        v.label, gens, tuple(frob['group_element']), frob['n_v'])


def render_text(cfg, results):
    """The text report. It does not depend on timings or on the number of jobs."""
    ctx = cfg.context
    lines = ['fittlib %s' % __version__,
             'config: %s' % (cfg.source or 'command line'),
             'p = %d, group orders = %s, precision (N, M) = (%d, %d)' % (
                 ctx.p, ' x '.join(map(str, ctx.group.factor_orders)),
                 ctx.coeff_precision, ctx.t_precision)]
    lines += ['  ' + _render_place(v) for v in cfg.places]
    lines += ['note: ' + NOTE, '']
    for r in results:
        n, m = r.precision
        if r.status == ERROR:
            lines.append('[%s] %s: ERROR' % (r.id, r.label))
        elif r.status == FAIL:
            lines.append('[%s] %s: FAIL at precision (%d, %d)' % (r.id, r.label, n, m))
        else:
            lines.append('[%s] %s: PASS, verified at precision (%d, %d)' % (
                r.id, r.label, n, m))
        lines += ['    ' + _render_entry(e) for e in r.ideals]
        if r.message:
            lines.append('    ' + r.message)
        if r.witness:
            lines.append('    witness: ' + r.witness)
    counts = [(s, sum(r.status == s for r in results)) for s in (PASS, FAIL, ERROR)]
    lines += ['', 'summary: ' + ', '.join('%d %s' % (c, s) for s, c in counts)]
    return '\n'.join(lines) + '\n'


def report_dict(cfg, results):
    """The JSON report."""
    config = cfg.to_dict()
    config['source'] = cfg.source
    tasks = []
    for r in results:
        n, m = r.precision
        tasks.append({
            'id': r.id,
            'kind': r.kind,
            'label': r.label,
            'status': r.status,
            'precision': {'N': n, 'M': m},
            'ideals': [dict(e) for e in r.ideals],
            'witness': r.witness,
            'message': r.message,
            'millis': r.millis,
        })
    return {'version': __version__, 'config': config, 'tasks': tasks}


#------------------------------------------------------------------------------
# Entry point
#------------------------------------------------------------------------------

def main(argv=None):
    """Run the command line and return the exit code.

    0 when every task passes, 1 when one fails, 2 on an invalid configuration and 3 when a
    task could not be carried out.

    """
    args = make_parser().parse_args(argv)
    handlers = [add_default_handler(logging.DEBUG if args.debug else logging.WARNING)]
    if args.log_file:
        handlers.append(_add_log_file(args.log_file))
    try:
        try:
            cfg, tasks = load_scenario(args)
        except (ConfigError, IOError) as e:
            print('error: %s' % e, file=sys.stderr)
            return EXIT_PARSE
        t0 = time.time()
        results = run_tasks(cfg, tasks, jobs=args.jobs, max_degree=args.max_degree,
                            budget=args.budget)
        logger.info("Ran %d tasks in %.1f s.", len(results), time.time() - t0)
        sys.stdout.write(render_text(cfg, results))
        if args.json:
            save_json(args.json, report_dict(cfg, results))
        return exit_code(results)
    finally:
        root = logging.getLogger('fittlib')
        for handler in handlers:
            root.removeHandler(handler)
            handler.close()


if __name__ == '__main__':  # pragma: no cover
    sys.exit(main())
