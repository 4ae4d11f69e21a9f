# -*- coding: utf-8 -*-

"""Utility functions."""


#------------------------------------------------------------------------------
# Imports
#------------------------------------------------------------------------------

import json
import logging
import os
from pathlib import Path
import subprocess

import numpy as np

from ._types import _is_integer

logger = logging.getLogger(__name__)


#------------------------------------------------------------------------------
# JSON utility functions
#------------------------------------------------------------------------------

class _CustomEncoder(json.JSONEncoder):
    """JSON encoder that accepts NumPy arrays, NumPy scalars and tuples of them."""
    def default(self, obj):
        if isinstance(obj, np.ndarray):
            return obj.tolist()
        elif isinstance(obj, np.generic):
            return obj.item()
        elif isinstance(obj, (set, frozenset)):
            return sorted(obj)
        return super(_CustomEncoder, self).default(obj)  # pragma: no cover


def _stringify_keys(d):
    """Make sure all integers in a dictionary are converted into strings."""
    assert isinstance(d, dict)
    out = {}
    for k, v in d.items():
        if _is_integer(k):
            k = str(k)
        out[k] = v
    return out


def load_json(path):
    """Load a JSON file.

    Decoding errors propagate as `json.JSONDecodeError`, which carries the line and column
    of the offending character.

    """
    path = Path(path)
    if not path.exists():
        raise IOError("The JSON file `{}` doesn't exist.".format(path))
    contents = path.read_text()
    if not contents:
        return {}
    return json.loads(contents)


def dump_json(data):
    """Serialize a dictionary to a deterministic JSON string."""
    assert isinstance(data, dict)
    return json.dumps(_stringify_keys(data), cls=_CustomEncoder, indent=2, sort_keys=True)


def save_json(path, data):
    """Save a dictionary to a JSON file, with sorted keys and NumPy support."""
    path = Path(path)
    ensure_dir_exists(path.parent)
    path.write_text(dump_json(data) + '\n')


#------------------------------------------------------------------------------
# Various Python utility functions
#------------------------------------------------------------------------------

def _git_version():
    """Return the git version."""
    curdir = os.getcwd()
    os.chdir(str(Path(__file__).parent))
    try:
        with open(os.devnull, 'w') as fnull:
            version = ('-git-' + subprocess.check_output(
                       ['git', 'describe', '--abbrev=8', '--dirty', '--always', '--tags'],
                       stderr=fnull).strip().decode('ascii'))
            return version
    except (OSError, subprocess.CalledProcessError):  # pragma: no cover
        return ""
    finally:
        os.chdir(curdir)


def ensure_dir_exists(path):
    """Ensure a directory exists, and create it otherwise."""
    path = Path(path)
    if path.exists():
        assert path.is_dir()
    else:
        path.mkdir(exist_ok=True, parents=True)
    assert path.exists() and path.is_dir()


def parallel_map(func, items, jobs=1):
    """Apply a function to every item with joblib, keeping the input order.

    With `jobs == 1` the work runs inline, without spawning workers.

    """
    items = list(items)
    if jobs == 1 or len(items) <= 1:
        return [func(item) for item in items]
    from joblib import Parallel, delayed
    return Parallel(n_jobs=jobs)(delayed(func)(item) for item in items)


def chunks(items, n_chunks):
    """Split a list into at most `n_chunks` contiguous chunks."""
    items = list(items)
    n_chunks = max(1, min(n_chunks, len(items)))
    size = -(-len(items) // n_chunks) if items else 1
    return [items[i:i + size] for i in range(0, len(items), size)]
