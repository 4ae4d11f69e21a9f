# -*- coding: utf-8 -*-
# flake8: noqa

"""Utilities."""

from ._misc import (
    load_json, save_json, dump_json, ensure_dir_exists, parallel_map, chunks)
from ._types import _as_int_tuple, Bunch, _is_list, _is_integer
