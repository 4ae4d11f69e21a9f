# -*- coding: utf-8 -*-

"""Tests of misc type utility functions."""

#------------------------------------------------------------------------------
# Imports
#------------------------------------------------------------------------------

import numpy as np

from .._types import Bunch, _is_integer, _is_list, _as_int_tuple


#------------------------------------------------------------------------------
# Tests
#------------------------------------------------------------------------------

def test_bunch():
    obj = Bunch()
    obj['a'] = 1
    assert obj.a == 1
    obj.b = 2
    assert obj['b'] == 2
    assert obj.copy() == obj


def test_number():
    assert not _is_integer(None)
    assert not _is_integer(3.)
    assert not _is_integer(True)
    assert _is_integer(3)
    assert _is_integer(np.arange(1)[0])


def test_list():
    assert not _is_list(None)
    assert _is_list(())
    assert _is_list([])


def test_as_int_tuple():
    assert _as_int_tuple(3) == (3,)
    assert _as_int_tuple([9, np.int64(3)]) == (9, 3)
    assert all(type(x) is int for x in _as_int_tuple(np.array([1, 2])))
