# -*- coding: utf-8 -*-

"""Utility functions."""


#------------------------------------------------------------------------------
# Imports
#------------------------------------------------------------------------------

import numpy as np


#------------------------------------------------------------------------------
# Various Python utility functions
#------------------------------------------------------------------------------

class Bunch(dict):
    """A subclass of dictionary with an additional dot syntax."""
    def __init__(self, *args, **kwargs):
        super(Bunch, self).__init__(*args, **kwargs)
        self.__dict__ = self

    def copy(self):
        """Return a new Bunch instance which is a copy of the current Bunch instance."""
        return Bunch(super(Bunch, self).copy())


def _is_list(obj):
    """Return whether an object is a list or a tuple."""
    return isinstance(obj, (list, tuple))


def _is_integer(x):
    """Return whether an object is an integer (booleans excluded)."""
    return isinstance(x, (int, np.integer)) and not isinstance(x, (bool, np.bool_))


def _as_int_tuple(obj):
    """Convert a scalar or a sequence of integers into a tuple of Python ints."""
    if _is_integer(obj):
        return (int(obj),)
    return tuple(int(x) for x in obj)
