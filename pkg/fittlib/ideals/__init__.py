# -*- coding: utf-8 -*-
# flake8: noqa

"""Ideals, minor ideals, Fitting ideals and shifted Fitting ideals."""

from .ideal import (
    IdealHandle, ideal, unit_ideal, zero_ideal, ideal_equal, ideal_sum, ideal_product,
    ideal_scale, ideals_sum)
from .determinant import determinant, DimensionError, COFACTOR_MAX_DIM, MAX_DIM
from .minors import minors, minor_list, minor_profile, MinorProfile, fitt0, fitting_ideal
from .fractional import (
    FractionalIdeal, PrecisionError, DenominatorError, frac_product, frac_sum,
    frac_ideal_equal, frac_ideal_witness, from_terms, integral, as_factor, factor_element,
    DEFAULT_SLACK)
from .fitting import (
    fitt_shift1_from_resolution, fitt_shift1_from_complex, zv_fitt1, zv_fitt1_from_resolution,
    reduce_presentation, eliminate_units, shifted_ideal)
