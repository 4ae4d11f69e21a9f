# -*- coding: utf-8 -*-
# flake8: noqa

"""Finite abelian p-groups and the truncated Iwasawa algebra over their group rings."""

from .group import (
    PGroup, GroupElement, Subgroup, whole_group, group_elements, subgroup_elements,
    coset_transversal, coset_labels)
from .element import (
    RingContext, RingElement, ContextError, norm_element, power_sum, gamma_power_poly,
    augmentation, DEFAULT_COEFF_PRECISION, DEFAULT_T_PRECISION)
from .level import LevelRing
from .matrix import (
    zero_matrix, identity_matrix, ring_matrix, column, map_matrix, scale_matrix, vstack, hstack,
    block_matrix, is_zero_matrix, matrices_equal, is_t_free_matrix, max_t_degree, to_tensor,
    from_tensor, tensor_product, mat_mul, render_matrix)
