# -*- coding: utf-8 -*-
# flake8: noqa

"""Free complexes over group rings: construction, reduction and homology."""

from .complex import (FreeComplex, ComplexMorphism, ComplexError, MorphismError,
                      identity_morphism, direct_sum_complexes, direct_sum_morphisms,
                      stack_morphisms, DEFAULT_MAX_DEGREE)
from .builders import (
    cyclic_complex, periodic_complex, tensor_complexes, tensor_morphisms, pure_power_morphism,
    morphism_tensor_f, bar_resolution, bar_morphism, bar_cone_D, induce_complex,
    cokernel_complex, identity_pair_complex, pruned_complex_D, product_complex_D,
    mapping_cone, compositions, monomial_label, BudgetError, NotInjectiveError,
    DEFAULT_BUDGET)
from .towers import (special_morphism_s, tower_cone, tower_cone_matrix, layer_complexes,
                     layer_presentation, layer_fitt1)
from .reduction import minimal_model
from .homology import homology_profile, check_exactness
