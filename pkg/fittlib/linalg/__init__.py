# -*- coding: utf-8 -*-
# flake8: noqa

"""Linear algebra over Z/p^N."""

from .howell import (HowellForm, howell_form, membership, kernel, span_equal, span_size,
                     stack_form, prime_power, valuations)
from .modules import (PermutationModule, direct_sum, flatten_tensor, vectors_to_elements,
                      elements_to_vector, greedy_generators, relation_vectors, presentation,
                      elementary_divisors)
