# -*- coding: utf-8 -*-
# flake8: noqa

"""Modules attached to sets of places, and closed forms of their shifted Fitting ideals."""

from .config import (PlaceDatum, ScenarioConfig, ConfigError, parse_config, parse_places,
                     load_config, DEFAULT_P)
from .modules import (HypothesisError, build_Zv, build_Z, build_Z0, resolution, z0_rank,
                      rank_parity, scenario_level, coset_module, check_nested, split_Z0)
from .identities import (
    MethodError, METHODS, applicable_methods, fitt1_Z0, fitt1_Z, places_fitt1, split_fitt1,
    privileged_candidates, privileged_place_rhs, sum_form_rhs, ramification_matrix,
    ramification_generators, ramification_case_minor, ramification_fitt1, independence_check,
    two_factor_ideal, three_factor_ideals)
