# -*- coding: utf-8 -*-
# flake8: noqa

"""Admissible monomials and minor ideal checks for products of cyclic groups."""

from .admissible import (NuMonomial, TauNuMonomial, is_admissible, enumerate_M,
                         resolve_sigmas, tau_nu_elements, monomial_ideal)
from .conjectures import (build_Mtilde, build_A, tensor_complex_C, gkt_minor_check,
                          gkt_minor_sweep, strong_conjecture_check, weak_conjecture_ideal,
                          weak_conjecture_check, check_rank, MAX_RANK)
