"""Exact weight tables on (affine) Weyl groups.

Everything is integer Laurent arithmetic: no floats, no truncation error.
Build a Coxeter system from a type label or Cartan matrix, enumerate a
finite chunk of it, and solve for canonical or tilting weight columns;
the ``tilting`` module cross-checks every route against the others.
"""

from .coxeter import (CoxeterDescriptor, CoxeterSystem, Element, Ideal,
                      ParabolicData, build_system)
from .hecke import (Basis, WeightVector, dual_class, ic_weight_vector, kl_P,
                    kl_h, mu, r_poly, selfdual_solve, to_standard)
from .laurent import (ONE, T, ZERO, LaurentPoly, SelfDualityError, SplitRule,
                      split)
from .tilting import (CheckResult, PushforwardResult, VerificationReport,
                      WeightMatrix, check_condition_W, check_noncancel,
                      cross_validate, ic_matrix, invert_triangular,
                      matrix_product, pushforward_tilting, pushforward_vector,
                      ringel_verify, tilting_matrix, tilting_vector,
                      verify_selfdual)

__version__ = '0.1.0'

__all__ = [
    'CoxeterDescriptor', 'CoxeterSystem', 'Element', 'Ideal', 'ParabolicData',
    'build_system',
    'Basis', 'WeightVector', 'dual_class', 'ic_weight_vector', 'kl_P', 'kl_h',
    'mu', 'r_poly', 'selfdual_solve', 'to_standard',
    'ONE', 'T', 'ZERO', 'LaurentPoly', 'SelfDualityError', 'SplitRule',
    'split',
    'CheckResult', 'PushforwardResult', 'VerificationReport', 'WeightMatrix',
    'check_condition_W', 'check_noncancel', 'cross_validate', 'ic_matrix',
    'invert_triangular', 'matrix_product', 'pushforward_tilting',
    'pushforward_vector', 'ringel_verify', 'tilting_matrix', 'tilting_vector',
    'verify_selfdual',
    '__version__',
]
