"""Exact and arbitrary-precision workbench for generalized polylogarithms."""

from .algebra import (Composition, FormalSum, Point, PolylogTerm,
                      SignedComposition, Word, basis_compositions,
                      compositions_of_weight, holder_pairs, le_to_li,
                      li_reflection, li_to_le, reflection_matrix,
                      shuffle_compositions, shuffle_words)
from .balls import Ball, PrecisionContext
from .constants import (bernoulli, gosper_holds, ln2_ball, pi_ball, zeta_ball,
                        zeta_bar_ball)
from .relations import (BasisExpansion, PslqConfig, RelationResult,
                        expand_over_basis, probe_zeta_ring, pslq,
                        spans_coincide, weight_six_search)
from .series import (alt_zeta_ones, eval_formal, eval_term, le_at, le_series,
                     li_at_minus_one, li_series, mu_eval, mzv_eval)
from .symbolic import (Monomial, SymExpr, li_half_table, li_ones_two_ones,
                       li_twos_family, le_double_at_minus_one,
                       le_one_n_at_minus_one, load_mzv_table,
                       monomials_of_weight, solve_weight_five, sym_to_numeric,
                       value_tables)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
