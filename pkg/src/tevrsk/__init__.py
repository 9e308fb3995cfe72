"""Geometric Tevelev degrees of projective space, counted three ways.

``tev_words`` filters (r+1)-ary words through RSK, ``tev_ltab`` enumerates
constrained L-tableaux, and ``tev_schubert`` evaluates the Grassmannian
intersection number with the Pieri rule.
"""

from .ltab import (
    LTableau,
    L_to_pair,
    L_to_word,
    enumerate_L,
    pair_to_L,
    phi,
    phi_inverse,
    psi,
    psi_inverse,
    tev_ltab,
    validate_L,
)
from .params import InvalidParams, Params, WorkBoundExceeded
from .rsk import TableauPair, greene_oracle, knuth_neighbors, max_ii1_subseq, rsk, rsk_inverse
from .schubert import GrassmannianCtx, gamma, intersect_with_power, pieri_e, tev_schubert
from .tableau import (
    Partition,
    Tableau,
    conjugate,
    enumerate_partitions,
    enumerate_ssyt,
    max_ii1_strip,
    reading_word,
    validate_tableau,
)
from .verify import verify_bijection
from .words import ConditionReport, check_word, list_words, tev_words

__all__ = [
    "ConditionReport", "GrassmannianCtx", "InvalidParams", "LTableau", "L_to_pair", "L_to_word",
    "Params", "Partition", "Tableau", "TableauPair", "WorkBoundExceeded", "check_word", "conjugate",
    "enumerate_L", "enumerate_partitions", "enumerate_ssyt", "gamma", "greene_oracle",
    "intersect_with_power", "knuth_neighbors", "list_words", "max_ii1_strip", "max_ii1_subseq",
    "pair_to_L", "phi", "phi_inverse", "pieri_e", "psi", "psi_inverse", "reading_word", "rsk",
    "rsk_inverse", "tev_ltab", "tev_schubert", "tev_words", "validate_L", "validate_tableau",
    "verify_bijection",
]
