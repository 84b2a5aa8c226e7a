"""Signature matrices and signature ranks of circular units in real
cyclotomic fields, backed by the C++ core."""

from ._core import (
    CompositeBoundReport,
    CompositeRank,
    Conductor,
    CorollaryEntry,
    CorollaryResult,
    FalsificationError,
    LemmaWitness,
    RankReport,
    ResidueIndexMap,
    SignMatrix,
    SignVector,
    SpanBasis,
    TwoPowerWitness,
    __version__,
    build_circular_matrix,
    build_matrix_odd_prime_power,
    build_matrix_two_power,
    build_modified_matrix,
    column_witness_holds,
    composite_rank,
    corollary_check,
    embed_left,
    embed_right,
    half_interval_sign,
    least_positive_residue,
    lemma_witness,
    make_conductor,
    rank,
    row_space_basis,
    sine_oracle_entry,
    theorem_bound,
    two_adic_bound,
    two_power_column_witness,
    verify_lower_bound,
)

__all__ = [
    "CompositeBoundReport",
    "CompositeRank",
    "Conductor",
    "CorollaryEntry",
    "CorollaryResult",
    "FalsificationError",
    "LemmaWitness",
    "RankReport",
    "ResidueIndexMap",
    "SignMatrix",
    "SignVector",
    "SpanBasis",
    "TwoPowerWitness",
    "__version__",
    "build_circular_matrix",
    "build_matrix_odd_prime_power",
    "build_matrix_two_power",
    "build_modified_matrix",
    "column_witness_holds",
    "composite_rank",
    "corollary_check",
    "embed_left",
    "embed_right",
    "half_interval_sign",
    "least_positive_residue",
    "lemma_witness",
    "make_conductor",
    "rank",
    "row_space_basis",
    "sine_oracle_entry",
    "theorem_bound",
    "two_adic_bound",
    "two_power_column_witness",
    "verify_lower_bound",
]
