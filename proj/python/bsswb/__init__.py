"""BSS machine workbench: exact BSS execution over Q(T1..Tm), Godel codes,
and the transcendence-degree toolkit. Field elements are canonical strings."""

from ._core import (
    Error,
    cantor_member_depth,
    cantor_program,
    canonical,
    decode,
    encode,
    find_dependence,
    independent,
    kd,
    ko,
    kolmogorov_set_member,
    make_quine,
    max_independent_subset,
    pair,
    parse_program,
    poly_irreducible,
    run,
    smn_curry,
    trdeg,
    universal_run,
    unpair,
)

__all__ = [
    "Error",
    "cantor_member_depth",
    "cantor_program",
    "canonical",
    "decode",
    "encode",
    "find_dependence",
    "independent",
    "kd",
    "ko",
    "kolmogorov_set_member",
    "make_quine",
    "max_independent_subset",
    "pair",
    "parse_program",
    "poly_irreducible",
    "run",
    "smn_curry",
    "trdeg",
    "universal_run",
    "unpair",
]
