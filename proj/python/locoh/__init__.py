"""Exact multigraded local cohomology and Ext of monomial ideals."""

from ._locoh import (
    IdealParseError,
    MonomialIdeal,
    alexander_dual,
    associated_primes,
    betti_table,
    ext_dim,
    ext_via_taylor,
    filtration,
    frobenius_power,
    hilbert_box,
    hilbert_closed_form,
    hochster_betti,
    lc_dim,
    multiplication_map,
    parse_ideal,
    sr_facets,
    tor_via_taylor,
    verify,
)

__all__ = [
    "IdealParseError",
    "MonomialIdeal",
    "alexander_dual",
    "associated_primes",
    "betti_table",
    "ext_dim",
    "ext_via_taylor",
    "filtration",
    "frobenius_power",
    "hilbert_box",
    "hilbert_closed_form",
    "hochster_betti",
    "lc_dim",
    "multiplication_map",
    "parse_ideal",
    "sr_facets",
    "tor_via_taylor",
    "verify",
]
