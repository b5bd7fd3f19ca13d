"""Exact F4 root-system, Chevalley-group and unipotent-orbit toolkit."""

from ._f4chev import (  # noqa: F401
    check_dim_equation,
    closure_leq,
    commutator_formula,
    compose,
    composition_identities,
    copair,
    descent_table,
    exchange_fixtures,
    f4a2_stab_dim,
    f4a3_discriminant,
    f4a3_stab_dim,
    grading,
    half_dim,
    is_root,
    match_to_orbit,
    orbit,
    orbit_catalog,
    orbits_with_half_dim,
    pair_feasibility,
    positive_roots,
    replay_fixture,
    selftest,
    sp_partition_torus,
    structure_constant,
    torus_of_orbit,
    verify_composition,
    weyl_apply,
    weyl_apply_cochar,
    weyl_order,
)

__all__ = [
    "check_dim_equation",
    "closure_leq",
    "commutator_formula",
    "compose",
    "composition_identities",
    "copair",
    "descent_table",
    "exchange_fixtures",
    "f4a2_stab_dim",
    "f4a3_discriminant",
    "f4a3_stab_dim",
    "grading",
    "half_dim",
    "is_root",
    "match_to_orbit",
    "orbit",
    "orbit_catalog",
    "orbits_with_half_dim",
    "pair_feasibility",
    "positive_roots",
    "replay_fixture",
    "selftest",
    "sp_partition_torus",
    "structure_constant",
    "torus_of_orbit",
    "verify_composition",
    "weyl_apply",
    "weyl_apply_cochar",
    "weyl_order",
]
