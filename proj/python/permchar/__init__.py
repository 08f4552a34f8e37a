"""Permutation groups, coset actions and permutation characters."""

from ._permchar import (
    FgsCheck,
    Group,
    LemmaCheck,
    Permutation,
    PermcharError,
    Subgroup,
    TheoremCheck,
    catalog_names,
    character_value,
    check_fgs,
    check_lemma,
    check_theorem,
    coset_image,
    falsify_klingen,
    frobenius_value,
    gassmann_pairs,
    perm_character,
    render_lemma,
    run_cli,
    sweep_json,
)

__all__ = [
    "FgsCheck",
    "Group",
    "LemmaCheck",
    "Permutation",
    "PermcharError",
    "Subgroup",
    "TheoremCheck",
    "catalog_names",
    "character_value",
    "check_fgs",
    "check_lemma",
    "check_theorem",
    "coset_image",
    "falsify_klingen",
    "frobenius_value",
    "gassmann_pairs",
    "perm_character",
    "render_lemma",
    "run_cli",
    "sweep_json",
]
