"""Definability lattice engine for finite linear orders and Q x Z grids.

The heavy lifting lives in the C++ extension; this package re-exports it.

>>> import ordlat
>>> s = ordlat.Structure.linear(4)
>>> s.add_preset("B", "between")
>>> ordlat.aut_group(s, ["B"]).order
2
"""

from ._core import (
    EngineError,
    HasseDiagram,
    PermClass,
    Permutation,
    PermutationGroup,
    Relation,
    Structure,
    Witness,
    aut_group,
    aut_group_exhaustive,
    boundary,
    breaking_tuple,
    classify,
    compose,
    definable,
    diff,
    generate_group,
    hasse,
    initiate,
    invert,
    lift,
    lift_uniform,
    m_indistinguishable,
    parse_formula,
    place_blocks,
    preserves,
    section_classify,
    strictness_witnesses,
    verify_paper,
)

__all__ = [
    "EngineError",
    "HasseDiagram",
    "PermClass",
    "Permutation",
    "PermutationGroup",
    "Relation",
    "Structure",
    "Witness",
    "aut_group",
    "aut_group_exhaustive",
    "boundary",
    "breaking_tuple",
    "classify",
    "compose",
    "definable",
    "diff",
    "generate_group",
    "hasse",
    "initiate",
    "invert",
    "lift",
    "lift_uniform",
    "m_indistinguishable",
    "parse_formula",
    "place_blocks",
    "preserves",
    "section_classify",
    "strictness_witnesses",
    "verify_paper",
]

__version__ = "0.1.0"
