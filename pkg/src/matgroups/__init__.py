"""Finite matrix groups over small fields: character tables, counting, word maps."""

__version__ = "0.1.0"

from . import charbound, chartab, errors, ff, homcount, matgrp, torsion, wordmap
from .charbound import (
    character_bound_check,
    fixed_subspace_bound_check,
    fixed_subspace_count,
    gaussian_binomial,
    semisimple_representatives,
)
from .chartab import CharacterTable, character_table, rep_zeta
from .ff import field_make, field_make_q
from .homcount import (
    Presentation,
    Word,
    commutator_count,
    fs_squares_count,
    hom_count_bruteforce,
    parse_word,
    quad_class_count,
    squares_presentation,
    surface_hom_count,
    surface_presentation,
)
from .matgrp import GroupContext, MatrixElement, group_build, matrix_element
from .torsion import (
    a_n,
    b_k,
    class_multiplicity_check,
    decomposition_witness,
    mu3,
    torsion_classes,
)
from .wordmap import (
    CountProfile,
    commutative_transitivity_check,
    dimension_estimate,
    double_word_stats,
    eval_word,
    fiber_count,
)

__all__ = [
    "__version__",
    "charbound",
    "chartab",
    "errors",
    "ff",
    "homcount",
    "matgrp",
    "torsion",
    "wordmap",
    "CharacterTable",
    "CountProfile",
    "GroupContext",
    "MatrixElement",
    "Presentation",
    "Word",
    "a_n",
    "b_k",
    "character_bound_check",
    "character_table",
    "class_multiplicity_check",
    "commutative_transitivity_check",
    "commutator_count",
    "decomposition_witness",
    "dimension_estimate",
    "double_word_stats",
    "eval_word",
    "fiber_count",
    "field_make",
    "field_make_q",
    "fixed_subspace_bound_check",
    "fixed_subspace_count",
    "fs_squares_count",
    "gaussian_binomial",
    "group_build",
    "hom_count_bruteforce",
    "matrix_element",
    "mu3",
    "parse_word",
    "quad_class_count",
    "rep_zeta",
    "semisimple_representatives",
    "squares_presentation",
    "surface_hom_count",
    "surface_presentation",
    "torsion_classes",
]
