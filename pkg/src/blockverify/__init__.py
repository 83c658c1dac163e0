"""Exact verification of dimension and Cartan-matrix inequalities for p-blocks."""

from __future__ import annotations

from .brauer_tree import (
    BrauerTree,
    InvalidTreeError,
    cartan_from_tree,
    cyclic_inequality,
    is_star,
    star_dominance_check,
    star_matrix,
    tree_block,
    tree_suite,
)
from .checkers import (
    BLOCK_CHECKS,
    Assessment,
    CheckSuiteReport,
    Skip,
    assess,
    classify,
    passed,
    run_block_suite,
    run_suite,
)
from .linalg import (
    IntMatrix,
    NotPositiveDefiniteError,
    NotSymmetricError,
    det,
    hadamard_and_amgm_check,
    is_positive_definite,
    leading_principal_minors,
    smith_normal_form,
)
from .model import (
    BlockRecord,
    GroupRecord,
    InconsistentDataError,
    InsufficientDataError,
    dim_b,
    projective_degrees,
    validate,
    validate_group,
)
from .products import PrimeMismatchError, block_product, tensor_power, trivial_block
from .records import CorpusEntry, DataError, load_corpus, load_entry, parse_entry
from .spectral import (
    DEFAULT_TOLERANCE,
    SpectralEnclosure,
    pf_enclosure,
    rayleigh,
    spectral_chain_check,
)
from .tame import (
    FAMILY_IDS,
    TameFamilySpec,
    UnknownFamilyError,
    family_cartan,
    sweep,
    sweep_all,
    tame_trace_check,
)
from .verdict import Verdict, format_rational, parse_rational

__version__ = "0.1.0"
