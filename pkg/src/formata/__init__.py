"""Exact character tables, formation projectors, and head character verification for solvable permutation groups."""

from .catalog import CatalogEntry, catalog_group, catalog_names, load_catalog
from .characters import (
    CharacterTable,
    ClassFunction,
    character_table,
    deflate,
    extensions_of,
    inflate,
    linear_characters,
    trivial_character,
)
from .cyclotomic import Cyclotomic
from .errors import (
    CapacityError,
    CatalogIntegrityError,
    CycleParseError,
    DomainError,
    FormataError,
    InternalInconsistencyError,
    NoStrongSeriesError,
    UnsupportedGroupError,
)
from .formations import (
    Formation,
    fitting_subgroup,
    is_nilpotent,
    is_p_nilpotent,
    is_supersolvable,
    navarro_condition,
    nilpotent_length,
    prime_divisors,
    projector,
    residual,
    verify_projector,
)
from .groups import (
    PermGroup,
    chief_series,
    generate,
    h_composition_series,
    intersection,
    is_invariant_under,
    is_normal_in,
    normal_subgroups,
    normalizer,
    quotient,
    subgroup_product,
    sylow,
)
from .headchars import (
    CanonicalSeries,
    PairSeries,
    ascent_states,
    canonical_series,
    counting_check,
    counting_report,
    extension_transfer_check,
    fprime_ascending,
    fprime_descending_test,
    gallagher_family,
    is_head_character,
    strong_series_for,
    theorem_54_report,
    theorem_a_report,
    theorem_b_report,
    theorem_c_report,
    unique_invariant_above,
    unique_invariant_below,
)
from .perms import Perm, format_group_text, parse_cycles, parse_group_text, read_group_file

__version__ = "0.1.0"

__all__ = [
    "CanonicalSeries",
    "CapacityError",
    "CatalogEntry",
    "CatalogIntegrityError",
    "CharacterTable",
    "ClassFunction",
    "CycleParseError",
    "Cyclotomic",
    "DomainError",
    "Formation",
    "FormataError",
    "InternalInconsistencyError",
    "NoStrongSeriesError",
    "PairSeries",
    "Perm",
    "PermGroup",
    "UnsupportedGroupError",
    "ascent_states",
    "canonical_series",
    "catalog_group",
    "catalog_names",
    "character_table",
    "chief_series",
    "counting_check",
    "counting_report",
    "deflate",
    "extension_transfer_check",
    "extensions_of",
    "fitting_subgroup",
    "format_group_text",
    "fprime_ascending",
    "fprime_descending_test",
    "gallagher_family",
    "generate",
    "h_composition_series",
    "inflate",
    "intersection",
    "is_head_character",
    "is_invariant_under",
    "is_nilpotent",
    "is_normal_in",
    "is_p_nilpotent",
    "is_supersolvable",
    "linear_characters",
    "load_catalog",
    "navarro_condition",
    "nilpotent_length",
    "normal_subgroups",
    "normalizer",
    "parse_cycles",
    "parse_group_text",
    "prime_divisors",
    "projector",
    "quotient",
    "read_group_file",
    "residual",
    "strong_series_for",
    "subgroup_product",
    "sylow",
    "theorem_54_report",
    "theorem_a_report",
    "theorem_b_report",
    "theorem_c_report",
    "trivial_character",
    "unique_invariant_above",
    "unique_invariant_below",
    "verify_projector",
]
