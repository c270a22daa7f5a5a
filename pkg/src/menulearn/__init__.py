"""Menu preferences under multiple information structures.

A committee choosing a menu of uncertain prospects for its members faces
disagreement both about states and about what its members will learn.
This package evaluates menus by the benefit of information, implements the
unanimity (BML), veto (JML), and hierarchical (HML) criteria built on it,
audits their axioms by brute force, runs the comparative statics of credal
nestedness, and constructs complete transitive rankings from the
incomplete or cyclic criteria.  All arithmetic is exact rational.
"""

from .core import (
    Act,
    Collection,
    CredalSet,
    Instance,
    InfoStructure,
    Lottery,
    Menu,
    Posterior,
    Value,
    Verdict,
    combine_structures,
    constant_act,
    constant_menu,
    mean_posterior,
    mix_structures,
    validate_instance,
)
from .criteria import (
    BmlComparator,
    HmlComparator,
    JmlComparator,
    SlComparator,
    alpha_maxmin_collection,
    benefit_gap,
    bml_compare,
    credal_max_gap,
    credal_min_gap,
    collection_maxmin_gap,
    hml_compare,
    jml_compare,
    singleton_reduction,
    sl_compare,
)
from .comparative import (
    CheckReport,
    check_less_inconsistent,
    check_less_negative_inconsistent,
    check_more_decisive,
    check_more_strict_decisive,
    credal_subset,
    solve_convex_combination,
)
from .evaluation import (
    act_value,
    benefit_of_information,
    dominates,
    mix_acts,
    mix_lotteries,
    mix_menus,
    randomize,
    support_value,
)
from .rationalize import (
    AlphaPolicy,
    ConsistencyReport,
    RankEntry,
    ScenarioBand,
    check_consistency,
    rank_menus,
    rationalized_value,
    robust_strict,
    scenario_band,
    utility_grid_lotteries,
)
from .audit import (
    ALL_AXIOMS,
    REQUIRED_AXIOMS,
    Axiom,
    AuditConfig,
    AuditReport,
    AxiomResult,
    CrossAuditReport,
    audit,
    cross_audit,
    generate_corpus,
)
from .errors import (
    BadProbabilityError,
    BadWeightError,
    BadWeightsError,
    ConstantUtilityError,
    DimensionMismatchError,
    EmptyStateSpaceError,
    KindMismatchError,
    MenuLearnError,
    ParseError,
    UnknownNameError,
    ValidationError,
)
from .fileformat import Workspace, dump_document, dumps, load_document, load_path, loads

__version__ = "0.1.0"

__all__ = [
    "Act",
    "AlphaPolicy",
    "ALL_AXIOMS",
    "AuditConfig",
    "AuditReport",
    "Axiom",
    "AxiomResult",
    "BadProbabilityError",
    "BadWeightError",
    "BadWeightsError",
    "BmlComparator",
    "CheckReport",
    "Collection",
    "ConsistencyReport",
    "ConstantUtilityError",
    "CredalSet",
    "CrossAuditReport",
    "DimensionMismatchError",
    "EmptyStateSpaceError",
    "HmlComparator",
    "Instance",
    "InfoStructure",
    "JmlComparator",
    "KindMismatchError",
    "Lottery",
    "Menu",
    "MenuLearnError",
    "ParseError",
    "Posterior",
    "RankEntry",
    "REQUIRED_AXIOMS",
    "ScenarioBand",
    "SlComparator",
    "UnknownNameError",
    "ValidationError",
    "Value",
    "Verdict",
    "Workspace",
    "act_value",
    "alpha_maxmin_collection",
    "audit",
    "benefit_gap",
    "benefit_of_information",
    "bml_compare",
    "check_consistency",
    "check_less_inconsistent",
    "check_less_negative_inconsistent",
    "check_more_decisive",
    "check_more_strict_decisive",
    "collection_maxmin_gap",
    "combine_structures",
    "constant_act",
    "constant_menu",
    "credal_max_gap",
    "credal_min_gap",
    "credal_subset",
    "cross_audit",
    "dominates",
    "dump_document",
    "dumps",
    "generate_corpus",
    "hml_compare",
    "jml_compare",
    "load_document",
    "load_path",
    "loads",
    "mean_posterior",
    "mix_acts",
    "mix_lotteries",
    "mix_menus",
    "mix_structures",
    "randomize",
    "rank_menus",
    "rationalized_value",
    "robust_strict",
    "scenario_band",
    "singleton_reduction",
    "sl_compare",
    "solve_convex_combination",
    "support_value",
    "utility_grid_lotteries",
    "validate_instance",
]
