"""Finite-model laboratory for implication zroupoids.

The package generates the sixty Bol-Moufang-shaped identities over the
signature (->, 0), evaluates them on finite algebras, enumerates small
symmetric models by constraint propagation, and replays the bundled
reference classification of the resulting varieties.
"""

from .algebra import (
    ClassReport,
    FiniteZroupoid,
    LemmaSuiteReport,
    SatisfactionResult,
    classify,
    eval_term,
    lemma_suite,
    satisfies,
)
from .catalog import (
    AXIOM_NAMES,
    IDENTITY_TAGS,
    axiom,
    bol_moufang_catalog,
    catalog_by_label,
    catalog_entry,
)
from .enumerator import (
    DEFAULT_SIZE_CAP,
    SearchSpec,
    canonical_table,
    canonicalize,
    enumerate_models,
    naive_models,
)
from .terms import (
    Arrow,
    Identity,
    Term,
    TermSyntaxError,
    Var,
    ZERO,
    Zero,
    identity,
    meet,
    parse_term,
    prime,
    print_term,
)
from .varieties import (
    ComparisonReport,
    PosetReport,
    VarietyDescriptor,
    VerifyReport,
    compare,
    distinguish,
    models_of,
    poset,
    variety,
    verify_paper,
)

__version__ = "0.1.0"

__all__ = [
    "AXIOM_NAMES",
    "Arrow",
    "ClassReport",
    "ComparisonReport",
    "DEFAULT_SIZE_CAP",
    "FiniteZroupoid",
    "IDENTITY_TAGS",
    "Identity",
    "LemmaSuiteReport",
    "PosetReport",
    "SatisfactionResult",
    "SearchSpec",
    "Term",
    "TermSyntaxError",
    "Var",
    "VarietyDescriptor",
    "VerifyReport",
    "ZERO",
    "Zero",
    "axiom",
    "bol_moufang_catalog",
    "canonical_table",
    "canonicalize",
    "catalog_by_label",
    "catalog_entry",
    "classify",
    "compare",
    "distinguish",
    "enumerate_models",
    "eval_term",
    "identity",
    "lemma_suite",
    "meet",
    "models_of",
    "naive_models",
    "parse_term",
    "poset",
    "prime",
    "print_term",
    "satisfies",
    "variety",
    "verify_paper",
]
