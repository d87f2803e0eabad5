"""Group-based public-key protocols over polycyclic and integer-matrix
platforms, with desk-scale attack oracles and growth measurements."""

from . import analysis, attacks, cayley, protocols
from .enumerated import EnumeratedGroup
from .errors import (
    CollectionBudgetError,
    EnumerationError,
    GroupMismatchError,
    NotFoundError,
    PolycsError,
    PresentationError,
    RetryExhaustedError,
    StateBudgetError,
    WireFormatError,
)
from .group import (
    Element,
    Group,
    SamplerConfig,
    comm,
    commutes_with_all,
    conj,
    inv,
    mul,
    random_reduced_word,
    sample,
    sample_subgroup,
)
from .matrix import MatGroup, char_poly, determinant, mat_inverse, matrix_power
from .pc import (
    CATALOG_NAMES,
    Enumeration,
    PcGroup,
    catalog,
    direct_product,
    enumerate_group,
)
from .platform import (
    BUILTIN_PLATFORMS,
    PlatformSpec,
    d4_platform,
    d4xd4_platform,
    format_platform,
    matrix_platform,
    parse_platform,
)
from .protocols import REJECT, Reject
from .words import Word, format_word, parse_word

__version__ = "0.1.0"

__all__ = [
    "analysis",
    "attacks",
    "cayley",
    "protocols",
    "EnumeratedGroup",
    "CollectionBudgetError",
    "EnumerationError",
    "GroupMismatchError",
    "NotFoundError",
    "PolycsError",
    "PresentationError",
    "RetryExhaustedError",
    "StateBudgetError",
    "WireFormatError",
    "Element",
    "Group",
    "SamplerConfig",
    "comm",
    "commutes_with_all",
    "conj",
    "inv",
    "mul",
    "random_reduced_word",
    "sample",
    "sample_subgroup",
    "MatGroup",
    "char_poly",
    "determinant",
    "mat_inverse",
    "matrix_power",
    "CATALOG_NAMES",
    "Enumeration",
    "PcGroup",
    "catalog",
    "direct_product",
    "enumerate_group",
    "BUILTIN_PLATFORMS",
    "PlatformSpec",
    "d4_platform",
    "d4xd4_platform",
    "format_platform",
    "matrix_platform",
    "parse_platform",
    "REJECT",
    "Reject",
    "Word",
    "format_word",
    "parse_word",
    "__version__",
]
