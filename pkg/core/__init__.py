from loguru import logger

from .errors import (
    OmegaLyndonError,
    InvalidInput,
    ParseError,
    NotLyndon,
    ConstructionFailed,
    CapExceeded,
    CapTooSmall,
    TooLarge,
    UniquenessViolation,
)
from .config import Settings
from .words import (
    Alphabet,
    EventuallyPeriodicWord,
    normalize,
    omega,
    concat,
    primitive_root,
    longest_border,
    rotations,
    distinct_suffixes,
    factors_of_length,
    parse_word,
    format_word,
    infer_alphabet,
)
from .orders import (
    Comparison,
    AlphabetOrder,
    PositionalOrderScheme,
    OmegaOrder,
    PositionalOrder,
    constant_scheme,
    alternating_scheme,
    compare_ev_periodic,
    omega_compare_finite,
    parse_scheme,
    format_scheme,
    validate_star,
)
from .lyndon import (
    LyndonVerdict,
    L1Kind,
    L1Classification,
    is_omega_lyndon_finite,
    is_omega_lyndon_finite_splits,
    is_omega_lyndon_infinite,
    omega_lyndon_prefixes,
    classify_l1,
    extend_to_infinite,
    extend_finite,
    minimal_factor,
)
from .factorize import (
    FiniteShape,
    InfiniteShape,
    FactorizationCertificate,
    factorize_finite,
    factorize_ev_periodic,
    validate_factorization,
    detect_boundaries,
)

# Silent as a library; entry points opt in through core.log.configure_logging.
logger.disable("core")

__all__ = [
    "OmegaLyndonError",
    "InvalidInput",
    "ParseError",
    "NotLyndon",
    "ConstructionFailed",
    "CapExceeded",
    "CapTooSmall",
    "TooLarge",
    "UniquenessViolation",
    "Settings",
    "Alphabet",
    "EventuallyPeriodicWord",
    "normalize",
    "omega",
    "concat",
    "primitive_root",
    "longest_border",
    "rotations",
    "distinct_suffixes",
    "factors_of_length",
    "parse_word",
    "format_word",
    "infer_alphabet",
    "Comparison",
    "AlphabetOrder",
    "PositionalOrderScheme",
    "OmegaOrder",
    "PositionalOrder",
    "constant_scheme",
    "alternating_scheme",
    "compare_ev_periodic",
    "omega_compare_finite",
    "parse_scheme",
    "format_scheme",
    "validate_star",
    "LyndonVerdict",
    "L1Kind",
    "L1Classification",
    "is_omega_lyndon_finite",
    "is_omega_lyndon_finite_splits",
    "is_omega_lyndon_infinite",
    "omega_lyndon_prefixes",
    "classify_l1",
    "extend_to_infinite",
    "extend_finite",
    "minimal_factor",
    "FiniteShape",
    "InfiniteShape",
    "FactorizationCertificate",
    "factorize_finite",
    "factorize_ev_periodic",
    "validate_factorization",
    "detect_boundaries",
]
