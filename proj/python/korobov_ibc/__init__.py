"""L2-approximation in weighted Korobov spaces: exact information complexity,
minimal errors and tractability verdicts."""

from ._korobov import (
    DomainError,
    MissingMetadataError,
    NotInSpaceError,
    OutOfRangeError,
    PreconditionError,
    ResourceError,
    Space,
    Weights,
    brute_force_count,
    classify,
    count,
    info_complexity_via_errors,
    k_epsilon,
    minimal_errors,
    qpt_criterion,
    qpt_exponent,
    r,
    spt_exponent,
    top_eigenvalues,
    trace,
    truncate,
    zeta,
)

__all__ = [name for name in dir() if not name.startswith("_")]
