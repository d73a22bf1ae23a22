from .harness import (
    DEFAULT_N_MAX,
    DEFAULT_ORDER,
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    PositivityRow,
    build_side,
    crank_rank_extraction_check,
    positivity_scan,
    run_suite,
    sample_env,
    verify,
)
from .model import (
    ConstraintViolationError,
    Identity,
    ParamEnv,
    SuiteFailure,
    UnsupportedNError,
    VerificationReport,
)
from .registry import REGISTRY, all_ids, get_identity

__all__ = [
    "DEFAULT_N_MAX",
    "DEFAULT_ORDER",
    "DEFAULT_SAMPLES",
    "DEFAULT_SEED",
    "ConstraintViolationError",
    "Identity",
    "ParamEnv",
    "PositivityRow",
    "REGISTRY",
    "SuiteFailure",
    "UnsupportedNError",
    "VerificationReport",
    "all_ids",
    "build_side",
    "crank_rank_extraction_check",
    "get_identity",
    "positivity_scan",
    "run_suite",
    "sample_env",
    "verify",
]
