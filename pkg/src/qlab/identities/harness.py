"""Verification harness: single checks, the sampled suite, and the scans.

Sampling draws rational parameter values with numerator and denominator
bounded (|num| <= 9, 1 <= den <= 9 by default), rejection-resampled
until the identity's pole constraint and convergence domain both accept
the environment, so a seeded run is fully deterministic.  Identities
with no free parameters are exercised once per suite run: every sampled
environment would be the same empty one.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from ..rational import Rat, rat
from ..series import QSeries
from .model import (
    FINITE,
    ConstraintViolationError,
    Identity,
    ParamEnv,
    SuiteFailure,
    UnsupportedNError,
    VerificationReport,
)
from .moments import moment_difference_finite
from .registry import REGISTRY, get_identity

DEFAULT_ORDER = 40
DEFAULT_SAMPLES = 5
DEFAULT_N_MAX = 6
DEFAULT_SEED = 0


def build_side(
    identity: Identity, side: str, env: ParamEnv, n_value: Optional[int], order: int
) -> QSeries:
    """One stated side to q^order, after constraint and cutoff validation."""
    violation = identity.constraint(env)
    if violation is not None:
        raise ConstraintViolationError(identity.id, violation)
    if identity.kind == FINITE:
        if n_value is None or n_value < 1:
            raise UnsupportedNError(f"{identity.id} needs a cutoff N >= 1, got {n_value}")
    else:
        n_value = None
    return identity.side(side)(env, n_value, order)


def verify(
    identity: Identity, env: ParamEnv, n_value: Optional[int], order: int
) -> VerificationReport:
    """Compare every side against the first, coefficient by coefficient."""
    started = time.perf_counter()
    ref_name = identity.sides[0][0]
    reference = build_side(identity, ref_name, env, n_value, order)
    if identity.kind != FINITE:
        n_value = None
    for side_name, _ in identity.sides[1:]:
        other = build_side(identity, side_name, env, n_value, order)
        mismatch = reference.first_difference(other)
        if mismatch is not None:
            return VerificationReport(
                identity_id=identity.id,
                env=env,
                n_value=n_value,
                order=order,
                passed=False,
                first_mismatch_order=mismatch,
                lhs_coeff=reference[mismatch],
                rhs_coeff=other[mismatch],
                mismatch_side=side_name,
                elapsed_ms=int((time.perf_counter() - started) * 1000),
            )
    return VerificationReport(
        identity_id=identity.id,
        env=env,
        n_value=n_value,
        order=order,
        passed=True,
        elapsed_ms=int((time.perf_counter() - started) * 1000),
    )


def sample_env(
    rng: random.Random,
    identity: Identity,
    max_numerator: int = 9,
    max_denominator: int = 9,
    max_attempts: int = 10_000,
) -> ParamEnv:
    """Rejection-sample an admissible environment for one identity."""
    for _ in range(max_attempts):
        values = {}
        for name in identity.params:
            num = rng.randint(-max_numerator, max_numerator)
            den = rng.randint(1, max_denominator)
            values[name] = rat(num, den)
        env = ParamEnv(**values)
        if identity.constraint(env) is None and identity.domain(env):
            return env
    raise RuntimeError(f"could not sample an admissible environment for {identity.id}")


def applicable_n_values(identity: Identity, n_max: int) -> Sequence[Optional[int]]:
    if identity.kind == FINITE:
        return list(range(1, n_max + 1))
    return [None]


def run_suite(
    seed: int = DEFAULT_SEED,
    samples_per_identity: int = DEFAULT_SAMPLES,
    order: int = DEFAULT_ORDER,
    n_max: int = DEFAULT_N_MAX,
    ids: Optional[Iterable[str]] = None,
    n_values: Optional[Sequence[int]] = None,
    strict: bool = False,
    progress=None,
) -> List[VerificationReport]:
    """Verify every (identity, sampled env, applicable N) combination.

    Deterministic for a fixed seed; scan-only entries are skipped.  With
    strict=True a SuiteFailure carrying all reports is raised if any
    verification fails.
    """
    if ids is None:
        selected = [i for i in REGISTRY.values() if not i.scan_only]
    else:
        selected = [get_identity(i) for i in ids]
    reports: List[VerificationReport] = []
    rng = random.Random(seed)
    for identity in sorted(selected, key=lambda i: i.id):
        if samples_per_identity < 1:
            continue
        if identity.params:
            envs: List[ParamEnv] = []
            seen = set()
            guard = 0
            while len(envs) < samples_per_identity:
                env = sample_env(rng, identity)
                key = env.sort_key()
                guard += 1
                if key in seen:
                    if guard > 1000 * samples_per_identity:
                        raise RuntimeError(
                            f"could not draw {samples_per_identity} distinct "
                            f"environments for {identity.id}"
                        )
                    continue
                seen.add(key)
                envs.append(env)
        else:
            envs = [ParamEnv()]
        if identity.kind == FINITE and n_values is not None:
            cutoffs: Sequence[Optional[int]] = list(n_values)
        else:
            cutoffs = applicable_n_values(identity, n_max)
        for env in envs:
            for n_value in cutoffs:
                report = verify(identity, env, n_value, order)
                reports.append(report)
                if progress is not None:
                    progress(report)
    reports.sort(key=lambda r: (r.identity_id, r.env.sort_key(), r.n_value or 0))
    if strict and any(not r.passed for r in reports):
        raise SuiteFailure(reports)
    return reports


def crank_rank_extraction_check(n_value: int, order: int) -> List[VerificationReport]:
    """Run the bivariate-extraction identities (crank then rank) at one cutoff."""
    if n_value < 1:
        raise UnsupportedNError("the extraction check needs N >= 1")
    env = ParamEnv()
    return [
        verify(get_identity("R33"), env, n_value, order),
        verify(get_identity("R34"), env, n_value, order),
    ]


@dataclass(frozen=True)
class PositivityRow:
    n_value: int
    order: int
    coeff: Rat
    non_negative: bool


def positivity_scan(n_max: int, order: int) -> List[PositivityRow]:
    """Coefficients of the crank-minus-rank moment difference for
    N = 1..n_max up to q^order, each flagged non-negative or negative.

    The scan reports; it does not assert (the non-negativity is an
    observation, not a theorem).
    """
    if n_max < 1:
        raise ValueError("the scan needs N >= 1")
    rows: List[PositivityRow] = []
    for n_value in range(1, n_max + 1):
        series = moment_difference_finite(n_value, order)
        for k in range(1, order + 1):
            coeff = series[k]
            rows.append(PositivityRow(n_value, k, coeff, coeff >= 0))
    return rows
