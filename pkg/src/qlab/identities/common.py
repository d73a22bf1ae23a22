"""Shared helpers for identity side builders and constraint predicates."""

from __future__ import annotations

from typing import Callable, Optional

from ..rational import ONE, Rat
from ..series import QSeries
from .model import ParamEnv


def truncating_sum(
    order: int,
    start: int,
    min_order: Callable[[int], int],
    term: Callable[[int], QSeries],
) -> QSeries:
    """Sum term(n) for n = start, start+1, ... while min_order(n) <= order.

    min_order must be a monotone lower bound on the q-order of the n-th
    term; it decides where the truncated sum may stop.
    """
    total = QSeries.zero(order)
    n = start
    while min_order(n) <= order:
        total = total + term(n)
        n += 1
    return total


# -- constraint rule combinators -------------------------------------------
#
# A rule maps an environment to a pole description or None; a constraint
# is the first violation among its rules.


Rule = Callable[[ParamEnv], Optional[str]]


def rules(*parts: Rule) -> Callable[[ParamEnv], Optional[str]]:
    def constraint(env: ParamEnv) -> Optional[str]:
        for part in parts:
            msg = part(env)
            if msg:
                return msg
        return None

    return constraint


def nonzero(name: str, why: str) -> Rule:
    def rule(env: ParamEnv) -> Optional[str]:
        if env.get(name) == 0:
            return f"{name} = 0: {why}"
        return None

    return rule


def not_one(name: str, why: str) -> Rule:
    def rule(env: ParamEnv) -> Optional[str]:
        if env.get(name) == 1:
            return f"{name} = 1: {why}"
        return None

    return rule


def not_value(name: str, value: Rat, why: str) -> Rule:
    def rule(env: ParamEnv) -> Optional[str]:
        if env.get(name) == value:
            return f"{name} = {value}: {why}"
        return None

    return rule


def distinct(first: str, second: str, why: str) -> Rule:
    def rule(env: ParamEnv) -> Optional[str]:
        if env.get(first) == env.get(second):
            return f"{first} = {second}: {why}"
        return None

    return rule


def product_not_one(names: tuple, why: str) -> Rule:
    def rule(env: ParamEnv) -> Optional[str]:
        prod = ONE
        for name in names:
            prod = prod * env.get(name)
        if prod == 1:
            return f"{'*'.join(names)} = 1: {why}"
        return None

    return rule


def expr_not_one(label: str, expr: Callable[[ParamEnv], Rat], why: str) -> Rule:
    def rule(env: ParamEnv) -> Optional[str]:
        if expr(env) == 1:
            return f"{label} = 1: {why}"
        return None

    return rule


# -- sampling-domain combinators --------------------------------------------


def inside_unit(*names: str) -> Callable[[ParamEnv], bool]:
    def ok(env: ParamEnv) -> bool:
        return all(abs(env.get(name)) < 1 for name in names)

    return ok


def all_nonzero(*names: str) -> Callable[[ParamEnv], bool]:
    def ok(env: ParamEnv) -> bool:
        return all(env.get(name) != 0 for name in names)

    return ok


def domain_all(*predicates: Callable[[ParamEnv], bool]) -> Callable[[ParamEnv], bool]:
    def ok(env: ParamEnv) -> bool:
        return all(p(env) for p in predicates)

    return ok
