"""Coalition values for the enactment pricing game.

A coalition wins when it can offer an internal path of at least two services
no dearer than both the user budget and the cheapest path outside the
coalition; its profit is that cap minus its own path cost.  Everything else
is worth zero, and the report says why.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Iterator

from .exceptions import TooManyPlayers
from .model import (
    INF,
    Coalition,
    GameInstance,
    avoiding_shortest_path,
    check_players,
    offerable_path,
    restricted_shortest_path,
    shortest_path,
)

#: Env var overriding the exact-enumeration player cap (default 16).
VALUE_CAP_ENV = "CHOREOGAME_MAX_LP_PLAYERS"
DEFAULT_VALUE_CAP = 16


def value_cap() -> int:
    return int(os.environ.get(VALUE_CAP_ENV, DEFAULT_VALUE_CAP))


class Reason(str, Enum):
    """Why a coalition's value is what it is."""

    NO_INTERNAL_PATH = "NoInternalPath"
    MONOPOLY_PATH = "MonopolyPath"
    BEATEN_OUTSIDE = "BeatenOutside"
    OVER_BUDGET = "OverBudget"
    WINS = "Wins"


@dataclass(frozen=True)
class CoalitionValue:
    value: Fraction
    winning_path: tuple[str, ...] | None
    reason: Reason


def coalition_value(
    instance: GameInstance, coalition: Iterable[str] | Coalition
) -> CoalitionValue:
    """Exact value of one coalition, with the disqualifying reason if zero."""
    members = check_players(instance, coalition)
    zero = Fraction(0)
    if not members:
        return CoalitionValue(zero, None, Reason.NO_INTERNAL_PATH)

    internal = restricted_shortest_path(instance, members)
    if not internal.exists:
        return CoalitionValue(zero, None, Reason.NO_INTERNAL_PATH)

    offer = offerable_path(instance, members)
    if not offer.exists:
        return CoalitionValue(zero, None, Reason.MONOPOLY_PATH)

    outside = avoiding_shortest_path(instance, members).cost
    if outside < offer.cost:
        return CoalitionValue(zero, None, Reason.BEATEN_OUTSIDE)
    if instance.budget < offer.cost:
        return CoalitionValue(zero, None, Reason.OVER_BUDGET)

    margin = min(instance.budget, outside) - offer.cost
    if margin == 0:
        # Exact tie: the market (or the budget) matches the offer, no profit.
        reason = Reason.BEATEN_OUTSIDE if outside == offer.cost else Reason.OVER_BUDGET
        return CoalitionValue(zero, None, reason)
    return CoalitionValue(Fraction(margin), offer.path, Reason.WINS)


def grand_coalition_value(instance: GameInstance) -> Fraction:
    """Budget minus the cheapest enactment cost, floored at zero."""
    sp = shortest_path(instance).cost
    if instance.budget < sp:
        return Fraction(0)
    return Fraction(instance.budget - sp)


def coalitions_in_order(players: Iterable[str]) -> Iterator[frozenset[str]]:
    """All non-empty coalitions, by cardinality then lexicographic members."""
    ordered = sorted(players)
    for size in range(1, len(ordered) + 1):
        for combo in itertools.combinations(ordered, size):
            yield frozenset(combo)


def enumerate_values(
    instance: GameInstance, cap: int | None = None
) -> dict[frozenset[str], CoalitionValue]:
    """The full characteristic-function table over all 2^n coalitions.

    Raises TooManyPlayers above the enumeration cap.  The empty coalition is
    included with value zero; iteration order is cardinality, then
    lexicographic, so downstream reports are deterministic.
    """
    players = instance.players
    limit = value_cap() if cap is None else cap
    if len(players) > limit:
        raise TooManyPlayers(
            f"{len(players)} players exceeds the enumeration cap of {limit}"
        )
    table: dict[frozenset[str], CoalitionValue] = {
        frozenset(): CoalitionValue(Fraction(0), None, Reason.NO_INTERNAL_PATH)
    }
    for coalition in coalitions_in_order(players):
        table[coalition] = coalition_value(instance, coalition)
    return table
