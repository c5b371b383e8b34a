"""Alliance detection from announced prices.

Providers in an alliance split the stable payoff; a provider's share shows up
as the total markup (announced price minus operating cost) across its
services.  Detection therefore compares per-provider margins against the
stable division: a match for every provider, within tolerance, flags an
alliance.  Competitive (at-cost) pricing yields zero margins and no flag.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exceptions import MissingAnnouncedPrices, NoAffordablePath, NoStableImputation
from .model import GameInstance
from .bargaining import StableSolution, stable_imputation


@dataclass(frozen=True)
class PlayerMarginCheck:
    margin: Fraction
    expected: Fraction
    matches: bool


@dataclass(frozen=True)
class DetectionReport:
    alliance: bool
    per_player: dict[str, PlayerMarginCheck]
    tolerance: Fraction
    solution: StableSolution


def player_margin(instance: GameInstance, player: str) -> Fraction:
    """Total announced markup over operating cost across a player's services."""
    if instance.announced_prices is None:
        raise MissingAnnouncedPrices("instance carries no announced prices")
    if player not in instance.players:
        raise ValueError(f"unknown player: {player!r}")
    total = Fraction(0)
    for svc in instance.graph.services:
        if svc.owner == player:
            total += instance.announced_prices[svc.id] - svc.cost
    return total


def detect(instance: GameInstance, tolerance: Fraction | int = 0) -> DetectionReport:
    """Decide whether announced prices encode the stable payoff division."""
    if instance.announced_prices is None:
        raise MissingAnnouncedPrices("instance carries no announced prices")
    tolerance = Fraction(tolerance)
    if tolerance < 0:
        raise ValueError("tolerance must be non-negative")
    try:
        solution = stable_imputation(instance)
    except NoAffordablePath as exc:
        raise NoStableImputation(str(exc)) from exc
    if not solution.exists:
        raise NoStableImputation(
            "budget is below the stability threshold; no stable division exists"
        )
    per_player: dict[str, PlayerMarginCheck] = {}
    alliance = True
    for player in instance.players:
        margin = player_margin(instance, player)
        expected = solution.imputation[player]
        matches = abs(margin - expected) <= tolerance
        per_player[player] = PlayerMarginCheck(margin, expected, matches)
        alliance = alliance and matches
    return DetectionReport(
        alliance=alliance,
        per_player=per_player,
        tolerance=tolerance,
        solution=solution,
    )
