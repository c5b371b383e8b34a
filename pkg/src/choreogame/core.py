"""Core membership and core emptiness, decided exactly.

The core is the set of efficient payoff vectors no coalition can improve on:
sum(x) equals the grand-coalition value and every coalition receives at least
its standalone value.  Emptiness is a rational-arithmetic linear feasibility
question; no floating point is involved anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .model import GameInstance
from .simplex import lexicographic_minimum
from .values import CoalitionValue, coalitions_in_order, enumerate_values


@dataclass(frozen=True)
class Imputation:
    """A per-player payoff vector."""

    payoffs: Mapping[str, Fraction]

    def total(self) -> Fraction:
        return sum(self.payoffs.values(), Fraction(0))

    def is_efficient(self, grand_value: Fraction) -> bool:
        return self.total() == grand_value

    def is_individually_rational(
        self, table: Mapping[frozenset[str], CoalitionValue]
    ) -> bool:
        return all(
            self.payoffs[p] >= table[frozenset([p])].value for p in self.payoffs
        )


@dataclass(frozen=True)
class CoreReport:
    """Outcome of a core query.

    ``empty`` is None when the query checked one imputation and found it
    violated (a single violation does not decide emptiness either way).
    """

    empty: bool | None
    witness: dict[str, Fraction] | None = None
    violated_constraint: frozenset[str] | None = None


def _as_payoffs(instance: GameInstance, payoffs: Mapping[str, Fraction]) -> dict[str, Fraction]:
    players = instance.players
    unknown = set(payoffs) - set(players)
    if unknown:
        raise ValueError(f"payoffs for unknown players: {sorted(unknown)}")
    return {p: Fraction(payoffs.get(p, 0)) for p in players}


def in_core(
    instance: GameInstance,
    payoffs: Mapping[str, Fraction],
    cap: int | None = None,
) -> CoreReport:
    """Check one payoff vector against every coalition constraint.

    Reports the first violated coalition in (cardinality, lexicographic)
    order; an efficiency violation is reported as the grand coalition.
    """
    x = _as_payoffs(instance, payoffs)
    table = enumerate_values(instance, cap=cap)
    grand = frozenset(instance.players)
    if sum(x.values(), Fraction(0)) != table[grand].value:
        return CoreReport(empty=None, violated_constraint=grand)
    for coalition in coalitions_in_order(instance.players):
        if coalition == grand:
            continue
        share = sum((x[p] for p in coalition), Fraction(0))
        if share < table[coalition].value:
            return CoreReport(empty=None, violated_constraint=coalition)
    return CoreReport(empty=False, witness=x)


def core_constraint_rows(
    instance: GameInstance, cap: int | None = None
) -> tuple[list[list[Fraction]], list[Fraction], Fraction]:
    """Inequality rows (coalition indicator, value) plus the efficiency total.

    Zero-value coalition constraints are implied by x >= 0 and are dropped.
    """
    players = instance.players
    index = {p: i for i, p in enumerate(players)}
    table = enumerate_values(instance, cap=cap)
    grand = frozenset(players)
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for coalition in coalitions_in_order(players):
        if coalition == grand:
            continue
        value = table[coalition].value
        if value <= 0:
            continue
        row = [Fraction(0)] * len(players)
        for p in coalition:
            row[index[p]] = Fraction(1)
        rows.append(row)
        rhs.append(value)
    return rows, rhs, table[grand].value


def core_empty(instance: GameInstance, cap: int | None = None) -> CoreReport:
    """Exact emptiness decision with a deterministic witness when non-empty.

    The witness is the lexicographically smallest core vector under the
    sorted player-id ordering.
    """
    players = instance.players
    rows, rhs, grand_value = core_constraint_rows(instance, cap=cap)
    ones = [Fraction(1)] * len(players)
    witness = lexicographic_minimum(
        a_ge=rows,
        b_ge=rhs,
        a_eq=[ones],
        b_eq=[grand_value],
        n=len(players),
    )
    if witness is None:
        return CoreReport(empty=True)
    return CoreReport(empty=False, witness=dict(zip(players, witness)))
