"""Stable payoff division and the objection/counter-objection oracle.

The closed-form side: only providers whose cheapest through-path fits the
budget take part; each of them receives an equal share of the grand margin,
shifted by how much dearer the cheapest enactment becomes without them.  The
oracle side verifies stability from first principles: a payoff vector is
stable when every objection any provider can raise against another admits a
counter-objection.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .exceptions import NoAffordablePath, TooManyPlayers
from .model import (
    INF,
    Cost,
    GameInstance,
    avoiding_shortest_path,
    player_path_cost,
    shortest_path,
)
from .simplex import OPTIMAL, solve_lp
from .values import enumerate_values

#: Env var overriding the objection-oracle player cap (default 8).
ORACLE_CAP_ENV = "CHOREOGAME_MAX_ORACLE_PLAYERS"
DEFAULT_ORACLE_CAP = 8


def oracle_cap() -> int:
    return int(os.environ.get(ORACLE_CAP_ENV, DEFAULT_ORACLE_CAP))


@dataclass(frozen=True)
class StableSolution:
    """The candidate stable payoff division and the quantities behind it."""

    active_set: frozenset[str]
    imputation: dict[str, Fraction]
    exists: bool
    threshold: Cost
    critical_set: frozenset[str]
    capped_avoiding_costs: dict[str, Cost]
    shortest_cost: Fraction
    grand_value: Fraction


@dataclass(frozen=True)
class ObjectionRecord:
    """An objection of ``proposer`` against ``target`` through ``coalition``."""

    proposer: str
    target: str
    coalition: frozenset[str]
    payoffs: dict[str, Fraction]


def _path_data(instance: GameInstance):
    sp = shortest_path(instance).cost
    ppc = {j: player_path_cost(instance, j) for j in instance.players}
    raw_avoiding = {
        j: avoiding_shortest_path(instance, [j]).cost for j in instance.players
    }
    return sp, ppc, raw_avoiding


def active_set(instance: GameInstance) -> frozenset[str]:
    """Providers whose cheapest through-path fits within the budget."""
    return frozenset(
        j for j in instance.players if player_path_cost(instance, j) <= instance.budget
    )


def _threshold_from(sp: Fraction, raw_avoiding: Mapping[str, Cost], ppc) -> tuple[Cost, frozenset[str]]:
    critical = frozenset(
        j for j, cost in raw_avoiding.items() if ppc[j] == sp and cost > sp
    )
    finite = [raw_avoiding[j] for j in critical if raw_avoiding[j] != INF]
    n_unavoidable = len(critical) - len(finite)
    if not finite:
        # No finitely-avoidable critical provider: stability starts as soon as
        # any enactment is affordable.
        return Fraction(sp), critical
    if n_unavoidable:
        # Avoiding costs mix infinities with finite values; no budget makes
        # the payoff formula non-negative for every provider at once.
        return INF, critical
    total = sum(finite, Fraction(0))
    return total - (len(critical) - 1) * Fraction(sp), critical


def stability_threshold(instance: GameInstance) -> tuple[Cost, frozenset[str]]:
    """Minimal budget granting a stable division, and the critical providers.

    A provider is critical when it sits on every cheapest enactment path and
    removing it strictly raises the cheapest cost.  The threshold adds up the
    critical providers' avoiding costs and discounts the overlap.
    """
    sp, ppc, raw_avoiding = _path_data(instance)
    return _threshold_from(sp, raw_avoiding, ppc)


def stable_imputation(instance: GameInstance) -> StableSolution:
    """The unique stable candidate division for this instance.

    Inactive providers get zero.  Active provider j gets
    ``grand/|A| + (c_j - mean(c))`` where c_j is j's avoiding cost, with an
    unavoidable provider's infinite cost read as the budget itself.  The
    division exists when every payoff is non-negative.
    """
    p = instance.budget
    sp, ppc, raw_avoiding = _path_data(instance)
    active = frozenset(j for j in instance.players if ppc[j] <= p)
    if not active:
        raise NoAffordablePath(
            f"no provider has a through-path within budget {p}"
        )
    capped: dict[str, Cost] = {
        j: (Fraction(p) if cost == INF else cost) for j, cost in raw_avoiding.items()
    }
    grand = Fraction(p) - Fraction(sp)
    share = Fraction(grand, len(active))
    mean_avoiding = Fraction(
        sum((Fraction(capped[j]) for j in active), Fraction(0)), len(active)
    )
    imputation = {j: Fraction(0) for j in instance.players}
    for j in active:
        imputation[j] = share + Fraction(capped[j]) - mean_avoiding
    exists = all(imputation[j] >= 0 for j in active)
    threshold, critical = _threshold_from(sp, raw_avoiding, ppc)
    return StableSolution(
        active_set=active,
        imputation=imputation,
        exists=exists,
        threshold=threshold,
        critical_set=critical,
        capped_avoiding_costs=capped,
        shortest_cost=Fraction(sp),
        grand_value=grand,
    )


# -- objection oracle --------------------------------------------------------


def _normalise(instance: GameInstance, payoffs: Mapping[str, Fraction]) -> dict[str, Fraction]:
    players = instance.players
    unknown = set(payoffs) - set(players)
    if unknown:
        raise ValueError(f"payoffs for unknown players: {sorted(unknown)}")
    return {p: Fraction(payoffs.get(p, 0)) for p in players}


def _oracle_table(instance: GameInstance, cap: int | None):
    limit = oracle_cap() if cap is None else cap
    if len(instance.players) > limit:
        raise TooManyPlayers(
            f"{len(instance.players)} players exceeds the oracle cap of {limit}"
        )
    return enumerate_values(instance, cap=limit)


def _subsets_with(players, include: str, exclude: str):
    rest = [p for p in players if p not in (include, exclude)]
    for size in range(len(rest) + 1):
        for combo in itertools.combinations(rest, size):
            yield frozenset((include,) + combo)


def find_objection(
    instance: GameInstance,
    payoffs: Mapping[str, Fraction],
    proposer: str,
    target: str,
    cap: int | None = None,
) -> ObjectionRecord | None:
    """First coalition giving ``proposer`` a strict gain at nobody's expense.

    Coalitions are scanned by cardinality then lexicographic order; the whole
    surplus goes to the proposer, which is the canonical (deterministic)
    split.  Returns None when no coalition has a surplus.
    """
    if proposer == target:
        raise ValueError("proposer and target must differ")
    x = _normalise(instance, payoffs)
    table = _oracle_table(instance, cap)
    candidates = sorted(
        _subsets_with(instance.players, proposer, target),
        key=lambda c: (len(c), tuple(sorted(c))),
    )
    for coalition in candidates:
        surplus = table[coalition].value - sum((x[k] for k in coalition), Fraction(0))
        if surplus > 0:
            y = {k: x[k] for k in sorted(coalition)}
            y[proposer] += surplus
            return ObjectionRecord(
                proposer=proposer, target=target, coalition=coalition, payoffs=y
            )
    return None


def has_counter_objection(
    instance: GameInstance,
    payoffs: Mapping[str, Fraction],
    objection: ObjectionRecord,
    cap: int | None = None,
) -> bool:
    """Whether the target can neutralise this particular objection.

    The target needs a coalition without the proposer whose value covers the
    floors: objection members keep their promised amounts, everyone else
    keeps their current payoff.
    """
    x = _normalise(instance, payoffs)
    table = _oracle_table(instance, cap)
    for counter in _subsets_with(instance.players, objection.target, objection.proposer):
        floors = Fraction(0)
        for k in counter:
            floors += objection.payoffs[k] if k in objection.coalition else x[k]
        if table[counter].value >= floors:
            return True
    return False


def find_justified_objection(
    instance: GameInstance,
    payoffs: Mapping[str, Fraction],
    cap: int | None = None,
) -> ObjectionRecord | None:
    """Search for an objection that no counter-objection can neutralise.

    For a fixed proposer/target pair and coalition O with surplus, the
    proposer may spread the surplus over O any way that strictly benefits
    them; the objection is justified when some spread defeats every counter
    coalition at once.  That existence question is a small exact LP over the
    surplus shares, solved per coalition.  Returns the first justified
    objection in scan order, or None when the vector is stable.
    """
    x = _normalise(instance, payoffs)
    table = _oracle_table(instance, cap)
    players = instance.players
    excess = {
        coalition: value.value - sum((x[k] for k in coalition), Fraction(0))
        for coalition, value in table.items()
    }
    for proposer in players:
        for target in players:
            if proposer == target:
                continue
            counters = [
                q
                for q in _subsets_with(players, target, proposer)
                if excess[q] >= 0
            ]
            candidates = sorted(
                _subsets_with(players, proposer, target),
                key=lambda c: (len(c), tuple(sorted(c))),
            )
            for coalition in candidates:
                if excess[coalition] <= 0:
                    continue
                spread = _defeating_spread(
                    coalition, excess[coalition], proposer, counters, excess
                )
                if spread is not None:
                    y = {k: x[k] + spread[k] for k in sorted(coalition)}
                    return ObjectionRecord(
                        proposer=proposer,
                        target=target,
                        coalition=coalition,
                        payoffs=y,
                    )
    return None


def _defeating_spread(
    coalition: frozenset[str],
    surplus: Fraction,
    proposer: str,
    counters: list[frozenset[str]],
    excess: Mapping[frozenset[str], Fraction],
) -> dict[str, Fraction] | None:
    """A surplus split over the coalition beating every counter, if any.

    Variables are the per-member surplus shares d_k plus a uniform strictness
    margin t; the split defeats counter Q when the shares inside Q exceed
    Q's excess.  Counters with negative excess are beaten by any d >= 0 and
    are dropped up front.
    """
    members = sorted(coalition)
    idx = {k: i for i, k in enumerate(members)}
    n = len(members) + 1  # shares + t
    t_col = len(members)
    a_ge: list[list[Fraction]] = []
    b_ge: list[Fraction] = []
    # shares sum to at most the surplus
    a_ge.append([Fraction(-1)] * len(members) + [Fraction(0)])
    b_ge.append(-surplus)
    # the proposer must strictly gain
    row = [Fraction(0)] * n
    row[idx[proposer]] = Fraction(1)
    row[t_col] = Fraction(-1)
    a_ge.append(row)
    b_ge.append(Fraction(0))
    # strictly out-bid every counter coalition
    for q in counters:
        row = [Fraction(0)] * n
        for k in q & coalition:
            row[idx[k]] = Fraction(1)
        row[t_col] = Fraction(-1)
        a_ge.append(row)
        b_ge.append(excess[q])
    # keep t bounded so the LP has a finite optimum
    row = [Fraction(0)] * n
    row[t_col] = Fraction(-1)
    a_ge.append(row)
    b_ge.append(Fraction(-1))

    c = [Fraction(0)] * len(members) + [Fraction(-1)]  # maximise t
    result = solve_lp(c, a_ge, b_ge)
    if result.status != OPTIMAL or result.value >= 0:
        return None
    return {k: result.x[idx[k]] for k in members}


def verify_bargaining_membership(
    instance: GameInstance,
    payoffs: Mapping[str, Fraction],
    cap: int | None = None,
) -> bool:
    """Whether every possible objection to this vector can be countered."""
    return find_justified_objection(instance, payoffs, cap=cap) is None
