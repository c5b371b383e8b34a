"""Truthful lowest-cost routing payments and the stability cross-check.

Treating every vertex as a self-interested agent reporting its cost, the
classic pivotal payment for an on-path vertex is the cheapest cost without it
minus the cheapest cost when it is free.  The total of those payments equals
the minimal budget at which the per-vertex pricing game admits a stable
division, which this module checks by computing both sides independently.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exceptions import UnavoidableVertex
from .model import (
    INF,
    ChoreographyGraph,
    Cost,
    GameInstance,
    ServiceVertex,
    vertex_avoiding_path,
    zeroed_cost_path,
    _best_path,
)
from .bargaining import stability_threshold


@dataclass(frozen=True)
class VcgReport:
    chosen_path: tuple[str, ...]
    payments: dict[str, Fraction]
    total_payment: Fraction


@dataclass(frozen=True)
class EquivalenceReport:
    vcg_total: Fraction
    minimal_stable_price: Cost
    equal: bool


def vcg_payments(graph: ChoreographyGraph) -> VcgReport:
    """Pivotal payments for the cheapest path; zero off the path.

    Raises UnavoidableVertex when an on-path vertex has no avoiding path (the
    pivotal payment would be infinite).
    """
    chosen = _best_path(graph)
    if not chosen.exists:
        raise UnavoidableVertex("graph has no source-to-sink path")
    payments: dict[str, Fraction] = {vid: Fraction(0) for vid in graph.service_ids}
    total = Fraction(0)
    for vid in chosen.path:
        without = vertex_avoiding_path(graph, vid).cost
        if without == INF:
            raise UnavoidableVertex(
                f"vertex {vid!r} lies on every path; its payment is unbounded"
            )
        free = zeroed_cost_path(graph, vid).cost
        payment = Fraction(without) - Fraction(free)
        payments[vid] = payment
        total += payment
    return VcgReport(chosen_path=chosen.path, payments=payments, total_payment=total)


def per_vertex_game(graph: ChoreographyGraph, budget: Fraction | int = 0) -> GameInstance:
    """The same graph with every vertex owned by its own provider."""
    services = [
        ServiceVertex(id=svc.id, cost=svc.cost, owner=svc.id) for svc in graph.services
    ]
    solo = ChoreographyGraph(services, graph.service_edges)
    return GameInstance(graph=solo, budget=Fraction(budget))


def check_equivalence(graph: ChoreographyGraph) -> EquivalenceReport:
    """Compare the VCG total against the per-vertex game's stability threshold."""
    report = vcg_payments(graph)
    threshold, _critical = stability_threshold(per_vertex_game(graph))
    return EquivalenceReport(
        vcg_total=report.total_payment,
        minimal_stable_price=threshold,
        equal=report.total_payment == threshold,
    )
