"""Seeded random layered-DAG instances for property testing and the CLI.

Vertices are spread over layers and edges only run between consecutive
layers, so every enactment path crosses every layer (and therefore has at
least ``layers`` services).  The same seed always yields the same document.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Any

from .exceptions import InvalidParameters
from .documents import format_rational, instance_from_mapping
from .model import GameInstance, shortest_path

MAX_SERVICES = 64
MAX_PLAYERS = 16


def generate_document(
    seed: int,
    services: int = 6,
    layers: int = 3,
    players: int | None = None,
    max_cost: int = 20,
    budget: str | None = None,
    with_prices: bool = False,
) -> dict[str, Any]:
    """A reproducible random game document.

    ``players`` defaults to one provider per service.  When ``budget`` is not
    given, one is drawn at or above the cheapest enactment cost so the
    instance is always affordable.  With ``with_prices`` every service also
    announces a price at or above cost.
    """
    if services < 2:
        raise InvalidParameters("need at least 2 services")
    if services > MAX_SERVICES:
        raise InvalidParameters(f"services capped at {MAX_SERVICES}")
    if not 2 <= layers <= services:
        raise InvalidParameters("layers must be between 2 and the service count")
    if players is None:
        players = services
    if players < 1:
        raise InvalidParameters("need at least one player")
    if players > MAX_PLAYERS:
        raise InvalidParameters(f"players capped at {MAX_PLAYERS}")
    if players > services:
        raise InvalidParameters("cannot have more players than services")
    if max_cost < 1:
        raise InvalidParameters("max_cost must be at least 1")

    rng = random.Random(seed)
    ids = [f"s{i:02d}" for i in range(services)]
    player_ids = [f"p{i:02d}" for i in range(players)]

    # every layer gets at least one vertex; leftovers land at random
    assignment = list(range(layers)) + [
        rng.randrange(layers) for _ in range(services - layers)
    ]
    rng.shuffle(assignment)
    tiers: list[list[str]] = [[] for _ in range(layers)]
    for vid, layer in zip(ids, assignment):
        tiers[layer].append(vid)

    edges: set[tuple[str, str]] = set()
    for level in range(layers - 1):
        here, there = tiers[level], tiers[level + 1]
        for vid in there:
            edges.add((rng.choice(here), vid))
        for vid in here:
            edges.add((vid, rng.choice(there)))
        extras = rng.randrange(0, len(here) * len(there) + 1)
        for _ in range(extras):
            edges.add((rng.choice(here), rng.choice(there)))

    # every player owns at least one vertex; the rest are assigned at random
    owner_pool = list(player_ids) + [
        rng.choice(player_ids) for _ in range(services - players)
    ]
    rng.shuffle(owner_pool)
    owners = dict(zip(ids, owner_pool))

    doc: dict[str, Any] = {
        "budget": "0",
        "services": [
            {
                "id": vid,
                "cost": str(rng.randint(1, max_cost)),
                "owner": owners[vid],
            }
            for vid in ids
        ],
        "edges": sorted([list(edge) for edge in edges]),
    }
    if budget is None:
        instance = instance_from_mapping(doc)
        cheapest = shortest_path(instance).cost
        total = sum((svc.cost for svc in instance.graph.services), Fraction(0))
        doc["budget"] = format_rational(
            Fraction(cheapest) + rng.randint(0, int(total))
        )
    else:
        doc["budget"] = budget
    if with_prices:
        for entry in doc["services"]:
            entry["price"] = str(int(entry["cost"]) + rng.randint(0, max_cost))
    return doc


def generate_instance(seed: int, **kwargs: Any) -> GameInstance:
    return instance_from_mapping(generate_document(seed, **kwargs))
