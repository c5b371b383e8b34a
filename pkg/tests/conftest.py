from fractions import Fraction

import pytest

from choreogame import GameInstance, instance_from_mapping

# The pinned five-service instance used throughout: two cloud entry services
# owned by one provider, a shared middle vertex, and an expensive fallback.
# Four enactment paths exist: (alpha,gamma)=6, (delta,gamma)=12,
# (lambda,beta)=20, (delta,beta)=23.
GOLDEN_DOC = {
    "budget": "34",
    "services": [
        {"id": "alpha", "cost": "2", "owner": "Lambda"},
        {"id": "lambda", "cost": "5", "owner": "Lambda"},
        {"id": "delta", "cost": "8", "owner": "Delta"},
        {"id": "gamma", "cost": "4", "owner": "Gamma"},
        {"id": "beta", "cost": "15", "owner": "Beta"},
    ],
    "edges": [
        ["alpha", "gamma"],
        ["delta", "beta"],
        ["delta", "gamma"],
        ["lambda", "beta"],
    ],
}

# Announced prices whose per-provider markups equal the stable division.
GOLDEN_ALLIANCE_PRICES = {
    "alpha": "10",
    "lambda": "5",
    "delta": "10",
    "gamma": "20",
    "beta": "17",
}

GOLDEN_STABLE = {
    "Lambda": Fraction(8),
    "Delta": Fraction(2),
    "Beta": Fraction(2),
    "Gamma": Fraction(16),
}


def make_instance(services, edges, budget, prices=None) -> GameInstance:
    """Compact instance builder: services as (id, cost, owner) triples."""
    doc = {
        "budget": str(budget),
        "services": [
            {"id": vid, "cost": str(cost), "owner": owner}
            for vid, cost, owner in services
        ],
        "edges": [list(edge) for edge in edges],
    }
    if prices is not None:
        for entry in doc["services"]:
            entry["price"] = str(prices[entry["id"]])
    return instance_from_mapping(doc)


def golden_instance(budget="34", prices=None) -> GameInstance:
    doc = {
        "budget": str(budget),
        "services": [dict(entry) for entry in GOLDEN_DOC["services"]],
        "edges": [list(edge) for edge in GOLDEN_DOC["edges"]],
    }
    if prices is not None:
        for entry in doc["services"]:
            entry["price"] = str(prices[entry["id"]])
    return instance_from_mapping(doc)


@pytest.fixture
def golden() -> GameInstance:
    return golden_instance()


@pytest.fixture
def golden_with_prices() -> GameInstance:
    return golden_instance(prices=GOLDEN_ALLIANCE_PRICES)


@pytest.fixture
def chain() -> GameInstance:
    """Two providers on the only path: costs 1 + 1, budget 10."""
    return make_instance(
        [("w1", 1, "a"), ("w2", 1, "b")],
        [("w1", "w2")],
        10,
    )


@pytest.fixture
def twin_paths() -> GameInstance:
    """Two vertex-disjoint paths of identical total cost 5, four providers."""
    return make_instance(
        [("a", 3, "pa"), ("b", 2, "pb"), ("c", 3, "pc"), ("d", 2, "pd")],
        [("a", "b"), ("c", "d")],
        12,
    )
