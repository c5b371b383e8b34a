"""Reading and writing game documents.

The on-disk format is a single JSON object::

    {
      "budget": "34",
      "services": [
        {"id": "alpha", "cost": "2", "owner": "Lambda", "price": "10"},
        ...
      ],
      "edges": [["alpha", "gamma"], ...]
    }

Budgets, costs and prices are decimal strings (fraction strings like "1/3"
also work) so that every quantity parses to an exact rational.  Plain JSON
integers are accepted too.  The "price" field is optional per service, but if
any service announces a price, all of them must.  Source/sink hookup is
automatic; the reserved endpoint ids may not appear in a document.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .exceptions import MalformedDocument
from .model import INF, ChoreographyGraph, Cost, GameInstance, ServiceVertex, as_rational


def format_rational(value: Cost) -> str:
    """Canonical exact string for a rational cost ("6", "5/2", "inf")."""
    if value == INF:
        return "inf"
    return str(Fraction(value))


def render_decimal(value: Cost, places: int = 6) -> str:
    """Human-oriented decimal rendering; exactness lives in format_rational."""
    if value == INF:
        return "inf"
    frac = Fraction(value)
    if frac.denominator == 1:
        return str(frac.numerator)
    text = f"{float(frac):.{places}f}".rstrip("0").rstrip(".")
    return text or "0"


def rational_cell(value: Cost) -> dict[str, str]:
    """Report cell carrying both the exact fraction and a decimal rendering."""
    return {"fraction": format_rational(value), "decimal": render_decimal(value)}


def instance_from_mapping(doc: Any) -> GameInstance:
    """Build a validated GameInstance from a parsed document object."""
    if not isinstance(doc, dict):
        raise MalformedDocument("document root must be a JSON object")
    unknown = set(doc) - {"budget", "services", "edges"}
    if unknown:
        raise MalformedDocument(f"unknown document fields: {sorted(unknown)}")
    if "budget" not in doc:
        raise MalformedDocument("document is missing 'budget'")
    if "services" not in doc:
        raise MalformedDocument("document is missing 'services'")

    budget = as_rational(doc["budget"])

    raw_services = doc["services"]
    if not isinstance(raw_services, list):
        raise MalformedDocument("'services' must be a list")
    services: list[ServiceVertex] = []
    prices: dict[str, Fraction] = {}
    for entry in raw_services:
        if not isinstance(entry, dict):
            raise MalformedDocument("each service must be an object")
        extra = set(entry) - {"id", "cost", "owner", "price"}
        if extra:
            raise MalformedDocument(f"unknown service fields: {sorted(extra)}")
        for key in ("id", "cost", "owner"):
            if key not in entry:
                raise MalformedDocument(f"service entry is missing {key!r}")
        vid = entry["id"]
        if not isinstance(vid, str):
            raise MalformedDocument("service id must be a string")
        owner = entry["owner"]
        if not isinstance(owner, str):
            raise MalformedDocument(f"owner of service {vid!r} must be a string")
        services.append(ServiceVertex(id=vid, cost=as_rational(entry["cost"]), owner=owner))
        if "price" in entry:
            prices[vid] = as_rational(entry["price"])

    raw_edges = doc.get("edges", [])
    if not isinstance(raw_edges, list):
        raise MalformedDocument("'edges' must be a list of [from, to] pairs")
    edges: list[tuple[str, str]] = []
    for pair in raw_edges:
        if not isinstance(pair, (list, tuple)) or len(pair) != 2:
            raise MalformedDocument(f"bad edge entry: {pair!r}")
        tail, head = pair
        if not isinstance(tail, str) or not isinstance(head, str):
            raise MalformedDocument(f"edge endpoints must be service ids: {pair!r}")
        edges.append((tail, head))

    graph = ChoreographyGraph(services, edges)
    if prices and len(prices) != len(services):
        missing = sorted(set(graph.service_ids) - prices.keys())
        raise MalformedDocument(f"announced prices missing for services: {missing}")
    return GameInstance(graph=graph, budget=budget, announced_prices=prices or None)


def loads(text: str) -> GameInstance:
    """Parse a JSON game document from a string."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedDocument(f"not valid JSON: {exc}") from exc
    return instance_from_mapping(doc)


def load_file(path: str) -> GameInstance:
    with open(path, "r", encoding="utf-8") as handle:
        return loads(handle.read())


def to_mapping(instance: GameInstance) -> dict[str, Any]:
    """Canonical document object for an instance (services sorted by id)."""
    services = []
    for svc in instance.graph.services:
        entry: dict[str, Any] = {
            "id": svc.id,
            "cost": format_rational(svc.cost),
            "owner": svc.owner,
        }
        if instance.announced_prices is not None:
            entry["price"] = format_rational(instance.announced_prices[svc.id])
        services.append(entry)
    edges = sorted(instance.graph.service_edges)
    return {
        "budget": format_rational(instance.budget),
        "services": services,
        "edges": [list(edge) for edge in edges],
    }


def dumps(instance: GameInstance) -> str:
    return json.dumps(to_mapping(instance), indent=2) + "\n"
