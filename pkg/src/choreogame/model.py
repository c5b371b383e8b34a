"""Service-composition graph model and exact path-cost primitives.

A choreography is enacted by picking one directed source-to-sink path through
a DAG of priced service vertices.  Every quantity here is an exact rational
(``fractions.Fraction``); the only non-rational value that ever appears is the
``INF`` sentinel meaning "no qualifying path".

Instances are immutable after construction and every function in this module
is a pure function of its arguments, so concurrent readers need no locking.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .exceptions import (
    CycleDetected,
    DuplicateVertexId,
    MalformedDocument,
    NegativeCost,
    NoPathExists,
)

#: Cost of a non-existent path.  Orders above every rational and absorbs
#: addition, which is exactly what ``float("inf")`` gives us against Fraction.
INF = float("inf")

#: Reserved ids for the synthetic endpoints; never user-suppliable.
SOURCE = "__source__"
SINK = "__sink__"
RESERVED_IDS = frozenset({SOURCE, SINK})

Cost = Fraction | float  # a Fraction, or INF


def as_rational(value: object) -> Fraction:
    """Parse an exact rational from a string, int, Fraction or float literal.

    Strings may be integers ("34"), decimals ("2.5") or fractions ("1/3").
    Floats are read through their shortest decimal repr so that a literal
    like 2.5 means exactly 5/2.
    """
    if isinstance(value, bool):
        raise MalformedDocument(f"expected a number, got {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        value = str(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise MalformedDocument(f"not an exact rational: {value!r}") from exc
    raise MalformedDocument(f"expected a number, got {type(value).__name__}")


@dataclass(frozen=True)
class ServiceVertex:
    """A public service: an id, its operating cost, and the provider owning it."""

    id: str
    cost: Fraction
    owner: str


@dataclass(frozen=True)
class PathResult:
    """Cost and vertex sequence of a cheapest qualifying enactment path.

    ``cost`` is INF and ``path`` is None when no qualifying path exists.
    ``path`` lists service vertices only; the synthetic endpoints are implied.
    """

    cost: Cost
    path: tuple[str, ...] | None = None

    @property
    def exists(self) -> bool:
        return self.path is not None


class ChoreographyGraph:
    """A validated DAG of service vertices with automatic source/sink hookup.

    Construction validates ids, costs and acyclicity, then wires every
    service without service-level predecessors to the synthetic source and
    every service without service-level successors to the synthetic sink.
    """

    def __init__(
        self,
        services: Iterable[ServiceVertex],
        edges: Iterable[tuple[str, str]],
    ) -> None:
        services = list(services)
        by_id: dict[str, ServiceVertex] = {}
        for svc in services:
            if not svc.id or not isinstance(svc.id, str):
                raise MalformedDocument("service id must be a non-empty string")
            if svc.id in RESERVED_IDS:
                raise MalformedDocument(f"service id {svc.id!r} is reserved")
            if svc.id in by_id:
                raise DuplicateVertexId(f"duplicate service id {svc.id!r}")
            if not svc.owner or not isinstance(svc.owner, str):
                raise MalformedDocument(f"service {svc.id!r} has no owner")
            if svc.cost < 0:
                raise NegativeCost(f"service {svc.id!r} has negative cost {svc.cost}")
            by_id[svc.id] = svc

        service_edges: set[tuple[str, str]] = set()
        for edge in edges:
            tail, head = edge
            if tail in RESERVED_IDS or head in RESERVED_IDS:
                raise MalformedDocument("edges may not mention the reserved endpoints")
            if tail not in by_id or head not in by_id:
                raise MalformedDocument(f"edge ({tail!r}, {head!r}) references unknown service")
            if tail == head:
                raise CycleDetected(f"self-loop on {tail!r}")
            service_edges.add((tail, head))

        self._by_id = dict(sorted(by_id.items()))
        self._service_edges = frozenset(service_edges)
        self._order = self._toposort()

        succ: dict[str, list[str]] = {vid: [] for vid in self._by_id}
        succ[SOURCE] = []
        pred_counts = {vid: 0 for vid in self._by_id}
        for tail, head in service_edges:
            succ[tail].append(head)
            pred_counts[head] += 1
        out_counts = {vid: len(succ[vid]) for vid in self._by_id}
        for vid in self._by_id:
            if pred_counts[vid] == 0:
                succ[SOURCE].append(vid)
            if out_counts[vid] == 0:
                succ[vid].append(SINK)
        self._succ = {vid: tuple(sorted(heads)) for vid, heads in succ.items()}

        if not self._reachable_sink():
            raise NoPathExists("no source-to-sink path exists")

    def _toposort(self) -> tuple[str, ...]:
        indeg = {vid: 0 for vid in self._by_id}
        succ: dict[str, list[str]] = {vid: [] for vid in self._by_id}
        for tail, head in self._service_edges:
            succ[tail].append(head)
            indeg[head] += 1
        ready = sorted(vid for vid, d in indeg.items() if d == 0)
        order: list[str] = []
        while ready:
            vid = ready.pop(0)
            order.append(vid)
            inserted = False
            for head in succ[vid]:
                indeg[head] -= 1
                if indeg[head] == 0:
                    ready.append(head)
                    inserted = True
            if inserted:
                ready.sort()
        if len(order) != len(self._by_id):
            raise CycleDetected("service precedence graph contains a directed cycle")
        return tuple(order)

    def _reachable_sink(self) -> bool:
        seen = {SOURCE}
        stack = [SOURCE]
        while stack:
            node = stack.pop()
            if node == SINK:
                return True
            for head in self._succ.get(node, ()):
                if head not in seen:
                    seen.add(head)
                    stack.append(head)
        return False

    # -- read access -------------------------------------------------------

    @property
    def service_ids(self) -> tuple[str, ...]:
        return tuple(self._by_id)

    @property
    def services(self) -> tuple[ServiceVertex, ...]:
        return tuple(self._by_id.values())

    @property
    def service_edges(self) -> frozenset[tuple[str, str]]:
        return self._service_edges

    def vertex(self, vertex_id: str) -> ServiceVertex:
        return self._by_id[vertex_id]

    def cost(self, vertex_id: str) -> Fraction:
        return self._by_id[vertex_id].cost

    def owner(self, vertex_id: str) -> str:
        return self._by_id[vertex_id].owner

    def successors(self, node: str) -> tuple[str, ...]:
        return self._succ.get(node, ())

    @property
    def players(self) -> tuple[str, ...]:
        return tuple(sorted({svc.owner for svc in self._by_id.values()}))

    def vertices_of(self, players: Iterable[str]) -> frozenset[str]:
        """Vertex ids owned by any of the given players."""
        wanted = frozenset(players)
        return frozenset(vid for vid, svc in self._by_id.items() if svc.owner in wanted)

    def topological_order(self) -> tuple[str, ...]:
        return self._order

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ChoreographyGraph):
            return NotImplemented
        return self.services == other.services and self._service_edges == other._service_edges

    def __repr__(self) -> str:
        return f"ChoreographyGraph({len(self._by_id)} services, {len(self._service_edges)} edges)"


@dataclass(frozen=True)
class GameInstance:
    """A choreography graph plus the user budget and optional announced prices."""

    graph: ChoreographyGraph
    budget: Fraction
    announced_prices: Mapping[str, Fraction] | None = None

    def __post_init__(self) -> None:
        if self.budget < 0:
            raise NegativeCost(f"budget must be non-negative, got {self.budget}")
        if self.announced_prices is not None:
            prices = dict(self.announced_prices)
            missing = set(self.graph.service_ids) - prices.keys()
            if missing:
                raise MalformedDocument(
                    f"announced prices missing for services: {sorted(missing)}"
                )
            unknown = prices.keys() - set(self.graph.service_ids)
            if unknown:
                raise MalformedDocument(f"announced prices for unknown services: {sorted(unknown)}")
            for vid, price in prices.items():
                if price < 0:
                    raise NegativeCost(f"announced price for {vid!r} is negative")
            object.__setattr__(self, "announced_prices", dict(sorted(prices.items())))

    @property
    def players(self) -> tuple[str, ...]:
        return self.graph.players


@dataclass(frozen=True)
class Coalition:
    """A set of providers; its vertex set is derived from the owner map."""

    players: frozenset[str]

    @classmethod
    def of(cls, players: Iterable[str]) -> "Coalition":
        return cls(frozenset(players))

    def vertices(self, graph: ChoreographyGraph) -> frozenset[str]:
        return graph.vertices_of(self.players)


def _coerce_players(players: Iterable[str] | Coalition) -> frozenset[str]:
    if isinstance(players, Coalition):
        return players.players
    return frozenset(players)


def check_players(instance: GameInstance, players: Iterable[str] | Coalition) -> frozenset[str]:
    """Normalise a coalition argument, rejecting ids that are not players."""
    members = _coerce_players(players)
    unknown = members - set(instance.players)
    if unknown:
        raise ValueError(f"unknown players: {sorted(unknown)}")
    return members


# -- path machinery ---------------------------------------------------------


def _best_path(
    graph: ChoreographyGraph,
    allowed: frozenset[str] | None = None,
    min_services: int = 0,
    zero_cost_vertex: str | None = None,
) -> PathResult:
    """Cheapest source-to-sink path over the allowed service vertices.

    Ties are broken toward the lexicographically smallest vertex-id sequence,
    which makes every path-valued result deterministic.  ``min_services``
    demands at least that many service vertices on the path (the state only
    needs to saturate at the requirement, so the DP stays linear).
    """
    cap = max(min_services, 0)
    # state: (node, min(services_seen, cap)) -> (cost, path tuple)
    best: dict[tuple[str, int], tuple[Fraction, tuple[str, ...]]] = {
        (SOURCE, 0): (Fraction(0), ())
    }
    nodes = (SOURCE,) + graph.topological_order()
    for node in nodes:
        for count in range(cap + 1):
            state = best.get((node, count))
            if state is None:
                continue
            cost, path = state
            for head in graph.successors(node):
                if head == SINK:
                    nxt = (SINK, count)
                    cand = (cost, path)
                else:
                    if allowed is not None and head not in allowed:
                        continue
                    step = Fraction(0) if head == zero_cost_vertex else graph.cost(head)
                    nxt = (head, min(count + 1, cap))
                    cand = (cost + step, path + (head,))
                cur = best.get(nxt)
                if cur is None or cand < cur:
                    best[nxt] = cand
    hit = best.get((SINK, cap))
    if hit is None:
        return PathResult(INF, None)
    return PathResult(hit[0], hit[1])


def shortest_path(instance: GameInstance) -> PathResult:
    """Cheapest enactment path of the whole graph."""
    return _best_path(instance.graph)


def restricted_shortest_path(
    instance: GameInstance, coalition: Iterable[str] | Coalition
) -> PathResult:
    """Cheapest path using only vertices owned by the coalition's members."""
    members = check_players(instance, coalition)
    return _best_path(instance.graph, allowed=instance.graph.vertices_of(members))


def avoiding_shortest_path(
    instance: GameInstance, excluded: Iterable[str] | Coalition
) -> PathResult:
    """Cheapest path touching no vertex owned by any excluded player."""
    members = check_players(instance, excluded)
    banned = instance.graph.vertices_of(members)
    allowed = frozenset(instance.graph.service_ids) - banned
    return _best_path(instance.graph, allowed=allowed)


def offerable_path(
    instance: GameInstance,
    coalition: Iterable[str] | Coalition,
    min_services: int = 2,
) -> PathResult:
    """Cheapest path a coalition may offer: internal and at least two services.

    A one-service offer is barred (it would hand a single vertex a monopoly);
    a single provider owning a longer path is allowed.
    """
    members = check_players(instance, coalition)
    return _best_path(
        instance.graph,
        allowed=instance.graph.vertices_of(members),
        min_services=min_services,
    )


def _through_costs(graph: ChoreographyGraph) -> dict[str, Cost]:
    """For every vertex, the cheapest full-path cost among paths through it."""
    forward: dict[str, Cost] = {SOURCE: Fraction(0)}
    nodes = (SOURCE,) + graph.topological_order() + (SINK,)
    for node in nodes:
        base = forward.get(node)
        if base is None:
            continue
        for head in graph.successors(node):
            step = graph.cost(head) if head != SINK else Fraction(0)
            cand = base + step
            if head not in forward or cand < forward[head]:
                forward[head] = cand
    backward: dict[str, Cost] = {SINK: Fraction(0)}
    for node in reversed(nodes):
        for head in graph.successors(node):
            tail_cost = backward.get(head)
            if tail_cost is None:
                continue
            step = graph.cost(node) if node != SOURCE else Fraction(0)
            cand = tail_cost + step
            if node not in backward or cand < backward[node]:
                backward[node] = cand
    through: dict[str, Cost] = {}
    for vid in graph.service_ids:
        if vid in forward and vid in backward:
            # prefix and suffix both count the vertex itself once
            through[vid] = forward[vid] + backward[vid] - graph.cost(vid)
        else:
            through[vid] = INF
    return through


def player_path_cost(instance: GameInstance, player: str) -> Cost:
    """Cheapest full-path cost among paths visiting a vertex of this player.

    In a DAG the cheapest prefix into a vertex and the cheapest suffix out of
    it cannot share another vertex, so gluing them yields a simple path and
    the minimum over the player's vertices is exact.
    """
    if player not in instance.players:
        raise ValueError(f"unknown player: {player!r}")
    through = _through_costs(instance.graph)
    costs = [through[vid] for vid in instance.graph.vertices_of([player])]
    return min(costs, default=INF)


def vertex_avoiding_path(graph: ChoreographyGraph, vertex_id: str) -> PathResult:
    """Cheapest path that skips one specific vertex (not a whole player)."""
    if vertex_id not in graph.service_ids:
        raise ValueError(f"unknown vertex: {vertex_id!r}")
    allowed = frozenset(graph.service_ids) - {vertex_id}
    return _best_path(graph, allowed=allowed)


def zeroed_cost_path(graph: ChoreographyGraph, vertex_id: str) -> PathResult:
    """Cheapest path when one vertex's cost is treated as zero."""
    if vertex_id not in graph.service_ids:
        raise ValueError(f"unknown vertex: {vertex_id!r}")
    return _best_path(graph, zero_cost_vertex=vertex_id)
