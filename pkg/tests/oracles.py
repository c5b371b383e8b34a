"""Independent brute-force oracles the tests check the package against.

Nothing here shares code with the implementation under test: paths are found
by exhaustive DFS enumeration, linear feasibility by enumerating basic
solutions of constraint subsets with Gaussian elimination, and cuts by
reachability after vertex removal.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from choreogame import GameInstance
from choreogame.model import SINK, SOURCE

INF = float("inf")


def all_paths(instance: GameInstance, allowed=None) -> list[tuple[Fraction, tuple[str, ...]]]:
    """Every source-to-sink service sequence, as (cost, path) pairs."""
    graph = instance.graph
    if allowed is None:
        allowed = frozenset(graph.service_ids)
    else:
        allowed = frozenset(allowed)
    found: list[tuple[Fraction, tuple[str, ...]]] = []

    def walk(node: str, cost: Fraction, trail: tuple[str, ...]) -> None:
        if node == SINK:
            found.append((cost, trail))
            return
        for head in graph.successors(node):
            if head == SINK:
                walk(head, cost, trail)
            elif head in allowed:
                walk(head, cost + graph.cost(head), trail + (head,))

    walk(SOURCE, Fraction(0), ())
    return found


def brute_best_path(instance: GameInstance, allowed=None, min_services: int = 0):
    """Cheapest path by full enumeration; (INF, None) when there is none."""
    paths = [
        (cost, path)
        for cost, path in all_paths(instance, allowed)
        if len(path) >= min_services
    ]
    if not paths:
        return INF, None
    return min(paths)


def brute_player_cost(instance: GameInstance, player: str):
    owned = instance.graph.vertices_of([player])
    costs = [
        cost for cost, path in all_paths(instance) if owned.intersection(path)
    ]
    return min(costs, default=INF)


def removal_disconnects(instance: GameInstance, removed: frozenset[str]) -> bool:
    """Whether deleting the given service vertices separates source from sink."""
    graph = instance.graph
    seen = {SOURCE}
    stack = [SOURCE]
    while stack:
        node = stack.pop()
        if node == SINK:
            return False
        for head in graph.successors(node):
            if head in removed or head in seen:
                continue
            seen.add(head)
            stack.append(head)
    return True


def _solve_square(rows: list[list[Fraction]], rhs: list[Fraction]):
    """Gaussian elimination; None when the system is singular."""
    n = len(rows)
    aug = [list(row) + [b] for row, b in zip(rows, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        head = aug[col][col]
        aug[col] = [v / head for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [v - factor * p for v, p in zip(aug[r], aug[col])]
    return [aug[r][n] for r in range(n)]


def brute_core_feasible(players: list[str], values: dict[frozenset, Fraction]) -> bool:
    """Exact core-nonemptiness by basic-solution enumeration.

    Constraint set: sum over each proper coalition >= value, per-player
    x_j >= 0, and efficiency as an equality.  A feasible bounded polyhedron
    inside x >= 0 has a vertex, and every vertex solves some n-subset of the
    constraints at equality, so scanning all n-subsets decides feasibility.
    """
    n = len(players)
    index = {p: i for i, p in enumerate(players)}
    grand = frozenset(players)
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    kinds: list[str] = []
    for coalition, value in values.items():
        if not coalition:
            continue
        row = [Fraction(0)] * n
        for p in coalition:
            row[index[p]] = Fraction(1)
        rows.append(row)
        rhs.append(Fraction(value))
        kinds.append("eq" if coalition == grand else "ge")
    for i in range(n):
        row = [Fraction(0)] * n
        row[i] = Fraction(1)
        rows.append(row)
        rhs.append(Fraction(0))
        kinds.append("ge")

    eq_idx = kinds.index("eq")

    def satisfies(x: list[Fraction]) -> bool:
        for row, b, kind in zip(rows, rhs, kinds):
            total = sum((c * v for c, v in zip(row, x)), Fraction(0))
            if kind == "eq" and total != b:
                return False
            if kind == "ge" and total < b:
                return False
        return True

    others = [i for i in range(len(rows)) if i != eq_idx]
    for combo in itertools.combinations(others, n - 1):
        subset = [eq_idx, *combo]
        x = _solve_square([rows[i] for i in subset], [rhs[i] for i in subset])
        if x is not None and satisfies(x):
            return True
    return False
