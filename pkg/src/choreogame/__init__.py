"""Exact cooperative-game analysis of service-composition pricing.

A service choreography is enacted by buying one source-to-sink path through
a DAG of priced services.  Providers may ally to control that choice; this
package computes, with exact rational arithmetic, what any alliance is worth,
whether the core is empty, the unique stable payoff division, the minimal
budget at which it exists, whether announced prices betray an alliance, and
the truthful-mechanism payments the division must match.
"""

from .exceptions import (
    AnalysisError,
    ChoreogameError,
    CycleDetected,
    DuplicateVertexId,
    GameDocumentError,
    InvalidParameters,
    MalformedDocument,
    MissingAnnouncedPrices,
    NegativeCost,
    NoAffordablePath,
    NoPathExists,
    NoStableImputation,
    TooManyPlayers,
    UnavoidableVertex,
)
from .model import (
    INF,
    ChoreographyGraph,
    Coalition,
    GameInstance,
    PathResult,
    ServiceVertex,
    as_rational,
    avoiding_shortest_path,
    offerable_path,
    player_path_cost,
    restricted_shortest_path,
    shortest_path,
    vertex_avoiding_path,
    zeroed_cost_path,
)
from .documents import dumps, instance_from_mapping, load_file, loads, to_mapping
from .values import (
    CoalitionValue,
    Reason,
    coalition_value,
    enumerate_values,
    grand_coalition_value,
)
from .core import CoreReport, Imputation, core_empty, in_core
from .bargaining import (
    ObjectionRecord,
    StableSolution,
    active_set,
    find_justified_objection,
    find_objection,
    has_counter_objection,
    stability_threshold,
    stable_imputation,
    verify_bargaining_membership,
)
from .detection import DetectionReport, detect, player_margin
from .vcg import EquivalenceReport, VcgReport, check_equivalence, per_vertex_game, vcg_payments
from .generator import generate_document, generate_instance

__version__ = "0.1.0"

__all__ = [
    "AnalysisError",
    "ChoreogameError",
    "ChoreographyGraph",
    "Coalition",
    "CoalitionValue",
    "CoreReport",
    "CycleDetected",
    "DetectionReport",
    "DuplicateVertexId",
    "EquivalenceReport",
    "GameDocumentError",
    "GameInstance",
    "INF",
    "Imputation",
    "InvalidParameters",
    "MalformedDocument",
    "MissingAnnouncedPrices",
    "NegativeCost",
    "NoAffordablePath",
    "NoPathExists",
    "NoStableImputation",
    "ObjectionRecord",
    "PathResult",
    "Reason",
    "ServiceVertex",
    "StableSolution",
    "TooManyPlayers",
    "UnavoidableVertex",
    "VcgReport",
    "active_set",
    "as_rational",
    "avoiding_shortest_path",
    "check_equivalence",
    "coalition_value",
    "core_empty",
    "detect",
    "dumps",
    "enumerate_values",
    "find_justified_objection",
    "find_objection",
    "generate_document",
    "generate_instance",
    "grand_coalition_value",
    "has_counter_objection",
    "in_core",
    "instance_from_mapping",
    "load_file",
    "loads",
    "offerable_path",
    "per_vertex_game",
    "player_margin",
    "player_path_cost",
    "restricted_shortest_path",
    "shortest_path",
    "stability_threshold",
    "stable_imputation",
    "to_mapping",
    "verify_bargaining_membership",
    "vertex_avoiding_path",
    "zeroed_cost_path",
]
