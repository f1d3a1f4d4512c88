"""Worklist search for t-bridges between protection-graph vertices.

A t-bridge from ``s`` to ``f`` is a simple path whose every arc carries
the take right, traversed either along arc direction
(``Direction.FORWARD``, the ``t->*`` pattern) or against it
(``Direction.BACKWARD``, ``t<-*``).  Interior vertices are always
objects: the search walks the traversal set ``{s, f} | objects(g)`` and
never routes through any other subject.  The endpoints themselves may
be of either kind.

Two engines share one observable contract.  ``bridge_exists`` keeps a
frontier and looks at each vertex's arcs once, which is the right tool
for real queries.  ``bridge_exists_faithful`` re-scans every arc
incident to the whole reached set on every pass -- deliberately wasteful
(cubic in the vertex count) but a more literal rendering of the same
pass structure, kept so the two can be checked against each other.
They must return identical reports on every input; the test suite
enforces this exhaustively on small graphs and statistically on large
random ones.

Pass semantics, shared by both engines and pinned by the tests:

* a pass scans only vertices that were already reached when the pass
  started; vertices discovered mid-pass wait for the next pass;
* vertices are scanned in ascending id order, their t-arcs likewise,
  and the first arc to reach a vertex fixes its predecessor, so reports
  are fully deterministic;
* after each pass, reaching ``f`` terminates with success; a pass that
  moved nothing terminates with failure and still counts, so the trace
  always has exactly ``passes`` entries and only a final failing entry
  may be empty.

The pass count never exceeds the traversal-set size plus one: every
non-final pass moves at least one vertex out of the unreached set.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from .errors import InvariantViolationError, SameIslandError, SameVertexError
from .graph import ProtectionGraph, Right, VertexId, VertexKind
from .islands import Island


class Direction(Enum):
    """Which way a t arc may be walked."""

    FORWARD = "forward"  # arc (a, b) is walked a -> b
    BACKWARD = "backward"  # arc (b, a) is walked a -> b, against the arrow


@dataclass(frozen=True)
class BridgePath:
    """Witness path; ``vertices[0]`` is s and ``vertices[-1]`` is f.

    Vertices are pairwise distinct, interiors are objects, and each
    consecutive pair is backed by a t arc in the direction's sense.
    ``validate_path`` re-checks all of that against a graph.
    """

    vertices: tuple[VertexId, ...]
    direction: Direction

    @property
    def length(self) -> int:
        """Number of arcs on the path."""
        return len(self.vertices) - 1


@dataclass(frozen=True)
class SearchReport:
    """Everything one search run decided, as a plain comparable value.

    ``frontier_trace`` holds one ``(pass_number, ids_added)`` entry per
    executed pass, additions ascending.  ``path`` is present exactly
    when ``exists``.
    """

    exists: bool
    direction: Direction
    path: BridgePath | None
    passes: int
    frontier_trace: tuple[tuple[int, tuple[VertexId, ...]], ...]


@dataclass
class SearchState:
    """Mutable partition of the traversal set while a search runs.

    ``reached`` and ``unreached`` are disjoint and together cover the
    traversal set; ``predecessor`` maps every reached vertex except the
    start to the vertex whose arc first claimed it.
    """

    reached: set[VertexId]
    unreached: set[VertexId]
    passes: int = 0
    predecessor: dict[VertexId, VertexId] = field(default_factory=dict)

    @classmethod
    def initial(cls, traversal: set[VertexId], start: VertexId) -> SearchState:
        return cls(reached={start}, unreached=set(traversal) - {start})

    def move(self, v: VertexId, via: VertexId) -> None:
        """Transfer v from unreached to reached, claimed through *via*."""
        self.unreached.discard(v)
        self.reached.add(v)
        self.predecessor[v] = via


def traversal_set(g: ProtectionGraph, s: VertexId, f: VertexId) -> set[VertexId]:
    """Vertices a bridge may touch: both endpoints plus every object."""
    verts = set(g.objects())
    verts.add(s)
    verts.add(f)
    return verts


def check_query(g: ProtectionGraph, s: VertexId, f: VertexId) -> None:
    """Validate a bridge query's endpoints (existence, distinctness)."""
    g.vertex_kind(s)
    g.vertex_kind(f)
    if s == f:
        raise SameVertexError(
            f"bridge endpoints must differ, got {g.vertex_name(s)!r} twice"
        )


def bridge_exists(
    g: ProtectionGraph,
    s: VertexId,
    f: VertexId,
    direction: Direction = Direction.FORWARD,
) -> SearchReport:
    """Decide whether a t-bridge s ~> f exists; frontier engine.

    Only vertices added in the previous pass are scanned: older reached
    vertices had all their t-arc endpoints claimed when they were
    scanned, so re-scanning them can never move anything.  That makes
    this engine linear in arcs while producing, pass for pass, the same
    additions and predecessors as the full re-scan.
    """
    check_query(g, s, f)
    state = SearchState.initial(traversal_set(g, s, f), s)
    neighbors = (
        g.out_neighbors_with_right
        if direction is Direction.FORWARD
        else g.in_neighbors_with_right
    )
    trace: list[tuple[int, tuple[VertexId, ...]]] = []
    frontier: list[VertexId] = [s]
    while True:
        state.passes += 1
        added: list[VertexId] = []
        for v in frontier:
            for w in neighbors(v, Right.T):
                if w in state.unreached:
                    state.move(w, via=v)
                    added.append(w)
        added.sort()
        trace.append((state.passes, tuple(added)))
        if f in state.reached:
            return _success(state, trace, direction, s, f)
        if not added:
            return _failure(state, trace, direction)
        frontier = added


def bridge_exists_faithful(
    g: ProtectionGraph,
    s: VertexId,
    f: VertexId,
    direction: Direction = Direction.FORWARD,
) -> SearchReport:
    """Same contract as ``bridge_exists``; literal re-scanning engine.

    Every pass walks every arc incident to every vertex reached at pass
    start and picks out the t-labelled ones whose far endpoint is still
    unreached.  Worst case: vertex-count passes, each reviewing every
    arc of an almost fully reached graph.
    """
    check_query(g, s, f)
    state = SearchState.initial(traversal_set(g, s, f), s)
    arcs = g.out_arcs if direction is Direction.FORWARD else g.in_arcs
    trace: list[tuple[int, tuple[VertexId, ...]]] = []
    while True:
        state.passes += 1
        added: list[VertexId] = []
        for v in sorted(state.reached):  # snapshot before the pass mutates it
            for w, rights in arcs(v):
                if Right.T in rights and w in state.unreached:
                    state.move(w, via=v)
                    added.append(w)
        added.sort()
        trace.append((state.passes, tuple(added)))
        if f in state.reached:
            return _success(state, trace, direction, s, f)
        if not added:
            return _failure(state, trace, direction)


def _success(
    state: SearchState,
    trace: list[tuple[int, tuple[VertexId, ...]]],
    direction: Direction,
    s: VertexId,
    f: VertexId,
) -> SearchReport:
    vertices = [f]
    v = f
    while v != s:
        v = state.predecessor[v]
        vertices.append(v)
    vertices.reverse()
    path = BridgePath(tuple(vertices), direction)
    return SearchReport(True, direction, path, state.passes, tuple(trace))


def _failure(
    state: SearchState,
    trace: list[tuple[int, tuple[VertexId, ...]]],
    direction: Direction,
) -> SearchReport:
    return SearchReport(False, direction, None, state.passes, tuple(trace))


def find_bridge_path(
    g: ProtectionGraph,
    s: VertexId,
    f: VertexId,
    direction: Direction = Direction.FORWARD,
) -> BridgePath | None:
    """The deterministic witness path, or None when no bridge exists."""
    return bridge_exists(g, s, f, direction).path


def bridges_between_islands(
    g: ProtectionGraph,
    island_a: Island,
    island_b: Island,
    direction: Direction = Direction.FORWARD,
) -> list[tuple[VertexId, VertexId, BridgePath]]:
    """All (s, f, path) bridges from island_a members to island_b members.

    Runs one search per ordered member pair; the result is sorted by
    (s, f) because members come ascending.
    """
    if island_a.index == island_b.index:
        raise SameIslandError(f"need two distinct islands, got index {island_a.index} twice")
    found: list[tuple[VertexId, VertexId, BridgePath]] = []
    for s in island_a.members:
        for f in island_b.members:
            path = find_bridge_path(g, s, f, direction)
            if path is not None:
                found.append((s, f, path))
    return found


def validate_path(g: ProtectionGraph, path: BridgePath) -> None:
    """Replay a BridgePath against *g*; raises InvariantViolationError.

    Checks simplicity, object-only interiors, and that a t arc in the
    right orientation backs every step.
    """
    verts = path.vertices
    if len(verts) < 2:
        raise InvariantViolationError("a bridge path needs at least two vertices")
    if len(set(verts)) != len(verts):
        raise InvariantViolationError("bridge path revisits a vertex")
    for a, b in zip(verts, verts[1:]):
        src, dst = (a, b) if path.direction is Direction.FORWARD else (b, a)
        if Right.T not in g.rights_between(src, dst):
            raise InvariantViolationError(
                f"no t arc backs the step {g.vertex_name(a)} -> {g.vertex_name(b)}"
            )
    for v in verts[1:-1]:
        if g.vertex_kind(v) is not VertexKind.OBJECT:
            raise InvariantViolationError(
                f"interior vertex {g.vertex_name(v)} is not an object"
            )


def report_to_jsonable(g: ProtectionGraph, report: SearchReport) -> dict[str, Any]:
    """JSON-friendly view of a report, vertex names instead of ids.

    Key order is part of the CLI contract: exists, direction, passes,
    path, frontier_trace.
    """
    return {
        "exists": report.exists,
        "direction": report.direction.value,
        "passes": report.passes,
        "path": (
            [g.vertex_name(v) for v in report.path.vertices]
            if report.path is not None
            else None
        ),
        "frontier_trace": [
            [n, [g.vertex_name(v) for v in added]] for n, added in report.frontier_trace
        ],
    }
