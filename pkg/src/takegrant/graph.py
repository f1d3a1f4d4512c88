"""Protection-graph data model and its text format.

A protection graph is a directed graph whose vertices are subjects or
objects and whose arcs carry a non-empty set of rights.  Between any
ordered vertex pair there is at most one arc: declaring the same pair
twice unions the rights, because every query in this package only cares
whether a given right is present on the pair.  Self-loops are legal and
harmless (no search can re-reach an already reached vertex).

Graphs are exchanged in the TGG text format::

    tgg 1
    # comment lines and blank lines are ignored
    subject alice
    object mailbox
    subject bob
    edge alice mailbox t
    edge mailbox bob tg

UTF-8, LF line endings, one statement per line, and the ``tgg 1``
header on the first line.  Vertex names match ``[A-Za-z0-9_.-]+`` and
must be declared before any edge uses them.  Rights strings are
non-empty words over ``t g r w``; repeated letters are ignored.
``serialize_graph`` always emits the canonical form (vertices in id
order, edges sorted by endpoint ids, rights in ``tgrw`` order), so
serialize -> parse -> serialize is byte-identical.

Vertex ids are dense integers in declaration order.  They are an
internal handle: every external format speaks vertex names.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .errors import (
    DuplicateNameError,
    EmptyRightsError,
    InvalidNameError,
    ParseError,
    UnknownVertexError,
)

VertexId = int

_NAME_RE = re.compile(r"[A-Za-z0-9_.-]+\Z")

TGG_HEADER = "tgg 1"


class VertexKind(Enum):
    """Active (subject) versus passive (object) vertex."""

    SUBJECT = "subject"
    OBJECT = "object"


class Right(Enum):
    """Arc label.  Take and grant drive every algorithm here; read and
    write are stored for model completeness only."""

    T = "t"
    G = "g"
    R = "r"
    W = "w"


# Canonical order for rights strings in the text format.
RIGHT_ORDER = (Right.T, Right.G, Right.R, Right.W)


@dataclass(frozen=True)
class Edge:
    """One merged arc: all rights the ordered pair (src, dst) carries."""

    src: VertexId
    dst: VertexId
    rights: frozenset[Right]


class ProtectionGraph:
    """Directed rights-labelled graph over named subject/object vertices.

    Queries never mutate the graph, so a fully built graph may be shared
    freely across threads; only ``add_vertex``/``add_edge`` need
    exclusive access.
    """

    def __init__(self) -> None:
        self._names: list[str] = []
        self._kinds: list[VertexKind] = []
        self._ids: dict[str, VertexId] = {}
        self._out: list[dict[VertexId, set[Right]]] = []
        self._in: list[dict[VertexId, set[Right]]] = []

    # ---- construction ------------------------------------------------

    def add_vertex(self, name: str, kind: VertexKind) -> VertexId:
        """Declare a vertex; returns its dense id (0, 1, 2, ...)."""
        if not _NAME_RE.match(name):
            raise InvalidNameError(
                f"vertex name must match [A-Za-z0-9_.-]+, got {name!r}"
            )
        if name in self._ids:
            raise DuplicateNameError(f"vertex {name!r} already declared")
        vid = len(self._names)
        self._names.append(name)
        self._kinds.append(kind)
        self._ids[name] = vid
        self._out.append({})
        self._in.append({})
        return vid

    def add_edge(self, src: VertexId, dst: VertexId, rights: Iterable[Right]) -> None:
        """Add an arc src -> dst; rights union with any existing arc on the pair."""
        self._require(src)
        self._require(dst)
        rights = set(rights)
        if not rights:
            raise EmptyRightsError(f"arc {self._names[src]} -> {self._names[dst]} has no rights")
        self._out[src].setdefault(dst, set()).update(rights)
        self._in[dst].setdefault(src, set()).update(rights)

    # ---- vertex queries ----------------------------------------------

    @property
    def vertex_count(self) -> int:
        return len(self._names)

    @property
    def edge_count(self) -> int:
        return sum(len(adj) for adj in self._out)

    def vertex_name(self, v: VertexId) -> str:
        self._require(v)
        return self._names[v]

    def vertex_kind(self, v: VertexId) -> VertexKind:
        self._require(v)
        return self._kinds[v]

    def vertex_id(self, name: str) -> VertexId:
        """Id of the named vertex; raises UnknownVertexError if absent."""
        try:
            return self._ids[name]
        except KeyError:
            raise UnknownVertexError(f"no vertex named {name!r}") from None

    def has_vertex(self, name: str) -> bool:
        return name in self._ids

    def subjects(self) -> list[VertexId]:
        return [v for v, k in enumerate(self._kinds) if k is VertexKind.SUBJECT]

    def objects(self) -> list[VertexId]:
        return [v for v, k in enumerate(self._kinds) if k is VertexKind.OBJECT]

    # ---- arc queries ---------------------------------------------------

    def rights_between(self, src: VertexId, dst: VertexId) -> frozenset[Right]:
        """Rights on the arc src -> dst; empty frozenset when there is none."""
        self._require(src)
        self._require(dst)
        return frozenset(self._out[src].get(dst, ()))

    def out_arcs(self, v: VertexId) -> list[tuple[VertexId, frozenset[Right]]]:
        """All arcs leaving v as (neighbor, rights), ascending by neighbor id."""
        self._require(v)
        return [(w, frozenset(rs)) for w, rs in sorted(self._out[v].items())]

    def in_arcs(self, v: VertexId) -> list[tuple[VertexId, frozenset[Right]]]:
        """All arcs entering v as (neighbor, rights), ascending by neighbor id."""
        self._require(v)
        return [(w, frozenset(rs)) for w, rs in sorted(self._in[v].items())]

    def out_neighbors_with_right(self, v: VertexId, right: Right) -> list[VertexId]:
        """Targets of arcs v -> w carrying *right*, in ascending id order."""
        self._require(v)
        return sorted(w for w, rs in self._out[v].items() if right in rs)

    def in_neighbors_with_right(self, v: VertexId, right: Right) -> list[VertexId]:
        """Sources of arcs w -> v carrying *right*, in ascending id order."""
        self._require(v)
        return sorted(w for w, rs in self._in[v].items() if right in rs)

    def edges(self) -> list[Edge]:
        """Every merged arc, sorted by (src, dst)."""
        return [
            Edge(src, dst, frozenset(rs))
            for src in range(len(self._out))
            for dst, rs in sorted(self._out[src].items())
        ]

    def reverse(self) -> ProtectionGraph:
        """New graph with the same vertices and every arc flipped."""
        rev = ProtectionGraph()
        for name, kind in zip(self._names, self._kinds):
            rev.add_vertex(name, kind)
        for edge in self.edges():
            rev.add_edge(edge.dst, edge.src, edge.rights)
        return rev

    # ---- dunder ---------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        """Structural equality: named vertices in order, merged arc sets."""
        if not isinstance(other, ProtectionGraph):
            return NotImplemented
        return (
            self._names == other._names
            and self._kinds == other._kinds
            and self._out == other._out
        )

    def __repr__(self) -> str:
        return f"ProtectionGraph(vertices={self.vertex_count}, edges={self.edge_count})"

    def _require(self, v: VertexId) -> None:
        if not isinstance(v, int) or not 0 <= v < len(self._names):
            raise UnknownVertexError(f"vertex id {v!r} is not in this graph")


def new_graph() -> ProtectionGraph:
    """Empty graph."""
    return ProtectionGraph()


def parse_graph(text: str) -> ProtectionGraph:
    """Build a graph from TGG text; raises ParseError with a line number."""
    lines = text.split("\n")
    if not lines or lines[0].split() != TGG_HEADER.split():
        raise ParseError(1, f"expected header {TGG_HEADER!r}")
    g = ProtectionGraph()
    for lineno, raw in enumerate(lines[1:], start=2):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        keyword = tokens[0]
        if keyword in ("subject", "object"):
            if len(tokens) != 2:
                raise ParseError(lineno, f"expected '{keyword} <name>'")
            name = tokens[1]
            if not _NAME_RE.match(name):
                raise ParseError(lineno, f"bad vertex name {name!r}")
            if g.has_vertex(name):
                raise ParseError(lineno, f"duplicate vertex {name!r}")
            kind = VertexKind.SUBJECT if keyword == "subject" else VertexKind.OBJECT
            g.add_vertex(name, kind)
        elif keyword == "edge":
            if len(tokens) != 4:
                raise ParseError(lineno, "expected 'edge <from> <to> <rights>'")
            _, src_name, dst_name, rights_word = tokens
            for name in (src_name, dst_name):
                if not g.has_vertex(name):
                    raise ParseError(lineno, f"unknown vertex {name!r}")
            rights = set()
            for ch in rights_word:
                try:
                    rights.add(Right(ch))
                except ValueError:
                    raise ParseError(lineno, f"bad right letter {ch!r}") from None
            g.add_edge(g.vertex_id(src_name), g.vertex_id(dst_name), rights)
        else:
            raise ParseError(lineno, f"unknown keyword {keyword!r}")
    return g


def serialize_graph(g: ProtectionGraph) -> str:
    """Canonical TGG text for *g*; parse_graph(serialize_graph(g)) == g."""
    out = [TGG_HEADER]
    for v in range(g.vertex_count):
        out.append(f"{g.vertex_kind(v).value} {g.vertex_name(v)}")
    for edge in g.edges():
        letters = "".join(r.value for r in RIGHT_ORDER if r in edge.rights)
        out.append(f"edge {g.vertex_name(edge.src)} {g.vertex_name(edge.dst)} {letters}")
    return "\n".join(out) + "\n"
