"""Quivers and path words.

A quiver is a finite directed multigraph with integer vertex/arrow ids and
unique string labels.  Paths compose left to right: in the word ``p.q`` the
path ``p`` is traversed first, so consecutive arrows must satisfy
``target(p[n]) == source(p[n+1])``.
"""

from __future__ import annotations

from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple


class Vertex(NamedTuple):
    id: int
    label: str


class Arrow(NamedTuple):
    id: int
    label: str
    source: int
    target: int


class PathWord(NamedTuple):
    """A path in a quiver: a start vertex and a composable arrow-id sequence.

    The empty sequence is the trivial path at ``source``.  Ordering of paths
    throughout the package is by the degree-lexicographic key
    ``(len(arrows), arrows)``.
    """

    source: int
    arrows: Tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.arrows)

    def deglex_key(self) -> Tuple[int, Tuple[int, ...]]:
        return (len(self.arrows), self.arrows)


class Quiver:
    """A finite quiver with labeled vertices and arrows.

    Args:
        vertices: iterable of (id, label) pairs.
        arrows: iterable of (id, label, source, target) tuples.

    Raises:
        ValueError: on duplicate ids/labels or dangling arrow endpoints.
    """

    def __init__(
        self,
        vertices: Iterable[Tuple[int, str]],
        arrows: Iterable[Tuple[int, str, int, int]],
    ):
        self.vertices: List[Vertex] = [Vertex(int(i), str(s)) for i, s in vertices]
        self.arrows: List[Arrow] = [
            Arrow(int(i), str(s), int(a), int(b)) for i, s, a, b in arrows
        ]
        self._vertex_by_id: Dict[int, Vertex] = {}
        self._vertex_by_label: Dict[str, Vertex] = {}
        for v in self.vertices:
            if v.id in self._vertex_by_id:
                raise ValueError(f"duplicate vertex id {v.id}")
            if v.label in self._vertex_by_label:
                raise ValueError(f"duplicate vertex label {v.label!r}")
            self._vertex_by_id[v.id] = v
            self._vertex_by_label[v.label] = v
        self._arrow_by_id: Dict[int, Arrow] = {}
        self._arrow_by_label: Dict[str, Arrow] = {}
        for a in self.arrows:
            if a.id in self._arrow_by_id:
                raise ValueError(f"duplicate arrow id {a.id}")
            if a.label in self._arrow_by_label:
                raise ValueError(f"duplicate arrow label {a.label!r}")
            if a.source not in self._vertex_by_id or a.target not in self._vertex_by_id:
                raise ValueError(f"arrow {a.label!r} has undeclared endpoint")
            self._arrow_by_id[a.id] = a
            self._arrow_by_label[a.label] = a
        self._out: Dict[int, List[Arrow]] = {v.id: [] for v in self.vertices}
        self._in: Dict[int, List[Arrow]] = {v.id: [] for v in self.vertices}
        for a in self.arrows:
            self._out[a.source].append(a)
            self._in[a.target].append(a)

    # ------------------------------------------------------------------
    # lookups

    @property
    def vertex_ids(self) -> List[int]:
        return [v.id for v in self.vertices]

    def vertex(self, vid: int) -> Vertex:
        return self._vertex_by_id[vid]

    def vertex_by_label(self, label: str) -> Vertex:
        return self._vertex_by_label[label]

    def has_vertex(self, vid: int) -> bool:
        return vid in self._vertex_by_id

    def arrow(self, aid: int) -> Arrow:
        return self._arrow_by_id[aid]

    def arrow_by_label(self, label: str) -> Arrow:
        return self._arrow_by_label[label]

    def arrows_from(self, vid: int) -> List[Arrow]:
        return self._out[vid]

    def arrows_into(self, vid: int) -> List[Arrow]:
        return self._in[vid]

    def is_sink(self, vid: int) -> bool:
        return not self._out[vid]

    def is_source(self, vid: int) -> bool:
        return not self._in[vid]

    def sinks(self) -> List[int]:
        return [v.id for v in self.vertices if self.is_sink(v.id)]

    def sources(self) -> List[int]:
        return [v.id for v in self.vertices if self.is_source(v.id)]

    def is_acyclic(self) -> bool:
        """True iff the quiver has no directed cycle."""
        state: Dict[int, int] = {}

        def visit(v: int) -> bool:
            state[v] = 1
            for a in self._out[v]:
                s = state.get(a.target, 0)
                if s == 1:
                    return False
                if s == 0 and not visit(a.target):
                    return False
            state[v] = 2
            return True

        return all(state.get(v.id, 0) == 2 or visit(v.id) for v in self.vertices)

    def is_connected(self) -> bool:
        """True iff the underlying undirected graph is connected (or empty)."""
        if not self.vertices:
            return True
        seen = {self.vertices[0].id}
        stack = [self.vertices[0].id]
        while stack:
            v = stack.pop()
            for a in self._out[v] + self._in[v]:
                for w in (a.source, a.target):
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
        return len(seen) == len(self.vertices)

    # ------------------------------------------------------------------
    # paths

    def trivial_path(self, vid: int) -> PathWord:
        if vid not in self._vertex_by_id:
            raise ValueError(f"unknown vertex {vid}")
        return PathWord(vid, ())

    def path_target(self, path: PathWord) -> int:
        if not path.arrows:
            return path.source
        return self._arrow_by_id[path.arrows[-1]].target

    def path_is_valid(self, path: PathWord) -> bool:
        at = path.source
        for aid in path.arrows:
            a = self._arrow_by_id.get(aid)
            if a is None or a.source != at:
                return False
            at = a.target
        return True

    def compose(self, p: PathWord, q: PathWord) -> Optional[PathWord]:
        """The path "p then q", or None if endpoints do not match."""
        if self.path_target(p) != q.source:
            return None
        return PathWord(p.source, p.arrows + q.arrows)

    def path_from_labels(self, labels: Sequence[str]) -> PathWord:
        """Build a nontrivial path from a left-to-right arrow label sequence."""
        if not labels:
            raise ValueError("empty label sequence has no start vertex")
        ids = []
        at = None
        for lab in labels:
            if lab not in self._arrow_by_label:
                raise ValueError(f"unknown arrow label {lab!r}")
            a = self._arrow_by_label[lab]
            if at is not None and a.source != at:
                raise ValueError(
                    f"arrows {labels!r} do not compose at {lab!r}"
                )
            ids.append(a.id)
            at = a.target
        return PathWord(self._arrow_by_label[labels[0]].source, tuple(ids))

    def path_label(self, path: PathWord) -> str:
        if not path.arrows:
            return f"e_{self._vertex_by_id[path.source].label}"
        return ".".join(self._arrow_by_id[a].label for a in path.arrows)

    # ------------------------------------------------------------------
    # derived quivers

    def opposite(self) -> "Quiver":
        """Same ids and labels, every arrow reversed."""
        return Quiver(
            [(v.id, v.label) for v in self.vertices],
            [(a.id, a.label, a.target, a.source) for a in self.arrows],
        )

    def __repr__(self):
        return (
            f"Quiver({len(self.vertices)} vertices, {len(self.arrows)} arrows)"
        )
