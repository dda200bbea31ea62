"""Labeled orbit graphs, breadth-first construction, distances and export.

Edges carry a generator index ``k`` and point from ``v`` to ``v . x_k``.
A vertex is *explored* once all of its out-edges are known; for graphs
built by :func:`build_orbit_graph` its in-edges are recorded as well
(``inverse_closed``). Everything still waiting to be expanded is on the
*frontier*, and any computation that would need the neighbourhood of a
frontier vertex raises :class:`FrontierError` instead of guessing.
"""

from __future__ import annotations

import json
from collections import deque
from typing import Callable, Dict, Hashable, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

__all__ = [
    "FrontierError",
    "LabeledGraph",
    "build_orbit_graph",
    "ball",
    "distance",
    "label_text",
]


class FrontierError(RuntimeError):
    """A computation reached a vertex whose neighbourhood was never explored."""


def label_text(k: int) -> str:
    return f"x{k}"


def _parse_label(text: str) -> int:
    if not text.startswith("x") or not text[1:].isdigit():
        raise ValueError(f"bad edge label {text!r}")
    return int(text[1:])


class LabeledGraph:
    """Directed multigraph with generator-labeled edges over hashable keys."""

    def __init__(self, generators: Sequence[int] = (0, 1), inverse_closed: bool = True,
                 key_text: Callable[[Hashable], str] = str):
        self.generators = tuple(generators)
        self.inverse_closed = inverse_closed
        self.key_text = key_text
        self._vertices: Dict[Hashable, None] = {}
        self._edges: Dict[Tuple[Hashable, Hashable, int], None] = {}
        self._out: Dict[Hashable, Dict[int, List[Hashable]]] = {}
        self._in: Dict[Hashable, Dict[int, List[Hashable]]] = {}
        self.frontier: Set[Hashable] = set()
        self.meta: dict = {}

    # -- construction -------------------------------------------------

    def add_vertex(self, v: Hashable, frontier: bool = False) -> None:
        if v not in self._vertices:
            self._vertices[v] = None
            self._out[v] = {}
            self._in[v] = {}
        if frontier:
            self.frontier.add(v)
        else:
            self.frontier.discard(v)

    def add_edge(self, u: Hashable, v: Hashable, label: int) -> None:
        e = (u, v, label)
        if e in self._edges:
            return
        for w in (u, v):
            if w not in self._vertices:
                self.add_vertex(w, frontier=True)
        self._edges[e] = None
        self._out[u].setdefault(label, []).append(v)
        self._in[v].setdefault(label, []).append(u)

    # -- queries ------------------------------------------------------

    def __contains__(self, v) -> bool:
        return v in self._vertices

    def __len__(self) -> int:
        return len(self._vertices)

    @property
    def vertices(self) -> List[Hashable]:
        return list(self._vertices)

    @property
    def edges(self) -> List[Tuple[Hashable, Hashable, int]]:
        return list(self._edges)

    def edge_count(self) -> int:
        return len(self._edges)

    def is_explored(self, v) -> bool:
        return v in self._vertices and v not in self.frontier

    def explored(self) -> List[Hashable]:
        return [v for v in self._vertices if v not in self.frontier]

    def successors(self, v, label: int) -> List[Hashable]:
        return list(self._out[v].get(label, ()))

    def predecessors(self, v, label: int) -> List[Hashable]:
        return list(self._in[v].get(label, ()))

    def step(self, v, label: int, sign: int = 1) -> Hashable:
        """Follow the unique edge ``v -> v . x_label^sign``.

        Raises ``KeyError`` if the edge is missing and ``FrontierError`` if
        ``v`` is unexplored and the edge is not known.
        """
        table = self._out if sign == 1 else self._in
        targets = table[v].get(label, ())
        if len(targets) == 1:
            return targets[0]
        if not targets and v in self.frontier:
            raise FrontierError(f"{self.key_text(v)} is on the frontier")
        if not targets:
            raise KeyError(f"no {label_text(label)}^{sign} edge at {self.key_text(v)}")
        raise ValueError(f"{label_text(label)} is not a function at {self.key_text(v)}")

    def follow(self, v, word: Iterable[Tuple[int, int]]) -> Hashable:
        for label, sign in word:
            v = self.step(v, label, sign)
        return v

    def neighbors(self, v) -> Set[Hashable]:
        """Vertices joined to ``v`` by an edge in either direction, loops excluded."""
        out: Set[Hashable] = set()
        for targets in self._out[v].values():
            out.update(targets)
        for sources in self._in[v].values():
            out.update(sources)
        out.discard(v)
        return out

    def neighborhood_known(self, v) -> bool:
        """Whether every edge at ``v`` is recorded."""
        return self.is_explored(v) and self.inverse_closed

    # -- export -------------------------------------------------------

    def to_json_dict(self) -> dict:
        kt = self.key_text
        return {
            "generators": [label_text(k) for k in self.generators],
            "inverse_closed": self.inverse_closed,
            "vertices": [{"key": kt(v), "frontier": v in self.frontier} for v in self._vertices],
            "edges": [
                {"source": kt(u), "target": kt(v), "label": label_text(k)} for u, v, k in self._edges
            ],
            "meta": self.meta,
        }

    def to_json(self, indent: Optional[int] = None) -> str:
        return json.dumps(self.to_json_dict(), indent=indent, sort_keys=True)

    @classmethod
    def from_json(cls, data) -> "LabeledGraph":
        """Rebuild a graph from :meth:`to_json` output; vertex keys become strings."""
        if isinstance(data, str):
            data = json.loads(data)
        g = cls([_parse_label(x) for x in data.get("generators", ["x0", "x1"])],
                inverse_closed=bool(data.get("inverse_closed", False)))
        for item in data["vertices"]:
            g.add_vertex(item["key"], frontier=bool(item.get("frontier", False)))
        for e in data["edges"]:
            g.add_edge(e["source"], e["target"], _parse_label(e["label"]))
        g.meta = dict(data.get("meta", {}))
        return g

    def to_dot(self, name: str = "G") -> str:
        """Graphviz source: ``x0`` edges dashed, ``x1`` edges solid."""
        kt = self.key_text
        ids = {v: f"n{i}" for i, v in enumerate(self._vertices)}
        lines = [f"digraph {name} {{"]
        for v, nid in ids.items():
            style = ', style=dotted' if v in self.frontier else ""
            label = kt(v).replace('"', '\\"')
            lines.append(f'  {nid} [label="{label}"{style}];')
        for u, v, k in self._edges:
            style = "dashed" if k == 0 else "solid"
            lines.append(f'  {ids[u]} -> {ids[v]} [style={style}, label="{label_text(k)}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


Action = Callable[[Hashable, int, int], Hashable]


def build_orbit_graph(
    seeds: Iterable[Hashable],
    act: Action,
    generators: Sequence[int] = (0, 1),
    depth: Optional[int] = None,
    max_vertices: Optional[int] = None,
    keep: Optional[Callable[[Hashable], bool]] = None,
    sort_key: Optional[Callable[[Hashable], object]] = None,
) -> LabeledGraph:
    """Breadth-first orbit graph of the iterable ``seeds`` under ``act(v, k, sign)``.

    A vertex is expanded (all generators and inverses applied) when its BFS
    distance is below ``depth``, ``keep(v)`` holds, and fewer than
    ``max_vertices`` vertices have been expanded. Everything discovered but
    not expanded ends up on the frontier. Each BFS layer is processed in
    ``sort_key`` order when given, otherwise in discovery order.
    """
    g = LabeledGraph(generators, inverse_closed=True)
    layer = []
    for s in seeds:
        if s not in g:
            g.add_vertex(s, frontier=True)
            layer.append(s)
    dist = 0
    expanded = 0
    while layer:
        if sort_key is not None:
            layer.sort(key=sort_key)
        nxt = []
        for v in layer:
            if depth is not None and dist >= depth:
                continue
            if keep is not None and not keep(v):
                continue
            if max_vertices is not None and expanded >= max_vertices:
                continue
            expanded += 1
            g.add_vertex(v, frontier=False)
            for k in generators:
                w = act(v, k, 1)
                u = act(v, k, -1)
                for x in (w, u):
                    if x not in g:
                        g.add_vertex(x, frontier=True)
                        nxt.append(x)
                g.add_edge(v, w, k)
                g.add_edge(u, v, k)
        layer = nxt
        dist += 1
    g.meta["expanded"] = expanded
    return g


def ball(g: LabeledGraph, sources: Iterable[Hashable], radius: int) -> Dict[Hashable, int]:
    """All vertices within ``radius`` of ``sources`` with their distances.

    Every vertex that has to be expanded (distance < radius) must have a
    fully known neighbourhood.
    """
    dist: Dict[Hashable, int] = {}
    queue: deque = deque()
    for s in sources:
        if s not in g:
            raise KeyError(f"{g.key_text(s)} is not a vertex")
        if s not in dist:
            dist[s] = 0
            queue.append(s)
    while queue:
        v = queue.popleft()
        d = dist[v]
        if d >= radius:
            continue
        if not g.neighborhood_known(v):
            raise FrontierError(f"{g.key_text(v)} at distance {d} is not fully explored")
        for w in g.neighbors(v):
            if w not in dist:
                dist[w] = d + 1
                queue.append(w)
    return dist


def distance(g: LabeledGraph, a: Hashable, b: Hashable, max_radius: Optional[int] = None) -> Optional[int]:
    """Exact undirected distance from ``a`` to ``b`` inside ``g``.

    Raises :class:`FrontierError` if the search must pass through an
    unexplored vertex before reaching ``b``, since the true distance could
    then be shorter than anything visible. Returns ``None`` only when
    ``max_radius`` is exhausted.
    """
    if a not in g or b not in g:
        missing = a if a not in g else b
        raise FrontierError(f"{g.key_text(missing)} lies outside the truncation")
    if a == b:
        return 0
    seen = {a}
    layer = [a]
    d = 0
    while layer:
        if max_radius is not None and d >= max_radius:
            return None
        nxt = []
        for v in layer:
            if not g.neighborhood_known(v):
                raise FrontierError(f"{g.key_text(v)} at distance {d} is not fully explored")
            for w in g.neighbors(v):
                if w == b:
                    return d + 1
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        layer = nxt
        d += 1
    return None
