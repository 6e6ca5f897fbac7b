"""Edge-labeled graphs, cycles, and the combinatorics the constructions need."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .algebra import MAX_VARS, FactoredGen, Poly, factor_generator, parse_poly


class GraphError(ValueError):
    pass


class CycleError(GraphError):
    pass


def canonical_label(p: Poly) -> Poly:
    """Ideal generators are compared through their monic representative."""
    if p.is_zero():
        raise GraphError("edge label must be a nonzero polynomial")
    return p.monic()


def _as_poly(label, nvars: int) -> Poly:
    if isinstance(label, Poly):
        return label.with_nvars(nvars)
    return parse_poly(str(label), nvars)


class EdgeLabeledGraph:
    """A finite simple graph whose edges carry principal-ideal generators.

    Vertex ids are opaque strings kept in input order; labels are stored in
    monic canonical form so two edges carry the same ideal exactly when their
    labels compare equal.  ``nvars`` is the number of ring variables; when it
    is not given it is inferred from the labels, with the bivariate ring as
    the floor.
    """

    def __init__(self, vertices: Iterable, edges: Iterable[Sequence] = (),
                 nvars: int | None = None):
        self.vertices: tuple[str, ...] = tuple(str(v) for v in vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise GraphError("duplicate vertex id")
        self._index = {v: i for i, v in enumerate(self.vertices)}
        raw = []
        for e in edges:
            u, v, label = str(e[0]), str(e[1]), e[2]
            factors = e[3] if len(e) > 3 else None
            raw.append((u, v, label, factors))
        if nvars is None:
            used = 0
            for _, _, label, _ in raw:
                p = _as_poly(label, MAX_VARS) if not isinstance(label, Poly) else label
                used = max(used, max(p.used_variables(), default=-1) + 1)
            nvars = max(2, used)
        self.nvars = nvars
        self._labels: dict[frozenset, Poly] = {}
        self._edge_order: list[tuple[str, str]] = []
        self._supplied: dict[Poly, FactoredGen] = {}
        self._adj: dict[str, list[str]] = {v: [] for v in self.vertices}
        for u, v, label, factors in raw:
            if u not in self._index or v not in self._index:
                raise GraphError(f"edge {u}-{v} references an unknown vertex")
            if u == v:
                raise GraphError(f"loop at {u}")
            key = frozenset((u, v))
            if key in self._labels:
                raise GraphError(f"duplicate edge {u}-{v}")
            p = canonical_label(_as_poly(label, nvars))
            self._labels[key] = p
            self._edge_order.append((u, v))
            self._adj[u].append(v)
            self._adj[v].append(u)
            if factors is not None:
                fs = [(_as_poly(f, nvars), int(k)) for f, k in factors]
                self._supplied[p] = factor_generator(p, fs)
        for v in self.vertices:
            self._adj[v].sort(key=self._index.__getitem__)
        self._factored: dict[Poly, FactoredGen] = dict(self._supplied)
        self._hash = None

    # -- basic queries ------------------------------------------------------

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, v) -> bool:
        return v in self._index

    def index(self, v: str) -> int:
        return self._index[v]

    def neighbors(self, v: str) -> list[str]:
        return list(self._adj[v])

    def degree(self, v: str) -> int:
        return len(self._adj[v])

    def has_edge(self, u: str, v: str) -> bool:
        return frozenset((u, v)) in self._labels

    def label(self, u: str, v: str) -> Poly:
        try:
            return self._labels[frozenset((u, v))]
        except KeyError:
            raise GraphError(f"no edge {u}-{v}") from None

    def edges(self) -> list[tuple[str, str, Poly]]:
        """Edges in input order as (u, v, label)."""
        return [(u, v, self._labels[frozenset((u, v))]) for u, v in self._edge_order]

    def factored(self, label: Poly) -> FactoredGen:
        if label not in self._factored:
            self._factored[label] = factor_generator(label)
        return self._factored[label]

    def supplied_factors(self) -> Mapping[Poly, FactoredGen]:
        return dict(self._supplied)

    def induced(self, keep: Iterable[str]) -> EdgeLabeledGraph:
        keep = set(keep)
        verts = [v for v in self.vertices if v in keep]
        edges = [(u, v, lab) for u, v, lab in self.edges() if u in keep and v in keep]
        g = EdgeLabeledGraph(verts, edges, nvars=self.nvars)
        g._factored.update(self._factored)
        g._supplied.update({k: f for k, f in self._supplied.items()})
        return g

    def is_connected(self) -> bool:
        return len(components(self)) <= 1

    def _key(self):
        return (self.vertices, self.nvars,
                tuple(sorted((tuple(sorted(k)), str(p)) for k, p in self._labels.items())))

    def __eq__(self, other) -> bool:
        if not isinstance(other, EdgeLabeledGraph):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._key())
        return self._hash

    def __repr__(self) -> str:
        return f"EdgeLabeledGraph({len(self.vertices)} vertices, {len(self._labels)} edges)"

    # -- serialization ------------------------------------------------------

    @classmethod
    def from_dict(cls, data: Mapping) -> EdgeLabeledGraph:
        edges = []
        for e in data.get("edges", []):
            item = [e["u"], e["v"], e["label"]]
            if e.get("factors") is not None:
                item.append(e["factors"])
            edges.append(item)
        return cls(data["vertices"], edges, nvars=data.get("nvars"))

    def to_dict(self) -> dict:
        out = {"vertices": list(self.vertices),
               "edges": [{"u": u, "v": v, "label": str(lab)} for u, v, lab in self.edges()]}
        if self.nvars != 2:
            out["nvars"] = self.nvars
        return out


class CycleGraph(EdgeLabeledGraph):
    """An n-cycle (n >= 3) with a fixed cyclic vertex order.

    ``cycle_labels[i]`` labels the edge ``order[i] -- order[i+1]`` (indices mod n).
    """

    def __init__(self, order: Sequence, labels: Sequence, nvars: int | None = None):
        order = [str(v) for v in order]
        n = len(order)
        if n < 3:
            raise CycleError("a cycle needs at least 3 vertices")
        if len(labels) != n:
            raise CycleError(f"expected {n} labels, got {len(labels)}")
        edges = [(order[i], order[(i + 1) % n], labels[i]) for i in range(n)]
        super().__init__(order, edges, nvars=nvars)
        self.order: tuple[str, ...] = tuple(order)
        self.cycle_labels: tuple[Poly, ...] = tuple(
            self.label(order[i], order[(i + 1) % n]) for i in range(n))

    @classmethod
    def from_graph(cls, G: EdgeLabeledGraph) -> CycleGraph:
        c = as_cycle(G)
        if c is None:
            raise CycleError("graph is not a cycle")
        return c

    @property
    def n(self) -> int:
        return len(self.order)


def as_cycle(G: EdgeLabeledGraph) -> CycleGraph | None:
    """View G as a cycle (walking from its first vertex) or return None."""
    if isinstance(G, CycleGraph):
        return G
    n = len(G.vertices)
    if n < 3 or len(G.edges()) != n or any(G.degree(v) != 2 for v in G.vertices):
        return None
    start = G.vertices[0]
    order = [start]
    prev, cur = None, start
    while True:
        nxt = next(w for w in G.neighbors(cur) if w != prev)
        if nxt == start:
            break
        if nxt in order:
            return None
        order.append(nxt)
        prev, cur = cur, nxt
    if len(order) != n:
        return None
    labels = [G.label(order[i], order[(i + 1) % n]) for i in range(n)]
    c = CycleGraph(order, labels, nvars=G.nvars)
    c._factored.update(G._factored)
    return c


# -- traversal --------------------------------------------------------------

def connectivity_order(G: EdgeLabeledGraph) -> list[str]:
    """Breadth-first order from the first vertex; each later vertex has an
    earlier neighbor.  Neighbors are visited in input order."""
    if not G.vertices:
        return []
    start = G.vertices[0]
    seen = {start}
    order = [start]
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in G.neighbors(v):
            if w not in seen:
                seen.add(w)
                order.append(w)
                queue.append(w)
    if len(order) != len(G.vertices):
        raise GraphError("graph is disconnected")
    return order


def _component_of(G: EdgeLabeledGraph, v: str, skip_label: Poly | None = None) -> set[str]:
    seen = {v}
    stack = [v]
    while stack:
        u = stack.pop()
        for w in G.neighbors(u):
            if w not in seen and (skip_label is None or G.label(u, w) != skip_label):
                seen.add(w)
                stack.append(w)
    return seen


def components(G: EdgeLabeledGraph) -> list[EdgeLabeledGraph]:
    """Connected components as induced subgraphs, ordered by first vertex."""
    out = []
    assigned: set[str] = set()
    for v in G.vertices:
        if v in assigned:
            continue
        comp = _component_of(G, v)
        assigned |= comp
        out.append(G.induced(comp))
    return out


def component_after_label_deletion(G: EdgeLabeledGraph, v: str, k: Poly) -> set[str]:
    """Vertices reachable from v without using an edge labeled k."""
    if v not in G:
        raise GraphError(f"unknown vertex {v}")
    return _component_of(G, v, canonical_label(k.with_nvars(G.nvars)))


def distinct_labels(G: EdgeLabeledGraph) -> set[Poly]:
    return set(ordered_labels(G))


def ordered_labels(G: EdgeLabeledGraph) -> list[Poly]:
    """Distinct labels in order of first appearance."""
    seen: dict[Poly, None] = {}
    for _, _, lab in G.edges():
        seen.setdefault(lab, None)
    return list(seen)


# -- cycle reduction --------------------------------------------------------

@dataclass(frozen=True)
class ReductionRecord:
    position: int      # index of the removed vertex in the cycle it was removed from
    vertex: str
    label: Poly        # the repeated label on both incident edges
    prev: str          # cyclic predecessor at removal time
    next: str          # cyclic successor at removal time


ReductionLog = list  # of ReductionRecord, in removal order


def is_reduced(C: CycleGraph) -> bool:
    labs = C.cycle_labels
    return all(labs[i - 1] != labs[i] for i in range(len(labs)))


def reduce_cycle(C: CycleGraph, start: int = 0) -> tuple[CycleGraph, list[ReductionRecord]]:
    """Remove vertices whose two incident edges share a label.

    The scan runs cyclically from ``start`` and restarts after every removal.
    """
    if len(set(C.cycle_labels)) < 3:
        raise CycleError("reduction needs at least three distinct labels")
    order = list(C.order)
    labels = list(C.cycle_labels)
    log: list[ReductionRecord] = []
    while True:
        n = len(order)
        for t in range(n):
            i = (start + t) % n
            if labels[i - 1] == labels[i]:
                log.append(ReductionRecord(i, order[i], labels[i], order[i - 1],
                                           order[(i + 1) % n]))
                order.pop(i)
                labels.pop(i)
                break
        else:
            break
    reduced = CycleGraph(order, labels, nvars=C.nvars)
    reduced._factored.update(C._factored)
    return reduced, log


def insert_vertex(C: CycleGraph, rec: ReductionRecord) -> CycleGraph:
    """Undo one reduction step: put ``rec.vertex`` back between prev and next."""
    order = list(C.order)
    labels = list(C.cycle_labels)
    n = len(order)
    p = rec.position
    if not 0 <= p <= n or order[p - 1] != rec.prev or order[p % n] != rec.next:
        raise CycleError(f"log entry for {rec.vertex} does not match the current cycle")
    if labels[p - 1] != rec.label:
        raise CycleError(f"edge {rec.prev}-{rec.next} is not labeled {rec.label}")
    order.insert(p, rec.vertex)
    labels.insert(p, rec.label)
    out = CycleGraph(order, labels, nvars=C.nvars)
    out._factored.update(C._factored)
    return out


def successive_distinct_windows(C: CycleGraph) -> list[int]:
    """Offsets i where edges i, i+1, i+2 carry pairwise distinct labels."""
    labs = C.cycle_labels
    n = len(labs)
    return [i for i in range(n)
            if len({labs[i], labs[(i + 1) % n], labs[(i + 2) % n]}) == 3]


def find_three_successive_distinct(C: CycleGraph, choice: int = 0) -> int:
    if not is_reduced(C) or len(set(C.cycle_labels)) < 3:
        raise CycleError("need a reduced cycle with at least three distinct labels")
    windows = successive_distinct_windows(C)
    if not windows:  # impossible for reduced cycles with >= 3 labels
        raise CycleError("no window of three successive distinct labels")
    return windows[choice % len(windows)]
