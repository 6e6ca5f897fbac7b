"""Splines on an edge-labeled graph and finite generating sets of them."""

from __future__ import annotations

from types import MappingProxyType
from typing import Iterable, Mapping, NamedTuple, Sequence

from .algebra import ZERO, Poly, divides, homogeneous_degree, parse_poly
from .graph import EdgeLabeledGraph, GraphError, connectivity_order


class GKMViolation(NamedTuple):
    u: str
    v: str
    label: Poly
    difference: Poly

    def __str__(self) -> str:
        return f"{self.u}-{self.v}: {self.difference} not in <{self.label}>"


class SplineError(ValueError):
    def __init__(self, message: str, violations: Sequence[GKMViolation] = ()):
        super().__init__(message)
        self.violations = list(violations)


class NonHomogeneousError(ValueError):
    def __init__(self, index: int, message: str | None = None):
        super().__init__(message or f"generator {index} is not homogeneous")
        self.index = index


def _coerce_entries(G: EdgeLabeledGraph, entries) -> dict[str, Poly]:
    if isinstance(entries, Mapping):
        items = {str(k): v for k, v in entries.items()}
    else:
        entries = list(entries)
        if len(entries) != len(G.vertices):
            raise SplineError(f"expected {len(G.vertices)} entries, got {len(entries)}")
        items = dict(zip(G.vertices, entries))
    unknown = set(items) - set(G.vertices)
    if unknown:
        raise SplineError(f"entries for unknown vertices: {sorted(unknown)}")
    missing = [v for v in G.vertices if v not in items]
    if missing:
        raise SplineError(f"missing entries for vertices: {missing}")
    out = {}
    for v in G.vertices:
        p = items[v]
        if isinstance(p, Poly):
            p = p.with_nvars(G.nvars)
        elif isinstance(p, str):
            p = parse_poly(p, G.nvars)
        else:
            p = Poly.const(p, G.nvars)
        out[v] = p
    return out


def gkm_violations(G: EdgeLabeledGraph, entries) -> list[GKMViolation]:
    vals = _coerce_entries(G, entries)
    bad = []
    for u, v, lab in G.edges():
        diff = vals[u] - vals[v]
        if not divides(lab, diff):
            bad.append(GKMViolation(u, v, lab, diff))
    return bad


class Spline:
    """A vertex-indexed tuple of polynomials satisfying the edge conditions.

    Construction verifies every edge and raises SplineError listing the
    violating edges.  ``check=False`` is for callers that have just verified.
    """

    __slots__ = ("graph", "_entries", "_hash")

    def __init__(self, graph: EdgeLabeledGraph, entries, *, check: bool = True):
        self.graph = graph
        vals = _coerce_entries(graph, entries)
        if check:
            bad = gkm_violations(graph, vals)
            if bad:
                raise SplineError("not a spline: " + "; ".join(map(str, bad)), bad)
        self._entries = vals
        self._hash = None

    @classmethod
    def zero(cls, G: EdgeLabeledGraph) -> Spline:
        return cls(G, {v: Poly.zero(G.nvars) for v in G.vertices}, check=False)

    @classmethod
    def one(cls, G: EdgeLabeledGraph) -> Spline:
        return cls(G, {v: Poly.const(1, G.nvars) for v in G.vertices}, check=False)

    @property
    def entries(self) -> Mapping[str, Poly]:
        return MappingProxyType(self._entries)

    def __getitem__(self, v: str) -> Poly:
        return self._entries[v]

    def vector(self, order: Sequence[str] | None = None) -> tuple[Poly, ...]:
        order = self.graph.vertices if order is None else order
        return tuple(self._entries[v] for v in order)

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self._entries.values())

    def degree(self):
        """Common homogeneous degree of the nonzero entries; None if there is
        none; ZERO for the zero spline."""
        degs = set()
        for p in self._entries.values():
            if p.is_zero():
                continue
            d = homogeneous_degree(p)
            if d is None:
                return None
            degs.add(d)
        if not degs:
            return ZERO
        return degs.pop() if len(degs) == 1 else None

    def max_degree(self) -> int:
        return max(p.degree() for p in self._entries.values())

    def pivot(self, order: Sequence[str] | None = None) -> str | None:
        """First vertex (in ``order``) with a nonzero entry."""
        order = self.graph.vertices if order is None else order
        return next((v for v in order if not self._entries[v].is_zero()), None)

    def _same_graph(self, other: Spline):
        if other.graph != self.graph:
            raise GraphError("splines live on different graphs")

    def __add__(self, other: Spline) -> Spline:
        if not isinstance(other, Spline):
            return NotImplemented
        self._same_graph(other)
        return Spline(self.graph, {v: p + other[v] for v, p in self._entries.items()},
                      check=__debug__)

    def __sub__(self, other: Spline) -> Spline:
        if not isinstance(other, Spline):
            return NotImplemented
        self._same_graph(other)
        return Spline(self.graph, {v: p - other[v] for v, p in self._entries.items()},
                      check=__debug__)

    def __neg__(self) -> Spline:
        return Spline(self.graph, {v: -p for v, p in self._entries.items()}, check=False)

    def __mul__(self, other) -> Spline:
        if isinstance(other, Spline):
            self._same_graph(other)
            vals = {v: p * other[v] for v, p in self._entries.items()}
        elif isinstance(other, Poly):
            r = other.with_nvars(self.graph.nvars)
            vals = {v: p * r for v, p in self._entries.items()}
        elif isinstance(other, (int,)) or hasattr(other, "denominator"):
            vals = {v: p * other for v, p in self._entries.items()}
        else:
            return NotImplemented
        return Spline(self.graph, vals, check=__debug__)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, Spline):
            return NotImplemented
        return self.graph == other.graph and self._entries == other._entries

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._entries[v] for v in self.graph.vertices))
        return self._hash

    def __repr__(self) -> str:
        inner = ", ".join(f"{v}: {p}" for v, p in self._entries.items())
        return f"Spline({{{inner}}})"

    def to_dict(self, with_graph: bool = True) -> dict:
        out = {"entries": {v: str(self._entries[v]) for v in self.graph.vertices}}
        if with_graph:
            out = {"graph": self.graph.to_dict(), **out}
        return out

    @classmethod
    def from_dict(cls, data: Mapping, graph: EdgeLabeledGraph | None = None) -> Spline:
        if graph is None:
            graph = EdgeLabeledGraph.from_dict(data["graph"])
        return cls(graph, data["entries"])


def verify_gkm(G: EdgeLabeledGraph, entries) -> Spline:
    """Return the spline or raise SplineError with every violating edge."""
    return Spline(G, entries)


def spline_ring_op(p: Spline, q: Spline, op: str) -> Spline:
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown operation {op!r}")


def scalar_mul(r: Poly, p: Spline) -> Spline:
    return p * r


class GeneratingSet:
    """An ordered finite family of splines on one graph.

    ``ordering`` is the vertex order the family was built against; pivots and
    triangularity are read off in that order.
    """

    def __init__(self, graph: EdgeLabeledGraph, splines: Iterable[Spline],
                 ordering: Sequence[str] | None = None):
        self.graph = graph
        self.splines: tuple[Spline, ...] = tuple(splines)
        for s in self.splines:
            if s.graph != graph:
                raise GraphError("generator lives on a different graph")
        self.ordering: tuple[str, ...] = tuple(graph.vertices if ordering is None else ordering)
        if sorted(self.ordering) != sorted(graph.vertices):
            raise GraphError("ordering must list every vertex exactly once")

    def __len__(self) -> int:
        return len(self.splines)

    def __iter__(self):
        return iter(self.splines)

    def __getitem__(self, i: int) -> Spline:
        return self.splines[i]

    def degrees(self) -> list:
        return [s.degree() for s in self.splines]

    def homogeneous_degrees(self) -> list[int]:
        out = []
        for i, s in enumerate(self.splines):
            d = s.degree()
            if d is None or d is ZERO:
                raise NonHomogeneousError(i)
            out.append(d)
        return out

    def degree_sequence(self) -> tuple[int, ...]:
        return degree_sequence(self)

    def pivots(self) -> list[str | None]:
        return [s.pivot(self.ordering) for s in self.splines]

    def to_dict(self) -> dict:
        gens = []
        for s in self.splines:
            d = s.degree()
            gens.append({"entries": {v: str(s[v]) for v in self.graph.vertices},
                         "degree": d if isinstance(d, int) else None})
        out = {"graph": self.graph.to_dict(), "generators": gens}
        try:
            out["degree_sequence"] = list(self.degree_sequence())
        except NonHomogeneousError:
            out["degree_sequence"] = None
        return out

    @classmethod
    def from_dict(cls, data: Mapping, graph: EdgeLabeledGraph | None = None) -> GeneratingSet:
        if graph is None:
            graph = EdgeLabeledGraph.from_dict(data["graph"])
        return cls(graph, [Spline(graph, g["entries"]) for g in data["generators"]])


def degree_sequence(B: GeneratingSet) -> tuple[int, ...]:
    """Counts of generators per homogeneous degree, trailing zeros trimmed."""
    degs = B.homogeneous_degrees()
    if not degs:
        return ()
    counts = [0] * (max(degs) + 1)
    for d in degs:
        counts[d] += 1
    return tuple(counts)


def is_triangular(B: GeneratingSet, ordering: Sequence[str] | None = None) -> bool:
    """Every generator is nonzero and the pivot vertices are pairwise distinct."""
    order = B.ordering if ordering is None else tuple(ordering)
    pivots = [s.pivot(order) for s in B.splines]
    if any(p is None for p in pivots):
        return False
    return len(set(pivots)) == len(pivots)


def direct_sum_mgs(parts: Sequence[GeneratingSet], G: EdgeLabeledGraph) -> GeneratingSet:
    """Glue generating sets of vertex-disjoint pieces into one on G by zero extension."""
    owner: dict[str, int] = {}
    for i, part in enumerate(parts):
        for v in part.graph.vertices:
            if v not in G:
                raise GraphError(f"vertex {v} is not in the target graph")
            if v in owner:
                raise GraphError(f"vertex {v} belongs to two pieces")
            owner[v] = i
    missing = [v for v in G.vertices if v not in owner]
    if missing:
        raise GraphError(f"pieces do not cover vertices {missing}")
    for u, v, _ in G.edges():
        if owner[u] != owner[v]:
            raise GraphError(f"edge {u}-{v} joins two pieces")
    zero = Poly.zero(G.nvars)
    splines = []
    ordering: list[str] = []
    for part in parts:
        ordering.extend(part.ordering)
        for s in part.splines:
            vals = {v: zero for v in G.vertices}
            vals.update({v: p.with_nvars(G.nvars) for v, p in s.entries.items()})
            splines.append(Spline(G, vals))
    return GeneratingSet(G, splines, ordering)


def default_ordering(G: EdgeLabeledGraph) -> list[str]:
    return connectivity_order(G)
