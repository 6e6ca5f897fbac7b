"""Minimum generating sets for graphs carrying one or two distinct edge labels."""

from __future__ import annotations

from .algebra import Poly, lcm_gen
from .graph import (EdgeLabeledGraph, GraphError, as_cycle, component_after_label_deletion,
                    components, connectivity_order, ordered_labels)
from .spline import GeneratingSet, Spline, direct_sum_mgs


class UnsupportedGraphError(ValueError):
    """The graph lies outside the classes with a known construction."""


def _check_connected(G: EdgeLabeledGraph) -> list[str]:
    if not G.vertices:
        raise GraphError("graph has no vertices")
    return connectivity_order(G)  # raises when disconnected


def mgs_one_label(G: EdgeLabeledGraph) -> GeneratingSet:
    """The all-ones spline plus an indicator at every non-first vertex."""
    order = _check_connected(G)
    labels = ordered_labels(G)
    if len(labels) != 1 and not (len(G.vertices) == 1 and not labels):
        raise GraphError(f"expected exactly one distinct label, found {len(labels)}")
    zero = Poly.zero(G.nvars)
    splines = [Spline.one(G)]
    for v in order[1:]:
        vals = {u: zero for u in G.vertices}
        vals[v] = labels[0]
        splines.append(Spline(G, vals))
    return GeneratingSet(G, splines, order)


def _lowest_neighbor(G: EdgeLabeledGraph, v: str, pos: dict[str, int]) -> str:
    return min((w for w in G.neighbors(v) if pos[w] < pos[v]), key=pos.__getitem__)


def mgs_two_labels(G: EdgeLabeledGraph) -> GeneratingSet:
    """Basis for a connected graph whose edges carry exactly two distinct labels.

    Vertex v_i is joined to its earliest-ordered lower neighbor v_j by an edge
    with label k.  If the piece of G around v_i that avoids k-labeled edges
    stays among v_i and later vertices, the generator is k on that piece;
    otherwise it is lcm(i, j) at v_i alone.
    """
    order = _check_connected(G)
    labels = ordered_labels(G)
    if len(labels) != 2:
        raise GraphError(f"expected exactly two distinct labels, found {len(labels)}")
    lcm = lcm_gen(G.factored(labels[0]), G.factored(labels[1])).expand()
    pos = {v: i for i, v in enumerate(order)}
    zero = Poly.zero(G.nvars)
    splines = [Spline.one(G)]
    for v in order[1:]:
        k = G.label(v, _lowest_neighbor(G, v, pos))
        piece = component_after_label_deletion(G, v, k)
        vals = {u: zero for u in G.vertices}
        if all(pos[u] >= pos[v] for u in piece):
            for u in piece:
                vals[u] = k
        else:
            vals[v] = lcm
        splines.append(Spline(G, vals))
    return GeneratingSet(G, splines, order)


def mgs_component(G: EdgeLabeledGraph) -> GeneratingSet:
    labels = ordered_labels(G)
    if len(labels) <= 1:
        return mgs_one_label(G)
    if len(labels) == 2:
        return mgs_two_labels(G)
    cycle = as_cycle(G)
    if cycle is not None:
        from .mgs_cycle import is_squared_linear_form, mgs_cycle_quadratic
        if all(is_squared_linear_form(lab) for lab in labels):
            B = mgs_cycle_quadratic(cycle)
            return GeneratingSet(G, [Spline(G, s.entries, check=False) for s in B],
                                 B.ordering)
    raise UnsupportedGraphError(
        f"out of supported class: component with vertices {list(G.vertices)} has "
        f"{len(labels)} distinct labels and is not a cycle labeled by squared linear forms")


def mgs_dispatch(G: EdgeLabeledGraph) -> GeneratingSet:
    """Generating set for G, built component by component."""
    return direct_sum_mgs([mgs_component(c) for c in components(G)], G)
