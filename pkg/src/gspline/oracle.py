"""Brute-force linear algebra used to check constructed generating sets.

Everything here works on coefficient vectors over Q and never looks at how a
generating set was produced.  Spline spaces are cut out by the system
p_u - p_v - q_e * f_e = 0 over all edges e = uv, with the quotients q_e as
auxiliary unknowns; the dimension of the spline space is the rank of the
solution space after projecting away the q_e coordinates.
"""

from __future__ import annotations

import random
from functools import lru_cache
from math import comb
from typing import Iterable

from .algebra import Poly, homogeneous_degree
from .graph import EdgeLabeledGraph
from .linsolve import nullspace, rank, solve_linear
from .spline import GeneratingSet, Spline


# -- monomials --------------------------------------------------------------

@lru_cache(maxsize=None)
def monomials_of_degree(j: int, nvars: int) -> tuple[tuple[int, ...], ...]:
    if j < 0:
        return ()
    if nvars == 0:
        return ((),) if j == 0 else ()
    if nvars == 1:
        return ((j,),)
    out = []
    for first in range(j, -1, -1):
        for rest in monomials_of_degree(j - first, nvars - 1):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def monomials_up_to(d: int, nvars: int) -> tuple[tuple[int, ...], ...]:
    out = []
    for j in range(d + 1):
        out.extend(monomials_of_degree(j, nvars))
    return tuple(out)


def monomial_count(d: int, nvars: int = 2) -> int:
    """Number of monomials of total degree at most d."""
    return comb(d + nvars, nvars) if d >= 0 else 0


def _add(e1, e2):
    return tuple(a + b for a, b in zip(e1, e2))


def _sub(e1, e2):
    out = tuple(a - b for a, b in zip(e1, e2))
    return out if all(a >= 0 for a in out) else None


def _labels_homogeneous(G: EdgeLabeledGraph) -> bool:
    return all(homogeneous_degree(lab) is not None for _, _, lab in G.edges())


# -- the spline system --------------------------------------------------------

def _spline_system(G: EdgeLabeledGraph, p_monos, q_monos_for, row_monos, reduce=None):
    """Rows of the linear system for p_u - p_v - q*f = 0.

    ``p_monos``: monomials allowed in vertex entries.  ``q_monos_for(f)``:
    monomials allowed in the quotient for label f.  ``row_monos``: monomials
    whose coefficients are constrained.  ``reduce(f)`` optionally replaces the
    label before multiplying (used for truncation).  Returns the matrix, the
    number of vertex columns and the number of quotient columns.
    """
    nv = len(G.vertices)
    p_idx = {m: i for i, m in enumerate(p_monos)}
    np_cols = nv * len(p_monos)
    vpos = {v: i for i, v in enumerate(G.vertices)}
    row_idx = {m: i for i, m in enumerate(row_monos)}
    edges = G.edges()
    q_blocks = []
    col = np_cols
    for _, _, f in edges:
        qm = q_monos_for(f)
        q_blocks.append((col, qm))
        col += len(qm)
    ncols = col
    rows = []
    for (u, v, f), (qstart, qm) in zip(edges, q_blocks):
        f_used = reduce(f) if reduce else f
        block = [[0] * ncols for _ in row_monos]
        for m, r in row_idx.items():
            if m in p_idx:
                block[r][vpos[u] * len(p_monos) + p_idx[m]] += 1
                block[r][vpos[v] * len(p_monos) + p_idx[m]] -= 1
        for k, qmono in enumerate(qm):
            for fe, fc in f_used.terms.items():
                r = row_idx.get(_add(qmono, fe))
                if r is not None:
                    block[r][qstart + k] -= fc
        rows.extend(row for row in block if any(row))
    return rows, np_cols, ncols - np_cols


def _projected_dimension(rows, np_cols: int, nq_cols: int) -> int:
    """Dimension of the kernel projected onto the first np_cols coordinates."""
    ncols = np_cols + nq_cols
    if not rows:
        return np_cols
    kernel_dim = ncols - rank(rows, ncols)
    q_only = [row[np_cols:] for row in rows]
    witness_dim = nq_cols - (rank(q_only, nq_cols) if nq_cols else 0)
    return kernel_dim - witness_dim


@lru_cache(maxsize=4096)
def _graded_dimension(G: EdgeLabeledGraph, j: int) -> int:
    n = G.nvars
    monos = monomials_of_degree(j, n)
    rows, npc, nqc = _spline_system(
        G, monos, lambda f: monomials_of_degree(j - f.degree(), n), monos)
    return _projected_dimension(rows, npc, nqc)


@lru_cache(maxsize=1024)
def _full_dimension(G: EdgeLabeledGraph, d: int) -> int:
    n = G.nvars
    monos = monomials_up_to(d, n)
    rows, npc, nqc = _spline_system(
        G, monos, lambda f: monomials_up_to(d - f.degree(), n), monos)
    return _projected_dimension(rows, npc, nqc)


def spline_space_dimension(G: EdgeLabeledGraph, d: int) -> int:
    """Dimension over Q of the splines on G whose entries have degree <= d.

    With homogeneous labels the space splits by degree and each graded piece
    is solved separately; otherwise the whole degree <= d system is solved.
    """
    if d < 0:
        return 0
    if _labels_homogeneous(G):
        return sum(_graded_dimension(G, j) for j in range(d + 1))
    return _full_dimension(G, d)


def quotient_spline_dimension(G: EdgeLabeledGraph, d: int) -> int:
    """Dimension of splines with coefficients in Q[x]/(monomials of degree d+1).

    Entries and quotients range over polynomials of degree <= d; products are
    read modulo the monomials of degree above d.
    """
    if d < 0:
        return 0
    n = G.nvars
    monos = monomials_up_to(d, n)
    rows, npc, nqc = _spline_system(
        G, monos, lambda f: monos, monos, reduce=lambda f: f.truncate(d))
    return _projected_dimension(rows, npc, nqc)


# -- explicit splines ---------------------------------------------------------

def _vector_to_spline(G: EdgeLabeledGraph, vec, monos) -> Spline:
    k = len(monos)
    vals = {}
    for i, v in enumerate(G.vertices):
        vals[v] = Poly({m: vec[i * k + t] for t, m in enumerate(monos)}, G.nvars)
    return Spline(G, vals)


def spline_space_basis(G: EdgeLabeledGraph, d: int) -> list[Spline]:
    """A Q-basis of the splines of degree <= d (homogeneous pieces when the
    labels are homogeneous)."""
    n = G.nvars
    out = []
    if _labels_homogeneous(G):
        blocks = [(monomials_of_degree(j, n),
                   (lambda j: lambda f: monomials_of_degree(j - f.degree(), n))(j))
                  for j in range(d + 1)]
    else:
        blocks = [(monomials_up_to(d, n), lambda f: monomials_up_to(d - f.degree(), n))]
    for monos, qfor in blocks:
        rows, npc, nqc = _spline_system(G, monos, qfor, monos)
        kern = nullspace(rows, npc + nqc) if rows else [
            [int(i == k) for i in range(npc)] for k in range(npc)]
        projected = [vec[:npc] for vec in kern if any(vec[:npc])]
        chosen = projected
        if projected and rank(projected, npc) < len(projected):
            # a zero label would let witnesses vary; keep an independent subset
            chosen = []
            for vec in projected:
                if rank(chosen + [vec], npc) > len(chosen):
                    chosen.append(vec)
        out.extend(_vector_to_spline(G, vec, monos) for vec in chosen)
    return out


def random_spline(G: EdgeLabeledGraph, d: int, rng: random.Random | None = None,
                  coeff_range: int = 5) -> Spline:
    """A random rational combination of a basis of the degree <= d splines."""
    rng = rng or random.Random(0)
    basis = _cached_basis(G, d)
    acc = Spline.zero(G)
    for b in basis:
        c = rng.randint(-coeff_range, coeff_range)
        if c:
            acc = acc + b * c
    return acc


@lru_cache(maxsize=256)
def _cached_basis(G: EdgeLabeledGraph, d: int) -> tuple[Spline, ...]:
    return tuple(spline_space_basis(G, d))


# -- module membership ----------------------------------------------------------

def _element_degree(s: Spline) -> int:
    d = s.degree()
    if isinstance(d, int):
        return d
    return max((p.degree() for p in s.entries.values()), default=0)


def in_module_span(B: GeneratingSet, p: Spline, slack: int = 0) -> list[Poly] | None:
    """Polynomials r_i with p = sum r_i * B[i], or None if none exist with
    deg r_i <= deg p - deg B[i] + slack."""
    G = B.graph
    if p.graph != G:
        raise ValueError("spline and generating set live on different graphs")
    n = G.nvars
    target_deg = max(q.degree() for q in p.entries.values())
    if target_deg < 0:
        return [Poly.zero(n) for _ in B]
    coeff_monos = []
    cols = 0
    for b in B:
        bound = target_deg - _element_degree(b) + slack
        monos = monomials_up_to(bound, n)
        coeff_monos.append((cols, monos))
        cols += len(monos)
    top = target_deg + slack
    for b, (_, monos) in zip(B, coeff_monos):
        if monos:
            top = max(top, max(sum(m) for m in monos) + b.max_degree())
    row_monos = monomials_up_to(top, n)
    row_idx = {m: i for i, m in enumerate(row_monos)}
    nrm = len(row_monos)
    M = [[0] * cols for _ in range(nrm * len(G.vertices))]
    rhs = [0] * (nrm * len(G.vertices))
    for vi, v in enumerate(G.vertices):
        base = vi * nrm
        for e, c in p[v].terms.items():
            rhs[base + row_idx[e]] = c
        for b, (start, monos) in zip(B, coeff_monos):
            for k, m in enumerate(monos):
                for e, c in b[v].terms.items():
                    M[base + row_idx[_add(m, e)]][start + k] += c
    keep = [i for i in range(len(M)) if any(M[i]) or rhs[i]]
    if any(rhs[i] and not any(M[i]) for i in keep):
        return None
    sol = solve_linear([M[i] for i in keep], [rhs[i] for i in keep], cols)
    if sol is None:
        return None
    coeffs = [Poly({m: sol[start + k] for k, m in enumerate(monos)}, n)
              for start, monos in coeff_monos]
    total = Spline.zero(G)
    for r, b in zip(coeffs, B):
        total = total + b * r
    if total != p:
        raise AssertionError("span certificate failed to re-verify")
    return coeffs


# -- certification ------------------------------------------------------------

def _span_rank(B: GeneratingSet, d: int) -> int:
    """Q-rank of {monomial * b : b in B, degree of the product <= d}."""
    G = B.graph
    n = G.nvars
    degs = [b.degree() for b in B]
    if all(isinstance(e, int) for e in degs) and _labels_homogeneous(G):
        total = 0
        for j in range(d + 1):
            monos = monomials_of_degree(j, n)
            idx = {m: i for i, m in enumerate(monos)}
            k = len(monos)
            vecs = []
            for b, e in zip(B, degs):
                for m in monomials_of_degree(j - e, n):
                    vec = [0] * (k * len(G.vertices))
                    for vi, v in enumerate(G.vertices):
                        for te, c in b[v].terms.items():
                            vec[vi * k + idx[_add(m, te)]] = c
                    vecs.append(vec)
            total += rank(vecs, k * len(G.vertices)) if vecs else 0
        return total
    monos = monomials_up_to(d, n)
    idx = {m: i for i, m in enumerate(monos)}
    k = len(monos)
    vecs = []
    for b in B:
        for m in monomials_up_to(d - b.max_degree(), n):
            vec = [0] * (k * len(G.vertices))
            for vi, v in enumerate(G.vertices):
                for te, c in b[v].terms.items():
                    vec[vi * k + idx[_add(m, te)]] = c
            vecs.append(vec)
    return rank(vecs, k * len(G.vertices)) if vecs else 0


def certify_basis(B: GeneratingSet, G: EdgeLabeledGraph | None = None,
                  d_max: int = 6) -> list[dict]:
    """Per degree d <= d_max compare the count a free basis B would give,
    the Q-rank B actually spans, and the oracle dimension."""
    G = B.graph if G is None else G
    if G != B.graph:
        raise ValueError("generating set lives on a different graph")
    for s in B:  # every element must itself be a spline on G
        Spline(G, s.entries)
    n = G.nvars
    degs = [_element_degree(b) for b in B]
    report = []
    for d in range(d_max + 1):
        predicted = sum(monomial_count(d - e, n) for e in degs)
        actual = spline_space_dimension(G, d)
        spanned = _span_rank(B, d)
        report.append({"degree": d, "predicted": predicted, "actual": actual,
                       "span_rank": spanned,
                       "pass": predicted == actual == spanned})
    return report


def report_passes(report: Iterable[dict]) -> bool:
    return all(row["pass"] for row in report)
