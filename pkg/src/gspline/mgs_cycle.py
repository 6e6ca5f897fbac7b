"""Generating sets for cycles whose labels are squares of linear forms.

Pipeline for three or more distinct labels: change coordinates so every label
reads (x + a*y)^2 with a != 0, strip vertices sitting between two equal labels,
write down the explicit basis of the reduced cycle, put the stripped vertices
back one at a time, and finally undo the change of coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import Poly, substitute_linear
from .graph import (CycleGraph, CycleError, ReductionRecord, canonical_label,
                    find_three_successive_distinct, insert_vertex, ordered_labels,
                    reduce_cycle)
from .linsolve import solve_cubic_split, solve_quadratic_dependence
from .mgs_general import UnsupportedGraphError, mgs_one_label, mgs_two_labels
from .spline import GeneratingSet, Spline

X = Poly.var(0)
Y = Poly.var(1)


@dataclass(frozen=True)
class QuadLabel:
    """The label (x + a*y)^2."""

    a: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))

    @property
    def generator(self) -> Poly:
        return (X + Y * self.a) ** 2

    @classmethod
    def from_poly(cls, p: Poly) -> QuadLabel | None:
        if p.nvars != 2:
            return None
        q = cls(p.monic().coeff((1, 1)) / 2)
        return q if q.generator == p.monic() else None


def squared_linear_form(p: Poly) -> tuple[Fraction, Fraction] | None:
    """(alpha, beta) with p a nonzero multiple of (alpha*x + beta*y)^2, normalized
    so the first nonzero coefficient is 1; None if p has another shape."""
    if p.nvars != 2 or p.is_zero():
        return None
    if any(sum(e) != 2 for e in p.terms):
        return None
    A, B, C = p.coeff((2, 0)), p.coeff((1, 1)), p.coeff((0, 2))
    if B * B != 4 * A * C:
        return None
    if A:
        return Fraction(1), B / (2 * A)
    return Fraction(0), Fraction(1)


def is_squared_linear_form(p: Poly) -> bool:
    return squared_linear_form(p) is not None


# -- coordinate changes -----------------------------------------------------

@dataclass(frozen=True)
class Substitution:
    """x_i -> sum_j matrix[i][j] x_j applied to labels; generators computed in
    the new coordinates are pulled back with the inverse matrix."""

    matrix: tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]

    @property
    def inverse(self):
        (a, b), (c, d) = self.matrix
        det = a * d - b * c
        return ((d / det, -b / det), (-c / det, a / det))

    def is_identity(self) -> bool:
        return self.matrix == ((1, 0), (0, 1))

    def push(self, p: Poly) -> Poly:
        return p if self.is_identity() else substitute_linear(p, self.matrix)

    def pull(self, p: Poly) -> Poly:
        return p if self.is_identity() else substitute_linear(p, self.inverse)


def _image_form(form: tuple[Fraction, Fraction], M) -> tuple[Fraction, Fraction]:
    alpha, beta = form
    return (alpha * M[0][0] + beta * M[1][0], alpha * M[0][1] + beta * M[1][1])


def _candidate_substitutions():
    yield ((1, 0), (0, 1))
    t = 1
    while True:
        yield ((1, 0), (t, 1))      # y -> y + t*x
        yield ((1, t), (0, 1))      # x -> x + t*y
        if t != 1:
            yield ((1, t), (t, 1))  # both at once
        t += 1


def normalize_labels(C: CycleGraph) -> tuple[CycleGraph, Substitution]:
    """Change coordinates so every label is (x + a*y)^2 with a != 0.

    Candidates are tried in a fixed order (identity, then integer shears with
    t = 1, 2, ...), and the first one that puts a nonzero coefficient on both
    x and y in every form is used.  The combined shear fails for at most two
    values of t per form, so the search terminates.
    """
    forms = {}
    for lab in ordered_labels(C):
        f = squared_linear_form(lab)
        if f is None:
            raise UnsupportedGraphError(f"label {lab} is not the square of a linear form")
        forms[lab] = f
    for M in _candidate_substitutions():
        if all(all(_image_form(f, M)) for f in forms.values()):
            sub = Substitution(tuple(tuple(Fraction(v) for v in row) for row in M))
            break
    labels = [canonical_label(sub.push(lab)) for lab in C.cycle_labels]
    return CycleGraph(C.order, labels, nvars=2), sub


# -- explicit bases -----------------------------------------------------------

def _quad_params(C: CycleGraph) -> list[Fraction]:
    out = []
    for lab in C.cycle_labels:
        q = QuadLabel.from_poly(lab)
        if q is None:
            raise CycleError(f"label {lab} is not of the form (x + a*y)^2")
        out.append(q.a)
    return out


def mgs_reduced_cycle(C: CycleGraph, offset: int | None = None) -> GeneratingSet:
    """Explicit basis of a cycle whose edges offset, offset+1, offset+2 carry
    three distinct labels (x+ay)^2.

    The cycle is read as v_1, ..., v_n with edge v_{k-1} v_k labeled A_k and
    A_{n-1}, A_n, A_1 the distinct window.  Generators are the all-ones
    spline, for 2 <= i <= n-2 the spline equal to A_i from v_i through
    v_{n-2} and corrected at v_{n-1}, v_n by the linear relation among
    A_i, A_{n-1}, A_n, A_1, and two cubic splines supported on v_{n-1}, v_n.
    """
    n = C.n
    params = _quad_params(C)
    if offset is None:
        offset = find_three_successive_distinct(C)
    if len({params[offset % n], params[(offset + 1) % n], params[(offset + 2) % n]}) != 3:
        raise CycleError(f"edges {offset}, {offset + 1}, {offset + 2} do not carry distinct labels")
    w = C.order
    v = {k: w[(offset + 2 + k) % n] for k in range(1, n + 1)}
    # A_k labels edge v_{k-1} v_k, which is cycle edge offset + k + 1
    a = {k: params[(offset + k + 1) % n] for k in range(1, n + 1)}
    A = {k: QuadLabel(a[k]).generator for k in a}
    zero = Poly.zero(2)
    gens = [Spline.one(C)]
    for i in range(2, n - 1):
        c_prev, c_last, _ = solve_quadratic_dependence(a[n - 1], a[n], a[1], a[i], 1)
        vals = {v[j]: (A[i] if j >= i else zero) for j in range(1, n - 1)}
        vals[v[n - 1]] = A[i] - A[n - 1] * c_prev
        vals[v[n]] = A[i] - A[n - 1] * c_prev - A[n] * c_last
        gens.append(Spline(C, vals))
    for C1, C2, lin in ((1, 0, X), (0, 1, Y)):
        _, _, B1, B2 = solve_cubic_split(a[n], a[1], a[n - 1], C1, C2)
        g = X * B1 + Y * B2
        vals = {v[j]: zero for j in range(1, n - 1)}
        vals[v[n - 1]] = lin * A[n - 1]
        vals[v[n]] = g * A[1]
        gens.append(Spline(C, vals))
    return GeneratingSet(C, gens, [v[k] for k in range(1, n + 1)])


def mgs_triangle(a, b, c) -> GeneratingSet:
    """Basis of the triangle v1 v2 v3 with labels (x+ay)^2 on v1v2,
    (x+by)^2 on v2v3 and (x+cy)^2 on v3v1."""
    params = [q.a if isinstance(q, QuadLabel) else Fraction(q) for q in (a, b, c)]
    if len(set(params)) != 3:
        raise CycleError(f"triangle parameters must be pairwise distinct, got {params}")
    T = CycleGraph(["v1", "v2", "v3"], [QuadLabel(p).generator for p in params], nvars=2)
    return mgs_reduced_cycle(T, offset=0)


def reinsert_vertex(B: GeneratingSet, C: CycleGraph,
                    rec: ReductionRecord) -> tuple[GeneratingSet, CycleGraph]:
    """Put a stripped vertex back: old generators copy their value at the
    predecessor, and one new generator is the repeated label at the new vertex."""
    C2 = insert_vertex(C, rec)
    zero = Poly.zero(C2.nvars)
    gens = []
    for s in B:
        vals = dict(s.entries)
        vals[rec.vertex] = s[rec.prev]
        gens.append(Spline(C2, vals))
    vals = {u: zero for u in C2.vertices}
    vals[rec.vertex] = rec.label
    gens.append(Spline(C2, vals))
    return GeneratingSet(C2, gens, tuple(B.ordering) + (rec.vertex,)), C2


def mgs_cycle_quadratic(C: CycleGraph, *, start: int = 0, window: int = 0) -> GeneratingSet:
    """Minimum generating set of a cycle labeled by squared linear forms.

    ``start`` sets where the reduction scan begins and ``window`` picks among
    the valid windows of three distinct labels; both only matter with three
    or more labels and exist so alternative valid runs can be compared.
    """
    labels = ordered_labels(C)
    for lab in labels:
        if not is_squared_linear_form(lab):
            raise UnsupportedGraphError(f"label {lab} is not the square of a linear form")
    if len(labels) == 1:
        return mgs_one_label(C)
    if len(labels) == 2:
        return mgs_two_labels(C)
    N, sub = normalize_labels(C)
    R, log = reduce_cycle(N, start)
    B = mgs_reduced_cycle(R, find_three_successive_distinct(R, window))
    cur = R
    for rec in reversed(log):
        B, cur = reinsert_vertex(B, cur, rec)
    if cur.order != N.order or cur.cycle_labels != N.cycle_labels:
        raise AssertionError("reinsertion did not rebuild the normalized cycle")
    gens = [Spline(C, {u: sub.pull(s[u]) for u in C.vertices}) for s in B]
    return GeneratingSet(C, gens, B.ordering)


def predicted_degree_sequence(n: int, label_count: int) -> tuple[int, ...]:
    if n < 3:
        raise ValueError("cycles have at least 3 vertices")
    if label_count < 1 or label_count > n:
        raise ValueError(f"an {n}-cycle cannot carry {label_count} distinct labels")
    if label_count == 1:
        return (1, 0, n - 1)
    if label_count == 2:
        return (1, 0, n - 2, 0, 1)
    return (1, 0, n - 3, 2)
