"""C^1 splines on a pinwheel (one interior vertex) through its dual cycle.

The triangles around the interior vertex become the vertices of a cycle, and
two neighboring triangles are joined by an edge labeled with the square of
the line through their common interior edge.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .algebra import LinForm, Poly, parse_poly, substitute_linear
from .graph import CycleGraph, ordered_labels
from .oracle import monomial_count, spline_space_dimension


class PinwheelError(ValueError):
    """The ray data cannot come from a pinwheel triangulation."""


def m(d: int) -> int:
    """Number of bivariate monomials of degree at most d."""
    return (d + 1) * (d + 2) // 2 if d >= 0 else 0


def _line_key(form: LinForm) -> tuple[Fraction, Fraction]:
    a, b = form.coeffs
    return (Fraction(1), b / a) if a else (Fraction(0), Fraction(1))


@dataclass(frozen=True)
class Pinwheel:
    """Interior vertex ``center`` with interior edges on the lines ``rays``
    (listed in cyclic order, each a linear form vanishing at the center)."""

    center: tuple[Fraction, Fraction]
    rays: tuple[LinForm, ...]
    r: int = 1

    def __post_init__(self):
        center = tuple(Fraction(c) for c in self.center)
        if len(center) != 2:
            raise PinwheelError("center must be a point in the plane")
        object.__setattr__(self, "center", center)
        rays = []
        for ray in self.rays:
            if isinstance(ray, (list, tuple)) and not isinstance(ray, LinForm):
                if len(ray) != 1:
                    raise PinwheelError(f"ray must be a single linear form, got {ray!r}")
                ray = ray[0]
            if isinstance(ray, str):
                ray = parse_poly(ray, 2)
            if isinstance(ray, Poly):
                if ray.degree() != 1:
                    raise PinwheelError(f"ray {ray} is not a nonconstant linear form")
                ray = LinForm.from_poly(ray)
            rays.append(ray)
        object.__setattr__(self, "rays", tuple(rays))
        if self.r != 1:
            raise PinwheelError(f"only smoothness r = 1 is supported, got {self.r}")
        n = len(rays)
        if n < 3:
            raise PinwheelError(f"a pinwheel needs at least 3 rays, got {n}")
        for ray in rays:
            if not any(ray.coeffs):
                raise PinwheelError("ray form is constant")
            if ray.evaluate(center) != 0:
                raise PinwheelError(f"ray {ray.to_poly()} does not pass through the center")
        for i in range(n):
            if rays[i].proportional_to(rays[(i + 1) % n]):
                raise PinwheelError(
                    f"rays {i} and {(i + 1) % n} are collinear; the triangle between "
                    "them would not be a triangle")
        counts = Counter(_line_key(ray) for ray in rays)
        if max(counts.values()) > 2:
            raise PinwheelError("a line carries more than two rays")

    @property
    def n(self) -> int:
        return len(self.rays)

    def centered_forms(self) -> list[Poly]:
        """Ray forms after moving the center to the origin."""
        ident = ((1, 0), (0, 1))
        return [substitute_linear(ray.to_poly(), ident, self.center) for ray in self.rays]

    @classmethod
    def from_dict(cls, data: Mapping) -> Pinwheel:
        center = [Fraction(str(c)) for c in data["center"]]
        return cls(tuple(center), tuple(data["rays"]), int(data.get("r", 1)))

    def to_dict(self) -> dict:
        return {"center": [str(c) for c in self.center],
                "rays": [[str(ray.to_poly())] for ray in self.rays], "r": self.r}


def dual_cycle(P: Pinwheel) -> CycleGraph:
    """Triangle t_i lies between rays i and i+1; t_i and t_{i+1} share ray i+1."""
    forms = P.centered_forms()
    n = P.n
    order = [f"t{i}" for i in range(n)]
    labels = [forms[(i + 1) % n] ** 2 for i in range(n)]
    return CycleGraph(order, labels, nvars=2)


@dataclass(frozen=True)
class DimReport:
    n: int
    d: int
    r: int
    singular: bool
    dimension: int
    branch: str

    def __post_init__(self):
        if self.dimension < m(self.d):
            raise AssertionError("spline dimension below the polynomial count")


def pinwheel_dimension(n: int, d: int, singular: bool) -> DimReport:
    """Dimension of C^1 splines of degree <= d on a pinwheel with n triangles."""
    if singular:
        if n != 4:
            raise ValueError(f"a singular vertex has exactly 4 triangles, got n = {n}")
        return DimReport(n, d, 1, True, m(d) + 2 * m(d - 2) + m(d - 4), "singular")
    if n < 3:
        raise ValueError(f"a pinwheel has at least 3 triangles, got n = {n}")
    return DimReport(n, d, 1, False, m(d) + (n - 3) * m(d - 2) + 2 * m(d - 3), "nonsingular")


def is_singular_vertex(C: CycleGraph) -> bool:
    labs = C.cycle_labels
    return (len(labs) == 4 and labs[0] == labs[2] and labs[1] == labs[3]
            and labs[0] != labs[1])


def is_geometrically_realizable(C: CycleGraph) -> bool:
    labs = C.cycle_labels
    n = len(labs)
    if max(Counter(labs).values()) > 2:
        return False
    if any(labs[i] == labs[(i + 1) % n] for i in range(n)):
        return False
    return len(set(labs)) >= 3 or is_singular_vertex(C)


def lower_bound_increment(k: int, d: int, singular: bool) -> int:
    """Most new basis elements a k-triangle interior cell can add in degree <= d."""
    return pinwheel_dimension(k, d, singular).dimension - m(d)


@dataclass
class PinwheelReport:
    n: int
    singular: bool
    branch: str
    degree_sequence: tuple[int, ...]
    rows: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(row["pass"] for row in self.rows)

    def to_dict(self) -> dict:
        return {"n": self.n, "singular": self.singular, "branch": self.branch,
                "degree_sequence": list(self.degree_sequence), "rows": self.rows,
                "pass": self.passed}


def pinwheel_full_pipeline(P: Pinwheel, d_max: int = 6) -> PinwheelReport:
    """Compare, per degree, the count implied by the generating set's degree
    sequence, the closed formula, and the oracle dimension."""
    from .mgs_cycle import mgs_cycle_quadratic
    from .spline import degree_sequence

    C = dual_cycle(P)
    singular = is_singular_vertex(C)
    B = mgs_cycle_quadratic(C)
    seq = degree_sequence(B)
    report = PinwheelReport(P.n, singular, "singular" if singular else "nonsingular", seq)
    for d in range(d_max + 1):
        predicted = sum(count * monomial_count(d - e) for e, count in enumerate(seq))
        formula = pinwheel_dimension(P.n, d, singular).dimension
        oracle = spline_space_dimension(C, d)
        report.rows.append({"degree": d, "predicted": predicted, "formula": formula,
                            "oracle": oracle, "pass": predicted == formula == oracle})
    return report


def label_count(C: CycleGraph) -> int:
    return len(ordered_labels(C))


def cycle_from_pattern(pattern: Sequence[int], forms: Sequence[Poly] | None = None) -> CycleGraph:
    """Cycle whose i-th edge carries the label for pattern[i] (small ints).

    Label k defaults to (x + (k+1) y)^2.
    """
    x, y = Poly.var(0), Poly.var(1)
    labels = [forms[k] if forms is not None else (x + y * (k + 1)) ** 2 for k in pattern]
    return CycleGraph([f"c{i}" for i in range(len(pattern))], labels, nvars=2)
