import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gspline.algebra import Poly, divide_exact, parse_poly
from gspline.graph import CycleError, CycleGraph, ReductionRecord, reduce_cycle
from gspline.linsolve import solve_cubic_split
from gspline.mgs_cycle import (QuadLabel, is_squared_linear_form, mgs_cycle_quadratic,
                               mgs_reduced_cycle, mgs_triangle, normalize_labels,
                               predicted_degree_sequence, reinsert_vertex, squared_linear_form)
from gspline.mgs_general import UnsupportedGraphError, mgs_one_label
from gspline.oracle import certify_basis, in_module_span, report_passes
from gspline.spline import GeneratingSet, Spline, degree_sequence, is_triangular

from conftest import X, Y, cycle_with_params, quad, random_cycle_params


class TestLabels:
    def test_squared_linear_form(self):
        assert squared_linear_form(quad(3)) == (1, 3)
        assert squared_linear_form(parse_poly("4x^2 + 4xy + y^2")) is not None
        assert squared_linear_form(Y * Y) == (0, 1)
        assert not is_squared_linear_form(X * Y)
        assert not is_squared_linear_form(parse_poly("x^2 + y^2"))
        assert not is_squared_linear_form(X)

    def test_quad_label(self):
        assert QuadLabel(2).generator == quad(2)
        assert QuadLabel.from_poly(quad(Fraction(1, 2))) == QuadLabel(Fraction(1, 2))
        assert QuadLabel.from_poly(Y * Y) is None


class TestNormalization:
    def test_identity_when_already_normal(self):
        N, sub = normalize_labels(cycle_with_params([1, 2, 3]))
        assert sub.is_identity()
        assert N.cycle_labels == (quad(1), quad(2), quad(3))

    @pytest.mark.parametrize("labels", [
        [quad(1), quad(2), Y * Y],
        [X * X, quad(1), quad(-1)],
        [X * X, Y * Y, quad(1), quad(-1)],
    ])
    def test_forms_become_x_plus_ay(self, labels):
        C = CycleGraph([f"c{i}" for i in range(len(labels))], labels, nvars=2)
        N, sub = normalize_labels(C)
        params = [QuadLabel.from_poly(lab) for lab in N.cycle_labels]
        assert all(q is not None and q.a != 0 for q in params)
        # equal and distinct labels stay that way
        for s in range(len(labels)):
            for t in range(len(labels)):
                assert (labels[s] == labels[t]) == (params[s] == params[t])
        for lab, new in zip(C.cycle_labels, N.cycle_labels):
            back = sub.pull(new)
            assert divide_exact(back, lab).degree() == 0

    def test_non_square_rejected(self):
        C = CycleGraph(["a", "b", "c"], [X * Y, quad(1), quad(2)], nvars=2)
        with pytest.raises(UnsupportedGraphError):
            normalize_labels(C)


class TestTriangle:
    def test_degree_sequence(self):
        B = mgs_triangle(1, 2, 3)
        assert degree_sequence(B) == (1, 0, 0, 2)
        # two generators share their first nonzero vertex, so no triangular form
        assert not is_triangular(B)

    def test_entries(self):
        a, b, c = 1, 2, 3
        B = mgs_triangle(a, b, c)
        # v2 sees x*(label of v1v2) and y*(label of v1v2); v3 sees g*(label of v3v1)
        assert B[1]["v2"] == X * quad(a) and B[2]["v2"] == Y * quad(a)
        assert B[1]["v1"].is_zero() and B[2]["v1"].is_zero()
        assert divide_exact(B[1]["v3"], quad(c)) is not None

    def test_combination_is_multiple_of_bc(self):
        a, b, c = 1, 2, 3
        B = mgs_triangle(a, b, c)
        comb = B[1] * Y - B[2] * X
        assert comb["v1"].is_zero() and comb["v2"].is_zero()
        ratio = divide_exact(comb["v3"], quad(b) * quad(c))
        assert ratio is not None and ratio.degree() == 0 and not ratio.is_zero()

    def test_equal_parameters(self):
        with pytest.raises(CycleError):
            mgs_triangle(1, 1, 3)

    @given(st.lists(st.fractions(-6, 6, max_denominator=4).filter(bool),
                    min_size=3, max_size=3, unique=True))
    def test_always_certified(self, params):
        B = mgs_triangle(*params)
        assert degree_sequence(B) == (1, 0, 0, 2)
        comb = B[1] * Y - B[2] * X
        assert divide_exact(comb["v3"], quad(params[1]) * quad(params[2])) is not None


class TestReducedCycle:
    def test_triangle_matches(self):
        T = cycle_with_params([1, 2, 3], prefix="v")
        B = mgs_reduced_cycle(CycleGraph(["v1", "v2", "v3"], T.cycle_labels, nvars=2), 0)
        assert [s.vector() for s in B] == [s.vector() for s in mgs_triangle(1, 2, 3)]

    def test_four_cycle(self):
        B = mgs_reduced_cycle(cycle_with_params([1, 2, 3, 4]))
        assert degree_sequence(B) == (1, 0, 1, 2)
        assert report_passes(certify_basis(B, d_max=6))

    @pytest.mark.parametrize("params", [[1, 2, 3, 4], [1, 2, 1, 3, 2], [5, 1, 2, 3, 4, 6]])
    def test_last_entry_divisible_by_closing_label(self, params):
        C = cycle_with_params(params)
        B = mgs_reduced_cycle(C)
        last = B.ordering[-1]
        n = C.n
        # A_1 labels the edge from v_n back to v_1
        closing = [lab for (u, v, lab, *_ ) in C.edges()
                   if {u, v} == {B.ordering[-1], B.ordering[0]}][0]
        for s in list(B)[1:n - 2]:
            assert divide_exact(s[last], closing) is not None

    def test_window_must_be_distinct(self):
        with pytest.raises(CycleError):
            mgs_reduced_cycle(cycle_with_params([1, 2, 1, 3]), 0)


class TestReinsertion:
    def test_one_label_triangle(self):
        T = cycle_with_params([2, 2, 2])
        B = mgs_one_label(T)
        rec = ReductionRecord(3, "v3x", quad(2), "v2", "v0")
        B4, C4 = reinsert_vertex(B, T, rec)
        assert len(B4) == 4
        assert degree_sequence(B4) == degree_sequence(mgs_one_label(C4)) == (1, 0, 3)
        assert report_passes(certify_basis(B4, d_max=5))

    def test_second_panel(self):
        # triangle v1 v2 v3 with i, j, k on v1v2, v2v3, v3v1; insert v4 into v3v1
        i, j, k = quad(1), quad(2), quad(3)
        B3 = mgs_triangle(1, 2, 3)
        T = B3.graph
        B4, C4 = reinsert_vertex(B3, T, ReductionRecord(3, "v4", k, "v3", "v1"))
        assert C4.order == ("v1", "v2", "v3", "v4")
        assert B4[-1].vector() == (Poly.zero(), Poly.zero(), Poly.zero(), k)
        for old, new in zip(B3, B4):
            assert new["v4"] == old["v3"]
        assert degree_sequence(B4) == (1, 0, 1, 2)

    def test_insertion_adds_one_at_label_degree(self):
        C = cycle_with_params([1, 1, 2, 3, 3])
        R, log = reduce_cycle(C)
        B = mgs_reduced_cycle(R)
        cur = R
        for rec in reversed(log):
            before = degree_sequence(B)
            B, cur = reinsert_vertex(B, cur, rec)
            after = degree_sequence(B)
            padded = list(before) + [0] * (len(after) - len(before))
            padded[2] += 1
            assert tuple(padded) == after


def six_cycle_with_reference_basis():
    """Six-cycle labeled k, k, i, i, j, j from v1 and a hand-written basis for
    it, with i, j, k = (x+y)^2, (x+2y)^2, (x+3y)^2."""
    i, j, k = quad(1), quad(2), quad(3)
    v = [f"v{t}" for t in range(1, 7)]
    C = CycleGraph(v, [k, k, i, i, j, j], nvars=2)
    # x*i = f*j + g*k from the triangle with i, j, k on v1v2, v2v3, v3v1
    g = []
    for C1, C2, lin in ((1, 0, X), (0, 1, Y)):
        _, _, B1, B2 = solve_cubic_split(2, 3, 1, C1, C2)
        g.append(X * B1 + Y * B2)
    z = Poly.zero()
    rows = [
        [Poly.const(1)] * 6,
        [g[0] * k, g[0] * k, z, z, X * i, X * i],
        [g[1] * k, g[1] * k, z, z, Y * i, Y * i],
        [z, k, z, z, z, z],
        [z, z, z, i, z, z],
        [z, z, z, z, z, j],
    ]
    ref = GeneratingSet(C, [Spline(C, r) for r in rows], v)
    return C, ref


class TestFullPipeline:
    def test_six_cycle_against_reference_basis(self):
        C, ref = six_cycle_with_reference_basis()
        B = mgs_cycle_quadratic(C)
        assert degree_sequence(B) == degree_sequence(ref) == (1, 0, 3, 2)
        for s in ref:
            assert in_module_span(B, s) is not None
        for s in B:
            assert in_module_span(ref, s) is not None

    @pytest.mark.parametrize("pattern,expected", [
        ([1, 2, 1, 2], (1, 0, 2, 0, 1)),
        ([4] * 5, (1, 0, 4)),
        ([1, 2, 3], (1, 0, 0, 2)),
    ])
    def test_label_count_branches(self, pattern, expected):
        assert degree_sequence(mgs_cycle_quadratic(cycle_with_params(pattern))) == expected

    def test_non_normal_labels_come_back_in_original_coordinates(self):
        C = CycleGraph(["a", "b", "c", "d"], [X * X, Y * Y, quad(1), quad(-1)], nvars=2)
        B = mgs_cycle_quadratic(C)
        assert B.graph == C
        assert degree_sequence(B) == (1, 0, 1, 2)
        assert report_passes(certify_basis(B, d_max=6))

    def test_invariance_under_runs(self):
        rng = random.Random(3)
        for _ in range(6):
            n = rng.randint(4, 7)
            C = cycle_with_params(random_cycle_params(rng, n, 3))
            seqs = {degree_sequence(mgs_cycle_quadratic(C, start=s, window=w))
                    for s in range(3) for w in range(2)}
            assert len(seqs) == 1

    def test_rejects_non_square(self):
        C = CycleGraph(["a", "b", "c"], [X * Y, quad(1), quad(2)], nvars=2)
        with pytest.raises(UnsupportedGraphError):
            mgs_cycle_quadratic(C)


class TestPredictedSequence:
    @pytest.mark.parametrize("n,k,seq", [
        (3, 1, (1, 0, 2)), (4, 2, (1, 0, 2, 0, 1)), (6, 3, (1, 0, 3, 2)), (6, 5, (1, 0, 3, 2))])
    def test_values(self, n, k, seq):
        assert predicted_degree_sequence(n, k) == seq

    @pytest.mark.parametrize("n,k", [(2, 1), (3, 0), (3, 4)])
    def test_invalid(self, n, k):
        with pytest.raises(ValueError):
            predicted_degree_sequence(n, k)
