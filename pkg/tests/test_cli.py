import json
import subprocess
import sys
from io import StringIO

import pytest

from gspline.cli import main

from conftest import quad

I, J = quad(1), quad(2)

SQUARE = {
    "vertices": ["v1", "v2", "v3", "v4"],
    "edges": [
        {"u": "v1", "v": "v2", "label": "(x+y)^2"},
        {"u": "v3", "v": "v4", "label": "(x+y)^2"},
        {"u": "v1", "v": "v3", "label": "(x+2y)^2"},
        {"u": "v2", "v": "v4", "label": "(x+2y)^2"},
    ],
}
TRIANGLE = {
    "vertices": ["v1", "v2", "v3"],
    "edges": [{"u": "v1", "v": "v2", "label": "(x+y)^2"},
              {"u": "v3", "v": "v1", "label": "(x+2y)^2"},
              {"u": "v3", "v": "v2", "label": "(x+2y)^2 - (x+y)^2"}],
}


def write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


def run(*argv):
    out = StringIO()
    code = main([str(a) for a in argv], out=out)
    return code, out.getvalue()


class TestMgs:
    def test_square(self, tmp_path):
        g = write(tmp_path, "g.json", SQUARE)
        dest = tmp_path / "set.json"
        code, text = run("mgs", g, "--out", dest)
        assert code == 0
        assert "generators: 4" in text
        assert str(I * J) in text
        assert "degree sequence: (1,0,2,0,1)" in text
        data = json.loads(dest.read_text())
        assert data["degree_sequence"] == [1, 0, 2, 0, 1]
        assert len(data["generators"]) == 4

    def test_one_label_edge(self, tmp_path):
        g = write(tmp_path, "g.json", {"vertices": ["a", "b"],
                                       "edges": [{"u": "a", "v": "b", "label": "x"}]})
        code, text = run("mgs", g)
        assert code == 0 and "generators: 2" in text

    def test_k4_unsupported(self, tmp_path):
        v = ["a", "b", "c", "d"]
        labs = ["(x+y)^2", "(x+2y)^2", "(x+3y)^2"]
        edges = [{"u": v[i], "v": v[j], "label": labs[(i + j) % 3]}
                 for i in range(4) for j in range(i + 1, 4)]
        code, _ = run("mgs", write(tmp_path, "k4.json", {"vertices": v, "edges": edges}))
        assert code == 2

    def test_deterministic(self, tmp_path):
        g = write(tmp_path, "g.json", {"vertices": ["a", "b", "c", "d", "e"], "edges": [
            {"u": "a", "v": "b", "label": "x^2"}, {"u": "b", "v": "c", "label": "y^2"},
            {"u": "c", "v": "d", "label": "(x+y)^2"}, {"u": "d", "v": "e", "label": "(x+y)^2"},
            {"u": "e", "v": "a", "label": "(x-y)^2"}]})
        first, second = run("mgs", g), run("mgs", g)
        assert first == second and first[0] == 0
        assert "degree sequence: (1,0,2,2)" in first[1]


class TestVerify:
    def test_triangle_spline(self, tmp_path):
        g = write(tmp_path, "g.json", TRIANGLE)
        s = write(tmp_path, "s.json", {"entries": {
            "v1": "0", "v2": "(x+y)^2*(x+2y)^2", "v3": "(x+2y)^4"}})
        assert run("verify", g, s) == (0, "PASS\n")

    def test_constant(self, tmp_path):
        g = write(tmp_path, "g.json", SQUARE)
        s = write(tmp_path, "s.json", {"v1": "3", "v2": "3", "v3": "3", "v4": "3"})
        assert run("verify", g, s)[0] == 0

    def test_corrupted_entry(self, tmp_path):
        g = write(tmp_path, "g.json", TRIANGLE)
        s = write(tmp_path, "s.json", {"entries": {
            "v1": "0", "v2": "(x+y)^2*(x+2y)^2 + x", "v3": "(x+2y)^4"}})
        code, text = run("verify", g, s)
        assert code == 1
        assert text.startswith("FAIL")
        assert "edge v1-v2" in text and "edge v3-v2" in text

    def test_missing_vertex(self, tmp_path):
        g = write(tmp_path, "g.json", TRIANGLE)
        s = write(tmp_path, "s.json", {"entries": {"v1": "0"}})
        assert run("verify", g, s)[0] == 2


class TestCertify:
    def set_file(self, tmp_path, extra=()):
        g = write(tmp_path, "g.json", SQUARE)
        dest = tmp_path / "set.json"
        run("mgs", g, "--out", dest)
        data = json.loads(dest.read_text())
        data["generators"].extend(extra)
        return g, write(tmp_path, "set2.json", data)

    def test_constructed_set_passes(self, tmp_path):
        g, s = self.set_file(tmp_path)
        code, text = run("certify", g, s, "--dmax", 4)
        assert code == 0 and text.endswith("PASS\n")
        rows = json.loads(text[:text.rindex("]") + 1])
        assert [r["actual"] for r in rows] == [1, 3, 8, 16, 28]

    def test_redundant_set_fails(self, tmp_path):
        dup = {"entries": {"v1": "0", "v2": "x*(x+y)^2", "v3": "0", "v4": "x*(x+y)^2"}}
        g, s = self.set_file(tmp_path, [dup])
        code, text = run("certify", g, s, "--dmax", 4)
        assert code == 1 and text.endswith("FAIL\n")
        assert run("certify", g, s, "--dmax", 0)[0] == 0

    def test_non_spline_generator(self, tmp_path):
        bad = {"entries": {"v1": "0", "v2": "x", "v3": "0", "v4": "0"}}
        g, s = self.set_file(tmp_path, [bad])
        assert run("certify", g, s)[0] == 1


class TestPinwheelAndDegseq:
    def test_singular_pinwheel(self, tmp_path):
        p = write(tmp_path, "p.json", {"center": ["1", "2"],
                                       "rays": [["x-1"], ["y-2"], ["x-1"], ["y-2"]], "r": 1})
        code, text = run("pinwheel", p)
        assert code == 0
        assert "singular: yes" in text and "FAIL" not in text
        assert text.count("PASS") == 7

    def test_five_rays(self, tmp_path):
        p = write(tmp_path, "p.json", {"center": [0, 0],
                                       "rays": [["x"], ["x+y"], ["y"], ["x-y"], ["x+2y"]]})
        code, text = run("pinwheel", p, "--dmax", 4)
        assert code == 0 and text.count("PASS") == 5

    def test_degenerate_rays(self, tmp_path):
        p = write(tmp_path, "p.json", {"center": [0, 0], "rays": [["x"], ["2x"], ["y"]]})
        assert run("pinwheel", p)[0] == 2

    @pytest.mark.parametrize("n,k,out", [(6, 3, "(1,0,3,2)"), (4, 2, "(1,0,2,0,1)"),
                                         (3, 1, "(1,0,2)")])
    def test_degseq(self, n, k, out):
        assert run("degseq", n, k) == (0, out + "\n")

    def test_degseq_invalid(self):
        assert run("degseq", 3, 5)[0] == 2

    def test_missing_file(self, tmp_path):
        assert run("mgs", tmp_path / "nope.json")[0] == 2


def test_console_module():
    res = subprocess.run([sys.executable, "-m", "gspline", "degseq", "5", "2"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "(1,0,3,0,1)\n"
