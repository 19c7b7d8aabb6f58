import json
import re
from fractions import Fraction
from pathlib import Path

import pytest

from multitile import QQ, LatticeBasis, Vec, covolume, decide
from multitile.cli import EXIT_INVALID, EXIT_NO, EXIT_OK, EXIT_VERIFY_FAILED, main
from multitile.decider import Verdict
from multitile.oracle import MultiplicityReport
from multitile.planar import polygon_from_json

DEMO = Path(__file__).resolve().parent.parent / "demos" / "data"
GOLDEN = Path(__file__).resolve().parent / "data" / "hexagon_tiling.svg"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(obj if isinstance(obj, str) else json.dumps(obj))
    return p


def test_decide_exit_codes(capsys):
    code, out, _ = run(capsys, "decide", DEMO / "square.json")
    assert code == EXIT_OK and json.loads(out)["tiles"] is True
    code, out, _ = run(capsys, "decide", DEMO / "rational_octagon.json")
    assert code == EXIT_OK and json.loads(out)["level"] == 7
    code, out, _ = run(capsys, "decide", DEMO / "regular_octagon.json")
    assert code == EXIT_NO and json.loads(out)["tiles"] is False


def test_decide_output_round_trips(capsys):
    _, out, _ = run(capsys, "decide", DEMO / "rational_octagon.json")
    verdict = Verdict.from_json(json.loads(out))
    P = polygon_from_json(QQ, json.loads((DEMO / "rational_octagon.json").read_text())["vertices"])
    expected = decide(P)
    assert verdict.level == expected.level and verdict.J == expected.J
    assert all(expected.lattice.contains(g) for g in verdict.lattice.generators())


@pytest.mark.parametrize("payload, needle", [
    ("{not json", "malformed JSON"),
    ({"vertices": [["0", "0"], ["1", "0"], ["1", "1"]]}, "OddVertexCount"),
    ({"vertices": [["0", "0"], ["2", "0"], ["1", "1"], ["0", "1"]]}, "NotSymmetric"),
    ({"vertices": [["0", "0"], ["1", "0"], ["1", "x"], ["0", "1"]]}, "vertices"),
    ({"field": {"degree": 2, "minpoly": ["-1", "0", "1"], "root_interval": ["0", "2"]},
      "vertices": [["0", "0"], ["1", "0"], ["1", "1"], ["0", "1"]]}, "field"),
    ([1, 2], "object"),
    ({}, "vertices"),
])
def test_invalid_input(capsys, tmp_path, payload, needle):
    path = write(tmp_path, "p.json", payload)
    code, out, err = run(capsys, "decide", path)
    assert code == EXIT_INVALID and out == ""
    assert err.startswith("error:") and needle in err


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "decide", tmp_path / "absent.json")
    assert code == EXIT_INVALID and "error" in err


def test_verify(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", DEMO / "octagon_on_z2.json", "--samples", 200)
    report = MultiplicityReport.from_json(json.loads(out))
    assert code == EXIT_OK and report.passed and report.level == 7
    wrong = json.loads((DEMO / "octagon_on_z2.json").read_text())
    wrong["level"] = 6
    code, out, _ = run(capsys, "verify", write(tmp_path, "w.json", wrong), "--samples", 20)
    assert code == EXIT_VERIFY_FAILED and json.loads(out)["pass"] is False
    # without a level the area ratio is used; Z^2 scaled by 2 gives a non-integer ratio
    wrong.pop("level")
    wrong["lattice"] = [["2", "0"], ["0", "2"]]
    code, out, _ = run(capsys, "verify", write(tmp_path, "x.json", wrong))
    assert code == EXIT_VERIFY_FAILED
    code, _, err = run(capsys, "verify", DEMO / "square.json")
    assert code == EXIT_INVALID and "lattice" in err


def test_verify_seed_is_reproducible(capsys):
    _, a, _ = run(capsys, "verify", DEMO / "octagon_on_z2.json", "--samples", 30, "--seed", 4)
    _, b, _ = run(capsys, "verify", DEMO / "octagon_on_z2.json", "--samples", 30, "--seed", 4)
    assert a == b


def test_select(capsys, tmp_path):
    code, out, _ = run(capsys, "select", DEMO / "select_hexagon.json")
    assert code == EXIT_OK and json.loads(out)["J"] == []
    code, out, _ = run(capsys, "select", DEMO / "select_dense.json")
    assert code == EXIT_NO and json.loads(out) == {"J": "none"}
    bad = {"e": [["1", "0"], ["0", "1"]], "tau": [["1", "1"], ["2", "2"]]}
    code, _, err = run(capsys, "select", write(tmp_path, "s.json", bad))
    assert code == EXIT_INVALID and "ParallelTaus" in err


def test_subgroup(capsys, tmp_path):
    code, out, _ = run(capsys, "subgroup", DEMO / "vectors.json")
    doc = json.loads(out)
    assert code == EXIT_OK and doc["verdict"] == "discrete" and doc["rank"] == 2
    L = LatticeBasis(*(Vec.from_json(QQ, v) for v in doc["basis"]))
    assert covolume(L) == QQ(Fraction(1, 2))
    dense = {"field": {"degree": 2, "minpoly": ["-2", "0", "1"], "root_interval": ["1", "2"]},
             "vectors": [[["1", "0"], ["0", "0"]], [["0", "1"], ["0", "0"]], [["0", "0"], ["1", "0"]]]}
    code, out, _ = run(capsys, "subgroup", write(tmp_path, "d.json", dense))
    assert code == EXIT_OK and json.loads(out)["verdict"] == "dense"


def test_render_square_window(capsys):
    code, out, _ = run(capsys, "render", DEMO / "square.json", "--window", -2, 2, -2, 2)
    assert code == EXIT_OK
    assert out.count("<polygon") == 25  # lattice points of Z^2 in the closed window


def test_render_is_byte_stable(capsys, tmp_path):
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    run(capsys, "render", DEMO / "regular_octagon.json", "--outline", "--out", a)
    run(capsys, "render", DEMO / "regular_octagon.json", "--outline", "--out", b)
    assert a.read_bytes() == b.read_bytes()
    svg = a.read_text()
    assert svg.count("<polygon") == 1 and svg.count("<line") == 8
    assert "e4" in svg and "&#964;4" in svg


def test_render_matches_golden(capsys, tmp_path):
    out = tmp_path / "h.svg"
    run(capsys, "render", DEMO / "hexagon.json", "--window", -1, 3, -1, 3, "--out", out)
    assert out.read_bytes() == GOLDEN.read_bytes()
    # independent count: points m*(1, 2) + k*(-1, 1) inside [-1, 3]^2
    expected = sum(-1 <= m - k <= 3 and -1 <= 2 * m + k <= 3 for m in range(-9, 10) for k in range(-9, 10))
    assert GOLDEN.read_text().count("<polygon") == expected


def test_render_bad_window(capsys):
    code, _, err = run(capsys, "render", DEMO / "square.json", "--window", "a", "1", "0", "1")
    assert code == EXIT_INVALID and "--window" in err


def test_module_entry_point():
    import subprocess
    import sys

    res = subprocess.run([sys.executable, "-m", "multitile", "decide", str(DEMO / "square.json")],
                         capture_output=True, text=True)
    assert res.returncode == 0 and re.search(r'"tiles": true', res.stdout)
