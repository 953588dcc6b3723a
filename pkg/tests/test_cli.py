import xml.etree.ElementTree as ET

import pytest

from labansym.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_invert(capsys):
    code, out, _ = run(capsys, "invert", "fb", "MRF MLB")
    assert code == 0 and out == "MRB MLF\n"


def test_invert_octahedral(capsys):
    assert run(capsys, "invert", "octa", "UP BACK RIGHT")[1] == "DOWN FWD LEFT\n"


def test_invert_diam_on_cube(capsys):
    assert run(capsys, "invert", "diam", "RFH LBL")[1] == "LBL RFH\n"


def test_invert_explain_flags_fixed(capsys):
    code, out, _ = run(capsys, "invert", "fb", "MRF HR", "--explain")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "MRB HR"
    assert "permutation: (1 2)(5 7)(6 8)(9 10)" in lines
    assert "fixed" in lines[-1] and "fixed" not in lines[-2]


def test_invert_transposition_via_scale(capsys):
    code, out, _ = run(capsys, "invert", "T6", "MRF HR")
    assert code == 0 and out == "MLB LL\n"


@pytest.mark.parametrize("argv", [
    ("invert", "fb", "MRF XYZ"),
    ("invert", "zz", "MRF"),
    ("invert", "fb", "UP"),
    ("invert", "T3", "UP"),
    ("orbits", "octahedron", "--stab", "v9"),
    ("orbits", "octahedron", "--stab-plane", "sagittal"),
    ("clock", "--form", "nope"),
])
def test_domain_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and err.startswith("labansym: ") and out == ""


def test_parse_error_reports_token(capsys):
    _, _, err = run(capsys, "invert", "fb", "MRF XYZ")
    assert "token 2" in err


@pytest.mark.parametrize("argv", [(), ("frobnicate",), ("info",), ("info", "dodecahedron"), ("orbits", "cube", "--group", "odd")])
def test_usage_errors_exit_1(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 1 and err


def test_zones(capsys):
    code, out, _ = run(capsys, "zones")
    rows = {l[:11].strip(): l[11:].split() for l in out.splitlines()[1:]}
    assert code == 0
    assert rows["Left Arm"] == ["HL", "FH", "BH", "MLB", "LL", "MLF"]
    assert rows["Right Arm"][0] == "HR"
    assert rows["Left Leg"][0] == "LL" and rows["Right Leg"][0] == "LR"


def test_orbits_horizontal_plane(capsys):
    code, out, _ = run(capsys, "orbits", "icosahedron", "--group", "full", "--stab-plane", "horizontal")
    lines = out.splitlines()
    assert code == 0
    assert lines[-2] == "orbits: (v1 v9)(v2 v10)(v3 v11)(v4 v12)"
    assert lines[-1] == "fixed: v5 v6 v7 v8"


def test_orbits_whole_group(capsys):
    _, out, _ = run(capsys, "orbits", "cube", "--group", "rot")
    assert "order 24" in out and "fixed: none" in out


def test_orbits_edge_stabilizer(capsys):
    _, out, _ = run(capsys, "orbits", "icosahedron", "--stab", "v1,v2")
    assert "setwise stabilizer of {v1,v2}, order 2" in out
    assert "(v5 v8)(v6 v7)" in out


def test_orbits_point_and_pointwise(capsys):
    _, out, _ = run(capsys, "orbits", "octahedron", "--stab", "RIGHT")
    assert "stabilizer of v5, order 4" in out
    _, out, _ = run(capsys, "orbits", "icosahedron", "--group", "full", "--stab", "{v1,v2,v9,v10}", "--pointwise")
    assert "orbits: (v3 v4)(v5 v6)(v7 v8)(v11 v12)" in out


def test_info(capsys):
    code, out, _ = run(capsys, "info", "icosahedron")
    assert code == 0 and "12 vertices, 30 edges" in out
    v4 = next(l for l in out.splitlines() if l.startswith("v4 "))
    assert v4.split()[1] == "HL" and v4.endswith("v1 v2 v6 v8 v12")


def test_info_json(capsys):
    import json

    _, out, _ = run(capsys, "info", "octahedron", "--json")
    doc = json.loads(out)
    assert len(doc["vertices"]) == 6 and len(doc["edges"]) == 12


def test_clock_ascii_width(capsys):
    code, out, _ = run(capsys, "clock", "--form", "girdle", "--render", "ascii:labels,cosets,diameters,path")
    assert code == 0
    assert max(len(l) for l in out.splitlines()) <= 80
    assert "0:HR" in out and "triangles:" in out


def test_clock_svg(tmp_path, capsys):
    target = tmp_path / "clock.svg"
    code, out, _ = run(capsys, "clock", "--form", "girdle", "--apply", "diam",
                       "--render", "svg:labels,cosets,diameters,path", "--output", str(target))
    assert code == 0 and out == ""
    root = ET.parse(target).getroot()
    nodes = [e for e in root.iter() if e.get("class") == "clock-node"]
    assert len(nodes) == 12
    assert root.find("{http://www.w3.org/2000/svg}polyline") is not None


def test_clock_is_deterministic(capsys):
    a = run(capsys, "clock", "--render", "svg:labels,diameters", "--step", "3")[1]
    b = run(capsys, "clock", "--render", "svg:labels,diameters", "--step", "3")[1]
    assert a == b and a.startswith("<svg")


def test_clock_bad_render(capsys):
    assert run(capsys, "clock", "--render", "png")[0] == 2
    assert run(capsys, "clock", "--render", "svg:sparkles")[0] == 2


def test_run_script(tmp_path, capsys):
    script = tmp_path / "a.lab"
    script.write_text("seq A = MRF MLB\napply fb A -> B\n")
    code, out, _ = run(capsys, "run", str(script))
    assert code == 0 and out.splitlines() == ["A = MRF MLB", "B = MRB MLF"]


def test_run_script_diagnostic(tmp_path, capsys):
    script = tmp_path / "b.lab"
    script.write_text("seq A = MRF\napply fb Q -> B\n")
    code, _, err = run(capsys, "run", str(script))
    assert code == 2 and "2:10:" in err


def test_user_config(tmp_path, capsys):
    import json

    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"scales": [{"name": "plain", "order": list(range(1, 13))}],
                               "trace_forms": [{"name": "f", "scale": "plain", "path": [0, 1]}]}))
    code, out, err = run(capsys, "--config", str(cfg), "clock", "--form", "f")
    assert code == 0 and "0:FH" in out
    assert "antipodal" in err  # compatibility warning


def test_check_reports_every_example(capsys):
    code, out, _ = run(capsys, "check")
    lines = [l for l in out.splitlines() if l.startswith(("PASS", "FAIL"))]
    assert len(lines) >= 30
    assert code == (0 if all(l.startswith("PASS") for l in lines) else 2)
