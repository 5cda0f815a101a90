import json
import xml.etree.ElementTree as ET

import pytest

from linres.cli import main
from linres.diagram import position, triangle_svg
from linres.documents import IdealDocument, parse, parse_json, parse_text, serialize
from linres.errors import LinresError, ParseError
from linres.fractal import sier3
from linres.monomials import MonomialIdeal, maximal_power, missing_monomials


# --------------------------------------------------------------------------
# documents


def test_text_format():
    doc = parse_text("# three variables\nnvars 3\nname demo\nx1^2 x2\nx3^3\n")
    assert doc.nvars == 3 and doc.name == "demo"
    assert doc.to_ideal() == MonomialIdeal(3, [(2, 1, 0), (0, 0, 3)])
    assert parse_text("x1 x2\nx2^2").nvars == 2
    assert parse_text("x1", nvars=4).nvars == 4


def test_text_errors_carry_positions():
    with pytest.raises(ParseError) as e:
        parse_text("x1\nx2 y3\n")
    assert e.value.line == 2 and e.value.column == 4
    with pytest.raises(ParseError):
        parse_text("nvars 2\nx3\n")
    with pytest.raises(ParseError):
        parse_text("nvars 2\n", nvars=3)


def test_json_format():
    doc = parse_json('{"schema": 1, "nvars": 2, "gens": [[1, 0], [0, 2]]}')
    assert doc.to_ideal() == MonomialIdeal(2, [(1, 0), (0, 2)])
    for bad in ('{"nvars": 2, "gens": [[1]]}', '{"nvars": 2, "gens": [], "extra": 1}',
                '{"schema": 2, "nvars": 1, "gens": []}', '[1, 2]', '{"nvars": 1, "gens": [[-1]]}'):
        with pytest.raises(ParseError):
            parse_json(bad)
    with pytest.raises(ParseError) as e:
        parse_json('{"nvars": 2,\n "gens": [}')
    assert e.value.line == 2


def test_round_trip_both_formats():
    doc = IdealDocument.from_ideal(sier3(5), name="s5", field="QQ")
    for fmt in ("json", "text"):
        back = parse(serialize(doc, fmt))
        assert back.to_ideal() == sier3(5) and back.name == "s5"
    assert parse(serialize(IdealDocument(2, [[0, 0]]), "text")).to_ideal().is_unit()


def test_parse_reads_files(tmp_path):
    p = tmp_path / "i.txt"
    p.write_text("x1^2\nx2^2\n")
    assert parse(str(p)).to_ideal() == MonomialIdeal(2, [(2, 0), (0, 2)])
    assert parse(p).nvars == 2


# --------------------------------------------------------------------------
# diagram


def test_triangle_positions():
    d = 4
    assert position((4, 0, 0), d) == (2.0, 0)
    assert position((0, 4, 0), d) == (0, 4)
    assert position((0, 0, 4), d) == (4, 4)


def test_svg_marks_generators_and_gaps():
    I = sier3(6)
    root = ET.fromstring(triangle_svg(I))
    circles = root.findall("{http://www.w3.org/2000/svg}circle")
    black = [c for c in circles if c.get("fill") == "black"]
    red = [c for c in circles if c.get("fill") == "red"]
    assert len(black) == len(I.gens)
    assert len(red) == len(missing_monomials(I, 6))
    assert float(red[0].get("r")) > float(black[0].get("r"))
    with pytest.raises(LinresError):
        triangle_svg(maximal_power(2, 2))


# --------------------------------------------------------------------------
# command line


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def fractal7(tmp_path, capsys):
    path = tmp_path / "s7.json"
    assert run(capsys, "gen", "fractal", "--d", "7", "--out", str(path))[0] == 0
    return str(path)


def test_gen_and_check(capsys, fractal7):
    code, out, _ = run(capsys, "check", "--ideal", fractal7, "--d", "7", "--p", "2")
    rep = json.loads(out)
    assert code == 0 and rep["verdict"] is True and rep["schema"] == 1
    assert rep["checks"][0]["method"] == "dual_graph_paths"
    assert "timing_s" not in rep
    code, out, _ = run(capsys, "check", "--ideal", fractal7, "--d", "7", "--p", "3", "--method", "oracle")
    assert code == 1 and json.loads(out)["verdict"] is False


def test_check_methods_agree(capsys, tmp_path):
    path = tmp_path / "i.txt"
    gens = [g for g in maximal_power(4, 3).gens if g.exponents != (1, 1, 1, 0)]
    path.write_text(serialize(IdealDocument.from_ideal(MonomialIdeal(4, gens)), "text"))
    verdicts = set()
    for method in ("auto", "oracle", "locality"):
        code, out, _ = run(capsys, "check", "--ideal", str(path), "--d", "3", "--p", "2", "--method", method)
        verdicts.add(json.loads(out)["verdict"])
    assert len(verdicts) == 1


def test_betti_and_timing(capsys, fractal7):
    code, out, _ = run(capsys, "betti", "--ideal", fractal7, "--oracle", "taylor", "--timing")
    rep = json.loads(out)
    assert code == 0 and rep["regularity"] == 10 and "timing_s" in rep
    assert rep["betti"][0] == [0, 7, len(sier3(7).gens)]


def test_fields(capsys, fractal7):
    _, out, _ = run(capsys, "betti", "--ideal", fractal7, "--field", "Fp")
    assert json.loads(out)["field"] == "F32003"
    code, _, err = run(capsys, "betti", "--ideal", fractal7, "--field", "F4")
    assert code == 2 and "error" in err


def test_analyze(capsys, fractal7):
    code, out, _ = run(capsys, "analyze", "--ideal", fractal7)
    rep = json.loads(out)
    assert code == 0 and sorted(rep["socle"]) == [[1, 1, 5], [1, 5, 1], [3, 3, 3], [5, 1, 1]]


def test_shelling_command(capsys, tmp_path):
    start, target = tmp_path / "a.json", tmp_path / "b.json"
    run(capsys, "gen", "sier3", "--d", "6", "--out", str(start))
    run(capsys, "gen", "power", "--n", "3", "--d", "6", "--out", str(target))
    code, out, _ = run(capsys, "shelling", "--ideal", str(start), "--target", str(target))
    rep = json.loads(out)
    assert code == 1 and rep["search"]["status"] == "impossible"
    assert sorted(rep["structural"]["obstruction"]) == [[2, 2, 2], [3, 1, 2], [3, 2, 1]]


def test_diagram_and_dual(capsys, tmp_path, fractal7):
    code, out, _ = run(capsys, "diagram", "--ideal", fractal7)
    assert code == 0 and out.startswith("<svg")
    path = tmp_path / "sq.txt"
    path.write_text("x1 x2\nx3 x4\n")
    code, out, _ = run(capsys, "dual", "--ideal", str(path))
    assert code == 0 and out.splitlines()[1:] == ["1 2", "3 4"]


def test_text_report_and_errors(capsys, fractal7, tmp_path):
    code, out, _ = run(capsys, "analyze", "--ideal", fractal7, "--format", "text")
    assert code == 0 and "verdict: true" in out
    bad = tmp_path / "bad.txt"
    bad.write_text("x1 q2\n")
    code, _, err = run(capsys, "betti", "--ideal", str(bad))
    assert code == 2 and "line 1" in err
    assert run(capsys, "gen", "sharp", "--n", "3", "--d", "5", "--p", "2")[0] == 0
    code, _, err = run(capsys, "check", "--ideal", fractal7, "--d", "7", "--p", "2", "--method", "fast",
                       "--budget", "5")
    assert code == 0


def test_power_has_no_red_dots():
    assert 'fill="red"' not in triangle_svg(maximal_power(3, 5))
