import json
import subprocess
import sys
from pathlib import Path

import pytest

from binedge import complete_graph, cycle_graph, path_graph, to_graph6
from binedge.cli import main
from binedge.harness import (
    CHECK_NAMES,
    FAIL,
    PASS,
    SKIPPED,
    RunConfig,
    check_graph,
    field_comparison,
    survey,
    survey_n,
)
from binedge.errors import ResourceLimitExceeded

DATA = Path(__file__).parent / "data"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


# -- harness ------------------------------------------------------------------------

def test_check_four_cycle_all_pass(c4):
    rep = check_graph(c4)
    assert [it.name for it in rep.items] == list(CHECK_NAMES)
    assert all(it.status == PASS for it in rep.items), rep.render()
    assert rep.depth == {"Q": 4, "A": 4} and rep.dim == 5


def test_check_path_all_pass_with_equal_variants(p5):
    rep = check_graph(p5)
    assert rep.passed and all(it.status == PASS for it in rep.items)
    assert rep.sizes == {"Q": 17, "A": 17}
    assert rep.item("a_subset_of_q").detail.endswith("equal")


def test_check_corner_items_are_not_vacuous_on_cycles():
    rep = check_graph(cycle_graph(5))
    assert "checked" in rep.item("corner_multiplicities_vanish").detail
    assert "m" in rep.item("maximal_ideal_interval_contractible").detail


def test_check_caps_mark_items_skipped(twin_triangles):
    rep = check_graph(twin_triangles)
    assert rep.passed
    assert {it.status for it in rep.items} == {SKIPPED}


def test_survey_two_vertices():
    s = survey_n(2)
    assert s.graphs == 2 and s.failed == 0
    assert dict(s.depth_histogram) == {3: 1, 4: 1}


def test_survey_three_vertices():
    s = survey_n(3)
    assert s.failed == 0
    # edgeless 6; one edge 3 + 2 = 5; two edges (path) 4; triangle 4
    assert dict(s.depth_histogram) == {4: 4, 5: 3, 6: 1}


def test_survey_cap():
    with pytest.raises(ResourceLimitExceeded):
        survey_n(9)


def test_field_comparison_small():
    comp = field_comparison([cycle_graph(4), path_graph(4), complete_graph(3)])
    assert comp.disagreements == []
    assert [ds for _, ds in comp.depths] == [(4, 4, 4), (5, 5, 5), (4, 4, 4)]
    assert "0 disagreement(s)" in comp.render()


def test_run_config_validation():
    with pytest.raises(ValueError):
        RunConfig(characteristic=4)
    with pytest.raises(ValueError):
        RunConfig(variant="B")
    with pytest.raises(ValueError):
        RunConfig(max_chains=0)


# -- command line --------------------------------------------------------------------------

def test_cli_depth_on_path(capsys):
    code, out, _ = run(capsys, "depth", DATA / "path5.txt")
    assert code == 0
    assert "depth 6, dim 6, Cohen-Macaulay" in out


def test_cli_depth_json(capsys):
    code, out, _ = run(capsys, "depth", DATA / "cycle4.txt", "--format", "json", "--variant", "both")
    assert code == 0
    data = json.loads(out)
    assert data["results"]["Q"] == {"depth": 4, "dim": 5, "cohen_macaulay": False}
    assert data["results"]["A"]["depth"] == 4
    assert data["bounds"]["bn_upper"] == 4


def test_cli_primes_on_twin_triangles(capsys):
    code, out, _ = run(capsys, "primes", DATA / "twin_triangles.txt", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert len(data["cut_sets"]) == 16
    assert {v for t in data["cut_sets"] for v in t} == {2, 4, 7, 9}


def test_cli_lctable_on_four_cycle(capsys):
    code, out, _ = run(capsys, "lctable", DATA / "cycle4.txt", "--format", "json")
    assert code == 0
    rows = json.loads(out)["Q"]["rows"]
    assert sorted(rows) == ["4", "5"]
    assert rows["4"] == [{"d": 3, "m": 2}, {"d": 4, "m": 2}]


def test_cli_poset_with_dot(capsys, tmp_path):
    dot = tmp_path / "p5.dot"
    code, out, _ = run(capsys, "poset", DATA / "path5.txt", "--dot", dot)
    assert code == 0
    assert out.startswith("Q_G: 17 elements")
    assert dot.read_text().count("->") == 32


def test_cli_poset_variants_on_twin_triangles(capsys):
    code, out, _ = run(capsys, "poset", DATA / "twin_triangles.txt", "--variant", "both",
                       "--max-n", 10, "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert len(data["Q"]["elements"]) == len(data["A"]["elements"]) == 168


def test_cli_check_exit_codes(capsys):
    code, out, _ = run(capsys, "check", DATA / "cycle4.txt")
    assert code == 0 and FAIL not in out


def test_cli_graph6_from_stdin(capsys, monkeypatch):
    import io
    monkeypatch.setattr(sys, "stdin", io.StringIO(to_graph6(cycle_graph(5)) + "\n"))
    code, out, _ = run(capsys, "depth", "-", "--input-format", "graph6")
    assert code == 0 and "depth 5" in out


def test_cli_parse_error_exit_code(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("n 3\n1 1\n")
    code, _, err = run(capsys, "depth", bad)
    assert code == 2 and "line 2" in err
    code, _, err = run(capsys, "depth", tmp_path / "missing.txt")
    assert code == 2


def test_cli_bad_field_exit_code(capsys):
    code, _, err = run(capsys, "depth", DATA / "path5.txt", "--field", "4")
    assert code == 2 and "prime" in err


def test_cli_resource_exit_code(capsys):
    code, _, err = run(capsys, "depth", DATA / "twin_triangles.txt")
    assert code == 3 and "resource limit" in err
    code, _, _ = run(capsys, "lctable", DATA / "cycle4.txt", "--max-elements", 2)
    assert code == 3


def test_cli_survey_and_fields(capsys):
    code, out, _ = run(capsys, "survey", 3, "--format", "json", "--fields", "0,2,3")
    assert code == 0
    data = json.loads(out)
    assert data["graphs"] == 8 and data["failures"] == []
    assert data["field_comparison"]["disagreements"] == []


def test_cli_survey_graph6_file(capsys, tmp_path):
    f = tmp_path / "g.g6"
    f.write_text("\n".join(to_graph6(g) for g in (cycle_graph(4), path_graph(4))) + "\n")
    code, out, _ = run(capsys, "survey", f)
    assert code == 0 and "graphs checked: 2" in out


def test_cli_output_is_deterministic():
    cmd = [sys.executable, "-m", "binedge.cli", "poset", str(DATA / "path5.txt"), "--format", "json"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and json.loads(a)["Q"]["n"] == 5
