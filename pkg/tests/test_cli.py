import json

from conftest import brute_edge_count
from powercrit import make_symmetric
from powercrit.cli import main
from powercrit.report import (
    ANALYSIS_REPORT_SCHEMA,
    CENSUS_LINE_SCHEMA,
    ELEMENT_REPORT_SCHEMA,
    GRAPH_EXPORT_SCHEMA,
    validate_document,
)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_d15_plain_critical_class(capsys):
    code, out, _ = run(capsys, "analyze", "D:15", "--json", "--stable")
    assert code == 0
    doc = json.loads(out)
    validate_document(doc, ANALYSIS_REPORT_SCHEMA)
    assert doc["order"] == 30
    hits = [c for c in doc["classes"] if c["kind"] == "plain" and c["is_critical"]]
    assert len(hits) == 1
    assert hits[0]["size"] == 8 and hits[0]["closure_size"] == 9


def test_analyze_minimum_critical_group(capsys):
    code, out, _ = run(capsys, "analyze", "M:5,2,2,2,7", "--json", "--stable")
    assert code == 0
    doc = json.loads(out)
    assert doc["group_kind"]["is_critical_group"] is True
    non_trivial = [c for c in doc["classes"] if not (c["is_star_class"] and c["size"] == 1)]
    assert len(non_trivial) == 26
    assert doc["frobenius"] == {"p": 5, "a": 2, "q": 2, "b": 2}
    assert doc["is_eppo"] is True


def test_analyze_element_report(capsys):
    code, out, _ = run(capsys, "analyze", "S:4", "--element", "(1 2 3 4)", "--json", "--stable")
    assert code == 0
    doc = json.loads(out)
    validate_document(doc, ELEMENT_REPORT_SCHEMA)
    assert doc["kind"] == "compound" and doc["is_critical"] is True
    assert doc["params"]["p"] == 2 and doc["params"]["s"] == 0
    assert doc["is_maximal"] is True


def test_analyze_element_lazy_scale(capsys):
    code, out, _ = run(
        capsys, "analyze", "S:8", "--element", "(1 2 3)(4 5 6 7 8)", "--json", "--stable"
    )
    assert code == 0
    doc = json.loads(out)
    validate_document(doc, ELEMENT_REPORT_SCHEMA)
    assert doc["order"] == 40320
    assert doc["kind"] == "plain" and doc["is_critical"] is True
    assert doc["n_class_size"] == 8 and doc["closure_size"] == 9
    assert doc["is_maximal"] is True and doc["element_order"] == 15


def test_analyze_byte_identical_stable(capsys):
    _, first, _ = run(capsys, "analyze", "Q:3", "--json", "--stable")
    _, second, _ = run(capsys, "analyze", "Q:3", "--json", "--stable")
    assert first == second
    _, timed, _ = run(capsys, "analyze", "Q:3", "--json")
    assert "timing_ms" in json.loads(timed)
    assert "timing_ms" not in json.loads(first)


def test_analyze_human_output(capsys):
    code, out, _ = run(capsys, "analyze", "C:6", "--stable")
    assert code == 0
    assert "star vertices: 3" in out


def test_analyze_writes_dot(tmp_path, capsys):
    target = tmp_path / "g.dot"
    code, _, _ = run(capsys, "analyze", "C:8", "--stable", "--dot", str(target))
    assert code == 0
    text = target.read_text()
    assert text.startswith('graph "power(C:8)"') and text.count(" -- ") == 28


def test_census_cli(capsys):
    code, out, _ = run(capsys, "census", "--max-order", "100", "--verify-up-to", "100")
    assert code == 0
    assert "1 critical (orders [100])" in out
    code, out, _ = run(capsys, "census", "--max-order", "99")
    assert code == 0
    assert "0 critical (orders [])" in out


def test_census_jsonl(capsys):
    code, out, _ = run(capsys, "census", "--max-order", "100", "--verify-up-to", "100", "--json")
    assert code == 0
    lines = [json.loads(line) for line in out.splitlines()]
    for line in lines:
        validate_document(line, CENSUS_LINE_SCHEMA)
    crit = [l for l in lines if l["critical"]]
    assert len(crit) == 1 and crit[0]["order"] == 100 and crit[0]["graph_agrees"] is True


def test_verify_cli(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "closure", "--max-order", "24")
    assert code == 0
    assert "suite closure: pass" in out


def test_export_json_matches_brute_force(capsys):
    code, out, _ = run(capsys, "export", "S:4", "--format", "json", "--graph", "power")
    assert code == 0
    doc = json.loads(out)
    validate_document(doc, GRAPH_EXPORT_SCHEMA)
    assert len(doc["vertices"]) == 24
    assert len(doc["edges"]) == brute_edge_count(make_symmetric(4))


def test_export_enhanced_dot(capsys):
    code, out, _ = run(capsys, "export", "D:3", "--format", "dot", "--graph", "enhanced")
    assert code == 0
    assert out.startswith('graph "enhanced(D:3)"')


def test_export_to_file(tmp_path, capsys):
    target = tmp_path / "k8.json"
    code, _, _ = run(capsys, "export", "C:8", "--format", "json", "--output", str(target))
    assert code == 0
    assert len(json.loads(target.read_text())["edges"]) == 28


# -- exit code contract ------------------------------------------------------------


def test_exit_code_parse_error(capsys):
    code, _, err = run(capsys, "analyze", "Z:1")
    assert code == 2 and "position 0" in err


def test_exit_code_invalid_params(capsys):
    code, _, err = run(capsys, "analyze", "M:4,2,2,2,7")
    assert code == 2 and "not prime" in err


def test_exit_code_scale_error(capsys):
    code, _, err = run(capsys, "analyze", "S:8")
    assert code == 3 and "threshold" in err


def test_exit_code_usage(capsys):
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys)[0] == 2


def test_exit_code_scale_export(capsys):
    code, _, _ = run(capsys, "export", "S:8", "--format", "json")
    assert code == 3


def test_materialize_threshold_env(monkeypatch, capsys):
    monkeypatch.setenv("POWERCRIT_MAX_MATERIALIZE", "10")
    # table-backed construction shares the threshold
    code, _, err = run(capsys, "analyze", "C:12")
    assert code == 3 and "threshold 10" in err
    # the metacyclic backend needs no table: lazy element queries still work
    code, _, err = run(capsys, "analyze", "M:5,2,2,2,7")
    assert code == 3 and "threshold 10" in err
    code, out, _ = run(capsys, "analyze", "M:5,2,2,2,7", "--element", "(1,0)", "--json", "--stable")
    assert code == 0
    doc = json.loads(out)
    assert doc["element_order"] == 25 and doc["is_critical"] is True
