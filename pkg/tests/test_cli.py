import io
import json

import pytest

from perfrank.cli import WorkspaceError, load, loads, run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, err = call(*argv, "--json")
    return code, json.loads(out) if out else None, err


def test_bundled_workspace_counts():
    ws = load("smallexample")
    assert len(ws.algebras) == 1 and len(ws.homs) == 2 and len(ws.modules) == 4


def test_rank_object_tau_generator():
    code, out, _ = call("rank", "object", "--complex", "twoterm-alpha2", "--hom", "loc-m2")
    assert code == 0 and "rank: 0\n" in out
    code, data, _ = call_json("rank", "object", "--complex", "twoterm-alpha2", "--hom", "loc-m2")
    assert data["rank"] == {"period": "inf", "coeffs": []}
    assert data["classification"]["in_kernel"] is True


def test_rank_variants():
    code, data, _ = call_json("rank", "object", "--complex", "twoterm-alpha2-free", "--hom", "loc-m2")
    assert data["rank"]["coeffs"] == [[0, "1/2"], [1, "1/2"]]
    code, data, _ = call_json("rank", "morphism", "--map", "alpha2", "--hom", "loc-m2", "--period", "3")
    assert code == 0 and data["rank"] == {"period": 3, "coeffs": [[0, "1/2"]]}
    code, data, _ = call_json("rank", "morphism", "--matrix", "F", "--hom", "loc-m2")
    assert data["sylvester_rank"] == "1"
    code, data, _ = call_json("rank", "module", "--module", "S1", "--hom", "aug")
    assert data["rank"] == "1"
    code, data, _ = call_json("rank", "idempotent", "--complex", "e1A", "--hom", "loc-m2")
    assert data["rank"]["coeffs"] == [[0, "1/2"]]


def test_example_two_cycle_matrix_hom():
    code, out, _ = call("example", "smallexample-m2")
    assert code == 0
    assert "verdict: consistent with localizing to depth 6" in out
    assert "passes to depth 6" in out


@pytest.mark.parametrize("name", ["smallexample-aug", "fiedorowicz", "dualnumbers"])
def test_other_examples_reproduce(name):
    code, data, _ = call_json("example", name)
    assert code == 0 and data["reproduced"] is True


def test_axioms_all_pass_with_seed():
    code, data, _ = call_json("axioms", "--hom", "aug", "--period", "1", "--samples", "20",
                              "--seed", "7")
    assert code == 0 and data["passed"]
    assert [r["suite"] for r in data["reports"]] == ["rank", "sylvester", "lemmas"]


def test_json_is_deterministic_and_flag_position_free():
    a = call("--json", "axioms", "--hom", "loc-m2", "--suite", "rank", "--samples", "5", "--seed", "2")
    b = call("axioms", "--hom", "loc-m2", "--suite", "rank", "--samples", "5", "--seed", "2", "--json")
    assert a == b


def test_human_and_json_agree_on_verdicts():
    code_h, out, _ = call("epicheck", "--hom", "aug")
    code_j, data, _ = call_json("epicheck", "--hom", "aug")
    assert code_h == code_j == 1
    assert f"verdict: {data['verdict']}" in out


def test_check_failures_exit_one():
    assert call("localizing", "--hom", "aug")[0] == 1
    assert call("localizing", "--hom", "loc-m2")[0] == 0
    assert call("tor", "--module", "S1", "--left", "S1-left", "--depth", "2", "--expect", "1,0,0")[0] == 1
    assert call("tor", "--module", "S1", "--left", "S1-left", "--depth", "2", "--expect", "1,0,1")[0] == 0


def test_input_errors_exit_two():
    code, _, err = call("rank", "object", "--complex", "nope", "--hom", "loc-m2")
    assert code == 2 and "unknown complex 'nope'" in err
    code, _, err = call("rank", "morphism", "--map", "alpha2", "--hom", "loc-m2", "--period", "2")
    assert code == 2 and "rank" in err
    assert call("frobnicate")[0] == 2
    assert call("rank", "object", "--hom", "aug", "--workspace", "/nonexistent.json")[0] == 2


def test_submatrix_and_classify():
    code, data, _ = call_json("submatrix", "--matrix", "F", "--hom", "loc-m2")
    assert data["over"] == "K" and data["rows"] == [0, 3] and data["size"] == 2
    code, data, _ = call_json("classify", "--map", "alpha2", "--hom", "loc-m2")
    assert data["classification"]["full"] is False


def test_explicit_workspace_file(tmp_path):
    p = tmp_path / "ws.json"
    p.write_text(json.dumps({
        "algebras": {"K": {"structure": {"basis": ["1"], "unit": "1", "products": [[0, 0, 0, 1]]}}},
        "homs": {"id": {"algebra": "K", "n": 1, "images": {"1": [[1]]}}},
        "complexes": {"X": {"algebra": "K", "degrees": [{"n": 0, "rank": 2}, {"n": 1, "rank": 1}],
                            "differentials": {"1": {"rows": 2, "cols": 1, "entries": [["1"], [0]]}}}}}))
    code, data, _ = call_json("rank", "object", "--complex", "X", "--hom", "id", "--workspace", str(p))
    assert code == 0 and data["rank"]["coeffs"] == [[0, "1"]]


def test_empty_file_is_schema_error(tmp_path):
    p = tmp_path / "empty.json"
    p.write_text("")
    with pytest.raises(WorkspaceError, match="schema"):
        load(str(p))
    code, _, err = call("epicheck", "--hom", "x", "--workspace", str(p))
    assert code == 2 and "schema" in err


def test_non_associative_algebra_names_triple():
    bad = {"algebras": {"B": {"structure": {
        "basis": ["1", "x", "y"], "unit": "1",
        "products": [[0, 0, 0, 1], [0, 1, 1, 1], [1, 0, 1, 1], [0, 2, 2, 1], [2, 0, 2, 1],
                     [1, 1, 2, 1], [1, 2, 1, 1], [2, 1, 0, 1], [2, 2, 2, 1]]}}}}
    with pytest.raises(WorkspaceError) as exc:
        loads(json.dumps(bad))
    assert any("associativity fails on (" in e for e in exc.value.errors)


def test_all_errors_are_enumerated():
    data = {"algebras": {"K": {"structure": {"basis": ["1"], "unit": "1", "products": [[0, 0, 0, 1]]}}},
            "homs": {"h": {"algebra": "missing", "n": 1},
                     "g": {"algebra": "K", "n": 1, "images": {"1": [[2]]}}},
            "modules": {"M": {"hom": "nohom"}},
            "complexes": {"X": {"algebra": "K", "degrees": [{"n": 0, "rank": 1}, {"n": 1, "rank": 1},
                                                            {"n": 2, "rank": 1}],
                                "differentials": {"1": {"rows": 1, "cols": 1, "entries": [["1"]]},
                                                  "2": {"rows": 1, "cols": 1, "entries": [["1"]]}}}},
            "bogus": 1}
    with pytest.raises(WorkspaceError) as exc:
        loads(json.dumps(data))
    errs = exc.value.errors
    assert len(errs) == 5
    assert any("bogus" in e for e in errs)
    assert any("hom h" in e and "missing" in e for e in errs)
    assert any(e.startswith("hom g") for e in errs)
    assert any("module M" in e and "nohom" in e for e in errs)
    assert any(e.startswith("complex X") for e in errs)


def test_malformed_json():
    with pytest.raises(WorkspaceError, match="malformed"):
        loads("{not json")


def test_readme_workspace_example_loads():
    from pathlib import Path
    text = (Path(__file__).resolve().parents[1] / "README.md").read_text()
    ws = loads(text.split("```json")[1].split("```")[0])
    assert set(ws.algebras) == {"A", "D", "M"} and "P" in ws.idempotents
