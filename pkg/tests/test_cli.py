import json
from pathlib import Path

import pytest

from coalie import catalog
from coalie.cli import main
from coalie.formats import (ansatz_to_dict, emit_algebra_file, parse_algebra_file,
                            parse_ansatz_file)
from coalie.errors import ParseError
from coalie.search import nonabelian_case1_ansatz

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def emit(tmp_path, name, params=None):
    path = tmp_path / ("%s.json" % name)
    path.write_text(emit_algebra_file(catalog.build(name, params)), encoding="utf-8")
    return str(path)


def golden(name, text):
    path = GOLDEN / name
    assert path.read_text(encoding="utf-8") == text


@pytest.mark.parametrize("name", catalog.names())
def test_algebra_file_round_trip(name):
    s = catalog.build(name)
    t = parse_algebra_file(emit_algebra_file(s))
    assert t == s and t.name == name


@pytest.mark.parametrize("doc,fragment", [
    ('{"basis": ["x", "y"], "bracket": {"y,x": {"y": "1"}}}', "earlier basis element first"),
    ('{"basis": ["x", "y"], "bracket": {"x,y": {"w": "1"}}}', "unknown basis name"),
    ('{"basis": ["x"], "coproduct": {"x": [["x", "x", "1/0"]]}}', "malformed rational"),
    ('{"basis": ["x"], "colour": 1}', "unknown fields"),
    ('{"basis": ["x", "x"]}', "distinct"),
    ('{"basis": ["x"], "basis": ["y"]}', "duplicate key"),
    ('{"basis": ["x"],', "line 1"),
])
def test_parse_errors_name_the_location(doc, fragment):
    with pytest.raises(ParseError) as err:
        parse_algebra_file(doc, source="f.json")
    assert fragment in str(err.value) and "f.json" in str(err.value)


def test_ansatz_file_round_trip():
    s = catalog.build("lie-2dim-nonabelian")
    a = nonabelian_case1_ansatz(s)
    b = parse_ansatz_file(json.dumps(ansatz_to_dict(a, s)), s)
    assert b.entries == a.entries and b.unknowns == a.unknowns


def test_verify_exit_codes(tmp_path, capsys):
    good = emit(tmp_path, "ex4.2")
    code, out, _ = run(capsys, "verify", good)
    assert code == 0 and out.rstrip().endswith("result: PASS")
    taft = emit(tmp_path, "ex1.7-taft")
    code, out, _ = run(capsys, "verify", taft)
    assert code == 1
    golden("verify_taft.txt", out.replace(taft, "taft.json"))


def test_input_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"basis": ["x", "y"], "bracket": {"y,x": {"y": "1"}}}')
    code, _, err = run(capsys, "verify", str(bad))
    assert code == 2 and "earlier basis element first" in err
    code, _, err = run(capsys, "verify", str(tmp_path / "missing.json"))
    assert code == 2 and "cannot read" in err
    code, _, _ = run(capsys, "frobnicate")
    assert code == 2


def test_antipode_golden(tmp_path, capsys):
    code, out, _ = run(capsys, "antipode", emit(tmp_path, "ex4.2"), "--max-degree", "3")
    assert code == 0
    golden("antipode_ex4.2.txt", out)


def test_antipode_without_conilpotency(tmp_path, capsys):
    code, out, _ = run(capsys, "antipode", emit(tmp_path, "ex1.9-grouplike"))
    assert code == 1 and out.startswith("no antipode")


def test_antipode_json(tmp_path, capsys):
    code, out, _ = run(capsys, "antipode", emit(tmp_path, "ex4.2"), "--format", "json")
    doc = json.loads(out)
    assert doc["antipode"]["z"] == "-z + y" and doc["involutory"] is False


def test_invariants(tmp_path, capsys):
    code, out, _ = run(capsys, "invariants", emit(tmp_path, "heis-b"), "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert (doc["nilpotency"], doc["conilpotency"], doc["center"]) == (2, 3, "span{z}")
    code, out, _ = run(capsys, "invariants", emit(tmp_path, "lie-sl2"), "--format", "json")
    assert json.loads(out)["nilpotency"] == "inf"


def test_primitives(tmp_path, capsys):
    code, out, _ = run(capsys, "primitives", emit(tmp_path, "ex4.2"), "--degree", "2")
    assert code == 0 and out == "primitives up to degree 2: dim 2\n  x\n  y\n"


def test_deltaspace(tmp_path, capsys):
    alg = emit(tmp_path, "ex4.2")
    sub = tmp_path / "v.json"
    sub.write_text('{"vectors": [{"x": "1"}, {"y": "1"}, {"z": "1"}]}')
    code, out, _ = run(capsys, "deltaspace", alg, "--subspace", str(sub))
    assert code == 0
    sub.write_text('{"vectors": [{"x": "1"}, {"x^2": "1"}, {"q": "1"}]}')
    code, _, err = run(capsys, "deltaspace", alg, "--subspace", str(sub))
    assert code == 2


def test_search_golden(tmp_path, capsys):
    s = catalog.build("lie-2dim-nonabelian")
    fixed = emit(tmp_path, "lie-2dim-nonabelian")
    ansatz = tmp_path / "case1.json"
    ansatz.write_text(json.dumps(ansatz_to_dict(nonabelian_case1_ansatz(s), s)))
    code, out, _ = run(capsys, "search", "--fixed", fixed, "--ansatz", str(ansatz))
    assert code == 0
    golden("search_case1.txt", out)
    code, _, _ = run(capsys, "search", "--fixed", fixed, "--ansatz", str(ansatz),
                     "--mode", "bracket")
    assert code == 2


def test_search_rank_one_file(tmp_path, capsys):
    fixed = emit(tmp_path, "lie-sl2")
    ansatz = tmp_path / "r1.json"
    ansatz.write_text(json.dumps({"rank1": {"lambda": {"e": "a", "f": "b", "h": "c"},
                                            "T": ["t1", "t2", "t3"]}}))
    code, out, _ = run(capsys, "search", "--fixed", fixed, "--ansatz", str(ansatz),
                       "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["status"] == "solved_zero"


def test_catalog_commands(tmp_path, capsys):
    code, out, _ = run(capsys, "catalog", "list")
    assert code == 0 and "ex1.7-taft" in out and "[failing fixture]" in out
    params = tmp_path / "p.json"
    params.write_text('{"lambda": "3"}')
    code, out, _ = run(capsys, "catalog", "emit", "ex1.4", "--params", str(params))
    assert code == 0 and parse_algebra_file(out).coproduct == {0: {(1, 1): 3}}
    code, _, err = run(capsys, "catalog", "emit", "heis-c", "--params", str(params))
    assert code == 2
    code, _, err = run(capsys, "catalog", "emit")
    assert code == 2


def test_survey_golden(capsys):
    code, out, _ = run(capsys, "survey")
    assert code == 1  # heis-b exceeds the bound
    golden("survey.txt", out)


def test_seed_option_after_subcommand(tmp_path, capsys):
    code, out, _ = run(capsys, "invariants", emit(tmp_path, "lie-sl2"), "--seed", "5",
                       "--samples", "8")
    assert code == 0 and "small_centralizers_sampled" in out
