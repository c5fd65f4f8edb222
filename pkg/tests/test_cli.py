import json
from importlib import resources

import jsonschema
import pytest

from zappatic.cli import EXIT_INCONCLUSIVE, EXIT_OK, EXIT_REFUTED, main
from zappatic.words import parse_relators


def schema(name):
    return json.loads(resources.files("zappatic").joinpath(f"schemas/{name}.json").read_text())


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_present_star(capsys):
    code, out, _ = run(capsys, "present", "--n", "8", "--stage", "star")
    assert code == EXIT_OK
    assert out.startswith("# n=8 stage=star")
    rels = parse_relators(out)
    assert len(rels) > 20


def test_present_appendix_to_file(tmp_path, capsys):
    path = tmp_path / "e10.txt"
    code, out, _ = run(capsys, "present", "--n", "10", "--stage", "full", "--fixture", "appendix",
                       "-o", str(path))
    assert code == EXIT_OK and out == ""
    assert len(parse_relators(path.read_text())) == 173


@pytest.mark.parametrize("argv", [
    ["present", "--n", "5", "--stage", "star"],
    ["present", "--n", "8", "--stage", "full"],
    ["present", "--n", "9", "--stage", "star", "--fixture", "appendix"],
    ["table", "--range", "9..4"],
    ["deduce", "--n", "8", "--relator", "5 x"],
])
def test_bad_input_exits_1(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == EXIT_REFUTED
    assert err.startswith("error:")


def test_verify_order(capsys):
    code, out, _ = run(capsys, "verify", "--n", "8")
    assert code == EXIT_OK
    rep = json.loads(out)
    jsonschema.validate(rep, schema("verify"))
    assert rep["order"] == rep["n_factorial"] == 40320 and rep["certified"]


def test_verify_range_coset(capsys):
    code, out, _ = run(capsys, "verify", "--range", "6..11", "--method", "coset")
    assert code == EXIT_OK
    reps = json.loads(out)
    assert [r["n"] for r in reps] == list(range(6, 12))
    for r in reps:
        jsonschema.validate(r, schema("verify"))
        assert r["status"] == "CERTIFIED"


def test_verify_hom_details(capsys):
    code, out, _ = run(capsys, "verify", "--n", "12", "--method", "hom", "--hom-details")
    assert code == EXIT_OK
    rep = json.loads(out)
    jsonschema.validate(rep, schema("verify"))
    assert all(r["pass"] for r in rep["relators"])


def test_verify_inconclusive_exits_2(capsys):
    code, out, _ = run(capsys, "verify", "--n", "10", "--max-cosets", "100")
    assert code == EXIT_INCONCLUSIVE
    rep = json.loads(out)
    jsonschema.validate(rep, schema("verify"))
    assert rep["status"] == "INCONCLUSIVE" and rep["order"] is None


def test_verify_needs_degree(capsys):
    with pytest.raises(SystemExit):
        main(["verify"])


def test_deduce(capsys):
    code, out, _ = run(capsys, "deduce", "--n", "8", "--relator", "2 4 -2 -4")
    assert code == EXIT_OK
    rep = json.loads(out)
    jsonschema.validate(rep, schema("deduce"))
    assert rep["results"][0]["verdict"] == "CONSEQUENCE"


def test_deduce_refuted(capsys):
    code, out, _ = run(capsys, "deduce", "--n", "8", "--relator", "5 8 -5 -8")
    assert code == EXIT_REFUTED
    assert json.loads(out)["results"][0]["verdict"] == "NOT_CONSEQUENCE"


def test_deduce_inconclusive(capsys):
    code, _, _ = run(capsys, "deduce", "--n", "8", "--max-cosets", "50")
    assert code == EXIT_INCONCLUSIVE


def test_invariants(capsys):
    code, out, _ = run(capsys, "invariants", "--n", "31")
    assert code == EXIT_OK
    rep = json.loads(out)
    jsonschema.validate(rep, schema("invariants"))
    assert rep["existence"]["verdict"] == "NONEXISTENT"
    code, out, _ = run(capsys, "invariants", "--range", "4..6")
    assert sorted(json.loads(out)) == ["4", "5", "6"]


@pytest.mark.parametrize("fmt", ["md", "csv", "json"])
def test_table(capsys, fmt):
    code, out, _ = run(capsys, "table", "--range", "4..30", "--format", fmt)
    assert code == EXIT_OK
    if fmt == "json":
        jsonschema.validate(json.loads(out), schema("table"))
    else:
        assert "EXISTS_POSSIBLE" in out
