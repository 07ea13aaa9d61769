import io
import json

import pytest

from hypercert.cli import EXIT_INPUT, EXIT_OK, EXIT_SIZE, run

WORKED = {"n": 1, "hyperplanes": [[1, 0], [0, 1], [1, 1], [1, -1]]}


def call(argv, payload=None):
    out = io.StringIO()
    stdin = io.StringIO(json.dumps(payload) if payload is not None else "")
    code = run(argv, stdin=stdin, stdout=out)
    return code, out.getvalue()


def test_check_genericity_json_is_byte_stable():
    code, first = call(["check-genericity"], WORKED)
    _, second = call(["check-genericity", "--json", json.dumps(WORKED)])
    assert code == EXIT_OK and first == second
    doc = json.loads(first)
    assert list(doc) == ["verdict", "n", "mode", "enumeration", "configurations_checked", "witness"]
    assert doc["verdict"] == "NonGeneric" and doc["witness"]["value"] == "0"


def test_text_report_contents():
    code, text = call(["check-genericity", "--format", "text"], WORKED)
    assert code == EXIT_OK
    assert "block: [0, 2]" in text and "re-evaluated determinant: 0" in text
    bad = {"n": 1, "hyperplanes": [[1, 0], [2, 0], [0, 1], [1, 1]]}
    _, text = call(["check-genericity", "--format", "text"], bad)
    assert "violating subset: [0, 1]" in text


def test_generic_json_has_null_witness():
    fam = {"n": 1, "hyperplanes": [[1, 0], [0, 1], [1, 1], [1, 3]]}
    code, out = call(["check-genericity"], fam)
    doc = json.loads(out)
    assert code == EXIT_OK and doc["witness"] is None
    assert doc["verdict"] == "Generic" and doc["configurations_checked"] == 24


def test_file_input(tmp_path):
    path = tmp_path / "family.json"
    path.write_text(json.dumps(WORKED))
    code, out = call(["check-general-position", "--input", str(path)])
    assert code == EXIT_OK and json.loads(out) == {"general_position": True, "violating_subset": None}
    code, out = call(["check-general-position", "--input", str(tmp_path / "missing.json")])
    assert code == EXIT_INPUT


def test_lattice_commands():
    assert json.loads(call(["tuple-rank"], [[1, 0], [0, 1], [1, 1]])[1]) == {"rank": 2}
    code, out = call(["check-property"], {"tuple": [[0], [0], [1], [-1]], "r": 4, "s": 2})
    assert code == EXIT_OK and json.loads(out)["property"] is True
    code, out = call(["check-property"], {"tuple": [[0], [1], [2]], "r": 2, "s": 2})
    assert code == EXIT_INPUT and json.loads(out)["error"] == "input"
    doc = json.loads(call(["classify"], {"tuple": [[0], [0], [1], [-1]], "s": 2})[1])
    assert doc["kind"] == "TypeB" and doc["breakpoints"] == [1]


def test_algebra_commands():
    doc = json.loads(call(["lemma41"], {"t": 1, "k": 1, "breakpoints": [1], "constants": [1, -1],
                                        "a": [[2, 1], [1, 1]]})[1])
    assert doc["vanishes"] and doc["consistent"]
    doc = json.loads(call(["borel"], {"terms": [{"constant": "1", "exponents": [1]},
                                                {"constant": "-1 @ 1", "exponents": [1]}]})[1])
    assert doc == {"is_zero": True, "groups": [[0, 1]]}
    doc = json.loads(call(["pairing-identity"], {"a": [[3, 5], [7, 2]], "c": [2, 1]})[1])
    assert doc["det_vanishes"] is False and doc["forced_c"] is True


@pytest.mark.parametrize("payload", [
    {"n": 1, "hyperplanes": [[1.5, 0], [0, 1], [1, 1], [1, -1]]},
    {"n": 1, "hyperplanes": [["1/0", 0], [0, 1], [1, 1], [1, -1]]},
    {"n": 1, "hyperplanes": [[1, 0, 0], [0, 1], [1, 1], [1, -1]]},
    {"n": 1, "hyperplanes": [[1, 0], [0, 1], [1, 1]]},
    {"hyperplanes": []},
])
def test_input_errors(payload):
    code, out = call(["check-genericity"], payload)
    assert code == EXIT_INPUT and json.loads(out)["error"] == "input"


def test_malformed_json():
    out = io.StringIO()
    assert run(["tuple-rank"], stdin=io.StringIO("[[1, 2]"), stdout=out) == EXIT_INPUT


def test_size_guard():
    fam = {"n": 2, "hyperplanes": [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1], [1, 2, 3], [1, 4, 9]]}
    code, out = call(["check-genericity", "--max-n", "1"], fam)
    assert code == EXIT_SIZE and json.loads(out)["error"] == "size_limit"
    code, out = call(["check-property"], {"tuple": [[0]] * 13, "r": 3, "s": 2})
    assert code == EXIT_SIZE


def test_reference_and_symbolic_flags():
    _, ref = call(["check-genericity", "--reference-enumeration"], WORKED)
    _, sym = call(["check-genericity", "--mode", "symbolic"], WORKED)
    assert json.loads(ref)["enumeration"] == "reference"
    assert json.loads(sym)["mode"] == "symbolic" and json.loads(sym)["verdict"] == "NonGeneric"
