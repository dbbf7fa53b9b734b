import json

import pytest

from ramjac.cli import main


@pytest.fixture
def doc(tmp_path):
    def write(name, payload):
        path = tmp_path / name
        path.write_text(json.dumps(payload))
        return str(path)

    return write


REGULAR = {
    "p": 5,
    "eisenstein": [-5, 0],
    "variables": ["x"],
    "generators": ["x^2 - pi"],
}
SINGULAR = {
    "p": 3,
    "eisenstein": [-3, 0],
    "variables": ["x", "y"],
    "generators": ["x^2 - pi^2*y"],
    "prime_ideal": ["x", "y"],
}


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_locus_empty(doc, capsys):
    path = doc("a.json", REGULAR)
    code, out, _ = run(capsys, ["locus", path])
    assert code == 0
    assert "locus ideal: (1)" in out
    assert "empty: true" in out


def test_locus_json_and_determinism(doc, capsys):
    path = doc("b.json", SINGULAR)
    code, first, _ = run(capsys, ["locus", path, "--json"])
    assert code == 0
    payload = json.loads(first)
    assert payload == {
        "empty": False,
        "height": 1,
        "height_source": "computed over Frac(V)",
        "locus": ["x"],
    }
    code, second, _ = run(capsys, ["locus", path, "--json"])
    assert code == 0 and first == second


def test_locus_height_flag_overrides(doc, capsys):
    path = doc("c.json", SINGULAR)
    code, out, _ = run(capsys, ["locus", path, "--height", "2", "--json"])
    assert code == 0
    assert json.loads(out)["height"] == 2


def test_regular_at_from_file_field_and_flag(doc, capsys):
    path = doc("d.json", SINGULAR)
    code, out, _ = run(capsys, ["regular-at", path])
    assert code == 0 and out.strip() == "regular: false"
    code, out, _ = run(capsys, ["regular-at", path, "--ideal", "x", "y - 1"])
    assert code == 0 and out.strip() == "regular: false"


def test_regular_at_missing_ideal(doc, capsys):
    path = doc("e.json", REGULAR)
    code, _, err = run(capsys, ["regular-at", path])
    assert code == 2
    assert "no prime ideal" in err


def test_oracle_scan(doc, capsys):
    path = doc("f.json", REGULAR)
    code, out, _ = run(capsys, ["oracle-scan", path])
    assert code == 0
    assert "(0): on fiber, regular" in out
    assert "(1): off fiber" in out


def test_cross_validate(doc, capsys):
    path = doc("g.json", SINGULAR)
    code, out, _ = run(capsys, ["cross-validate", path])
    assert code == 0 and out.strip() == "agree: true"


def test_derive_commands(doc, capsys):
    path = doc("h.json", REGULAR)
    code, out, _ = run(capsys, ["derive", path, "pi", "--by", "pi"])
    assert code == 0 and out.strip() == "1"
    code, out, _ = run(capsys, ["derive", path, "x^2 - 5", "--by", "delta-p"])
    assert code == 0 and out.strip() == "5*x^8 - 50*x^6 + 250*x^4 - 625*x^2 + 624"
    code, out, _ = run(capsys, ["derive", path, "x^2 - pi", "--by", "x"])
    assert code == 0 and out.strip() == "2*x"


def test_groebner_inline_and_file(doc, capsys):
    code, out, _ = run(
        capsys,
        ["groebner", "--p", "5", "--vars", "x,y", "--gens", "x+y", "x-y", "--order", "lex"],
    )
    assert code == 0 and "(x, y)" in out
    path = doc("i.json", SINGULAR)
    code, out, _ = run(capsys, ["groebner", path])
    assert code == 0 and "(x^2)" in out


def test_pdegree(capsys):
    code, out, _ = run(capsys, ["pdegree", "--p", "3", "--vars", "x,y", "--gens", "x"])
    assert code == 0 and out.strip() == "1"
    code, out, _ = run(capsys, ["pdegree", "--p", "3", "--vars", "x,y"])
    assert code == 0 and out.strip() == "2"


def test_omega_check(doc, capsys):
    path = doc("j.json", SINGULAR)
    code, out, _ = run(capsys, ["omega-check", path, "--json"])
    assert code == 0
    assert json.loads(out) == {"free": False, "rank": 2, "dim_R": 2, "b": 0}


def test_non_eisenstein_rejected_with_exit_1(doc, capsys):
    for eis, fragment in [
        ([-1, 0], "not divisible by p"),
        ([-4, 0], "p^2"),
    ]:
        payload = dict(REGULAR, p=2, eisenstein=eis, generators=["x - pi"])
        path = doc("k.json", payload)
        code, _, err = run(capsys, ["locus", path])
        assert code == 1
        assert "not Eisenstein" in err and fragment in err


def test_schema_violations_exit_2(doc, capsys):
    cases = [
        dict(REGULAR, p=4),
        dict(REGULAR, variables=["x", "x"]),
        dict(REGULAR, generators="x"),
        {k: v for k, v in REGULAR.items() if k != "p"},
        dict(REGULAR, extra_field=1),
        dict(REGULAR, variables=["pi"]),
    ]
    for i, payload in enumerate(cases):
        path = doc(f"bad{i}.json", payload)
        code, _, err = run(capsys, ["locus", path])
        assert code == 2, payload
        assert "input error" in err


def test_expression_error_exit_2(doc, capsys):
    path = doc("m.json", dict(REGULAR, generators=["x +"]))
    code, _, err = run(capsys, ["locus", path])
    assert code == 2
    assert "position" in err


def test_math_precondition_exit_1(doc, capsys):
    # every component of (pi) contains pi: height must be declared
    path = doc("n.json", dict(REGULAR, generators=["pi"]))
    code, _, err = run(capsys, ["locus", path])
    assert code == 1
    assert "supply the height" in err


def test_unreadable_file_exit_2(capsys):
    code, _, err = run(capsys, ["locus", "/nonexistent/file.json"])
    assert code == 2


def test_derive_bad_variable(doc, capsys):
    path = doc("o.json", REGULAR)
    code, _, err = run(capsys, ["derive", path, "x", "--by", "zz"])
    assert code == 2
    assert "no variable" in err
