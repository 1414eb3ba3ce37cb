import io
import json

import pytest

from dibcolor.app import EXIT_DOMAIN, EXIT_OK, EXIT_USAGE, main


def run(*argv: str) -> tuple[int, str, str]:
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def payload(text: str) -> dict:
    return json.loads(text)["payload"]


@pytest.mark.parametrize(
    "param, source, expected",
    [
        ("dib", "transitive:n=5", 3),
        ("dc", "cycle:n=3", 2),
        ("dib", "complete:n=4", 4),
        ("dac", "transitive:n=4", 2),
    ],
)
def test_solve_json(param, source, expected):
    code, out, _ = run("solve", "--param", param, source, "--json")
    assert code == EXIT_OK
    report = json.loads(out)
    assert report["schema_version"] == 1
    assert report["command"][0] == "solve"
    assert report["payload"]["parameter"] == param
    assert report["payload"]["value"] == expected
    assert len(report["payload"]["witness"]) == report["digraph"]["n"]


def test_solve_text_from_literal_d6():
    code, out, _ = run("solve", "--param", "dib", "&AW")
    assert code == EXIT_OK
    assert out.splitlines()[0] == "dib=2"


def test_gen_writes_d6_line():
    code, out, _ = run("gen", "circulant:n=5,J=1+2")
    assert code == EXIT_OK
    assert out.startswith("&D") and out.endswith("\n")
    assert len(out.splitlines()) == 1


def test_gen_then_solve_from_file(tmp_path):
    _, text, _ = run("gen", "circulant:n=7,J=1+2+3")
    path = tmp_path / "c7.d6"
    path.write_text(text)
    code, out, _ = run("solve", "--param", "dib", "--input", str(path), "--json")
    assert code == EXIT_OK
    assert payload(out)["value"] == 4


def test_construct_emit_coloring():
    code, out, _ = run("construct", "--family", "transitive:n=6", "--emit-coloring")
    assert code == EXIT_OK
    assert out.strip() == "[0,1,2,2,1,0]"


def test_construct_json_audit_is_b_coloring():
    code, out, _ = run("construct", "circulant:n=7,J=1+2+3", "--json")
    assert code == EXIT_OK
    body = payload(out)
    assert body["method"] == "circulant-tournament"
    assert body["audit"]["is_b_coloring"] is True
    assert body["audit"]["k"] == 4


def test_check_coloring_file(tmp_path):
    path = tmp_path / "c.json"
    path.write_text("[0, 0, 1]")
    code, out, _ = run("check", "cycle:n=3", "--coloring", str(path))
    assert code == EXIT_OK
    assert out.splitlines() == ["k=2", "acyclic=yes", "complete=yes", "b_coloring=yes"]


def test_bounds_exact_json():
    code, out, _ = run("bounds", "complete:n=3", "--exact", "--json")
    assert code == EXIT_OK
    body = payload(out)
    assert body["omega"] == 3
    assert body["best"]["dib"] == {"lower": 3, "upper": 3}
    assert body["chain_consistent"] is True


def test_enumerate_counts():
    code, out, _ = run("enumerate", "--order", "4", "--regularity", "1")
    assert code == EXIT_OK
    assert len(out.splitlines()) == 2
    _, out, _ = run("enumerate", "--order", "3", "--regularity", "1", "--labeled", "--json")
    assert payload(out)["count"] == 2


def test_conjecture_json():
    code, out, _ = run("conjecture", "--order-max", "5", "--json")
    assert code == EXIT_OK
    cats = payload(out)
    assert [(c["n"], c["r"]) for c in cats] == [(3, 1), (3, 2), (4, 1), (4, 2), (5, 1), (5, 2)]
    assert cats[1]["counts"] == {"3": 1}
    for c in cats:
        assert set(c["counts"]) <= ({"2"} if c["r"] == 1 else {"2", "3"})


def test_sweep_save_and_history(db_url):
    code, out, _ = run("sweep", "--order-max", "3", "--property", "eq1_chain", "--property", "thm2_ng", "--save")
    assert code == EXIT_OK
    assert out.splitlines()[0].startswith("eq1_chain: checked=69 ok")

    code, out, _ = run("conjecture", "--order-max", "3", "--save")
    assert code == EXIT_OK

    code, out, _ = run("history", "--json")
    assert code == EXIT_OK
    body = payload(out)
    assert [r["property"] for r in body["sweep_runs"]] == ["thm2_ng", "eq1_chain"]
    assert {"n": 3, "r": 2, "dib": 3, "count": 1} in body["catalog"]


def test_domain_error_goes_to_stderr_as_json():
    code, out, err = run("solve", "--param", "dib", "no-such-file.txt")
    assert code == EXIT_DOMAIN
    assert out == ""
    body = json.loads(err)
    assert body["error"] == "invalid_digraph"
    assert body["command"] == "solve"


def test_bad_family_spec():
    code, _, err = run("gen", "circulant:n=5,J=0")
    assert code == EXIT_DOMAIN
    assert json.loads(err)["error"] == "invalid_family_spec"


def test_limit_exceeded():
    code, _, err = run("sweep", "--order-max", "9", "--property", "eq1_chain")
    assert code == EXIT_DOMAIN
    assert json.loads(err)["error"] == "limit_exceeded"


def test_usage_error():
    code, out, err = run("solve", "transitive:n=3")
    assert code == EXIT_USAGE
    assert out == ""
    assert "--param" in err and "usage:" in err
    code, _, err = run("frobnicate")
    assert code == EXIT_USAGE
    assert "invalid choice" in err


def test_gen_seeded_random_regular():
    code, out, _ = run("gen", "random-regular:n=12,r=2,seed=7")
    assert code == EXIT_OK
    assert out.startswith("&K")
    _, again, _ = run("gen", "random-regular:n=12,r=2,seed=7")
    assert again == out
