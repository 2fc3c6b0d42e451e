import json
import sys

import pytest

from cubiq import census, cli
from cubiq.census import CensusReport, CensusRow
from cubiq.cli import EXIT_DOMAIN_ERROR, EXIT_OK, EXIT_USAGE, run


def run_json(*argv):
    code, text = run(["--json", *argv])
    assert code == EXIT_OK
    return json.loads(text)


def test_twins_none():
    assert run(["twins", "2,2,3"]) == (EXIT_OK, "no twins")


def test_twins_list_with_oracle():
    code, text = run(["twins", "0,3,4", "--verify"])
    assert code == EXIT_OK
    assert text.splitlines()[:4] == ["-5,0,0", "0,-4,3", "0,4,-3", "5,0,0"]
    assert text.endswith("match: true")


def test_twins_parameterization():
    assert run(["twins", "0,1,0", "0,0,1"]) == (EXIT_OK, "alpha = 1+0i+0j+0k\nz = 1")
    payload = run_json("twins", "24,-30,27", "28,35,14", "--verify")
    assert payload["result"] == {"alpha": "0+2i+1j+4k", "z": "2+1i"}
    assert payload["oracle"] == [[24, -30, 27], [28, 35, 14]]
    assert payload["match"] is True


def test_extend():
    assert run(["extend", "1,2,2", "2,-2,1"]) == (EXIT_OK, "2,1,-2")
    payload = run_json("extend", "1,0,0", "0,1,0", "--verify")
    assert payload["result"] == [0, 0, 1] and payload["match"] is True


def test_extend_not_twins(capsys):
    assert run(["extend", "1,0,0", "1,1,0"]) == (EXIT_DOMAIN_ERROR, "")
    assert capsys.readouterr().err.startswith("error: 1,0,0 and 1,1,0 are not twins")


def test_lattice():
    code, text = run(["lattice", "1,2,2", "--verify"])
    assert code == EXIT_OK
    assert text.splitlines() == [
        "edge: 3",
        "basis: 1,2,2 -2,-1,2 2,-2,1",
        "generator: 1+1i+0j+1k",
        "coordinates: 1,0,0",
        "oracle: 1 icube lattice(s) of edge 3 contain 1,2,2",
        "match: true",
    ]


def test_verify_over_budget_keeps_result(monkeypatch):
    monkeypatch.delenv("CUBIQ_BUDGET", raising=False)
    plain_code, plain = run(["lattice", "99,20,0"])
    code, text = run(["lattice", "99,20,0", "--verify"])
    assert plain_code == code == EXIT_OK
    assert plain.splitlines()[0] == "edge: 101"
    assert text.startswith(plain + "\noracle: error: ")
    assert text.endswith("match: null")

    payload = run_json("lattice", "99,20,0", "--verify")
    assert payload["result"]["edge"] == 101
    assert payload["oracle"] is None and payload["match"] is None
    assert "CUBIQ_BUDGET" in payload["oracle_error"]


def test_lattice_needs_primitive_vector():
    assert run(["lattice", "2,4,4"])[0] == EXIT_DOMAIN_ERROR


def test_param():
    code, text = run(["param", "1", "2", "2", "3", "--verify"])
    assert code == EXIT_OK
    assert "1 1 0 1" in text.splitlines()
    assert text.endswith("match: true")


def test_param_not_normal_form(capsys):
    assert run(["param", "2", "1", "2", "3"])[0] == EXIT_DOMAIN_ERROR
    assert "a odd" in capsys.readouterr().err


def test_count_twins():
    assert run(["count-twins", "9"]) == (EXIT_OK, "120")
    assert run(["count-twins", "9", "--verify"]) == (EXIT_OK, "120\noracle: 120\nmatch: true")
    assert run_json("count-twins", "9") == {"command": "count-twins", "input": {"M": 9}, "result": 120}


def test_json_flag_after_command():
    code, text = run(["count-twins", "1", "--json"])
    assert code == EXIT_OK and json.loads(text)["result"] == 24


def test_count_vectors():
    assert run(["count-vectors", "25"]) == (EXIT_OK, "all: 30\nprimitive: 24")
    payload = run_json("count-vectors", "25", "--verify")
    assert payload["result"] == {"all": 30, "primitive": 24}
    assert payload["oracle"] == payload["result"] and payload["match"] is True


def test_twin_complete():
    assert run(["twin-complete", "10"]) == (
        EXIT_OK,
        "twin-complete: 10 = 3^2 + 1^2 (sum of at most two positive squares only)",
    )
    assert run(["twin-complete", "17"]) == (
        EXIT_OK,
        "not twin-complete: sum of three positive squares, witness 2,2,3",
    )
    assert run(["twin-complete", "7"]) == (EXIT_OK, "not twin-complete: no vectors of this norm")
    payload = run_json("twin-complete", "17", "--verify")
    assert payload["result"]["witness"] == [2, 2, 3]
    assert payload["oracle"] is False and payload["match"] is True


def test_pyth():
    assert run(["pyth", "3"]) == (EXIT_OK, "1 2 2 3")
    payload = run_json("pyth", "9", "--verify")
    assert [1, 4, 8, 9] in payload["result"] and payload["match"] is True


def test_pyth_even_d():
    assert run(["pyth", "4"])[0] == EXIT_DOMAIN_ERROR


def test_explore():
    assert run(["explore", "--dim", "5", "--max", "6"]) == (
        EXIT_OK,
        "no counterexamples in dimension 5 up to norm 6",
    )


def test_census_writes_csv(tmp_path):
    path = tmp_path / "census.csv"
    code, text = run(["census", "--check", "jacobi", "--max", "20", "--csv", str(path)])
    assert code == EXIT_OK
    assert path.exists()
    assert text.splitlines()[-1] == f"csv: {path}"


def test_census_mismatch_fails(tmp_path, monkeypatch):
    def broken(bound=None):
        return CensusReport("jacobi", 1, 1, [CensusRow(1, 8, 9, False)])

    monkeypatch.setitem(census.CHECKS, "jacobi", broken)
    code, _ = run(["census", "--check", "jacobi", "--csv", str(tmp_path / "c.csv")])
    assert code == EXIT_DOMAIN_ERROR


def test_census_budget_exceeded(tmp_path):
    code, _ = run(["census", "--check", "twin_counts", "--max", "999", "--csv", str(tmp_path / "c.csv")])
    assert code == EXIT_DOMAIN_ERROR


@pytest.mark.parametrize(
    "argv",
    [[], ["bogus"], ["twins", "1,x,3"], ["count-twins", "many"], ["explore", "--dim", "4", "--max", "5"]],
)
def test_usage_errors(argv):
    assert run(argv) == (EXIT_USAGE, "")


def test_help_exits_cleanly():
    assert run(["--help"]) == (EXIT_OK, "")


def test_domain_errors():
    assert run(["count-twins", "0"]) == (EXIT_DOMAIN_ERROR, "")


def test_malformed_budget(monkeypatch):
    monkeypatch.setenv("CUBIQ_BUDGET", "abc")
    assert run(["count-vectors", "9"]) == (EXIT_DOMAIN_ERROR, "")


def test_main(monkeypatch, capsys):
    monkeypatch.setattr(sys, "argv", ["cubiq", "count-twins", "1"])
    with pytest.raises(SystemExit) as info:
        cli.main()
    assert info.value.code == EXIT_OK
    assert capsys.readouterr().out == "24\n"
