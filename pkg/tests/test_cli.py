"""Command-line behavior: dispatch, output formats, exit codes."""

from __future__ import annotations

import json

import pytest

from chromheap import cli
from chromheap.reports import ReciprocityReport


@pytest.fixture
def c4_file(tmp_path):
    path = tmp_path / "c4.txt"
    path.write_text("4\n1 2\n2 3\n3 4\n4 1\n")
    return str(path)


def run_cli(capsys, *argv):
    code = cli.run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_theorem1_table(capsys, c4_file):
    code, out, _ = run_cli(
        capsys, "reciprocity", "--check", "theorem1", "--graph", c4_file,
        "-i", "1", "-j", "1", "--mode", "table",
    )
    assert code == 0
    assert "count: 31" in out
    for row in ("1: 16", "2: 8", "3: 4", "4: 3"):
        assert row in out


def test_chromatic_json_coefficients(capsys, c4_file):
    code, out, _ = run_cli(capsys, "chromatic", "--graph", c4_file)
    assert code == 0
    payload = json.loads(out)
    assert payload["polynomial"]["coeffs"] == ["0", "-3", "6", "-4", "1"]


def test_chromatic_derivative_evaluation(capsys, c4_file):
    code, out, _ = run_cli(capsys, "chromatic", "--graph", c4_file, "-d", "1", "-q", "-1")
    payload = json.loads(out)
    assert code == 0
    assert payload["evaluation"] == {"at": "-1", "value": "-31"}


def test_chihat(capsys, c4_file):
    code, out, _ = run_cli(capsys, "chihat", "--graph", c4_file, "-d", "2")
    payload = json.loads(out)
    assert code == 0
    assert payload["polynomial"]["coeffs"] == ["3", "-3", "1"]


def test_bivariate_terms(capsys, c4_file):
    code, out, _ = run_cli(capsys, "bivariate", "--graph", c4_file)
    payload = json.loads(out)
    assert code == 0
    terms = {(t["i"], t["j"]): t["c"] for t in payload["terms"]}
    assert terms[(4, 0)] == "1"  # leading proper-color term
    assert terms[(0, 4)] == "1"  # leading free-color term


def test_orientations(capsys, c4_file):
    code, out, _ = run_cli(capsys, "orientations", "--graph", c4_file)
    payload = json.loads(out)
    assert code == 0
    assert payload["acyclic_count"] == "14"
    assert payload["by_source_components"] == {"1": "3", "2": "6", "3": "4", "4": "1"}


def test_heaps_identities(capsys, c4_file):
    code, out, _ = run_cli(capsys, "heaps", "--graph", c4_file, "-D", "4")
    payload = json.loads(out)
    assert code == 0
    assert payload["identities"]["equal"] is True
    trivial = {tuple(t["exponents"]): (t["num"], t["den"]) for t in payload["trivial"]}
    assert trivial[(1, 0, 1, 0)] == ("1", "1")
    assert len(trivial) == 7


def test_selfcheck_passes(capsys):
    code, out, _ = run_cli(capsys, "selfcheck")
    payload = json.loads(out)
    assert code == 0
    assert payload["passed"] == payload["total"] > 30


def test_symfunc_check(capsys, c4_file):
    code, out, _ = run_cli(
        capsys, "symfunc", "--graph", c4_file, "--check", "thm53", "--ny", "1", "--nz", "1"
    )
    payload = json.loads(out)
    assert code == 0 and payload["equal"] is True


def test_symfunc_expansion(capsys, c4_file):
    code, out, _ = run_cli(capsys, "symfunc", "--graph", c4_file, "-N", "2")
    payload = json.loads(out)
    assert code == 0
    assert payload["powersum"]["terms"][0]["partition"] == [1, 1, 1, 1]
    assert payload["expansion"]["terms"] == [
        {"exponents": [2, 2], "num": "2", "den": "1"}
    ]


def test_all_reciprocity_tokens_dispatch(capsys, c4_file):
    cases = {
        "theorem1": ["-i", "1", "-j", "1"],
        "stanley": ["-j", "1"],
        "greene_zaslavsky": ["-i", "1"],
        "corollary43": ["-i", "1", "-j", "1"],
        "theorem44": ["-d", "2", "-i", "1", "-j", "0"],
        "theorem45": ["-d", "1", "-i", "1"],
        "bivariate": ["-j", "1", "-k", "1"],
    }
    for token, params in cases.items():
        code, out, _ = run_cli(
            capsys, "reciprocity", "--check", token, "--graph", c4_file, *params
        )
        assert code == 0, (token, out)
        assert json.loads(out)["equal"] is True


def test_all_symfunc_tokens_dispatch(capsys, c4_file):
    for token in ("prop51", "prop52", "thm53", "superfication", "combined"):
        code, out, _ = run_cli(capsys, "symfunc", "--graph", c4_file, "--check", token)
        assert code == 0, token
        assert json.loads(out)["equal"] is True


def test_usage_errors_exit_2(capsys, c4_file, tmp_path):
    assert run_cli(capsys, "chromatic", "--graph", str(tmp_path / "nope.txt"))[0] == 2
    assert run_cli(capsys, "chromatic")[0] == 2  # --graph missing
    assert run_cli(capsys, "reciprocity", "--check", "stanley", "--graph", c4_file)[0] == 2
    assert run_cli(capsys, "chromatic", "--graph", c4_file, "--budget", "bogus=1")[0] == 2
    assert run_cli(capsys, "chromatic", "--graph", c4_file, "--budget", "nonsense")[0] == 2
    assert run_cli(capsys, "chromatic", "--graph", c4_file, "--threads", "0")[0] == 2
    assert run_cli(capsys, "nosuchcommand")[0] == 2
    assert run_cli(capsys, "reciprocity", "--check", "nosuch", "--graph", c4_file)[0] == 2


def test_resource_error_exits_2(capsys, c4_file):
    code, _, err = run_cli(
        capsys, "heaps", "--graph", c4_file, "-D", "6", "--budget", "series_terms=2"
    )
    assert code == 2
    assert "budget" in err


def test_mismatch_exits_1(capsys, c4_file, monkeypatch):
    def fake_check(g, i, j, budget):
        return ReciprocityReport(
            identity="chromatic_derivative",
            params={"i": i, "j": j},
            count=30,
            poly_side=31,
            equal=False,
            strata=None,
        )

    monkeypatch.setitem(cli.RECIPROCITY_CHECKS, "theorem1", (fake_check, ("i", "j")))
    code, out, err = run_cli(
        capsys, "reciprocity", "--check", "theorem1", "--graph", c4_file, "-i", "1", "-j", "1"
    )
    assert code == 1
    payload = json.loads(out)
    # both sides present in the report
    assert payload["count"] == "30" and payload["poly_side"] == "31"
    assert "mismatch" in err


def test_threads_flag_does_not_change_output(capsys, c4_file):
    _, out1, _ = run_cli(capsys, "chromatic", "--graph", c4_file, "--threads", "1")
    _, out4, _ = run_cli(capsys, "chromatic", "--graph", c4_file, "--threads", "4")
    assert out1 == out4


def test_help_exits_0(capsys):
    assert run_cli(capsys, "--help")[0] == 0
