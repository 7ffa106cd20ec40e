"""Command-line surface."""

from __future__ import annotations

import json
import xml.etree.ElementTree as ET

import pytest
from typer.testing import CliRunner

from src.cli import app
from src.elnitsky.errors import ElnitskyError

runner = CliRunner()


def run(*args: str):
    return runner.invoke(app, list(args))


def test_tilings_count_and_list() -> None:
    result = run("tilings", "34251", "--count")
    assert result.exit_code == 0, result.output
    assert json.loads(result.stdout) == {"permutation": [3, 4, 2, 5, 1], "tiling_count": 3}

    result = run("tilings", "321")
    assert result.exit_code == 0
    payload = json.loads(result.stdout)
    assert [tiling["word"] for tiling in payload["tilings"]] == [[1, 2, 1], [2, 1, 2]]
    first = payload["tilings"][0]
    assert [tile["label"] for tile in first["tiles"]] == [[1, 2], [1, 3], [2, 3]]
    assert first["perimeter"]["left"] == [[1, 2]]


def test_tilings_table() -> None:
    result = run("tilings", "321", "--table")
    assert result.exit_code == 0
    assert "Tilings of 321: 2" in result.output


def test_forced_json_is_deterministic() -> None:
    first = run("forced", "34251")
    second = run("forced", "34251")
    assert first.exit_code == 0
    assert first.stdout == second.stdout
    payload = json.loads(first.stdout)
    assert payload["tiling_count"] == 3
    assert payload["forced"] == {"left": [], "right": [[1, 5]], "top": [], "bottom": [[1, 5]]}
    right = {tuple(item["tile"]): item["frequency"] for item in payload["frequencies"]["right"]}
    assert right[(1, 5)] == {"num": 1, "den": 1}
    assert right[(2, 4)] == {"num": 2, "den": 3}


def test_forced_single_type_and_table() -> None:
    payload = json.loads(run("forced", "2341", "--type", "top").stdout)
    assert payload["forced"] == {"top": [[1, 2]]}
    result = run("forced", "34251", "--table")
    assert result.exit_code == 0
    assert "Forced tiles of 34251" in result.output


def test_freq() -> None:
    result = run("freq", "321", "--tile", "3,1", "--type", "top")
    assert result.exit_code == 0
    payload = json.loads(result.stdout)
    assert payload["tile"] == [1, 3]
    assert payload["type"] == "top"
    assert payload["frequency"] == {"num": 1, "den": 2}


def test_verify_reports_pass() -> None:
    result = run("verify", "force-right", "--n", "5")
    assert result.exit_code == 0, result.output
    assert json.loads(result.stdout) == {
        "theorem": "force-right",
        "n": 5,
        "checked": 71,
        "counterexamples": [],
        "passed": True,
    }


def test_verify_m_claim() -> None:
    result = run("verify", "catalan", "--m", "3")
    assert result.exit_code == 0
    assert json.loads(result.stdout)["m"] == 3


def test_verify_parameter_mismatch_is_usage_error() -> None:
    assert run("verify", "optimal-char", "--n", "3").exit_code == 2
    assert run("verify", "force-right", "--m", "3").exit_code == 2
    assert run("verify", "force-right").exit_code == 2


def test_verify_unknown_claim() -> None:
    result = run("verify", "force-middle", "--n", "3")
    assert result.exit_code == 1
    assert "UNKNOWN_THEOREM" in result.output


def test_optimal_lists_table_images() -> None:
    result = run("optimal", "--m", "4", "--list")
    assert result.exit_code == 0
    payload = json.loads(result.stdout)
    assert payload["count"] == payload["catalan"] == 5
    found = {"".join(map(str, entries)) for entries in payload["permutations"]}
    assert found == {"31527486", "31627485", "41527386", "41627385", "51627384"}


def test_phi_both_ways() -> None:
    assert json.loads(run("phi", "214365").stdout)["output"] == [3, 1, 5, 2, 7, 4, 8, 6]
    assert json.loads(run("phi", "41627385", "--inverse").stdout)["output"] == [3, 1, 5, 2, 6, 4]


def test_domain_errors_exit_1() -> None:
    result = run("phi", "12")
    assert result.exit_code == 1
    assert "DOMAIN_VIOLATION" in result.output

    result = run("forced", "2143")
    assert result.exit_code == 1
    assert "NOT_FULLY_SUPPORTED" in result.output

    result = run("tilings", "1,1")
    assert result.exit_code == 1
    assert "NOT_A_BIJECTION" in result.output

    result = run("tilings", "54321", "--max-tilings", "5")
    assert result.exit_code == 1
    assert "SIZE_LIMIT_EXCEEDED" in result.output


@pytest.mark.parametrize(
    "args",
    [
        ("tilings", "1,1"),
        ("forced", "2214"),
        ("phi", "11"),
        ("freq", "1,3", "--tile", "1,2", "--type", "top"),
        ("render", "2,2", "--out", "x.svg"),
    ],
)
def test_repeated_entries_report_not_a_bijection(args) -> None:
    result = run(*args)
    assert result.exit_code == 1
    assert not isinstance(result.exception, ElnitskyError)
    error = json.loads(result.output.strip().splitlines()[-1])["error"]
    assert error["code"] == "NOT_A_BIJECTION"


def test_usage_errors_exit_2() -> None:
    assert run("tilings", "3x1").exit_code == 2
    assert run("freq", "321", "--tile", "1", "--type", "top").exit_code == 2
    assert run("freq", "321", "--tile", "0,1", "--type", "top").exit_code == 2
    assert run("freq", "321", "--tile", "1,3", "--type", "all").exit_code == 2
    assert run("forced", "321", "--type", "middle").exit_code == 2
    assert run("render", "21", "--out", "x.svg", "--scale", "0").exit_code == 2


def test_render_single_and_all(tmp_path) -> None:
    out = tmp_path / "t.svg"
    result = run("render", "34251", "--out", str(out), "--tiling", "1", "--shade-forced")
    assert result.exit_code == 0, result.output
    root = ET.fromstring(out.read_bytes())
    assert len(root.findall("{http://www.w3.org/2000/svg}polygon")) == 6

    result = run("render", "34251", "--out", str(out), "--all", "--integer-geometry")
    assert result.exit_code == 0
    written = json.loads(result.stdout)["written"]
    assert [path.rsplit("/", 1)[-1] for path in written] == ["t_0.svg", "t_1.svg", "t_2.svg"]

    assert run("render", "34251", "--out", str(out), "--tiling", "3").exit_code == 2
