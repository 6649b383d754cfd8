import json
import subprocess
import sys

import pytest

import lieradicals.cli as cli
from lieradicals import catalog
from lieradicals.cli import main
from lieradicals.oracle import PROPOSITION_IDS, PropositionCheck, TheoremReport

GOOD = "dim 3\nbasis x y z\n[3,1] = 1*e1\n[3,2] = 1*e1 + 1*e2\n"
BAD_SYNTAX = "dim 2\nwat\n"
BAD_JACOBI = "dim 3\n[1,2] = 1*e1\n[2,3] = 1*e2\n[3,1] = 1*e3\n"


@pytest.fixture
def good_file(tmp_path):
    p = tmp_path / "s32.alg"
    p.write_text(GOOD)
    return str(p)


def test_analyze_text_output(good_file, capsys):
    assert main(["analyze", good_file]) == 0
    out = capsys.readouterr().out
    assert "flags: solvable=true nilpotent=false" in out
    assert "near_perfect_radical     dim 2" in out
    assert "radical                  dim 3" in out
    assert "basis: x; y" in out


def test_analyze_json_schema(good_file, capsys):
    assert main(["analyze", good_file, "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert list(data) == [
        "dim",
        "series",
        "perfect_radical",
        "near_perfect_radical",
        "radical",
        "center",
        "smallest_upper_bounded",
        "flags",
    ]
    assert data["dim"] == 3
    assert list(data["series"]) == ["derived", "lower_central", "upper_central"]
    assert [t["dim"] for t in data["series"]["derived"]] == [3, 2, 0]
    assert data["perfect_radical"]["dim"] == 0
    assert data["near_perfect_radical"]["dim"] == 2
    assert data["radical"]["dim"] == 3
    assert data["smallest_upper_bounded"]["dim"] == 0
    assert data["flags"] == {
        "solvable": True,
        "nilpotent": False,
        "perfect": False,
        "abelian": False,
        "semisimple": False,
    }


def test_json_output_is_byte_stable(good_file, capsys):
    main(["analyze", good_file, "--json"])
    first = capsys.readouterr().out
    main(["analyze", good_file, "--json"])
    second = capsys.readouterr().out
    assert first == second

    main(["verify", good_file, "--samples", "10", "--seed", "4", "--json"])
    v1 = capsys.readouterr().out
    main(["verify", good_file, "--samples", "10", "--seed", "4", "--json"])
    v2 = capsys.readouterr().out
    assert v1 == v2


def test_analyze_parse_error_exit_2(tmp_path, capsys):
    p = tmp_path / "bad.alg"
    p.write_text(BAD_SYNTAX)
    assert main(["analyze", str(p)]) == 2
    err = capsys.readouterr().err
    assert "line 2" in err


def test_analyze_invalid_algebra_exit_1(tmp_path, capsys):
    p = tmp_path / "jacobi.alg"
    p.write_text(BAD_JACOBI)
    assert main(["analyze", str(p)]) == 1
    assert "Jacobi" in capsys.readouterr().err


def test_analyze_missing_file_exit_2(capsys):
    assert main(["analyze", "/nonexistent/nope.alg"]) == 2
    assert "cannot read" in capsys.readouterr().err


def test_verify_good_file(good_file, capsys):
    assert main(["verify", good_file, "--samples", "20", "--seed", "7"]) == 0
    out = capsys.readouterr().out
    for pid in PROPOSITION_IDS:
        assert pid in out
    assert "violations: 0" in out


def test_verify_json(good_file, capsys):
    assert main(
        ["verify", good_file, "--samples", "10", "--seed", "7", "--json"]
    ) == 0
    data = json.loads(capsys.readouterr().out)
    assert [r["id"] for r in data["results"]] == list(PROPOSITION_IDS)
    assert data["violations"] == 0
    assert data["samples"] == 10
    assert data["seed"] == 7


def test_verify_invalid_algebra_exit_1_before_checks(tmp_path, capsys):
    p = tmp_path / "jacobi.alg"
    p.write_text(BAD_JACOBI)
    assert main(["verify", str(p)]) == 1
    assert capsys.readouterr().out == ""


def test_verify_violation_exit_3(good_file, monkeypatch, capsys):
    # A violation can only come from a bug, so fake one to pin the exit code.
    def fake_verify(L, samples=50, seed=0):
        checks = tuple(
            PropositionCheck(pid, "violated" if pid == "P2.5" else "holds")
            for pid in PROPOSITION_IDS
        )
        return TheoremReport(L.dim, samples, seed, "fake", checks)

    monkeypatch.setattr(cli, "verify_theorems", fake_verify)
    assert main(["verify", good_file]) == 3
    assert "violations: 1" in capsys.readouterr().out


def test_catalog_listing(capsys):
    assert main(["catalog"]) == 0
    out = capsys.readouterr().out.split()
    assert out == list(catalog.names())
    for required in ("s3_2", "sl2", "heis3"):
        assert required in out


def test_catalog_export_round_trips(tmp_path, capsys):
    assert main(["catalog", "s3_2"]) == 0
    text = capsys.readouterr().out
    p = tmp_path / "exported.alg"
    p.write_text(text)

    assert main(["analyze", str(p), "--json"]) == 0
    exported = json.loads(capsys.readouterr().out)

    from lieradicals.cli import profile_json
    from lieradicals.series import profile

    entry = catalog.get("s3_2")
    builtin = profile_json(entry.algebra, profile(entry.algebra))
    assert exported == builtin


def test_catalog_unknown_exit_2(capsys):
    assert main(["catalog", "nosuch"]) == 2
    assert "unknown algebra" in capsys.readouterr().err


def test_usage_error_exit_2(capsys):
    assert main([]) == 2
    assert main(["analyze"]) == 2


def test_module_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "lieradicals", "catalog"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "s3_2" in proc.stdout
