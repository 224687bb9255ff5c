import json

from surface_census.cli import run_cli


def test_validate(capsys):
    assert run_cli(["validate"]) == 0
    assert "triangulation valid" in capsys.readouterr().out


def test_validate_export(capsys):
    assert run_cli(["validate", "--export"]) == 0
    out = capsys.readouterr().out
    assert "tet0:" in out and "e9:" in out


def test_weights_tsv(capsys):
    assert run_cli(["weights", "--u", "1", "--v", "0"]) == 0
    out = capsys.readouterr().out
    assert "e4\t2" in out and "e5\t0" in out and "total\t24" in out


def test_weights_json(capsys):
    assert run_cli(["weights", "--u", "2", "--v", "3", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["total"] == 120
    assert data["components"] == 1
    assert data["chi"] == -10
    assert data["weights"][4] == 4 and data["weights"][5] == 6


def test_components_methods(capsys):
    for method in ("gcd", "gluing", "unionfind", "reduction"):
        assert run_cli(["components", "--u", "4", "--v", "6",
                        "--method", method]) == 0
        assert capsys.readouterr().out.strip() == "2"


def test_compile_and_orbits(tmp_path, capsys):
    path = tmp_path / "system.txt"
    assert run_cli(["compile", "--u", "2", "--v", "2", "-o", str(path)]) == 0
    capsys.readouterr()
    assert path.read_text().startswith("interval 1 96")
    assert run_cli(["orbits", "--input", str(path)]) == 0
    assert capsys.readouterr().out.strip() == "2"


def test_orbits_respects_cap(tmp_path, capsys, monkeypatch):
    path = tmp_path / "system.txt"
    run_cli(["compile", "--u", "1", "--v", "0", "-o", str(path)])
    capsys.readouterr()
    monkeypatch.setenv("SURFACE_CENSUS_UF_CAP", "4")
    assert run_cli(["orbits", "--input", str(path)]) == 2
    assert "cap" in capsys.readouterr().err


def test_reduce_trace(capsys):
    assert run_cli(["reduce", "--u", "5", "--v", "3", "--trace"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "step 0 |f|=5 |g|=3 |h|=8 move=transmit+truncate+assign"
    assert out[-1] == "1"


def test_reduce_json_accelerated(capsys):
    assert run_cli(["reduce", "--u", "12", "--v", "18", "--accelerated",
                    "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["orbits"] == 6
    assert data["trace"][-1]["move"] == "final"


def test_census_tsv(capsys):
    assert run_cli(["census", "--max-n", "8"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "n\tcount\tphi\tagree"
    assert lines[1] == "1\t2\t1\tna"
    assert lines[-1] == "8\t4\t4\ttrue"


def test_census_json(capsys):
    assert run_cli(["census", "--max-n", "5", "--method", "oracle",
                    "--format", "json"]) == 0
    rows = json.loads(capsys.readouterr().out)
    assert [r["count"] for r in rows] == [2, 1, 2, 2, 4]


def test_usage_errors(capsys):
    assert run_cli(["weights", "--u", "1"]) == 2
    assert run_cli(["nonsense"]) == 2
    capsys.readouterr()


def test_value_errors_exit_2(capsys):
    assert run_cli(["components", "--u", "0", "--v", "0"]) == 2
    assert "error" in capsys.readouterr().err
    assert run_cli(["census", "--max-n", "100", "--method", "oracle"]) == 2
    capsys.readouterr()
