import json

import pytest

from frobkit import cli


def run(argv):
    return cli.main(argv)


def test_verify_passes_default_point(tmp_path):
    out = tmp_path / "r.json"
    code = run(["verify", "--model", "nm11", "--point", "0,2,1",
                "--tol", "1e-6", "--out", str(out)])
    assert code == 0
    payload = json.loads(out.read_text())
    assert payload["all_passed"] is True
    assert len(payload["checks"]) >= 10


def test_report_schema_fields(tmp_path):
    out = tmp_path / "r.json"
    run(["verify", "--model", "nm02", "--out", str(out)])
    payload = json.loads(out.read_text())
    for check in payload["checks"]:
        assert set(check) == {"check_name", "model", "point", "residual",
                              "tolerance", "passed", "convention", "metadata"}
        for pair in check["point"]:
            assert len(pair) == 2


def test_unreachable_tolerance_fails():
    assert run(["verify", "--model", "nm11", "--point", "0,2,1",
                "--tol", "1e-20"]) == 1


def test_usage_errors_exit_two():
    for argv in (
        ["verify", "--model", "nm99"],
        ["verify", "--model", "custom:3,1", "--point", "1,1,1,1,1"],
        ["verify", "--model", "custom:1,1"],      # --point required
        ["sweep", "--model", "nm11", "--param", "9", "--range", "1:2:3"],
    ):
        with pytest.raises(SystemExit) as err:
            run(argv)
        assert err.value.code == 2


def test_degeneracy_exits_three(capsys):
    assert run(["verify", "--model", "nm11", "--point", "0,0,1"]) == 3
    assert "degenerate" in capsys.readouterr().err


def test_negative_log_branch_exits_three(capsys):
    assert run(["verify", "--model", "nm11", "--point", "0,-2,1"]) == 3
    assert "x2" in capsys.readouterr().err


def test_replay_is_byte_identical(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    argv = ["verify", "--model", "nm11", "--random", "1", "--seed", "3"]
    run(argv + ["--out", str(a)])
    run(argv + ["--out", str(b)])
    assert a.read_bytes() == b.read_bytes()


def test_seed_changes_extra_points(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run(["verify", "--model", "nm11", "--random", "1", "--seed", "1",
         "--out", str(a)])
    run(["verify", "--model", "nm11", "--random", "1", "--seed", "2",
         "--out", str(b)])
    pa = json.loads(a.read_text())["checks"][-1]["point"]
    pb = json.loads(b.read_text())["checks"][-1]["point"]
    assert pa != pb


def test_custom_model_verifies(tmp_path):
    out = tmp_path / "c.json"
    assert run(["verify", "--model", "custom:0,3",
                "--point", "1.1,0.6,1.3,0.2", "--out", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert payload["all_passed"] is True


def test_csv_format(tmp_path):
    out = tmp_path / "r.csv"
    run(["verify", "--model", "nm11", "--format", "csv", "--out", str(out)])
    lines = out.read_text().strip().splitlines()
    assert lines[0] == "check_name,model,residual,tolerance,status,convention"
    assert all(line.count(",") >= 5 for line in lines[1:])


def test_sweep_csv_columns(tmp_path):
    out = tmp_path / "s.csv"
    code = run(["sweep", "--model", "nm11", "--param", "2",
                "--range", "1.5:2.5:3", "--out", str(out)])
    assert code == 0
    lines = out.read_text().strip().splitlines()
    assert lines[0].startswith("param,")
    assert len(lines) == 4


def test_frame_dump(tmp_path):
    out = tmp_path / "f.json"
    assert run(["frame", "--model", "nm11", "--point", "0,2,1",
                "--out", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert payload["canonical_coordinates"][0] == [4.0, 0.0]
    assert len(payload["jacobian"]) == 3


def test_pvi_subcommand(tmp_path):
    out = tmp_path / "p.json"
    assert run(["pvi", "--solution", "k3", "--x-range", "1.5:3.0:50",
                "--out", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert payload["checks"][0]["residual"] < 1e-8


def test_tau_subcommand():
    assert run(["tau", "--x2", "2", "--x3", "1", "--out", "/dev/null"]) == 0


def test_top_subcommand(tmp_path):
    out = tmp_path / "t.json"
    assert run(["top", "--s0", "2", "--s1", "3", "--w0", "1,1,1",
                "--steps", "1000", "--out", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert payload["checks"][0]["residual"] < 1e-10
