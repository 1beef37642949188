import json
import time

import pytest

from hsdfactor import cli
from hsdfactor.reports import Check, Report


def run_json(capsys, argv):
    code = cli.run(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_box_command(capsys):
    code, data = run_json(capsys, ["box", "--mu", "2,1"])
    assert code == 0
    assert data["results"]["count"] == 4
    assert data["results"]["box"][0] == {"entries": [2, 1], "spin": False}


def test_paths_command(capsys):
    code, data = run_json(capsys, ["paths", "--mu", "2,1", "--nu", "0,0"])
    assert code == 0
    assert data["results"]["count"] == 2
    assert data["results"]["change_sequences"] == [[1, 1, 2], [1, 2, 1]]


def test_factorize_command(capsys):
    code, data = run_json(capsys, ["factorize", "--mu", "1,0", "--power", "2"])
    assert code == 0
    cert = data["results"]["certificate"]
    assert len(cert["coefficients"]) == 2
    assert cert["residual"]["terms"] == []
    values = {tuple(c["lambda"]["entries"]): c["value"] for c in cert["coefficients"]}
    assert values == {(1, 0): "-1/1", (0, 0): "1/1"}


def test_dims_command(capsys):
    code, data = run_json(capsys, ["dims", "--mu", "1", "--m", "5"])
    assert code == 0
    assert data["results"]["dimension"] == 16


def test_kernel_command(capsys):
    code, data = run_json(capsys, ["kernel", "--mu", "1", "--m", "3", "--degree", "2"])
    assert code == 0
    assert data["results"]["dimension"] == 12


def test_verify_theorem_command(capsys):
    code, data = run_json(capsys, ["verify", "theorem", "--mu", "1", "--m", "3", "--power", "2", "--degree", "4"])
    assert code == 0
    assert data["passed"] is True


def test_verify_path_sweep(capsys):
    code, data = run_json(capsys, ["verify", "path", "--mu", "2,1"])
    assert code == 0
    assert len(data["checks"]) > 1  # sweeps every start weight below mu


def test_verify_box_command(capsys):
    code, data = run_json(capsys, ["verify", "box", "--mu", "2,2"])
    assert code == 0


def test_usage_errors_exit_2(capsys):
    assert cli.run(["kernel", "--mu", "1"]) == 2              # missing --m/--degree
    capsys.readouterr()
    assert cli.run(["verify", "theorem", "--mu", "1", "--m", "3", "--power", "1", "--degree", "4"]) == 2
    capsys.readouterr()
    with pytest.raises(SystemExit):
        cli.run(["box", "--mu", "2,x"])
    capsys.readouterr()
    with pytest.raises(SystemExit):
        cli.run(["nonsense"])
    capsys.readouterr()


def test_resource_cap_distinguished(capsys):
    code = cli.run(["verify", "theorem", "--mu", "2", "--m", "3", "--power", "3", "--degree", "6"])
    out = capsys.readouterr().out
    assert code == 2
    assert json.loads(out)["error"] == "resource_cap"


def test_rank_validation(capsys):
    with pytest.raises(SystemExit):
        cli.run(["box", "--mu", "2,1", "--rank", "3"])
    capsys.readouterr()


def test_failed_check_exits_1(tmp_path):
    report = Report(title="synthetic", params={}, checks=[Check("always_fails", False, {})])

    class Args:
        json = str(tmp_path / "r.json")

    code = cli._emit(report, "synthetic", Args(), time.time())
    assert code == 1
    data = json.loads((tmp_path / "r.json").read_text())
    assert data["passed"] is False


def test_json_file_and_determinism(tmp_path, capsys):
    out1 = tmp_path / "a.json"
    out2 = tmp_path / "b.json"
    assert cli.run(["box", "--mu", "3,1", "--json", str(out1)]) == 0
    assert cli.run(["box", "--mu", "3,1", "--json", str(out2)]) == 0
    d1 = json.loads(out1.read_text())
    d2 = json.loads(out2.read_text())
    d1.pop("wall_time_s")
    d2.pop("wall_time_s")
    assert json.dumps(d1, sort_keys=True) == json.dumps(d2, sort_keys=True)
