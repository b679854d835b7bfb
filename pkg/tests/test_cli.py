import json
import os
import pathlib
import subprocess
import sys

import pytest

from qschur import cli

ROOT = pathlib.Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "scripts"))
from make_golden import CASES, split_args  # noqa: E402

GOLDEN = ROOT / "tests" / "golden"


def run(args, env=None):
    return subprocess.run([sys.executable, "-m", "qschur", *args], capture_output=True, text=True, env=env)


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden(name, capsys):
    assert cli.main(split_args(CASES[name])) == 0
    out = capsys.readouterr().out
    assert out == (GOLDEN / f"{name}.json").read_text()


def test_every_verb_has_a_golden_file():
    verbs = {split_args(c)[0] for c in CASES.values()}
    assert verbs == set(cli.VERBS)


def test_spec_examples_via_subprocess():
    r = run(["dim", "cyc-schur", "--l", "1", "--m", "2", "--u", "1"])
    assert r.returncode == 0
    rep = json.loads(r.stdout)
    assert rep["schema"] == cli.SCHEMA and rep["result"]["dimension"] == 5
    r = run(["basis", "cyc-web", "--l", "1", "--source", "1,1", "--target", "1,1", "--u", "1"])
    assert len(json.loads(r.stdout)["result"]["basis"]) == 2


def test_verify_spec_example_and_determinism():
    args = ["verify", "affine-schur", "--relations", "all", "--max-thickness", "2"]
    a = run(args)
    b = run(args, env={**os.environ, cli.WORKERS_ENV: "3"})
    assert a.returncode == 0 and a.stdout == b.stdout
    assert json.loads(a.stdout)["result"]["all_pass"]


@pytest.mark.parametrize(
    "args",
    [
        ["dim", "cyc-schur", "--l", "2", "--m", "2", "--u", "1"],
        ["dim", "cyc-schur", "--m", "2"],
        ["basis", "cyc-schur", "--l", "1", "--source", "0", "--target", "1", "--u", "1"],
        ["verify", "affine-schur", "--relations", "nosuchrelation"],
        ["sst", "affine-web", "--source", "1", "--target", "1"],
        ["dim", "cyc-schur", "--m", "2", "--u", "1/0"],
        ["frobnicate", "cyc-schur"],
    ],
)
def test_usage_errors(args, capsys):
    assert cli.main(args) == 1


def test_usage_error_is_machine_readable(capsys):
    cli.main(["dim", "cyc-schur", "--l", "2", "--m", "2", "--u", "1"])
    err = json.loads(capsys.readouterr().err)
    assert err["error"] == "usage" and "--u" in err["message"]


def test_internal_error_exit_code(capsys, monkeypatch):
    def boom(cmd):
        raise RuntimeError("synthetic")

    monkeypatch.setitem(cli.DISPATCH, "dim", boom)
    assert cli.main(["dim", "cyc-schur", "--m", "2", "--u", "1"]) == 2
    err = json.loads(capsys.readouterr().err)
    assert err["error"] == "internal" and err["type"] == "RuntimeError"


def test_table_rendering(capsys):
    assert cli.main(["dim", "cyc-schur", "--m", "2", "--u", "1", "--format", "table"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "dimension: 5"
    assert "blocks:" in out


def test_render_empty_basis():
    rep = {"schema": cli.SCHEMA, "command": {}, "result": {"basis": []}}
    assert cli.render(rep, "table") == "(empty)"
    assert json.loads(cli.render(rep, "json"))["result"]["basis"] == []


def test_command_dataclass_defaults():
    cmd = cli.parse_command(["dim", "cyc-schur", "--u", "1,q", "--m", "2"])
    assert cmd.level == 2 and cmd.us == ("1", "q") and cmd.fmt == "json"
