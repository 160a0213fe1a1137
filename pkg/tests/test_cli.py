import json
import subprocess
import sys

import pytest

from injrad.checker.cli import main, parse_args

A2 = {
    "field": {"prime": 101},
    "quiver": {"vertices": 2, "arrows": [{"name": "a", "source": 1, "target": 2}]},
    "relations": [],
}


@pytest.fixture
def a2_file(tmp_path):
    path = tmp_path / "a2.json"
    path.write_text(json.dumps(A2))
    return str(path)


def test_global_flags_before_or_after_subcommand():
    before = parse_args(["--cap", "5", "--seed", "3", "scan", "radsq", "--max-vertices", "1"])
    after = parse_args(["scan", "radsq", "--max-vertices", "1", "--cap", "5", "--seed", "3"])
    assert (before.cap, before.seed) == (after.cap, after.seed) == (5, 3)
    defaults = parse_args(["info", "x.json"])
    assert (defaults.prime, defaults.cap, defaults.seed, defaults.format, defaults.out) == (101, 64, 0, "jsonl", None)


def test_usage_errors_exit_1(capsys):
    with pytest.raises(SystemExit) as e:
        parse_args(["scan", "nakayama", "--shape", "cyclic", "--max-vertices", "2"])
    assert e.value.code == 1
    with pytest.raises(SystemExit) as e:
        parse_args(["bogus"])
    assert e.value.code == 1


def test_info(a2_file, capsys):
    assert main(["info", a2_file]) == 0
    info = json.loads(capsys.readouterr().out)
    assert info["dimension"] == 3
    assert info["basis"] == ["e1", "e2", "a"]
    assert info["gldim"] == {"kind": "finite", "n": 1}


def test_check_writes_one_record(a2_file, capsys):
    assert main(["check", a2_file]) == 0
    captured = capsys.readouterr()
    (line,) = captured.out.splitlines()
    record = json.loads(line)
    assert record["gldim"] == {"kind": "finite", "n": 1}
    assert "summary: 1 algebras" in captured.err


def test_check_bad_input_exits_1(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({**A2, "relations": [["a", "b"]]}))
    assert main(["check", str(bad)]) == 1
    assert "unknown arrow 'b'" in capsys.readouterr().err
    assert main(["check", str(tmp_path / "missing.json")]) == 1


def test_scan_to_file_csv(tmp_path, capsys):
    out = tmp_path / "nak.csv"
    code = main(["scan", "nakayama", "--shape", "linear", "--max-vertices", "3", "--format", "csv", "--out", str(out)])
    assert code == 0
    lines = out.read_text().splitlines()
    assert len(lines) == 1 + 3


def test_scan_is_deterministic(tmp_path):
    paths = []
    for k in range(2):
        path = tmp_path / f"run{k}.jsonl"
        main(["scan", "nakayama", "--shape", "cyclic", "--max-vertices", "2", "--max-len", "4", "--out", str(path)])
        paths.append(path.read_bytes())
    assert paths[0] == paths[1] and paths[0]


def test_module_entry_point(a2_file):
    proc = subprocess.run(
        [sys.executable, "-m", "injrad", "check", a2_file, "--format", "csv"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0, proc.stderr
    assert proc.stdout.startswith("algebra_id,")
