import json
import subprocess
import sys

import pytest

from f2hopf.cli import main
from f2hopf.serialize import DatasetError, dump_dataset, load_dataset


def run_cli(args):
    return main(list(args))


def read_doc(path):
    return json.loads(path.read_text())


def test_run_n2_summary(tmp_path):
    out = tmp_path / "out"
    assert run_cli(["run", "--dim", "2", "--out", str(out)]) == 0
    summary = load_dataset((out / "summary_n2.json").read_text(), "summary")[1]
    assert summary == {
        "dim": 2, "algebras": 3, "bialgebras": 4, "hopf": 3, "qt_pairs": 1,
    }


def test_run_single_algebra(tmp_path, capsys):
    out = tmp_path / "out"
    assert run_cli(["run", "--dim", "3", "--algebra", "B", "--out", str(out)]) == 0
    captured = capsys.readouterr()
    assert "33 solutions" in captured.out and "3 Hopf" in captured.out
    _, payload = load_dataset((out / "raw_n3_B.json").read_text(), "raw")
    assert len(payload) == 33
    assert sum(1 for r in payload if r["hopf"]) == 3


def test_determinism_byte_identical(tmp_path):
    out1 = tmp_path / "a"
    out2 = tmp_path / "b"
    for out in (out1, out2):
        assert run_cli(["run", "--dim", "2", "--dim", "3", "--out", str(out)]) == 0
    for path1 in sorted(out1.rglob("*.json")) + sorted(out1.rglob("*.dot")):
        path2 = out2 / path1.relative_to(out1)
        assert path1.read_bytes() == path2.read_bytes(), path1.name


def test_cache_transparency(tmp_path):
    out1 = tmp_path / "plain"
    out2 = tmp_path / "cached"
    assert run_cli(["run", "--dim", "3", "--no-cache", "--out", str(out1)]) == 0
    assert run_cli(["run", "--dim", "3", "--out", str(out2)]) == 0
    assert run_cli(["run", "--dim", "3", "--out", str(out2)]) == 0  # cache hit
    for path1 in sorted(out1.glob("*.json")):
        path2 = out2 / path1.name
        assert path1.read_bytes() == path2.read_bytes(), path1.name


def test_corrupt_cache_recomputed(tmp_path):
    out = tmp_path / "out"
    assert run_cli(["run", "--dim", "2", "--out", str(out)]) == 0
    victim = out / "cache" / [p.name for p in (out / "cache").iterdir()
                              if "raw_n2_B" in p.name][0]
    doc = read_doc(victim)
    doc["checksum"] = "0" * 64
    victim.write_text(json.dumps(doc))
    assert run_cli(["run", "--dim", "2", "--out", str(out)]) == 0
    # the corrupt entry was replaced by a valid one
    load_dataset(victim.read_text(), "raw")


def test_verify_ok_and_flipped_bit(tmp_path, capsys):
    out = tmp_path / "out"
    assert run_cli(["run", "--dim", "3", "--out", str(out)]) == 0
    target = out / "raw_n3_B.json"
    assert run_cli(["verify", str(target)]) == 0
    capsys.readouterr()
    # flip one coproduct bit and re-wrap with a fresh checksum
    _, payload = load_dataset(target.read_text(), "raw")
    bits = int(payload[0]["C"], 16) ^ (1 << 10)
    payload[0]["C"] = format(bits, "x")
    target.write_text(dump_dataset("raw", payload))
    assert run_cli(["verify", str(target)]) == 1
    captured = capsys.readouterr()
    fails = [line for line in captured.out.splitlines() if "FAIL" in line]
    assert len(fails) == 1


def test_verify_schema_violation(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"schema": "f2hopf/raw", "payload": []}')
    assert run_cli(["verify", str(bad)]) == 2
    with pytest.raises(DatasetError):
        load_dataset(bad.read_text())


def test_usage_error_exit_code():
    proc = subprocess.run(
        [sys.executable, "-m", "f2hopf.cli", "run", "--stage", "nonsense"],
        capture_output=True,
    )
    assert proc.returncode == 2


def test_parallel_jobs_identical(tmp_path):
    serial = tmp_path / "serial"
    parallel = tmp_path / "parallel"
    assert run_cli(["run", "--dim", "3", "--stage", "coproducts",
                    "--out", str(serial)]) == 0
    assert run_cli(["run", "--dim", "3", "--stage", "coproducts", "--jobs", "4",
                    "--no-cache", "--out", str(parallel)]) == 0
    for path in sorted(serial.glob("raw_*.json")):
        assert path.read_bytes() == (parallel / path.name).read_bytes()


def test_export_dot(tmp_path):
    out = tmp_path / "out"
    assert run_cli(["export", "--dim", "2", "--out", str(out)]) == 0
    dot = (out / "quiver_n2.dot").read_text()
    assert dot.startswith("digraph")
    assert dot.count("->") == 4
    assert dot.count("hopf=true") == 3


def test_fourier_fixture_mode(tmp_path):
    out = tmp_path / "out"
    assert run_cli([
        "run", "--dim", "4", "--stage", "fourier", "--mode", "fixture",
        "--out", str(out),
    ]) == 0
    _, payload = load_dataset((out / "fourier_n4.json").read_text(), "fourier")
    assert len(payload) == 20
    assert run_cli(["verify", str(out / "fourier_n4.json")]) == 0


def test_reps_stage_tensor_table(tmp_path):
    from f2hopf.golden import TENSOR_TABLE

    out = tmp_path / "out"
    assert run_cli(["run", "--dim", "4", "--stage", "reps",
                    "--out", str(out)]) == 0
    _, payload = load_dataset((out / "reps_n4.json").read_text(), "reps")
    assert payload["counts"] == {"1": 2, "2": 20, "3": 394}
    got = {tuple(k.split("*")): tuple(v)
           for k, v in payload["tensor_table"].items()}
    assert got == TENSOR_TABLE
    assert payload["duals"] == {"1": "1", "1b": "1b", "2": "2b", "2b": "2"}
