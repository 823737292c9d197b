from __future__ import annotations

import subprocess
import sys
from pathlib import Path

import pytest

from arrangements import cli, report
from arrangements.multidegrees import MultidegreeSequence
from arrangements.oracle import GenericityFailure
from arrangements.report import report_from_json, report_to_json

DATA = Path(__file__).parent / "data"


def run(capsys, *argv):
    code = cli.main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


# (argv, exit code, expected stdout lines or None to skip)
GOLDEN = [
    (["charpoly", DATA / "paper.arr"], 0, ["t^3 - 4t^2 + 5t - 2"]),
    (["charpoly", DATA / "single.arr"], 0, ["t^2 - t"]),
    (["charpoly", DATA / "duplicate.arr"], 3, []),
    (["charpoly", DATA / "zero.arr"], 3, []),
    (["charpoly", DATA / "malformed.arr"], 2, []),
    (["charpoly", DATA / "missing.arr"], 2, []),
    (["multidegrees", DATA / "paper.arr"], 0, ["1 4 5 2"]),
    (["multidegrees", DATA / "braid.arr"], 0, ["1 3 2 0"]),
    (["chromatic", DATA / "k3.graph"], 0, ["t^3 - 3t^2 + 2t"]),
    (
        ["chromatic", DATA / "k3.graph", "--check-colorings", "4"],
        0,
        ["t^3 - 3t^2 + 2t", "colorings check: PASS (t=0..4)"],
    ),
    (["chromatic", DATA / "edgeless.graph"], 0, ["t^4"]),
    (["chromatic", DATA / "large.graph", "--check-colorings", "2"], 3, None),
    (
        ["matroid", DATA / "paper.mat"],
        0,
        ["chi_M: t^3 - 4t^2 + 5t - 2", "chi_A: t^3 - 4t^2 + 5t - 2", "shift: 0", "chi_A = t^0 * chi_M: PASS"],
    ),
    (
        ["matroid", DATA / "single.mat"],
        0,
        ["chi_M: t - 1", "chi_A: t^2 - t", "shift: 1", "chi_A = t^1 * chi_M: PASS"],
    ),
    (["matroid", DATA / "loop.mat"], 3, []),
    (
        ["matroid", DATA / "twins.mat"],
        0,
        ["chi_M: t - 1", "note: parallel columns, the arrangement path is unavailable"],
    ),
    (["matroid", DATA / "paper.mat", "--max-subsets", "8"], 3, []),
    (["verify", DATA / "paper.arr", "--no-oracle"], 0, None),
]


@pytest.mark.parametrize("argv,code,lines", GOLDEN, ids=lambda x: str(x) if isinstance(x, int) else None)
def test_golden(capsys, argv, code, lines):
    got, out, _ = run(capsys, *argv)
    assert got == code
    if lines is not None:
        assert out.splitlines() == lines


def test_parse_error_reports_location(capsys):
    code, _, err = run(capsys, "charpoly", DATA / "malformed.arr")
    assert code == 2
    assert "malformed.arr:3:3:" in err


def test_duplicate_message_names_canonical_normal(capsys):
    code, _, err = run(capsys, "charpoly", DATA / "duplicate.arr")
    assert code == 3 and "(1, 0)" in err


def test_edgeless_warning(capsys):
    _, out, err = run(capsys, "chromatic", DATA / "edgeless.graph")
    assert "no edges" in err and out.strip() == "t^4"


def test_usage_errors():
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify", str(DATA / "paper.arr"), "--trials", "1"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["nonsense"])
    assert exc.value.code == 2


def test_verify_paper_example(capsys, tmp_path):
    out_json = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", DATA / "paper.arr", "--json", out_json)
    assert code == 0
    assert "multidegrees: 1 4 5 2" in out
    assert "status: PASS" in out
    r = report_from_json(out_json.read_text())
    assert r.multidegrees_dr == (1, 4, 5, 2)
    names = [n for n, _ in r.identities_checked]
    assert "lattice_equals_multidegrees" in names and "oracle_agreement" in names
    assert all(s == "pass" for _, s in r.identities_checked)


def test_verify_braid_trailing_zero(capsys, tmp_path):
    out_json = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", DATA / "braid.arr", "--json", out_json)
    assert code == 0
    r = report_from_json(out_json.read_text())
    assert r.multidegrees_dr == (1, 3, 2, 0)
    assert not r.sequence_report.has_internal_zeros


def test_json_round_trip_is_byte_identical(tmp_path, capsys):
    out_json = tmp_path / "r.json"
    run(capsys, "verify", DATA / "paper.arr", "--json", out_json)
    text = out_json.read_text()
    assert report_to_json(report_from_json(text)) == text


def test_verify_is_deterministic(tmp_path, capsys):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for p in paths:
        run(capsys, "verify", DATA / "paper.arr", "--seed", "42", "--json", p)
    assert paths[0].read_bytes() == paths[1].read_bytes()
    run(capsys, "verify", DATA / "paper.arr", "--seed", "43", "--json", paths[1])
    assert paths[0].read_bytes() != paths[1].read_bytes()


def test_identity_failure_exits_1(monkeypatch, capsys, tmp_path):
    def broken(a, **kwargs):
        return MultidegreeSequence((1, a.k) + (9,) * (a.ambient_dim - 1), a.ambient_dim)

    monkeypatch.setattr(report, "multidegrees_dr", broken)
    out_json = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", DATA / "paper.arr", "--json", out_json)
    assert code == 1
    assert "status: FAIL" in out
    assert out_json.exists()


def test_inconclusive_oracle_exits_4(monkeypatch, capsys):
    def exhausted(*args, **kwargs):
        raise GenericityFailure("budget exhausted")

    monkeypatch.setattr(report, "multidegrees_partial", exhausted)
    code, out, _ = run(capsys, "verify", DATA / "paper.arr")
    assert code == 4
    assert "oracle_agreement: INCONCLUSIVE" in out


def test_console_script_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "arrangements.cli", "charpoly", str(DATA / "paper.arr")],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "t^3 - 4t^2 + 5t - 2"
