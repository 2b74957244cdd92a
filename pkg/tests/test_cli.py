import io
from pathlib import Path

import pytest

from minorder.cli import main

GOLDEN = Path(__file__).parent / "golden"

# (args, expected stdout file, exit code); file arguments are relative to GOLDEN
GOLDEN_CASES = [
    (["recognize", "g2.txt"], "g2.recognize.out", 2),
    (["recognize", "--certificate", "--stats", "g2.txt"], "g2.certificate.out", 2),
    (["recognize", "--stats", "--add-loops", "g3_noloops.txt"], "g3.recognize.out", 0),
    (["recognize", "--certificate", "r9.txt"], "r9.certificate.out", 2),
    (["export-cnf", "g2.txt"], "g2.cnf.out", 0),
    (["gen", "4", "0.5", "42"], "gen_4_05_42.out", 0),
]


def resolve(args):
    return [str(GOLDEN / a) if (GOLDEN / a).is_file() else a for a in args]


def run(capsys, args):
    code = main(args)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("args,expected,code", GOLDEN_CASES, ids=[c[1] for c in GOLDEN_CASES])
def test_golden(capsys, args, expected, code):
    got_code, out, _ = run(capsys, resolve(args))
    assert got_code == code
    assert out == (GOLDEN / expected).read_text()


def test_recognize_then_verify_order(capsys, tmp_path):
    code, out, _ = run(capsys, ["recognize", "--add-loops", str(GOLDEN / "g3_noloops.txt")])
    assert code == 0
    (tmp_path / "order").write_text(out)
    code, out, _ = run(capsys, ["verify-order", "--add-loops", str(GOLDEN / "g3_noloops.txt"), str(tmp_path / "order")])
    assert (code, out) == (0, "VALID\n")


def test_verify_order_invalid(capsys, tmp_path):
    (tmp_path / "order").write_text("1 0 2\n")
    code, out, _ = run(capsys, ["verify-order", "--add-loops", str(GOLDEN / "g3_noloops.txt"), str(tmp_path / "order")])
    assert code == 1 and out.startswith("INVALID: forbidden pattern")
    (tmp_path / "order").write_text("0 1\n")
    code, out, _ = run(capsys, ["verify-order", "--add-loops", str(GOLDEN / "g3_noloops.txt"), str(tmp_path / "order")])
    assert code == 1 and "permutation" in out


def test_recognize_then_verify_pair(capsys, tmp_path):
    cert = tmp_path / "cert"
    cert.write_text((GOLDEN / "g2.certificate.out").read_text())
    code, out, _ = run(capsys, ["verify-pair", str(GOLDEN / "g2.txt"), str(cert)])
    assert (code, out) == (0, "VALID\n")
    cert.write_text("INVERTIBLE-PAIR: 0 1\nFORWARD (0,1) (1,0)\nBACK (1,0) (0,1)\n")
    code, out, _ = run(capsys, ["verify-pair", str(GOLDEN / "g2.txt"), str(cert)])
    assert code == 1 and out.startswith("INVALID")
    cert.write_text("garbage\n")
    code, out, _ = run(capsys, ["verify-pair", str(GOLDEN / "g2.txt"), str(cert)])
    assert code == 1 and out.startswith("INVALID")


def test_gen_round_trip(capsys, tmp_path):
    code, out, _ = run(capsys, ["gen", "6", "0.4", "3", "--add-loops-implied"])
    assert code == 0 and all(u != v for u, v in (l.split() for l in out.splitlines()[1:]))
    (tmp_path / "h").write_text(out)
    code, noloop_out, _ = run(capsys, ["recognize", "--add-loops", str(tmp_path / "h")])
    (tmp_path / "full").write_text(run(capsys, ["gen", "6", "0.4", "3"])[1])
    assert run(capsys, ["recognize", str(tmp_path / "full")])[1] == noloop_out


def test_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO((GOLDEN / "g2.txt").read_text()))
    code, out, _ = run(capsys, ["recognize", "-"])
    assert (code, out) == (2, "INVERTIBLE-PAIR: 0 1\n")


def test_oracle(capsys):
    assert run(capsys, ["oracle", str(GOLDEN / "g2.txt")])[:2] == (2, "INVERTIBLE-PAIR: 0 1\n")
    assert run(capsys, ["oracle", "--add-loops", str(GOLDEN / "g3_noloops.txt")])[:2] == (0, "MIN-ORDERING: 0 1 2\n")


def test_selftest(capsys):
    code, out, _ = run(capsys, ["selftest", "--n", "3"])
    assert code == 0
    assert out.splitlines() == [
        "n=1: 1 instances, 1 yes, 0 no",
        "n=2: 4 instances, 4 yes, 0 no",
        "n=3: 64 instances, 62 yes, 2 no",
        "SELFTEST OK",
    ]


def test_bench_csv(capsys, tmp_path):
    out_file = tmp_path / "b.csv"
    code, _, _ = run(capsys, ["bench", "--sizes", "6", "8", "--reps", "2", "--out", str(out_file)])
    lines = out_file.read_text().splitlines()
    assert code == 0 and lines[0].startswith("n,p,rep,m,result") and len(lines) == 5


@pytest.mark.parametrize(
    "args",
    [
        ["recognize", "/nonexistent/file"],
        ["recognize", str(GOLDEN / "g3_noloops.txt")],
        ["oracle", str(GOLDEN / "r9.txt") + "-missing"],
        ["gen", "4", "1.5", "0"],
    ],
)
def test_errors_exit_1(capsys, args):
    code, out, err = run(capsys, args)
    assert code == 1 and out == "" and err.startswith("minorder: error:")


def test_usage_error_exits_1(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["recognize"])
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        main(["bogus"])
    assert exc.value.code == 1


def test_oracle_limit(capsys, tmp_path):
    (tmp_path / "big").write_text(run(capsys, ["gen", "13", "0.5", "0"])[1])
    code, _, err = run(capsys, ["oracle", str(tmp_path / "big")])
    assert code == 1 and "limited" in err
