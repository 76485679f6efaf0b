import json

import pytest

from dsk.cli import run_cli
from dsk.verify import Report


def run(capsys, *argv):
    code = run_cli(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_ideal_equivariant(capsys):
    code, out, _ = run(capsys, "ideal", "equivariant", "--n", "2", "--lambda", "1", "--s", "2")
    assert code == 0
    assert out.splitlines() == [
        "1*x1^2 - 1*x1^1*u1^1 - 1*x1^1*u2^1 + 1*u1^1*u2^1",
        "1*x2^2 - 1*x2^1*u1^1 - 1*x2^1*u2^1 + 1*u1^1*u2^1",
        "1*x1^1*x2^1 - 1*x1^1*u1^1 - 1*x2^1*u1^1 + 1*u1^2",
    ]


def test_ideal_griffin_groebner_and_tanisaki(capsys):
    code, out, _ = run(capsys, "ideal", "griffin", "--n", "2", "--lambda", "1", "--s", "2", "--groebner")
    assert code == 0
    assert out.splitlines() == ["1*x1^2", "1*x1^1*x2^1", "1*x2^2"]
    code, out, _ = run(capsys, "ideal", "tanisaki", "--n", "2", "--lambda", "1")
    assert (code, out) == (0, "1*x1^1*x2^1\n")


def test_basis(capsys):
    code, out, _ = run(capsys, "basis", "--n", "2", "--lambda", "1", "--s", "2")
    assert code == 0
    assert out == "1\nx2\nx1\ncount=3\n"
    code, out, _ = run(capsys, "basis", "--n", "2", "--lambda", "1", "--s", "2", "--format", "json")
    assert json.loads(out) == {"monomials": ["1", "x2", "x1"], "count": 3}


def test_words(capsys):
    code, out, _ = run(capsys, "words", "--n", "2", "--lambda", "1", "--s", "2")
    assert code == 0
    assert out == "1,2\n1,3\n3,1\ncount=3\n"


def test_frame(capsys):
    code, out, _ = run(capsys, "frame", "--n", "7", "--lambda", "2,2,1", "--s", "4", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["K"] == 13
    assert data["P"] == [[10, 6, 3, 1], [11, 7, 4, 2], [12, 8, 5], [13, 9]]


def test_locus_csv(capsys):
    code, out, _ = run(capsys, "locus", "--n", "2", "--lambda", "1", "--s", "2", "--alpha", "0,1/2")
    assert code == 0
    assert out == "0,0\n0,1/2\n1/2,0\n"


def test_verify_all_trivial(capsys):
    code, out, _ = run(capsys, "verify", "--check", "all", "--n", "1", "--lambda", "0", "--s", "1")
    assert code == 0
    assert out.splitlines()[-1] == "10/10 passed"


def test_verify_json_round_trips(capsys):
    code, out, _ = run(capsys, "verify", "--check", "C2,C5", "--n", "2", "--lambda", "1", "--s", "2",
                       "--alpha", "0,1", "--format", "json")
    assert code == 0
    reports = [Report.from_dict(d) for d in json.loads(out)]
    assert [r.check for r in reports] == ["C2", "C5"]
    assert reports[0].alpha == ["0", "1"]


def test_skipped_check_exits_nonzero(capsys):
    code, out, _ = run(capsys, "verify", "--check", "C5", "--n", "3", "--lambda", "0", "--s", "3",
                       "--budget", "4")
    assert code == 1
    assert "skipped" in out


def test_sweep_is_byte_identical(capsys, tmp_path):
    argv = ["sweep", "--max-n", "2", "--max-s", "2", "--checks", "C1,C7", "--no-timings",
            "--cache-dir", str(tmp_path), "--format", "json"]
    code1, out1, _ = run(capsys, *argv)
    code2, out2, _ = run(capsys, *argv)
    assert code1 == code2 == 0
    assert out1 == out2
    assert list(tmp_path.glob("*.gb"))


def test_out_file(capsys, tmp_path):
    target = tmp_path / "basis.txt"
    code, out, _ = run(capsys, "basis", "--n", "1", "--lambda", "", "--s", "3", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text() == "1\nx1\nx1^2\ncount=3\n"


def test_env_cache_dir(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("DSK_CACHE_DIR", str(tmp_path))
    code, _, _ = run(capsys, "ideal", "griffin", "--n", "2", "--lambda", "1", "--s", "2", "--groebner")
    assert code == 0
    assert len(list(tmp_path.glob("*.gb"))) == 1


@pytest.mark.parametrize("argv,needle", [
    (["basis", "--n", "2", "--lambda", "3", "--s", "1"], "exceeds n"),
    (["basis", "--n", "2", "--lambda", "1,2", "--s", "2"], "weakly decreasing"),
    (["locus", "--n", "2", "--lambda", "1", "--s", "2", "--alpha", "1,1"], "--alpha"),
    (["locus", "--n", "2", "--lambda", "1", "--s", "2", "--alpha", "1,x"], "--alpha"),
    (["verify", "--check", "C12", "--n", "1", "--s", "1"], "C12"),
    (["ideal", "griffin", "--n", "2", "--lambda", "1"], "--s"),
    (["basis", "--n", "2", "--lambda", "1", "--s", "2", "--order", "lex"], "lex"),
])
def test_usage_errors_name_the_input(capsys, argv, needle):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert needle in err


def test_unknown_flag_is_usage_error(capsys):
    code, _, err = run(capsys, "basis", "--n", "2", "--s", "2", "--bogus")
    assert code == 2
    assert "--bogus" in err
