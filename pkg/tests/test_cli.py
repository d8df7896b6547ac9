import io
import json
import subprocess
import sys

import pytest

from equiseq.cli import build_parser, run

SAMPLE = "caaacaabaabaabcabc"


@pytest.fixture
def sample_file(tmp_path):
    path = tmp_path / "sample.txt"
    path.write_text(SAMPLE + "\n")
    return str(path)


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(build_parser().parse_args(list(argv)), out, err)
    return code, out.getvalue(), err.getvalue()


def test_subcadence_count(sample_file):
    assert call("subcadence", "count", "--k", "4", "--text", sample_file)[1] == "4\n"
    code, out, _ = call(
        "subcadence", "count", "--k", "4", "--d", "3", "--char", "a", "--text", sample_file
    )
    assert (code, out) == (0, "3\n")


@pytest.mark.parametrize("algo", ["auto", "split", "bitpar", "pairs", "brute"])
def test_subcadence_locate(sample_file, algo):
    code, out, _ = call(
        "subcadence", "locate", "--k", "4", "--d", "3", "--algo", algo, "--text", sample_file
    )
    assert code == 0
    assert out == "3\t3\n4\t3\n7\t3\n8\t3\n"


def test_json_outputs(sample_file):
    _, out, _ = call("espm", "locate", "--pattern", "aacc", "--format", "json", "--text", sample_file)
    assert json.loads(out) == {"occurrences": [[9, 3]], "count": 1, "algo": "bitpar"}
    _, out, _ = call("cadence", "count", "--k", "3", "--format", "json", "--text", sample_file)
    doc = json.loads(out)
    assert doc["count"] == 2 and doc["n"] == 18 and doc["params"] == {"k": 3}


@pytest.mark.parametrize("algo", ["auto", "window", "bitpar", "split", "pairs", "brute"])
def test_cadence_algorithms(sample_file, algo):
    code, out, _ = call("cadence", "locate", "--k", "3", "--algo", algo, "--text", sample_file)
    assert (code, out) == (0, "4\t6\n2\t7\n")


@pytest.mark.parametrize("algo", ["auto", "conv", "bitpar", "split", "brute"])
def test_espm3(sample_file, algo):
    code, out, _ = call("espm3", "count", "--pattern", "aab", "--algo", algo, "--text", sample_file)
    assert (code, out) == (0, "12\n")


def test_abelian3_with_check(sample_file):
    code, out, _ = call("abelian3", "count", "--pattern", "aab", "--check", "--text", sample_file)
    assert (code, out) == (0, "24\n")


@pytest.mark.parametrize(
    "argv",
    [
        ["subcadence", "count"],
        ["subcadence", "count", "--k", "1"],
        ["subcadence", "count", "--k", "2", "--pattern", "ab"],
        ["espm", "count"],
        ["espm", "count", "--pattern", "a"],
        ["espm3", "count", "--pattern", "abcd"],
        ["espm3", "locate", "--pattern", "abc"],
        ["abelian3", "count", "--pattern", "abc", "--algo", "split"],
        ["espm3", "count", "--pattern", "abc", "--d", "2"],
        ["espm", "count", "--pattern", "ab", "--char", "a"],
        ["espm", "count", "--pattern", "ab", "--threads", "0"],
        ["espm", "count", "--pattern", "ab", "--algo", "pairs"],
    ],
)
def test_usage_errors(sample_file, argv):
    code, out, err = call(*argv, "--text", sample_file)
    assert code == 2 and out == "" and "error" in err


def test_missing_file(tmp_path):
    code, _, err = call("espm", "count", "--pattern", "ab", "--text", str(tmp_path / "nope"))
    assert code == 3 and "cannot read" in err


def test_check_refuses_large_input(tmp_path):
    path = tmp_path / "big.txt"
    path.write_text("a" * 5000)
    assert call("subcadence", "count", "--k", "2", "--check", "--text", str(path))[0] == 2


def test_threads_are_deterministic(tmp_path):
    path = tmp_path / "t.txt"
    path.write_text("ab" * 50 + "aab" * 40)
    base = ["--text", str(path)]
    for argv in (
        ["subcadence", "locate", "--k", "3"],
        ["cadence", "locate", "--k", "2"],
        ["espm", "locate", "--pattern", "aba"],
        ["subcadence", "count", "--k", "2"],
    ):
        single = call(*argv, *base)
        assert call(*argv, "--threads", "3", *base) == single
        assert call(*argv, "--threads", "7", "--check", *base) == single


def test_strip_newlines(tmp_path):
    path = tmp_path / "t.txt"
    path.write_bytes(b"aa\r\naa\n")
    assert call("subcadence", "count", "--k", "2", "--text", str(path))[1] == "6\n"
    out = call("subcadence", "count", "--k", "2", "--no-strip-newlines", "--text", str(path))[1]
    assert out == "7\n"


def test_stdin_and_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "equiseq", "cadence", "count", "--k", "2"],
        input=b"aaaa",
        capture_output=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == b"3\n"
