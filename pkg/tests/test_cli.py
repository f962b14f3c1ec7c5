import io
import json
import subprocess
import sys

import pytest

from permstats.cli import main
from permstats.table import fixture_text


def run(argv, stdin=""):
    out = io.StringIO()
    rc = main(argv, out=out, stdin=io.StringIO(stdin))
    return rc, out.getvalue()


@pytest.mark.parametrize("name, perm, code", [
    ("invcode", "784269135", "002320654"),
    ("majcode", "175389642", "002135573"),
    ("mc", "935721468", "501012010"),
    ("ic", "362715984", "420520010"),
    ("lc", "4321", "3210"),
])
def test_code_and_decode(name, perm, code):
    assert run(["code", name], perm + "\n") == (0, code + "\n")
    assert run(["decode", name, "--compact"], code + "\n") == (0, perm + "\n")


def test_decode_long_permutation_is_space_separated():
    rc, out = run(["decode", "mc"], "012333442010\n")
    assert (rc, out) == (0, "12 4 5 6 10 3 9 2 7 11 1 8\n")


def test_input_skips_blank_and_comment_lines():
    assert run(["code", "invcode"], "# header\n\n321\n") == (0, "012\n")


def test_stat():
    rc, out = run(["stat", "iligne", "sort.mc", "el.mc"], "3142\n1234\n")
    assert rc == 0
    assert out.splitlines() == ["2\t0022\t13", "-\t0000\t-"]


def test_map():
    assert run(["map", "theorem2", "--compact"], "935721468\n") == (0, "795128643\n")
    rc, out = run(["map", "lemma4", "--k", "7"], "5 6 12 4 10 2 3 9 11 1 7 8\n")
    assert out == "6 7 12 5 10 3 4 9 11 1 2 8\n"
    rc, out = run(["map", "lemma5", "--k", "7"], "12 1 2 3 10 4 9 5 6 11 7 8\n")
    assert out == "12 4 5 6 10 3 9 2 7 11 1 8\n"


def test_table():
    assert run(["table"]) == (0, fixture_text())


def test_class():
    rc, out = run(["class", "--n", "4", "--iligne", "2", "--compact"])
    assert out.split() == ["1234", "1324", "1342", "3124", "3142", "3412"]
    rc, out = run(["class", "--n", "4", "--iligne", "-", "--strict", "--compact"])
    assert out.split() == ["1234"]


def test_compare_exit_codes():
    rc, out = run(["compare", "--n", "5", "--lhs", "maj", "--rhs", "inv"])
    assert rc == 0 and "EQUAL" in out
    rc, out = run(["compare", "--n", "4", "--lhs", "iligne,majcode", "--rhs", "ligne,invcode"])
    assert rc == 1 and "(2, 0013)" in out


def test_check_pass_fail_and_json():
    rc, out = run(["check", "--only", "M1,golden", "--max-n", "5"])
    assert rc == 0
    assert [ln.split()[:2] for ln in out.splitlines()] == [["PASS", "M1"], ["PASS", "golden"]]
    rc, out = run(["check", "--only", "R7", "--max-n", "4", "--json"])
    assert rc == 1
    rec = json.loads(out)
    assert rec["verdict"] == "FAIL" and rec["n_range"] == "1..4" and rec["witness"]


def test_check_list():
    rc, out = run(["check", "--list"])
    assert rc == 0 and "theorem2-st" in out


@pytest.mark.parametrize("argv, stdin", [
    (["check", "--only", "bogus"], ""),
    (["stat", "bogus"], "123\n"),
    (["code", "mc"], "1 1 2\n"),
    (["decode", "invcode"], "02\n"),
    (["map", "lemma4"], "123\n"),
    (["map", "lemma4", "--k", "3"], "123\n"),
    (["class", "--n", "4", "--iligne", "5"], ""),
])
def test_usage_errors_exit_two(argv, stdin, capsys):
    rc, _ = run(argv, stdin)
    assert rc == 2
    assert "error" in capsys.readouterr().err


def test_argparse_errors_exit_two():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "permstats", "code", "invcode"],
                          input="784269135\n", capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "002320654\n"
