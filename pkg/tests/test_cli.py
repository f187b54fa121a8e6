import io
import subprocess
import sys

import pytest

from hopfq.cli import FAILED, INVALID, OK, main
from hopfq.io import import_structure, import_tmaps, same_structure
from hopfq.hopf import group_like_algebra
from hopfq.loops import cyclic


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def trailer(text):
    lines = text.split("--- summary\n", 1)[1].splitlines()
    return dict(ln.split("=", 1) for ln in lines if "=" in ln)


def test_verify_octonions():
    code, text = run("verify", "builtin:octonion16")
    assert code == OK
    t = trailer(text)
    assert t["Moufang"] == "yes" and t["associative"] == "no" and t["IP"] == "yes"
    assert t["status"] == "pass"


def test_verify_cyclic_over_gf101():
    code, text = run("verify", "builtin:cyclic:6", "--field", "gf:101")
    assert code == OK and trailer(text)["field"] == "gf:101"



def test_bad_table_message(tmp_path, capsys):
    bad = tmp_path / "bad_table.txt"
    bad.write_text("order 3\n0 1 1\n1 2 0\n2 0 1\n")
    assert run("verify", str(bad))[0] == INVALID
    err = capsys.readouterr().err
    assert "NotLatinSquare" in err and "row 0" in err


def test_table_file_and_parse_position(tmp_path, capsys):
    good = tmp_path / "z3.txt"
    good.write_text("# Z3\norder 3\n0 1 2\n1 2 0\n2 0 1\n")
    assert run("verify", str(good))[0] == OK
    broken = tmp_path / "broken.txt"
    broken.write_text("order 3\n0 1 2\n1 2\n")
    assert run("verify", str(broken))[0] == INVALID
    assert "line 3" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [
    ("verify", "builtin:octonion16", "--field", "gf:7"),
    ("verify", "builtin:nothing"),
    ("verify", "/no/such/file"),
    ("verify", "builtin:integers"),
    ("verify", "builtin:cyclic:3", "--field", "gf:9"),
    ("search", "--order", "9"),
    ("frobnicate",),
    ("mcq", "builtin:integers", "--window", "-1"),
])
def test_invalid_input_exits_two(argv):
    assert run(*argv)[0] == INVALID


def test_corrupted_antipode_exits_one():
    code, text = run("integrals", "builtin:quaternion8", "--debug-corrupt-antipode")
    assert code == FAILED
    assert "h1 phi(h2 S(g)) = phi(h S(g1)) g2" in text and "FAIL" in text
    assert run("verify", "builtin:quaternion8", "--debug-corrupt-antipode")[0] == FAILED


def test_integrals_and_dual():
    code, text = run("integrals", "builtin:s3")
    assert code == OK and trailer(text)["delta"] == "012"  # identity permutation
    code, text = run("dual", "builtin:quaternion8", "--field", "gf:101")
    assert code == OK and trailer(text)["status"] == "pass"


def test_mcq_integers(tmp_path):
    path = tmp_path / "tmaps.txt"
    code, text = run("mcq", "builtin:integers", "--window", "8", "--export", str(path))
    assert code == OK and trailer(text)["classification"] == "multiplier Hopf algebra"
    name, window, rows = import_tmaps(path.read_text())
    assert len(window) == 17 and len(rows) == 4 * 17 * 17


def test_mcq_octonions():
    code, text = run("mcq", "builtin:octonion16")
    t = trailer(text)
    assert code == OK and t["Moufang"] == "yes" and t["classification"] == "multiplier Hopf coquasigroup"


def test_export_round_trip(tmp_path):
    path = tmp_path / "z2.txt"
    assert run("export", "builtin:cyclic:2", "algebra", "--export", str(path))[0] == OK
    again = import_structure(path.read_text())
    assert same_structure(again, group_like_algebra(cyclic(2)))
    # a structure file is accepted wherever an input is
    assert run("verify", str(path))[0] == OK


def test_export_dual_and_table():
    code, text = run("export", "builtin:quaternion8", "dual")
    assert code == OK and "flag associative yes" in text and "flag coassociative yes" in text
    assert import_structure(text).dim == 8
    code, text = run("export", "builtin:s3", "table")
    assert code == OK and text.startswith("order 6")
    code, text = run("export", "builtin:integers", "mcq", "--window", "5")
    assert code == OK and len(import_tmaps(text)[1]) == 11


def test_search_command():
    code, text = run("search", "--order", "7", "--filter", "IP,!Moufang")
    assert code == OK and trailer(text)["found"] == "1"


def test_reports_are_deterministic():
    for argv in (("verify", "builtin:s3"), ("dual", "builtin:cyclic:6", "--seed", "5"),
                 ("mcq", "builtin:free:2", "--window", "3")):
        assert run(*argv) == run(*argv)


def test_paper_suite_rejects_small_prime():
    assert run("paper-suite", "--field", "gf:7")[0] == INVALID


def test_paper_suite_default_run():
    code, text = run("paper-suite")
    t = trailer(text)
    assert code == OK, [ln for ln in text.splitlines() if "FAIL" in ln or "UNEXPECTED" in ln][:5]
    assert t["fields"] == "rational,gf:101" and t["failed"] == "0"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hopfq", "verify", "builtin:cyclic:2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "status=pass" in proc.stdout
