import json
import subprocess
import sys
from fractions import Fraction

import pytest

from subcf.cli import EXIT_DOMAIN, EXIT_EXHAUSTED, EXIT_PARSE, main


def run(capsys, *argv):
    code = main(list(argv))
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def test_encode_decode(capsys):
    assert run(capsys, "encode", "1/2")[:2] == (0, "(1, 3, &)\n")
    assert run(capsys, "decode", "(8, &)")[:2] == (0, "7\n")
    assert run(capsys, "encode", "--", "-3/2")[:2] == (0, "(-1, 3, &)\n")


def test_convergents_table(capsys):
    code, out, _ = run(capsys, "convergents", "const:pi", "--terms", "8")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "n R_n L_n A_n"
    assert lines[-1].startswith("7 355/113 ")
    assert lines[-1] == "7 355/113 333/106 11978"


def test_convergents_json_matches_text(capsys):
    _, text, _ = run(capsys, "convergents", "const:log2_3", "--terms", "12")
    _, js, _ = run(capsys, "convergents", "const:log2_3", "--terms", "12", "--format", "json-lines")
    rows = [json.loads(line) for line in js.splitlines()]
    assert len(rows) == 12
    for row, line in zip(rows, text.splitlines()[1:]):
        assert line.split() == [str(row["n"]), row["R_n"], row["L_n"], str(row["A_n"])]
    assert rows[-1]["R_n"] == "1539/971"


def test_convergents_eps(capsys):
    code, out, _ = run(capsys, "convergents", "const:phi", "--eps", "1/1000")
    assert code == 0 and out.splitlines()[-1].split()[1] == "89/55"


def test_convert(capsys):
    assert run(capsys, "convert", "--to", "subtraction", "const:pi", "--terms", "11")[1] == \
        "(4, 2^6, 17, 294, 3, 4, ...)\n"
    assert run(capsys, "convert", "--to", "subtraction", "[3; 7]")[1] == "(4, 2^5, 3, &)\n"
    assert run(capsys, "convert", "--to", "simple", "(4, 2^5, 3, &)")[1] == "[3; 7]\n"
    assert run(capsys, "convert", "--to", "simple", "const:phi", "--terms", "5")[1] == "[1; 1, 1, 1, 1, ...]\n"
    code, out, err = run(capsys, "convert", "--to", "simple", "(4, 2^6, 17, 294, 3, 4, ...)")
    assert code == EXIT_EXHAUSTED and out == "[3; 7, 15, 1, 292, 1, 1, 1, 2, ...]\n" and "exhausted" in err


def test_compare(capsys):
    assert run(capsys, "compare", "1/2", "1")[1] == "<\n"
    assert run(capsys, "compare", "(8, &)", "7")[1] == "=\n"
    assert run(capsys, "compare", "const:pi", "355/113")[1] == "<\n"
    assert run(capsys, "compare", "const:pi", "3")[1] == ">\n"
    assert run(capsys, "compare", "const:phi", "const:phi", "--fuel", "25")[1] == "?25\n"


def test_digits_and_const(capsys):
    assert run(capsys, "digits", "1/2", "--count", "3")[1] == "0.500\n"
    assert run(capsys, "digits", "const:pi", "--count", "6")[1] == "3.141592\n"
    assert run(capsys, "digits", "const:sqrt:2", "--count", "10")[1] == "1.4142135623\n"
    out = run(capsys, "const", "phi", "--terms", "4")[1]
    assert out == "[1; 1, 1, 1, ...]\n(2, 3, 3, 3, ...)\n"


@pytest.mark.parametrize("argv,code", [
    (["encode", "1/0"], EXIT_PARSE),
    (["decode", "(8, 1, &)"], EXIT_PARSE),
    (["decode", "(8, ...)"], EXIT_DOMAIN),
    (["convergents", "const:tau"], EXIT_PARSE),
    (["digits", "const:sqrt:9", "--count", "2"], EXIT_DOMAIN),
    (["convergents", "(4, 2^6, 17, ...)", "--terms", "20"], EXIT_EXHAUSTED),
    (["compare", "(4, 2^6, 17, ...)", "const:pi", "--fuel", "50"], EXIT_EXHAUSTED),
    (["convert", "--to", "simple", "(3, 2^50, 3, ...)", "--fuel", "10"], EXIT_EXHAUSTED),
    (["digits", "(0, 2^500, ...)", "--count", "1", "--fuel", "100"], EXIT_EXHAUSTED),
])
def test_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["convergents", "const:pi", "--terms", "0"])
    assert exc.value.code == 2


def test_data_dir_flag(capsys, tmp_path):
    (tmp_path / "pi.txt").write_text("3\n7\n15\n1\n292\n1\n1\n1\n2\n")
    code, out, _ = run(capsys, "convergents", "const:pi", "--terms", "12", "--data-dir", str(tmp_path))
    assert code == EXIT_EXHAUSTED
    assert out.splitlines()[-1].split()[1] == "1146408/364913"


@pytest.mark.parametrize("x", ["1/2", "-3/2", "22/7", "0", "-1000000/999999", "355/113", "987654/3"])
def test_process_round_trip(x):
    enc = subprocess.run([sys.executable, "-m", "subcf", "encode", "--", x],
                         capture_output=True, text=True, check=True).stdout.strip()
    dec = subprocess.run([sys.executable, "-m", "subcf", "decode", enc],
                         capture_output=True, text=True, check=True).stdout.strip()
    assert Fraction(dec) == Fraction(x)
