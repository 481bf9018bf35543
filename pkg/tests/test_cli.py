import subprocess
import sys

from lescop.cli import main

HOPF22 = "components 2\nframing 1 2/1\nframing 2 -2/1\nlk 1 2 1\n"
T4_PATH = (
    "components 2\nframing 1 2/1\nframing 2 -2/1\nlk 1 2 4\n"
    "path component 1\nstep 0 2:3\nstep 0 2:2\nstep 0 2:1\n"
)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_lens_golden(capsys):
    code, out, _ = run(capsys, "lens", "13", "4")
    assert (code, out) == (0, "1/2\n")


def test_dedekind_golden(capsys):
    code, out, _ = run(capsys, "dedekind", "26", "5")
    assert (code, out) == (0, "1/5\n")


def test_tn_golden(capsys):
    code, out, _ = run(capsys, "tn", "3", "7/2")
    assert (code, out) == (0, "8\n")


def test_lens_rejects_non_coprime(capsys):
    code, out, err = run(capsys, "lens", "4", "2")
    assert code == 2
    assert out == ""
    assert "error:" in err


def test_dedekind_negative_p(capsys):
    code, out, _ = run(capsys, "dedekind", "-1", "4")
    assert (code, out) == (0, "-1/8\n")


def test_dedekind_bad_modulus(capsys):
    code, _, err = run(capsys, "dedekind", "1", "0")
    assert code == 2
    assert "positive" in err


def test_lambda_and_h1_and_walker(capsys, tmp_path):
    path = tmp_path / "hopf.lnk"
    path.write_text(HOPF22)
    code, out, err = run(capsys, "lambda", str(path))
    assert (code, out) == (0, "0\n")
    assert "a1 defaulted to 0 for 3 sublink(s): 1; 2; 1,2" in err

    code, out, _ = run(capsys, "h1", str(path))
    assert (code, out) == (0, "5\n")

    code, out, _ = run(capsys, "walker", str(path))
    assert (code, out) == (0, "0\n")


def test_lambda_with_explicit_a1_silences_warning(capsys, tmp_path):
    path = tmp_path / "explicit.lnk"
    path.write_text(HOPF22 + "a1 1 0\na1 2 0\na1 1,2 0\n")
    code, out, err = run(capsys, "lambda", str(path))
    assert (code, out) == (0, "0\n")
    assert "defaulted" not in err


def test_walker_rejects_non_rhs(capsys, tmp_path):
    path = tmp_path / "zero.lnk"
    path.write_text("components 1\nframing 1 0/1\n")
    code, _, err = run(capsys, "walker", str(path))
    assert code == 2
    assert "rational homology sphere" in err


def test_delta_per_step_and_total(capsys, tmp_path):
    path = tmp_path / "t4.lnk"
    path.write_text(T4_PATH)
    code, out, _ = run(capsys, "delta", str(path))
    assert code == 0
    assert out == "step 1 3\nstep 2 4\nstep 3 3\ntotal 10\n"


def test_chain_and_negative_arguments(capsys):
    code, out, _ = run(capsys, "chain", "2", "2", "2")
    assert (code, out) == (0, "4/3\n")

    code, out, _ = run(capsys, "chain", "2", "-1", "--tail", "-1/5")
    assert (code, out) == (0, "13/4\n")


def test_chain_degenerate(capsys):
    code, _, err = run(capsys, "chain", "1", "1", "1")
    assert code == 2
    assert "degenerate" in err


def test_tn_negative_framing(capsys):
    code, out, _ = run(capsys, "tn", "2", "-3/1")
    assert (code, out) == (0, "1/2\n")


def test_unknown_verb(capsys):
    code, _, _ = run(capsys, "frobnicate")
    assert code == 2


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "lambda", str(tmp_path / "absent.lnk"))
    assert code == 2
    assert "error:" in err


def test_parse_error_reported(capsys, tmp_path):
    path = tmp_path / "bad.lnk"
    path.write_text("components 1\nframing 1 1/0\n")
    code, _, err = run(capsys, "lambda", str(path))
    assert code == 2
    assert "line 2" in err


def test_verify_small(capsys):
    code, out, _ = run(capsys, "verify", "--max-r", "3", "--max-nb", "2")
    assert code == 0
    assert "verification: PASS" in out


def test_verify_report_dir(capsys, tmp_path):
    outdir = tmp_path / "report"
    code, out, err = run(
        capsys, "verify", "--max-r", "2", "--max-nb", "1", "--report-dir", str(outdir)
    )
    assert code == 0
    assert (outdir / "sweeps.csv").exists()
    assert (outdir / "lens_families.png").exists()
    assert "wrote" in err


def test_verify_bad_bounds(capsys):
    code, _, err = run(capsys, "verify", "--max-r", "0")
    assert code == 2
    assert "bounds" in err


def test_output_is_deterministic(capsys):
    first = run(capsys, "lens", "85", "24")
    second = run(capsys, "lens", "85", "24")
    assert first == second == (0, "8\n", "")


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "lescop", "lens", "13", "4"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "1/2\n"
