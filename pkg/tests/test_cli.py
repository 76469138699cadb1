import json
import shutil
import subprocess
import sys

import pytest

from wittkit import __version__
from wittkit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_usage(capsys, *argv):
    with pytest.raises(SystemExit) as exc:
        main(list(argv))
    out, err = capsys.readouterr()
    return exc.value.code, out, err


# --- value commands -------------------------------------------------------------------------

def test_witt_star_example(capsys):
    code, out, _ = run(capsys, "witt", "star", "--ring", "Z", "--n", "2", "--u", "1,0", "--v", "1,0")
    assert code == 0 and out.strip() == "-1,0"


def test_witt_star_json(capsys):
    code, out, _ = run(capsys, "witt", "star", "--ring", "Z", "--n", "2", "--u", "1,0", "--v", "1,0", "--json")
    data = json.loads(out)
    assert code == 0 and data["version"] == __version__


def test_witt_length_mismatch_is_a_usage_error(capsys):
    code, _, err = run(capsys, "witt", "star", "--ring", "Z", "--n", "3", "--u", "1,0", "--v", "1,0")
    assert code == 2 and "--n" in err


@pytest.mark.parametrize("op", ["add", "frobenius", "verschiebung", "ghost", "coordinates"])
def test_witt_other_ops_succeed(capsys, op):
    code, out, _ = run(capsys, "witt", op, "--ring", "Z/12", "--u", "1,2,3", "--v", "4,5,6", "--s", "3")
    assert code == 0 and out.strip()


def test_frobenius_length_must_be_a_multiple_of_s(capsys):
    code, _, err = run(capsys, "witt", "frobenius", "--ring", "Z/12", "--u", "1,2,3", "--s", "2")
    assert code == 2 and "multiple" in err


@pytest.mark.parametrize("op", ["add", "mul", "F", "V", "ghost"])
def test_ptypical_ops_succeed(capsys, op):
    code, out, _ = run(capsys, "ptypical", op, "--ring", "Z", "--p", "3", "--u", "1,2", "--v", "2,0")
    assert code == 0 and out.strip()


def test_phi_example(capsys):
    code, out, _ = run(capsys, "phi", "--field", "F7", "--n", "2", "--cycle", "[x^2+1]")
    assert code == 0 and out.strip() == "0,1"


def test_phi_accepts_json_cycles(capsys):
    cycle = json.dumps([{"poly": "x^2+1", "mult": 1}])
    code, out, _ = run(capsys, "phi", "--field", "F7", "--n", "2", "--cycle", cycle)
    assert code == 0 and out.strip() == "0,1"
    code, out, _ = run(capsys, "phi", "--field", "F7", "--n", "2", "--cycle", "[x^2+1]", "--hat")
    assert code == 0 and "degree 2" in out


def test_hasse_arf_example(capsys):
    code, out, _ = run(capsys, "hasse-arf", "--r", "3/2", "--samples", "50", "--seed", "7")
    assert code == 0 and out.strip() == "r=3/2: 50/50 agreements"


def test_transfer_examples(capsys):
    code, out, _ = run(capsys, "transfer", "--group", "Gm", "--algebra", "F5[x]/(x^2-2)", "--element", "x")
    assert code == 0 and out.strip() == "3"
    code, out, _ = run(capsys, "transfer", "--group", "Ga", "--algebra", "F5[x]/(x^2-2)", "--element", "x")
    assert code == 0 and out.strip() == "0"
    code, out, _ = run(capsys, "transfer", "--group", "W", "--algebra", "F5[x]/(x^2-2)", "--element", "x")
    assert code == 0 and out.strip() == "0,3"
    code, out, _ = run(capsys, "transfer", "--group", "Wp", "--algebra", "F5[x]/(x^2-2)",
                       "--element", "x", "--p", "5")
    assert code == 0


def test_transfer_usage_errors(capsys):
    assert run(capsys, "transfer", "--group", "Q", "--algebra", "F5[x]/(x^2-2)", "--element", "x")[0] == 2
    assert run(capsys, "transfer", "--group", "Wp", "--algebra", "F5[x]/(x^2-2)", "--element", "x")[0] == 2
    assert run(capsys, "transfer", "--group", "Gm", "--algebra", "F5", "--element", "x")[0] == 2


def test_homotopy_verify(capsys):
    code, out, _ = run(capsys, "homotopy", "verify", "--family", "gm1", "--s", "2", "--field", "F7")
    assert code == 0 and "pass" in out
    code, out, _ = run(capsys, "homotopy", "verify", "--family", "gm1", "--s", "2", "--field", "F7", "--json")
    data = json.loads(out)
    assert {"family", "params", "boundary0", "boundary1", "expected0", "expected1", "pass"} <= set(data)


def test_homotopy_rejected_parameters_exit_one(capsys):
    code, out, _ = run(capsys, "homotopy", "verify", "--family", "gm2", "--s", "2", "--field", "F7")
    assert code == 1 and "FAIL" in out


def test_drw_present_and_check(capsys, tmp_path):
    path = tmp_path / "pres.json"
    code, out, _ = run(capsys, "drw", "present", "--A", "F3[x]", "--n", "2", "--q", "1", "--dx", "3",
                       "--dr", "2", "--out", str(path))
    assert code == 0 and path.exists()
    code, out, _ = run(capsys, "drw", "check", "--pres", str(path), "--lhs", "F(d[t^2])",
                       "--rhs", "2*[t^5]*d[t]")
    assert code == 0 and out.startswith("EQUAL")
    code, out, _ = run(capsys, "drw", "check", "--pres", str(path), "--lhs", "F(d[t^2])",
                       "--rhs", "[t^5]*d[t]")
    assert code == 1 and out.startswith("DISTINCT")
    code, out, _ = run(capsys, "drw", "check", "--pres", str(path), "--lhs", "3*d[x]", "--rhs", "0", "--json")
    assert code == 1 and json.loads(out)["verdict"]["status"] == "INCONCLUSIVE"


def test_drw_check_parse_error_exits_two(capsys, tmp_path):
    path = tmp_path / "pres.json"
    run(capsys, "drw", "present", "--A", "F3", "--n", "1", "--q", "0", "--dx", "0", "--out", str(path))
    assert run(capsys, "drw", "check", "--pres", str(path), "--lhs", "[x", "--rhs", "0")[0] == 2
    assert run(capsys, "drw", "check", "--pres", str(tmp_path / "missing.json"), "--lhs", "0", "--rhs", "0")[0] == 2


# --- suites and errors --------------------------------------------------------------------------

def test_suite_homotopy_corpus_passes(capsys):
    code, out, _ = run(capsys, "suite", "homotopy-corpus", "--json")
    data = json.loads(out)
    assert code == 0 and data["fail_count"] == 0 and data["case_count"] > 0
    assert {"suite", "anchors", "case_count", "pass_count", "fail_count", "inconclusive_count",
            "failures", "version", "seed"} <= set(data)


def test_suite_reports_are_byte_identical(capsys):
    first = run(capsys, "suite", "witt-laws", "--seed", "1", "--json")
    second = run(capsys, "suite", "witt-laws", "--seed", "1", "--json")
    assert first[0] == 0 and first == second


def test_suite_drw_axioms_rejects_p2(capsys):
    code, _, err = run(capsys, "suite", "drw-axioms", "--p", "2")
    assert code == 2 and "p must be odd" in err


def test_suite_usage_errors(capsys):
    assert run(capsys, "suite", "nonsense")[0] == 2
    assert run(capsys, "suite", "hasse-arf", "--p", "3")[0] == 2


def test_malformed_ring_exits_two(capsys):
    code, _, err = run(capsys, "witt", "star", "--ring", "Z/", "--u", "1", "--v", "1")
    assert code == 2 and "error" in err


def test_argparse_errors_exit_two(capsys):
    assert run_usage(capsys, "frobnicate")[0] == 2
    assert run_usage(capsys, "witt", "star")[0] == 2
    assert run_usage(capsys, "phi", "--field", "F7", "--n", "two", "--cycle", "[x]")[0] == 2


@pytest.mark.skipif(shutil.which("wittkit") is None, reason="console script not installed")
def test_console_script():
    proc = subprocess.run(["wittkit", "witt", "star", "--ring", "Z", "--n", "2", "--u", "1,0", "--v", "1,0"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "-1,0"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "wittkit.cli", "suite", "drw-axioms", "--p", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 2 and "p must be odd" in proc.stderr
