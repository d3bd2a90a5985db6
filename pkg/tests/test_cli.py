import json
import subprocess
import sys
from pathlib import Path

import pytest

from wpstwist import cli
from wpstwist.errors import InvariantViolation

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    return json.loads(out)


def test_normalize(capsys):
    data = run_json(capsys, "normalize", "4,4,2,2,12:24")
    assert data["normalized"] == "P(2,2,1,1,6)[12]"
    assert data["steps"][0] == {"index": None, "factor": 2}


def test_parse_forms():
    assert str(cli.parse_hypersurface("P(1,2,3,6)[12]")) == "P(1,2,3,6)[12]"
    assert cli.parse_hypersurface("1,1,1,1,1").degree == 5


def test_twist(capsys):
    data = run_json(capsys, "twist", "2,1,1:6", "4,1,1,6:12")
    assert data["image"]["text"] == "P(4,4,2,2,12)[24]"
    assert data["normalized"] == "P(2,2,1,1,6)[12]"
    assert data["quotient_order"] == 3


def test_check_cy(capsys):
    data = run_json(capsys, "check-cy", "1,1,2,4,4:12", "--fibered-from", "2,1,1:12", "1,1,2,2:6")
    assert data["sufficient"] and data["fiber_cy"] and data["total_cy"]
    assert data["quasismooth"]


def test_classify(capsys):
    data = run_json(capsys, "classify-fibers", "11,5,6", "1,2,3", "--ell", "6")
    assert data["describe"] == "2×II, 2×II*"
    assert data["alpha_sum"] == "2/1" and data["euler_sum"] == 24
    assert data["picard"] == "E8^2 ⊕ H"


def test_fib_euler(capsys):
    assert run_json(capsys, "fib-euler", "132", "4") == {"euler": -2592}


def test_euler_with_h11(capsys):
    data = run_json(capsys, "euler", "41,42,498,1162,1743:3486", "--h11", "491")
    assert data["chi"] == 960 and data["h21"] == 11


def test_resolve_and_cone(capsys):
    assert run_json(capsys, "resolve-hj", "11", "2")["chain"] == [6, 2]
    pts = run_json(capsys, "cone", "41", "7", "83")
    assert len(pts) == 20 and pts[0] == {"alpha": 11, "beta": 2, "gamma": 23}


def test_conifold_and_genus(capsys):
    data = run_json(capsys, "conifold", "5", "101", "32", "1")
    assert (data["h11"], data["h21"], data["euler_shift"]) == (6, 70, 64)
    assert run_json(capsys, "genus", "4,2,1,1", "16,16")["genus"] == 385
    assert run_json(capsys, "genus", "1,1,12,44,66", "132")["genus"] == 9


def test_k3_order(capsys):
    data = run_json(capsys, "k3-order", "66")
    assert data["admissible"] and data["picard"] == "U"
    assert not run_json(capsys, "k3-order", "67")["admissible"]


def test_enumerate_csv_matches_golden(capsys):
    code, out, _ = run(capsys, "--format", "csv", "--bounds", "7", "enumerate", "cy3-k3")
    assert code == 0
    assert out == (GOLDEN / "cy3_k3_w0_7.csv").read_text()


def test_flags_after_subcommand(capsys):
    code, out, _ = run(capsys, "enumerate", "k3", "--bounds", "11", "--seedless")
    assert code == 0
    assert out == (GOLDEN / "k3_w0_11.json").read_text()


def test_seedless_is_byte_identical(capsys):
    first = run(capsys, "--seedless", "--bounds", "14", "enumerate", "cy3-elliptic", "--workers", "4")[1]
    second = run(capsys, "--seedless", "--bounds", "14", "enumerate", "cy3-elliptic")[1]
    assert first == second == (GOLDEN / "cy3_elliptic_w0_14.json").read_text()


def test_empty_enumeration(capsys):
    code, out, _ = run(capsys, "--bounds", "1", "enumerate", "k3")
    assert code == 0 and out == "[]\n"


def test_csv_for_plain_payload(capsys):
    code, out, _ = run(capsys, "--format", "csv", "fib-euler", "84", "12")
    assert code == 0 and out == "euler\n-960\n"


@pytest.mark.parametrize(
    "argv",
    [
        ["resolve-hj", "4", "2"],
        ["normalize", "2,2,2:7"],
        ["normalize", "a,b"],
        ["twist", "2,1,1:6", "1,1,2:4"],
        ["--bounds", "0", "enumerate", "k3"],
        ["enumerate", "k3", "--ells", "5"],
        ["genus", "1,1,1,1", "1,2,3"],
    ],
)
def test_validation_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == "" and err.startswith("error:")


def test_invariant_violation_exits_3(capsys, monkeypatch):
    def boom(_args):
        raise InvariantViolation("broken")

    monkeypatch.setattr(cli, "cmd_fib_euler", boom)
    code, _, err = run(capsys, "fib-euler", "1", "1")
    assert code == 3 and "broken" in err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "wpstwist.cli", "resolve-hj", "3", "1"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["chain"] == [3]
