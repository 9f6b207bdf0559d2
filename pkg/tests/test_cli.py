import json
import math
import subprocess
import sys

import pytest

from circorbits import divisors, moebius
from circorbits.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count_headline(capsys):
    code, out, _ = run_cli(capsys, "count", "--n", "21", "--a", "4", "--b", "10",
                           "--length", "15")
    assert code == 0
    obj = json.loads(out)
    assert obj["total"] == "3822"
    assert [(c["k"], c["omega"], c["count"]) for c in obj["classes"]] == [
        (4, 4, "1911"),
        (11, 6, "1911"),
    ]


def test_count_json_round_trips(capsys):
    code, out, _ = run_cli(capsys, "count", "--n", "21", "--a", "4", "--b", "10",
                           "--length", "15", "--show-skipped")
    assert code == 0
    assert json.dumps(json.loads(out)) == out.strip()
    assert json.loads(out)["skipped_omegas"] == [3, 5, 7]


def test_count_plain_format(capsys):
    code, out, _ = run_cli(capsys, "count", "--n", "21", "--a", "4", "--b", "10",
                           "--length", "15", "--format", "plain", "--show-skipped")
    assert code == 0
    assert "total 3822" in out
    assert "skipped omegas: 3, 5, 7" in out


def test_count_methods_agree_on_big_class(capsys):
    args = ("count", "--n", "440", "--a", "5", "--b", "14",
            "--length", "360", "--bcount", "240")
    code, out_red, _ = run_cli(capsys, *args)
    assert code == 0
    code, out_unred, _ = run_cli(capsys, *args, "--method", "unreduced")
    assert code == 0
    red = json.loads(out_red)
    unred = json.loads(out_unred)
    assert red["count"] == unred["count"]
    expected = 440 * (math.comb(360, 240) - math.comb(120, 80)) // 360
    assert red["count"] == str(expected)
    assert sorted({t["q"] for t in unred["terms"]}) == [1, 2, 4, 5, 8, 10, 20, 40]
    assert all("q" not in t for t in red["terms"])


def test_count_total_equals_class_sum(capsys):
    code, out, _ = run_cli(capsys, "count", "--n", "13", "--a", "2", "--b", "7",
                           "--length", "12")
    assert code == 0
    obj = json.loads(out)
    assert int(obj["total"]) == sum(int(c["count"]) for c in obj["classes"])
    # the single-class command agrees with each row of the full run
    for c in obj["classes"]:
        code, out, _ = run_cli(capsys, "count", "--n", "13", "--a", "2", "--b", "7",
                               "--length", "12", "--bcount", str(c["k"]))
        assert code == 0
        assert json.loads(out) == c


def test_count_non_lattice_point_reports_zero(capsys):
    code, out, _ = run_cli(capsys, "count", "--n", "5", "--a", "1", "--b", "4",
                           "--length", "3", "--bcount", "1")
    assert code == 0
    obj = json.loads(out)
    assert obj["count"] == "0"
    assert obj["omega"] is None
    assert obj["terms"] == []


def test_count_disconnected_exits_3(capsys):
    code, _, err = run_cli(capsys, "count", "--n", "12", "--a", "2", "--b", "4",
                           "--length", "6")
    assert code == 3
    assert "disconnected" in err


def test_count_invalid_parameters_exit_2(capsys):
    code, _, err = run_cli(capsys, "count", "--n", "5", "--a", "4", "--b", "1",
                           "--length", "5")
    assert code == 2
    assert "0 < a < b < n" in err
    code, _, err = run_cli(capsys, "count", "--n", "5", "--a", "1", "--b", "4",
                           "--length", "0")
    assert code == 2
    code, _, err = run_cli(capsys, "count", "--n", "5", "--a", "1", "--b", "4",
                           "--length", "3", "--bcount", "7")
    assert code == 2


def test_count_unreduced_non_lattice_point_exits_2(capsys):
    code, _, err = run_cli(capsys, "count", "--n", "5", "--a", "1", "--b", "4",
                           "--length", "3", "--bcount", "1", "--method", "unreduced")
    assert code == 2
    assert "lattice" in err


def test_lattice_csv(capsys):
    code, out, _ = run_cli(capsys, "lattice", "--n", "21", "--a", "4", "--b", "10",
                           "--lmax", "15", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "l,k,omega"
    assert "15,4,4" in lines and "15,11,6" in lines


def test_lattice_json(capsys):
    code, out, _ = run_cli(capsys, "lattice", "--n", "7", "--a", "1", "--b", "3",
                           "--lmax", "7")
    assert code == 0
    obj = json.loads(out)
    assert obj["basis"] == {
        "a_prime": 1, "d_prime": 2, "l0": 1, "k0": 3,
        "matrix_numerators": [[3, -1], [1, 2]], "denominator": 7,
    }
    assert {"l": 3, "k": 2, "omega": 1} in obj["points"]
    assert json.dumps(obj) == out.strip()


def test_lattice_lmax_zero_exits_2(capsys):
    code, _, err = run_cli(capsys, "lattice", "--n", "7", "--a", "1", "--b", "3",
                           "--lmax", "0")
    assert code == 2


def test_lyndon_count_and_list(capsys):
    code, out, _ = run_cli(capsys, "lyndon", "count", "--length", "9", "--bcount", "3")
    assert code == 0
    assert out.strip() == "9"

    code, out, _ = run_cli(capsys, "lyndon", "list", "--length", "9", "--bcount", "3",
                           "--steps", "9,1,4")
    assert code == 0
    assert out.split() == [
        "111111444", "111114144", "111114414", "111141144", "111141414",
        "111144114", "111411144", "111411414", "111414114",
    ]


def test_lyndon_count_big_class(capsys):
    code, out, _ = run_cli(capsys, "lyndon", "count", "--length", "360", "--bcount", "240")
    assert code == 0
    expected = sum(
        moebius(m) * math.comb(360 // m, 240 // m) for m in divisors(math.gcd(360, 240))
    )
    assert expected % 360 == 0
    assert out.strip() == str(expected // 360)
    assert len(out.strip()) >= 90  # roughly C(360,240)/360, far beyond 64-bit


def test_lyndon_bad_bcount_exits_2(capsys):
    code, _, err = run_cli(capsys, "lyndon", "count", "--length", "3", "--bcount", "5")
    assert code == 2
    assert "0 <= k <= l" in err


def test_lyndon_list_budget_exits_4(capsys, monkeypatch):
    monkeypatch.setenv("CIRCORBITS_BUDGET", "100")
    code, _, err = run_cli(capsys, "lyndon", "list", "--length", "20", "--bcount", "10")
    assert code == 4
    assert "budget" in err


def test_enumerate_primitive_class(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "--n", "9", "--a", "1", "--b", "4",
                           "--length", "9", "--bcount", "3", "--primitive-only")
    assert code == 0
    lines = out.strip().splitlines()
    summary = json.loads(lines[-1])
    assert summary == {"orbits": 84, "primitive": 84, "nonprimitive": 0}
    orbit_lines = lines[:-1]
    assert len(orbit_lines) == 84
    first = json.loads(orbit_lines[0])
    assert set(first) == {"start", "steps", "l", "k", "omega", "repetition"}
    assert all(json.dumps(json.loads(line)) == line for line in lines)


def test_enumerate_empty_length(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "--n", "5", "--a", "1", "--b", "4",
                           "--length", "1")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 1
    assert json.loads(lines[0]) == {"orbits": 0, "primitive": 0, "nonprimitive": 0}


def test_enumerate_budget_exits_4(capsys):
    code, _, err = run_cli(capsys, "enumerate", "--n", "9", "--a", "1", "--b", "4",
                           "--length", "9", "--budget", "10")
    assert code == 4
    assert "budget" in err


def test_verify_ok(capsys):
    code, out, _ = run_cli(capsys, "verify", "--nmax", "5", "--lmax", "6")
    assert code == 0
    report = json.loads(out)
    assert report["passed"] is True
    assert report["mismatches"] == []
    assert json.dumps(report) == out.strip()


def test_verify_empty(capsys):
    code, out, _ = run_cli(capsys, "verify", "--nmax", "2", "--lmax", "5")
    assert code == 0
    assert json.loads(out)["graphs"] == 0


def test_graph_dot(capsys):
    code, out, _ = run_cli(capsys, "graph", "--n", "5", "--steps", "1,4")
    assert code == 0
    assert out.count("->") == 10

    code, out, _ = run_cli(capsys, "graph", "--n", "8", "--steps", "1,2,3")
    assert code == 0
    assert out.count("->") == 24

    code, out, _ = run_cli(capsys, "graph", "--n", "12", "--steps", "2,4")
    assert code == 0
    assert out.count("->") == 24


def test_graph_bad_steps_exit_2(capsys):
    for steps in ("4,1", "0,2", "1,5"):
        code, _, err = run_cli(capsys, "graph", "--n", "5", "--steps", steps)
        assert code == 2


def test_unknown_flags_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["count", "--n", "5"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "circorbits", "count", "--n", "21", "--a", "4",
         "--b", "10", "--length", "15"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["total"] == "3822"
