import json
import math

import pytest

from cyclezeta.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


def test_count_divisors_example(capsys):
    doc = run_json(
        capsys, "count", "divisors", "--space", "p1xn", "--n", "2",
        "--q", "2", "--multidegree", "1,1",
    )
    assert doc["results"]["count"]["value"] == "15"
    assert doc["results"]["count"]["error"] == 0


def test_count_audit_flag(capsys):
    doc = run_json(
        capsys, "count", "zero-cycles", "--space", "pn", "--n", "1",
        "--q", "2", "--k", "2", "--audit",
    )
    assert doc["results"]["count"]["value"] == "7"
    assert "audit" in doc["results"]


def test_zeta_example(capsys):
    doc = run_json(
        capsys, "zeta", "--space", "pn", "--n", "1", "--q", "2",
        "--l", "0", "--kmax", "3",
    )
    assert doc["results"]["coefficients"]["value"] == ["1", "3", "7", "15"]
    assert doc["results"]["exponents"]["value"] == [0, 1, 2, 3]


def test_byte_identical_reruns(capsys):
    args = ("verify", "norms", "--samples", "3", "--seed", "7",
            "--nvars", "2", "--maxdeg", "2", "--nodes", "12")
    _, out1, _ = run_cli(capsys, *args)
    _, out2, _ = run_cli(capsys, *args)
    assert out1 == out2
    assert "elapsed" not in out1


def test_timing_flag_attaches_elapsed(capsys):
    doc = run_json(
        capsys, "--timing", "count", "top-cycles", "--space", "p1xn",
        "--n", "2", "--q", "2", "--k", "2",
    )
    assert "elapsed_seconds" in doc


def test_tsv_output(capsys):
    code, out, _ = run_cli(
        capsys, "--tsv", "count", "divisors", "--space", "p1xn", "--n", "2",
        "--q", "3", "--multidegree", "1,0",
    )
    assert code == 0
    assert out.splitlines()[0].split("\t")[:2] == ["count", "4"]


def test_exit_codes(capsys):
    code, _, err = run_cli(
        capsys, "count", "divisors", "--space", "p1xn", "--n", "2",
        "--q", "6", "--multidegree", "1,1",
    )
    assert code == 2 and "not prime" in err
    code, _, err = run_cli(
        capsys, "enum", "divisors", "--space", "p1xn", "--n", "4",
        "--q", "5", "--multidegree", "4,4,4,4",
    )
    assert code == 3
    with pytest.raises(SystemExit) as exc:
        main(["count", "nonsense", "--space", "pn", "--n", "1", "--q", "2"])
    assert exc.value.code == 1


def test_enum_outputs_forms(capsys):
    doc = run_json(
        capsys, "enum", "divisors", "--space", "pn", "--n", "1",
        "--q", "2", "--multidegree", "1",
    )
    assert doc["results"]["count"]["value"] == "3"
    assert len(doc["results"]["forms"]["value"]) == 3


def test_enum_thread_invariance(capsys):
    base = run_json(
        capsys, "enum", "divisors", "--space", "p1xn", "--n", "2",
        "--q", "2", "--multidegree", "2,1",
    )
    threaded = run_json(
        capsys, "enum", "divisors", "--space", "p1xn", "--n", "2",
        "--q", "2", "--multidegree", "2,1", "--threads", "4",
    )
    assert base["results"]["forms"] == threaded["results"]["forms"]


def test_lfun_command(capsys):
    doc = run_json(capsys, "lfun", "--n", "1", "--l", "0", "--s", "4",
                   "--pmax", "50")
    manual = 1.0
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47):
        manual *= 1 / ((1 - p ** -4.0) * (1 - p ** -3.0))
    assert doc["results"]["real"]["value"] == pytest.approx(manual, rel=1e-9)


def test_speczeta_audit(capsys):
    doc = run_json(capsys, "speczeta", "--s", "2", "--cutoff", "50", "--audit")
    expected = sum(m ** -2.0 for m in range(1, 51))
    assert doc["results"]["partial_sum"]["value"] == pytest.approx(expected)


def test_norm_command(capsys):
    doc = run_json(capsys, "norm", "--poly", "3*z1*z2 - 4", "--nodes", "16")
    assert doc["results"]["inf"]["value"] == 4.0
    assert doc["results"]["two"]["value"] == 5.0


def test_delta_command(capsys):
    doc = run_json(capsys, "delta", "--form", "X1 - Y1", "--lam", "1",
                   "--nodes", "128")
    assert doc["results"]["delta"]["value"] == pytest.approx(
        1 + 0.5 * math.log(2), abs=1e-3
    )


def test_divcount_command(capsys):
    doc = run_json(
        capsys, "divcount", "--n", "1", "--lam", "1",
        "--h", str(math.log(3)), "--nodes", "64",
    )
    assert doc["results"]["count"]["value"] == "5"
    assert doc["results"]["borderline"]["value"] == []


def test_height_commands(capsys):
    doc = run_json(capsys, "height", "ff", "--q", "2", "--coords", "1,t^2+1")
    assert doc["results"]["height"]["value"] == "2"
    doc = run_json(capsys, "height", "nv", "--coords", "1,z1", "--d", "1",
                   "--nodes", "128")
    assert doc["results"]["height"]["value"] == pytest.approx(
        1 + 0.5 * math.log(2), abs=1e-3
    )


def test_census_commands(capsys):
    doc = run_json(capsys, "census", "closed-points", "--space", "pn",
                   "--n", "1", "--q", "2", "--dmax", "2")
    assert doc["results"]["b"]["value"] == ["3", "1"]
    doc = run_json(capsys, "census", "ff-points", "--q", "2", "--n", "1",
                   "--h", "1")
    assert doc["results"]["count"]["value"] == "9"
    doc = run_json(capsys, "census", "sh-set", "--d", "1", "--a", "0.25",
                   "--h", "4", "--nodes", "48")
    assert doc["results"]["count"]["value"] == "841"
    assert doc["results"]["all_heights_ok"]["value"] is True


def test_verify_command_reports_counts(capsys):
    doc = run_json(capsys, "verify", "norms", "--samples", "4", "--seed", "3",
                   "--nvars", "1", "--maxdeg", "3", "--nodes", "64")
    assert doc["results"]["fail"]["value"] == "0"
    assert int(doc["results"]["checks"]["value"]) == 20


def test_big_integers_serialized_as_strings(capsys):
    doc = run_json(capsys, "count", "divisors", "--space", "pn", "--n", "2",
                   "--q", "5", "--k", "9")
    value = doc["results"]["count"]["value"]
    assert isinstance(value, str)
    assert int(value) > 10 ** 30
