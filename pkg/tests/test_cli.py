"""Command-line behaviour: exit codes, report shape and determinism."""

import json

from cli.main import (
    EXIT_FAILURE,
    EXIT_INCONCLUSIVE,
    EXIT_NOT_EQUIVALENT,
    EXIT_OK,
    EXIT_PARSE,
    main,
)
from expr.sampling import ZeroTestResult

FAST = ["--samples", "3", "--seed", "5"]


def _run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def _json(capsys, *argv):
    code, out = _run(capsys, *argv)
    return code, json.loads(out)


def test_validate_builtin(capsys):
    code, report = _json(capsys, "validate", "--surface", "mlc", *FAST)
    assert code == EXIT_OK
    assert report["schema_version"] == "1.0"
    assert report["status"] == "validated"
    assert report["job"]["seed"] == 5
    assert "timing" not in report


def test_rejected_surface_exits_with_failure(capsys):
    code, report = _json(capsys, "validate", "--surface", "z1*zb1 + z2*zb2", *FAST)
    assert code == EXIT_FAILURE
    assert report["status"] == "rejected"


def test_parse_error_reports_the_position(capsys):
    code, report = _json(capsys, "validate", "--surface", "z1*(", *FAST)
    assert code == EXIT_PARSE
    assert report["body"]["error"]["kind"] == "ParseError"
    assert report["body"]["error"]["position"] == 4


def test_unknown_builtin(capsys):
    code, report = _json(capsys, "validate", "--surface", "builtin:nope", *FAST)
    assert code == EXIT_PARSE
    assert "nope" in report["body"]["error"]["message"]


def test_classify_exit_codes(capsys):
    code, report = _json(capsys, "classify", "--surface", "tube-quartic", *FAST)
    assert code == EXIT_NOT_EQUIVALENT
    assert report["body"]["verdict"]["verdict"] == "NotModelEquivalent"

    code, report = _json(capsys, "classify", "--surface", "mlc", "--perturb-i0", "z1", *FAST)
    assert code == EXIT_NOT_EQUIVALENT
    assert report["body"]["verdict"]["invariant"] == "I0"
    assert report["job"]["perturb_i0"] == "z1"


def test_classify_inconclusive(capsys, monkeypatch):
    def exhausted(named, spec_=None, variables=()):
        return {name: ZeroTestResult("exhausted", 0, 99) for name in named}

    monkeypatch.setattr("invariants.verdicts.zero_test_many", exhausted)
    code, report = _json(capsys, "classify", "--surface", "mlc", *FAST)
    assert code == EXIT_INCONCLUSIVE
    assert report["status"] == "Inconclusive"


def test_invariants_at_given_points(capsys, tmp_path):
    points = tmp_path / "points.json"
    points.write_text(json.dumps([{"z1": "1/2+i/3", "z2": "1/4"}, {"z1": "1", "z2": "1"}]))
    code, report = _json(capsys, "invariants", "--surface", "mlc", "--points", str(points), *FAST)
    assert code == EXIT_OK
    good, bad = report["body"]["points"]
    assert good["I0"] == "0" and good["V0"] == "0"
    assert "division by zero" in bad["error"]
    assert report["body"]["v0_normalization"]["asserted"] == "cbar2"


def test_verify_is_deterministic(capsys):
    first = _run(capsys, "verify", "--suite", "liealg", *FAST)
    second = _run(capsys, "verify", "--suite", "liealg", *FAST)
    assert first == second
    assert first[0] == EXIT_OK


def test_seed_comes_from_the_environment(capsys, monkeypatch):
    monkeypatch.setenv("CRCARTAN_SEED", "17")
    code, report = _json(capsys, "validate", "--surface", "mlc", "--samples", "3")
    assert code == EXIT_OK
    assert report["job"]["seed"] == 17


def test_text_output(capsys):
    code, out = _run(capsys, "classify", "--surface", "mlc", "--output", "text", "--timing", *FAST)
    assert code == EXIT_OK
    assert "ModelEquivalent" in out
    assert "elapsed" in out
