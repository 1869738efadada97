import pytest

from lpgg import verify
from lpgg.reporting import CheckResult, VerificationReport


@pytest.mark.parametrize("suite", verify.SUITES)
def test_each_suite_is_green(suite):
    report = verify.run_suite(suite, n_max=6, seed=123)
    assert not report.failed, [
        c.name for c in report.checks if c.status == "fail"
    ]
    assert report.exit_code() == 0


def test_run_all_merges_and_prefixes():
    report = verify.run_suite("all", n_max=4, seed=9)
    assert report.suite == "all"
    assert any(c.name.startswith("core/") for c in report.checks)
    assert any(c.name.startswith("atlas/") for c in report.checks)
    assert report.corrected
    assert report.exit_code() == 0


def test_unknown_suite_raises():
    with pytest.raises(KeyError):
        verify.run_suite("nope")


def test_exit_code_mapping():
    report = VerificationReport("demo", 1)
    report.add("a", "claim", "pass")
    assert report.exit_code() == 0 and not report.corrected
    report.add("b", "claim", "pass-corrected")
    assert report.exit_code() == 0 and report.corrected
    report.add("c", "claim", "fail")
    assert report.exit_code() == 1
    with pytest.raises(ValueError):
        CheckResult("d", "claim", "bogus")


def test_report_json_shape():
    report = verify.run_suite("atlas", seed=5)
    payload = report.to_json()
    assert payload["suite"] == "atlas"
    assert payload["seed"] == 5
    assert {"pass", "pass-corrected", "fail", "skipped", "corrected",
            "exit_code"} <= set(payload["summary"])
    for check in payload["checks"]:
        assert {"name", "claim", "status", "details"} == set(check)
