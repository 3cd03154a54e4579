import pytest

from pthermit import verify


@pytest.mark.parametrize("suite", ["operators", "massdomain", "desitter"])
def test_suite_passes(suite):
    report = verify.run_suite(suite, samples=120, seed=7)
    assert report.passed
    assert report.suite == suite
    assert report.seed == 7
    names = [c.name for c in report.checks]
    assert names == sorted(names)


def test_all_is_union():
    report = verify.run_suite("all", samples=40, seed=7)
    assert report.passed
    suites = {c.name.split(".")[0] for c in report.checks}
    assert suites == {"operators", "massdomain", "desitter"}
    total = sum(len(verify.run_suite(s, samples=40, seed=7).checks) for s in suites)
    assert len(report.checks) == total


def test_deterministic_given_seed():
    a = verify.run_suite("desitter", samples=64, seed=9)
    b = verify.run_suite("desitter", samples=64, seed=9)
    assert [(c.name, c.residual) for c in a.checks] == [(c.name, c.residual) for c in b.checks]


def test_unknown_suite_raises():
    with pytest.raises(KeyError):
        verify.run_suite("nope")


def test_report_dict_schema():
    d = verify.run_suite("massdomain", samples=40, seed=7).to_dict()
    assert set(d) == {"suite", "checks", "passed", "seed", "timestamp"}
    assert all(set(c) == {"name", "residual", "tolerance", "passed", "parameters"}
               for c in d["checks"])
    assert "T" in d["timestamp"]  # ISO-8601


def test_eqk4_note_attached():
    report = verify.run_suite("desitter", samples=24, seed=7)
    notes = {c.name: (c.parameters or {}).get("note") for c in report.checks}
    assert "sign discrepancy" in notes["factorization_eqK4"]
    assert notes["factorization_eq1"] is None
