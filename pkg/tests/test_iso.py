import pytest

from reals.iso import iso_report
from reals.verify import axioms_report, period_report, run_suite


@pytest.mark.parametrize("kind", ["dedekind", "cauchy"])
def test_all_laws_pass(kind):
    report = iso_report(kind, 100, 15, seed=7)
    assert report.passed
    for law in ("add", "mul", "order"):
        assert report.laws[law].max_deviation <= 1


def test_zero_trials_is_an_empty_pass():
    report = iso_report("dedekind", 0, 15, seed=7)
    assert report.passed and report.trials == 0
    assert all(r.max_deviation == 0 for r in report.laws.values())


def test_reports_are_deterministic():
    a = iso_report("cauchy", 20, 10, seed=3)
    b = iso_report("cauchy", 20, 10, seed=3)
    assert a.as_pairs() == b.as_pairs()


def test_unknown_kind():
    with pytest.raises(ValueError):
        iso_report("hyperreal", 1, 1, 0)


def test_axioms_suite_passes():
    report = axioms_report(200, 15, seed=1)
    assert report.passed
    assert report.laws["add_commutative"].max_deviation == 0
    assert report.laws["add_associative"].max_deviation <= 3


def test_period_suite_passes():
    assert period_report(200, seed=5).passed


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("nope", 1, 1, 0)
