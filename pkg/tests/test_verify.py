import pytest

from isocover.verify import SUITES, run_suite


@pytest.mark.parametrize("name", sorted(SUITES))
def test_small_runs_pass(name):
    report = run_suite(name, 8, seed=11)
    assert report.ok, report.failures
    assert report.trials == 8


@pytest.mark.parametrize("name", ["r0", "words", "fricke"])
def test_reports_are_deterministic(name):
    a = run_suite(name, 5, seed=3).to_json(with_elapsed=False)
    b = run_suite(name, 5, seed=3).to_json(with_elapsed=False)
    assert a == b


def test_exact_fricke_backend():
    assert run_suite("fricke", 20, seed=0, backend="exact").ok


def test_trials_must_be_positive():
    with pytest.raises(ValueError):
        run_suite("r0", 0)


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("nope", 1)
