import pytest

from app.services.divisor_service import DivisorService
from app.services.verification_service import SUITES, VerificationService

LIGHT = ['form1', 'pushfor', 'eqp1', 'eqcorr', 'missing']
HEAVY = ['str', 'classes', 'bound', 'associativity', 'functor', 'degree']


def _failures(reports):
    return [report.to_dict() for report in reports if not report.passed]


def test_suite_names():
    assert set(VerificationService.suite_names()) == set(SUITES) | {'all'}
    assert set(LIGHT + HEAVY) == set(SUITES)


def test_unknown_suite(field_q):
    with pytest.raises(KeyError):
        VerificationService.run('nope', field_q)


@pytest.mark.parametrize('name', LIGHT)
def test_light_suites(name, field):
    reports = VerificationService.run(name, field)
    assert reports
    assert not _failures(reports)


@pytest.mark.slow
@pytest.mark.parametrize('name', HEAVY)
def test_heavy_suites(name, field):
    reports = VerificationService.run(name, field, seed=7, trials=3)
    assert reports
    assert not _failures(reports)


def test_reports_serialize(field_q):
    (report, *_) = VerificationService.run('pushfor', field_q)
    payload = report.to_dict()
    assert payload['name'] == 'pushfor'
    assert payload['passed'] is True
    assert payload['details'] == {'exponent': 2}


def test_unexpected_exceptions_become_failed_reports(field_q, monkeypatch):
    def broken(*args):
        raise ValueError("cannot move t into ring ('u',)")

    monkeypatch.setattr(DivisorService, 'verify_eqp', broken)
    reports = VerificationService.run('pushfor', field_q)
    assert [report.passed for report in reports] == [False, False]
    assert all(report.lhs == 'internal' for report in reports)
    assert 'ValueError' in reports[0].details['message']
