import pytest

from app.errors import CorrCancelError
from app.schemas.report_schema import load_schema, validate_report


def _document(**report):
    entry = {'index': 0, 'command': 'newton c', 'outcome': 'value', 'value': 2, 'renderings': {}}
    entry.update(report)
    return {'scenario': 'cube.cc', 'field': 'F7', 'seed': 0, 'exit_code': 0, 'reports': [entry]}


def test_schema_file_is_draft_07():
    assert load_schema()['$schema'] == 'http://json-schema.org/draft-07/schema#'


def test_valid_document_is_returned():
    document = _document()
    assert validate_report(document) is document


def test_error_reports():
    document = _document(outcome='error', value=None,
                         error={'code': 'zero_restriction', 'message': 'f+ vanishes'})
    document['exit_code'] = 3
    assert validate_report(document) is document


@pytest.mark.parametrize('report, where', [
    ({'outcome': 'maybe'}, "['outcome']"),
    ({'outcome': 'error', 'error': {'code': 'oops', 'message': ''}}, "['error']['code']"),
    ({'value': [2, 6]}, "['value']"),
])
def test_violations_name_their_path(report, where):
    with pytest.raises(CorrCancelError) as info:
        validate_report(_document(**report))
    assert f"$['reports'][0]{where}" in info.value.message
