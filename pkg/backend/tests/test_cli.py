import json

import pytest
from click.testing import CliRunner

from app.routes.cli import cli

SQUARING = """field Q
cell X = Gm(t)
cell Y = Gm(u)
map sq : X -> Y { u = t^2 }
corr c = graph sq
"""


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def scenario(tmp_path):
    def write(body, name='scenario.cc'):
        path = tmp_path / name
        path.write_text(SQUARING + body, encoding='utf-8')
        return str(path)
    return write


def _invoke(runner, *args):
    return runner.invoke(cli, ['--config', 'testing', *args])


@pytest.mark.parametrize('body, code', [
    ('newton c expect 2\n', 0),
    ('degree c expect 5\n', 1),
    ('class d\n', 2),
    ('rho c --n 1\n', 3),
])
def test_exit_codes(runner, scenario, body, code):
    result = _invoke(runner, 'run', scenario(body))
    assert result.exit_code == code, result.output


def test_parse_errors_name_the_location(runner, scenario):
    result = _invoke(runner, 'run', scenario('class d\n'))
    assert 'unknown_identifier' in result.output
    assert 'line 6' in result.output


@pytest.mark.parametrize('image', ['t^(1/2)', '9^9^9^9*t'])
def test_bad_powers_are_parse_errors(runner, scenario, image):
    result = _invoke(runner, 'run', scenario(f'map h : X -> X {{ t = {image} }}\n'))
    assert result.exit_code == 2, result.output
    assert 'syntax_error' in result.output
    assert 'line 6' in result.output


def test_binary_file_is_a_usage_error(runner, tmp_path):
    path = tmp_path / 'binary.cc'
    path.write_bytes(b'\xff\xfe\x00cell')
    assert _invoke(runner, 'run', str(path)).exit_code == 2


def test_json_is_byte_identical(runner, scenario, tmp_path):
    path = scenario('rho c\nnewton c\nexpect-fail rho c --n 0\n')
    outputs = []
    for name in ('first.json', 'second.json'):
        out = tmp_path / name
        result = _invoke(runner, 'run', path, '--seed', '3', '--json', str(out))
        assert result.exit_code == 0, result.output
        outputs.append(out.read_bytes())
    assert outputs[0] == outputs[1]

    document = json.loads(outputs[0])
    assert document['seed'] == 3
    assert document['field'] == 'Q'
    assert [report['outcome'] for report in document['reports']] == ['value', 'value', 'pass']
    assert document['reports'][0]['value'] == 2


def test_verify_suite(runner):
    result = _invoke(runner, 'verify', 'form1', '--field', 'F7')
    assert result.exit_code == 0, result.output
    assert '3/3 checks passed over F7' in result.output


def test_verify_rejects_bad_fields(runner):
    result = _invoke(runner, 'verify', 'form1', '--field', 'F6')
    assert result.exit_code == 2


def test_verify_rejects_unknown_suites(runner):
    assert _invoke(runner, 'verify', 'nope').exit_code == 2
