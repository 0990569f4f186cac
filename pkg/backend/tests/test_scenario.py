import pytest

from app.errors import DuplicateNameError, FieldMismatchError, ScenarioError, UnknownIdentifierError
from app.models.field import FieldSpec
from app.services.scenario_service import ScenarioService

SQUARING = """
field Q
cell X = Gm(t)
cell Y = Gm(u)
map sq : X -> Y { u = t^2 }
corr c = graph sq
"""


def _run(app, text, seed=0):
    return app.run(app.parse(text), seed)


class TestParse:
    def test_example(self):
        scenario = ScenarioService.parse_scenario(
            'field Q; cell X = Gm(t); corr c : X -> X = { component "u - t^2" mult 1 }; class c')
        assert scenario.field == FieldSpec.rational()
        decl = scenario.correspondences['c']
        assert decl.aliases == (('u', 't_1'),)
        assert decl.components[0][1] == 1
        (command,) = scenario.commands
        assert command.verb == 'class'
        assert command.args == ('c',)

    def test_misspelled_variable(self):
        text = 'field Q\ncell X = Gm(t)\ncell Y = Gm(u)\ncorr c : X -> Y = { component "u - tt^2" }\n'
        with pytest.raises(UnknownIdentifierError) as info:
            ScenarioService.parse_scenario(text)
        assert (info.value.line, info.value.column) == (4, 36)

    def test_duplicate_name(self):
        with pytest.raises(DuplicateNameError) as info:
            ScenarioService.parse_scenario('cell X = Gm(t); cell X = Gm(u)')
        assert (info.value.line, info.value.column) == (1, 22)

    def test_field_after_cells(self):
        with pytest.raises(FieldMismatchError):
            ScenarioService.parse_scenario('cell X = Gm(t)\nfield F7')

    def test_conflicting_fields(self):
        with pytest.raises(FieldMismatchError):
            ScenarioService.parse_scenario('field Q; field F7')

    def test_unknown_statement(self):
        with pytest.raises(ScenarioError) as info:
            ScenarioService.parse_scenario(SQUARING + 'frobnicate c\n')
        assert info.value.code == 'syntax_error'
        assert info.value.line == 7

    def test_unbalanced_braces(self):
        with pytest.raises(ScenarioError):
            ScenarioService.parse_scenario('cell X = Gm(t)\nmap f : X -> X { t = t^2 \n')

    def test_unknown_correspondence(self):
        with pytest.raises(UnknownIdentifierError):
            ScenarioService.parse_scenario(SQUARING + 'class d\n')

    def test_homotopy_needs_both_indices(self):
        with pytest.raises(ScenarioError):
            ScenarioService.parse_scenario(SQUARING + 'homotopy c --n 2\n')

    def test_comments_and_expectations(self):
        scenario = ScenarioService.parse_scenario(SQUARING + '# comment\nnewton c expect 2  # trailing\n')
        (command,) = scenario.commands
        assert command.expected == '2'
        assert not command.expect_fail

    def test_default_field(self):
        scenario = ScenarioService.parse_scenario('cell X = A1(x)', FieldSpec.prime(7))
        assert scenario.cells['X'].cell.field == FieldSpec.prime(7)


class TestRun:
    def test_class_of_a_cube(self, app):
        text = 'cell X = Gm(t); cell Y = Gm(u); map f : X -> Y { u = t^3 }; corr c = graph f; class c'
        (report,) = _run(app, text)
        assert report.outcome == 'value'
        assert report.value == 3

    def test_expectations(self, app):
        reports = _run(app, SQUARING + 'newton c expect 2\ndegree c expect 5\n')
        assert [report.outcome for report in reports] == ['pass', 'fail']
        assert ScenarioService.exit_code(reports) == 1

    def test_must_fail_below_the_bound(self, app):
        (report,) = _run(app, SQUARING + 'expect-fail rho c --n 0\n')
        assert report.outcome == 'pass'

    def test_rho_below_the_bound_fails(self, app):
        (report,) = _run(app, SQUARING + 'rho c --n 0\n')
        assert report.outcome == 'fail'
        assert report.value == 0
        assert report.renderings['evidence']['boundary'] is False

    def test_errors_become_reports(self, app):
        reports = _run(app, SQUARING + 'rho c --n 1\nexpect-fail rho c --n 1\nclass c\n')
        assert [report.outcome for report in reports] == ['error', 'pass', 'value']
        assert reports[0].error['code'] == 'zero_restriction'
        assert reports[1].value == 'zero_restriction'
        assert reports[2].value == 2
        assert ScenarioService.exit_code(reports) == 3

    def test_divisor_option(self, app):
        text = SQUARING + 'cell P = Gm(a) * Gm(b)\ndivisor g on P = (a^3 - 1)/(a^3 - b)\nrho c --divisor g\n'
        (report,) = _run(app, text)
        assert report.outcome == 'value'
        assert report.value == 2

    def test_aliased_components(self, app):
        text = 'cell X = Gm(t); corr c : X -> X = { component "s - t^3" mult 2 }; degree c; class c'
        reports = _run(app, text)
        assert [report.value for report in reports] == [2, 6]

    def test_show(self, app):
        reports = _run(app, SQUARING + 'show sq\nshow X\n')
        assert reports[1].value == 'Gm(t)'
        assert reports[0].value.startswith('Gm(t) -> Gm(u)')

    def test_reports_are_deterministic(self, app):
        text = SQUARING + 'rho c\nnewton c\nshow c\n'
        first = [report.to_dict() for report in _run(app, text)]
        second = [report.to_dict() for report in _run(app, text)]
        assert first == second
        assert 'elapsed' not in first[0]

    def test_timing_when_enabled(self, app):
        app.config['REPORT_TIMING'] = True
        (report,) = _run(app, SQUARING + 'newton c\n')
        assert report.elapsed is not None
        assert 'elapsed' in report.to_dict()

    @pytest.mark.slow
    def test_verify_str_over_f7(self, app):
        (report,) = _run(app, 'field F7\nverify str\n')
        assert report.outcome == 'pass', report.renderings
