import json
import os
from pathlib import Path

import click

from app import create_app
from app.config import config_by_name
from app.errors import CorrCancelError, ScenarioError
from app.models.field import FieldSpec
from app.schemas.report_schema import validate_report
from app.services.scenario_service import ScenarioService
from app.services.verification_service import VerificationService

USAGE_ERROR = 2


def _summary(report):
    line = f"[{report.index}] {report.outcome.upper():5} {report.command}"
    if report.value is not None:
        line += f" -> {report.value}"
    if report.error:
        line += f" ({report.error['code']}: {report.error['message']})"
    return line


@click.group()
@click.option('--config', 'config_name', default=lambda: os.getenv('CORRCANCEL_CONFIG', 'default'),
              type=click.Choice(sorted(config_by_name)), help='Configuration profile')
@click.pass_context
def cli(ctx, config_name):
    """
    corrcancel - finite correspondences, Cartier divisors and the cancellation operator.
    """
    ctx.obj = create_app(config_name)


@cli.command()
@click.argument('scenario_file', type=click.Path(exists=True, dir_okay=False))
@click.option('--seed', type=int, default=None, help='Seed for randomized suites')
@click.option('--json', 'json_out', type=click.Path(dir_okay=False), default=None,
              help='Write the reports as JSON')
@click.pass_context
def run(ctx, scenario_file, seed, json_out):
    """
    Run every command of a scenario file.
    """
    app = ctx.obj
    try:
        text = Path(scenario_file).read_text(encoding='utf-8')
        scenario = app.parse(text)
    except UnicodeDecodeError as e:
        click.echo(f"{scenario_file}: not UTF-8 text ({e.reason})", err=True)
        ctx.exit(USAGE_ERROR)
    except ScenarioError as e:
        click.echo(f"{scenario_file}: {e.code}: {e}", err=True)
        ctx.exit(e.exit_code)
    except Exception as e:
        click.echo(f"{scenario_file}: {CorrCancelError.code}: {type(e).__name__}: {e}", err=True)
        ctx.exit(CorrCancelError.exit_code)

    seed = app.config['SEED'] if seed is None else seed
    reports = app.run(scenario, seed)
    for report in reports:
        click.echo(_summary(report))
    code = ScenarioService.exit_code(reports)

    if json_out:
        try:
            document = validate_report({
                'scenario': Path(scenario_file).name,
                'field': scenario.field.name,
                'seed': seed,
                'exit_code': code,
                'reports': [report.to_dict() for report in reports],
            })
        except CorrCancelError as e:
            click.echo(f"{json_out}: {e.code}: {e}", err=True)
            ctx.exit(e.exit_code)
        Path(json_out).write_text(json.dumps(document, indent=2, sort_keys=True, ensure_ascii=False) + '\n',
                                  encoding='utf-8')
    ctx.exit(code)


@cli.command()
@click.argument('suite', type=click.Choice(VerificationService.suite_names()))
@click.option('--field', 'field_name', default=None, help='Q or F<p> (default: configured field)')
@click.option('--seed', type=int, default=None)
@click.option('--trials', type=int, default=None, help='Randomized trials per suite')
@click.pass_context
def verify(ctx, suite, field_name, seed, trials):
    """
    Run a property suite, or all of them.
    """
    app = ctx.obj
    try:
        field = FieldSpec.from_name(field_name or app.config['FIELD'])
    except ValueError as e:
        raise click.BadParameter(str(e), param_hint='--field')

    seed = app.config['SEED'] if seed is None else seed
    trials = app.config['SUITE_TRIALS'] if trials is None else trials
    try:
        reports = VerificationService.run(suite, field, seed, trials)
    except CorrCancelError as e:
        click.echo(f"{suite}: {e.code}: {e}", err=True)
        ctx.exit(e.exit_code)
    except Exception as e:
        click.echo(f"{suite}: {CorrCancelError.code}: {type(e).__name__}: {e}", err=True)
        ctx.exit(CorrCancelError.exit_code)

    failed = 0
    for report in reports:
        status = 'PASS' if report.passed else 'FAIL'
        click.echo(f"{status} {report.name}: {report.lhs} | {report.rhs}")
        failed += not report.passed
    click.echo(f"{len(reports) - failed}/{len(reports)} checks passed over {field}")
    ctx.exit(1 if failed else 0)
