from app.blueprint import Blueprint
from app.models.scenario import Outcome
from app.services.verification_service import VerificationService

verify_bp = Blueprint('verify', __name__)

DEFAULT_TRIALS = 50


@verify_bp.command('verify')
def verify(command, workspace):
    """
    Run a property suite over the scenario's field
    """
    trials = workspace.settings.get('SUITE_TRIALS', DEFAULT_TRIALS)
    reports = VerificationService.run(command.args[0], workspace.field, workspace.seed, trials)

    passed = sum(1 for report in reports if report.passed)
    return Outcome(f"{passed}/{len(reports)}", passed == len(reports), {
        'failed': [report.to_dict() for report in reports if not report.passed],
    })
