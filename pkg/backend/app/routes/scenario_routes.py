from app.blueprint import Blueprint
from app.errors import InvalidMorphismError
from app.models.divisor import CartierDivisor
from app.models.scenario import Outcome
from app.services.cancellation_service import DEFAULT_SEARCH_CAP, CancellationService
from app.utils.rings import rename

scenario_bp = Blueprint('scenario', __name__)


def _divisor_on(ambient, workspace, name):
    """The named divisor moved positionally onto ``ambient``."""
    cell, (top, bottom) = workspace.divisor(name)
    kinds = tuple(c.multiplicative for c in cell.coordinates)
    if kinds != tuple(c.multiplicative for c in ambient.coordinates):
        raise InvalidMorphismError(f"divisor {name} lives on {cell}, not on {ambient}")
    mapping = dict(zip(cell.variables, ambient.variables))
    ring = ambient.ring()
    return CartierDivisor(ambient, rename(top, mapping, ring), rename(bottom, mapping, ring))


@scenario_bp.command('class')
def motivic_class(command, workspace):
    """
    Class of an endocorrespondence of G_m in c(pt, pt) = Z
    """
    z = workspace.correspondence(command.args[0])
    return Outcome(CancellationService.motivic_class(z))


@scenario_bp.command('rho')
def rho(command, workspace):
    """
    ρ_n of a correspondence; `--n`, `--auto` (default) or `--divisor D`
    """
    z = workspace.correspondence(command.args[0])

    if 'divisor' in command.options:
        divisor = _divisor_on(z.ambient, workspace, command.options['divisor'])
        result = CancellationService.rho_for(z, divisor)
        return Outcome(result.degree, None, {'rho': result.render()})

    cap = workspace.settings.get('RHO_SEARCH_CAP', DEFAULT_SEARCH_CAP)
    result = CancellationService.rho(z, command.options.get('n'), cap)

    # An answer whose evidence fails is reported as a failure
    passed = None if result.evidence.valid else False
    return Outcome(result.degree, passed, {
        'n': result.n,
        'evidence': result.evidence.to_dict(),
        'intersection': result.intersection.render(),
        'rho': result.correspondence.render(),
    })


@scenario_bp.command('homotopy')
def homotopy(command, workspace):
    """
    h_{n,m} with both endpoints checked against ρ_n and ρ_m
    """
    z = workspace.correspondence(command.args[0])
    result = CancellationService.homotopy(z, command.options['n'], command.options['m'])
    return Outcome(result.endpoints_match, result.endpoints_match, {
        'homotopy': result.correspondence.render(),
        'at_zero': result.at_zero.render(),
        'at_one': result.at_one.render(),
        'rho_m': result.rho_m.render(),
        'rho_n': result.rho_n.render(),
    })


@scenario_bp.command('newton')
def newton(command, workspace):
    z = workspace.correspondence(command.args[0])
    return Outcome(CancellationService.newton_bound(z))


@scenario_bp.command('degree')
def degree(command, workspace):
    z = workspace.correspondence(command.args[0])
    return Outcome(z.degree)


@scenario_bp.command('show')
def show(command, workspace):
    """
    Canonical rendering of any named object
    """
    name = command.args[0]
    scenario = workspace.scenario

    if name in scenario.correspondences:
        z = workspace.correspondence(name)
        return Outcome(z.render(), None, {'source': z.source.describe(), 'target': z.target.describe(),
                                          'degree': z.degree})
    if name in scenario.maps:
        return Outcome(workspace.morphism(name).describe())
    if name in scenario.divisors:
        cell, (top, bottom) = workspace.divisor(name)
        return Outcome(CartierDivisor(cell, top, bottom).render(), None, {'on': cell.describe()})
    return Outcome(workspace.cell(name).describe())
