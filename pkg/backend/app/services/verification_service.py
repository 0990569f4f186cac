import logging

from ..errors import CorrCancelError, ImproperIntersectionError, NotFiniteError
from ..models.cell import Cell, CellMorphism
from ..models.correspondence import Correspondence
from ..models.divisor import CartierDivisor
from ..models.results import VerificationReport
from .cancellation_service import CancellationService
from .correspondence_service import CorrespondenceService
from .cycle_service import CycleService
from .divisor_service import DivisorService
from .generator_service import GeneratorService
from .space_service import SpaceService

logger = logging.getLogger(__name__)

ALL = 'all'
STR_INDICES = range(0, 5)
CLASS_PAIRS = 3
EQP1_POINTS = {'Q': (2, -1, 3)}
DEFAULT_EQP1_POINTS = (2, 3)


def _checked(name, action, **details):
    """Run one check; a computation error is a failed report, not an exception."""
    try:
        return action()
    except CorrCancelError as exc:
        logger.error(f"Error running {name}: {str(exc)}")
        return VerificationReport(name, False, exc.code, '', dict(details, message=exc.message))
    except Exception as exc:
        logger.exception("unexpected failure in %s", name)
        return VerificationReport(name, False, CorrCancelError.code, '',
                                  dict(details, message=f"{type(exc).__name__}: {exc}"))


def _value(name, actual, expected, **details):
    return VerificationReport(name, actual == expected, str(actual), str(expected), details)


def _must_fail(name, error, action, **details):
    try:
        outcome = action()
    except error as exc:
        return VerificationReport(name, True, exc.code, error.code, details)
    except CorrCancelError as exc:
        return VerificationReport(name, False, exc.code, error.code, details)
    return VerificationReport(name, False, str(outcome), error.code, details)


def _gm(field, name):
    return Cell.of(field, (name, 'Gm'))


def _power_graph(field, exponent, source='t', target='u'):
    m = GeneratorService.power_map(_gm(field, source), _gm(field, target), field.scalar(1), exponent)
    return CorrespondenceService.graph(m)


def _squaring_transpose(field):
    cover = GeneratorService.power_map(_gm(field, 'u'), _gm(field, 't'), field.scalar(1), 2)
    return CorrespondenceService.transpose(cover)


def _line(cell):
    """[cell] as a cycle over the point."""
    return CycleService.cycl_of_ideal(cell.ideal(), cell, (), cell.dimension)


class VerificationService:
    """Named property suites; each returns a list of VerificationReport."""

    @staticmethod
    def suite_names():
        return tuple(SUITES) + (ALL,)

    @staticmethod
    def run(name, field, seed=0, trials=50):
        """
        Run a suite by name

        Raises:
            KeyError: unknown suite
        """
        if name == ALL:
            reports = []
            for key in SUITES:
                reports.extend(VerificationService.run(key, field, seed, trials))
            return reports
        suite = SUITES[name]
        logger.info("running suite %s over %s (seed %d, %d trials)", name, field, seed, trials)
        return suite(field, seed, trials)

    @staticmethod
    def str_suite(field, seed, trials):
        pt = Cell.point(field)
        gm = _gm(field, 'x')
        reports = []
        for cell in (pt, gm):
            for n in STR_INDICES:
                reports.append(_checked('unit', lambda: CancellationService.verify_unit(cell, n),
                                        x=cell.describe(), n=n))
        ambient, _ = CorrespondenceService.ambient_for(pt, gm)
        cubic_root = ambient.ring().gens[0] ** 2 + ambient.ring().gens[0] + 1
        transfer = Correspondence(pt, gm, CycleService.cycl_of_ideal(
            ambient.ideal([cubic_root]), ambient, (), 0))
        squaring = GeneratorService.power_map(gm, _gm(field, 'y'), field.scalar(1), 2)
        identity = CorrespondenceService.identity(pt)
        for w in (identity, 2 * identity, CorrespondenceService.graph(squaring), transfer):
            for n in STR_INDICES[1:]:
                reports.append(_checked('str', lambda: CancellationService.verify_str(w, n),
                                        w=w.render(), n=n))
        return reports

    @staticmethod
    def classes_suite(field, seed, trials):
        cases = [(f"graph x^{m}", _power_graph(field, m), m) for m in (1, 2, 3, 4)]
        cases.append(("graph x^-1", _power_graph(field, -1), -1))
        cases.append(("transpose of squaring", _squaring_transpose(field), 1))
        reports = []
        for label, z, expected in cases:
            reports.append(_checked('classes', lambda: _value(
                'classes', CancellationService.motivic_class(z), expected, z=label), z=label))

        generator = GeneratorService(field, seed)
        for _ in range(min(trials, CLASS_PAIRS)):
            f, g = generator.basic(), generator.basic()

            def multiplicative():
                composite = CancellationService.motivic_class(CorrespondenceService.compose(g, f))
                product = CancellationService.motivic_class(f) * CancellationService.motivic_class(g)
                return _value('classes', composite, product, f=f.render(), g=g.render())

            reports.append(_checked('classes', multiplicative, f=f.render(), g=g.render()))
        return reports

    @staticmethod
    def bound_suite(field, seed, trials):
        z = _power_graph(field, 2)
        rho = CancellationService.rho

        def below_bound():
            low, high = rho(z, 0).correspondence, rho(z, 2).correspondence
            return VerificationReport('bound', low.degree == 0 and high.degree == 2 and low != high,
                                      str(low.degree), str(high.degree), {'n': '0 vs 2'})

        def homotopy():
            h = CancellationService.homotopy(z, 2, 3)
            passed = h.endpoints_match and h.at_zero.degree == 2 and h.at_one.degree == 2
            return VerificationReport('bound', passed, str(h.at_one.degree), str(h.at_zero.degree),
                                      {'homotopy': '2, 3'})

        return [
            _checked('bound', lambda: _value('bound', CancellationService.newton_bound(z), 2)),
            _must_fail('bound', ImproperIntersectionError, lambda: rho(z, 1), n=1),
            _checked('bound', below_bound),
            _must_fail('bound', NotFiniteError, lambda: CancellationService.homotopy(z, 0, 2),
                       homotopy='0, 2'),
            _checked('bound', homotopy),
        ]

    @staticmethod
    def form1_suite(field, seed, trials):
        plane = Cell.of(field, ('x', 'A1'), ('y', 'A1'))
        x, y = plane.ring().gens
        cases = (
            (x * y, x - y, 2),
            (x ** 2 * y, x - y, 3),
            (y ** 2, y - x ** 2, 4),
        )
        reports = []
        for generator, function, length in cases:
            ideal = plane.ideal([generator])

            def both_ways():
                report = DivisorService.verify_form1(ideal, function, plane, 1)
                direct = CycleService.cycl_of_ideal(ideal.with_generators([function]), plane, (), 0)
                counted = CycleService.degree_over_base(direct)
                return VerificationReport('form1', report.passed and counted == length,
                                          report.lhs, report.rhs, {'length': counted})

            reports.append(_checked('form1', both_ways, ideal=str(generator)))
        return reports

    @staticmethod
    def pushfor_suite(field, seed, trials):
        source, target = _gm(field, 't'), _gm(field, 'u')
        divisor = CartierDivisor.of(target, target.ring().gens[0] - 1)
        reports = []
        for exponent in (2, 3):
            f = GeneratorService.power_map(source, target, field.scalar(1), exponent)

            def both_sides():
                report = DivisorService.verify_eqp(f, _line(source), divisor)
                expected = exponent * CycleService.point_cycle(target, (1,))
                lhs = CycleService.push_forward(DivisorService.intersect(
                    _line(source), DivisorService.pullback(divisor, f)), f, ())
                return VerificationReport('pushfor', report.passed and lhs == expected,
                                          report.lhs, report.rhs, {'exponent': exponent})

            reports.append(_checked('pushfor', both_sides, exponent=exponent))
        return reports

    @staticmethod
    def eqp1_suite(field, seed, trials):
        ambient = Cell.of(field, ('s', 'Gm'), ('t', 'Gm'), ('u', 'Gm'))
        s, t, u = ambient.ring().gens
        family = CycleService.cycl_of_ideal(ambient.ideal([u - s * t]), ambient, ('s',), 1)
        divisor = CartierDivisor.of(ambient, u - 1)
        return [
            _checked('eqp1', lambda: DivisorService.verify_eqp1(family, divisor, (value,)), s=value)
            for value in EQP1_POINTS.get(field.name, DEFAULT_EQP1_POINTS)
        ]

    @staticmethod
    def eqcorr_suite(field, seed, trials):
        base = _gm(field, 't')
        ambient = Cell.of(field, ('t', 'Gm'), ('s', 'Gm'), ('u', 'Gm'))
        t, s, u = ambient.ring().gens
        cases = (
            (u - s * t, 2 * CycleService.point_cycle(base, (3,)), u - 3),
            (u ** 2 - t * s, _line(base), u - 2),
        )
        reports = []
        for relation, z, cut in cases:
            def instance():
                w = CycleService.cycl_of_ideal(ambient.ideal([relation]), ambient, ('t',), 1)
                return DivisorService.verify_eqcorr(w, z, CartierDivisor.of(ambient, cut))

            reports.append(_checked('eqcorr', instance, w=str(relation)))
        return reports

    @staticmethod
    def associativity_suite(field, seed, trials):
        generator = GeneratorService(field, seed)
        reports = []
        for index in range(trials):
            f, g, h = generator.triple()
            reports.append(_checked('associativity', lambda: CorrespondenceService.verify_associativity(
                f, g, h), trial=index))
        for index in range(trials):
            f = generator.element()
            reports.append(_checked('identity', lambda: CorrespondenceService.verify_identity_laws(f),
                                    trial=index))
        return reports

    @staticmethod
    def functor_suite(field, seed, trials):
        generator = GeneratorService(field, seed)
        reports = []
        for index in range(trials):
            f, g = generator.morphism_pair()
            reports.append(_checked('functor', lambda: CorrespondenceService.verify_graph_functor(f, g),
                                    trial=index))

        pt = Cell.point(field)
        point = CorrespondenceService.identity(pt)
        squaring = _power_graph(field, 2)
        gm, gm_x = _gm(field, 'f'), _gm(field, 'x')
        doubled = CorrespondenceService.tensor(CorrespondenceService.identity(gm), 2 * point)
        identities = CorrespondenceService.tensor(CorrespondenceService.identity(gm),
                                                  CorrespondenceService.identity(gm_x))
        x_squared = CorrespondenceService.graph(
            GeneratorService.power_map(_gm(field, 'w'), gm_x, field.scalar(1), 2))
        first = ((doubled, point, 1), (squaring, 3 * point, 2), (identities, x_squared, 1))
        for z, w, n in first:
            reports.append(_checked('functor1', lambda: CancellationService.verify_functor1(z, w, n),
                                    z=z.render(), n=n))

        cube = GeneratorService.power_map(gm_x, _gm(field, 'y'), field.scalar(1), 3)
        unit = CancellationService._unit_on(gm_x)
        third = ((squaring, SpaceService.identity(pt), 2), (squaring, cube, 2), (unit, cube, 1))
        for z, f, n in third:
            reports.append(_checked('functor3', lambda: CancellationService.verify_functor3(z, f, n),
                                    z=z.render(), n=n))
        return reports

    @staticmethod
    def degree_suite(field, seed, trials):
        generator = GeneratorService(field, seed)
        reports = []
        for index in range(trials):
            f, g = generator.element(), generator.element()

            def multiplicative():
                composite = CorrespondenceService.compose(g, f)
                return _value('degree', composite.degree, f.degree * g.degree, trial=index)

            reports.append(_checked('degree', multiplicative, trial=index))
        for index in range(trials):
            z, p = generator.element(), generator.cover()

            def preserved():
                pushed = CycleService.push_forward(z.cycle, p, ('t',))
                return _value('degree', CycleService.degree_over_base(pushed),
                              CycleService.degree_over_base(z.cycle), trial=index)

            reports.append(_checked('degree', preserved, trial=index))
        return reports

    @staticmethod
    def missing_suite(field, seed, trials):
        ambient = Cell.of(field, ('t', 'Gm'), ('u', 'Gm'))
        base = _gm(field, 't')
        target = Cell.of(field, ('t', 'Gm'), ('v', 'Gm'))
        t, u = ambient.ring().gens
        y = CycleService.cycl_of_ideal(ambient.ideal([u ** 2 - t]), ambient, ('t',), 0)
        p = CellMorphism(ambient, target, (ambient.gen('t'), ambient.gen('u') ** 3))
        reports = []
        for z in (3 * CycleService.point_cycle(base, (4,)), _line(base)):
            reports.append(_checked('missing', lambda: CorrespondenceService.verify_missing(p, y, z),
                                    z=z.render()))
        return reports


SUITES = {
    'str': VerificationService.str_suite,
    'classes': VerificationService.classes_suite,
    'bound': VerificationService.bound_suite,
    'form1': VerificationService.form1_suite,
    'pushfor': VerificationService.pushfor_suite,
    'eqp1': VerificationService.eqp1_suite,
    'eqcorr': VerificationService.eqcorr_suite,
    'associativity': VerificationService.associativity_suite,
    'functor': VerificationService.functor_suite,
    'degree': VerificationService.degree_suite,
    'missing': VerificationService.missing_suite,
}
