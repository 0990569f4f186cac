import logging
from fractions import Fraction
from math import floor

from ..errors import (CorrCancelError, ImproperIntersectionError, InvalidMorphismError,
                      NegativeIndexError, NotFiniteError, SearchExhaustedError)
from ..models.cell import Cell, CellMorphism, Coordinate
from ..models.correspondence import Correspondence
from ..models.divisor import CartierDivisor, GnDivisor
from ..models.results import HomotopyResult, RhoEvidence, RhoResult, VerificationReport
from ..utils.rings import coefficients_in, polynomial_ring
from .algebra_service import AlgebraService
from .correspondence_service import CorrespondenceService
from .cycle_service import CycleService
from .divisor_service import DivisorService
from .space_service import fresh_name

logger = logging.getLogger(__name__)

DEFAULT_SEARCH_CAP = 64
HOMOTOPY_PARAMETER = 't'


def _frame(z):
    """Distinguished coordinates f1, f2 and the X, Y parts of Z: G_m X -> G_m Y."""
    if not z.source.coordinates or not z.target.coordinates:
        raise InvalidMorphismError("source and target must start with a G_m factor")
    if not (z.source.coordinates[0].multiplicative and z.target.coordinates[0].multiplicative):
        raise InvalidMorphismError("the first source and target coordinates must be multiplicative")
    f1 = z.source_names[0]
    f2 = z.target_names[0]
    x = z.source.subcell(z.source.variables[1:])
    x_names = z.source_names[1:]
    y = Cell(tuple(Coordinate(name, c.multiplicative) for name, c in
                   zip(z.target_names[1:], z.target.coordinates[1:])), z.source.field)
    return f1, f2, x, x_names, y


def _lower_hull(points):
    hull = []
    for point in sorted(points):
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (y2 - y1) * (point[0] - x1) >= (point[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(point)
    return hull


def _slopes(points):
    hull = _lower_hull(points)
    return [Fraction(y2 - y1, x2 - x1) for (x1, y1), (x2, y2) in zip(hull, hull[1:])]


class CancellationService:
    """The cancellation operator ρ_n on correspondences G_m X -> G_m Y."""

    @staticmethod
    def gn(n, ambient, f1, f2):
        """
        g_n = (f1^(n+1) - 1)/(f1^(n+1) - f2) on ``ambient``

        Raises:
            NegativeIndexError: n < 0
        """
        if n < 0:
            raise NegativeIndexError("n must be nonnegative", n=n)
        ring = ambient.ring()
        x = ring.gens[ambient.index(f1)]
        y = ring.gens[ambient.index(f2)]
        power = x ** (n + 1)
        return GnDivisor(n, f1, f2, CartierDivisor(ambient, power - 1, power - y))

    @staticmethod
    def _pipeline(z, divisor, base_names):
        rebased = CycleService.rebase(z.cycle, base_names)
        return rebased, DivisorService.intersect(rebased, divisor)

    @staticmethod
    def _project(z, intersection, x, x_names, y):
        """Push the intersection along G_m X × G_m Y -> X × Y."""
        renamed_x = Cell(tuple(Coordinate(name, c.multiplicative)
                               for name, c in zip(x_names, x.coordinates)), x.field)
        ambient, _ = CorrespondenceService.ambient_for(renamed_x, y)
        images = tuple(intersection.ambient.gen(name) for name in x_names + y.variables)
        push = CellMorphism(intersection.ambient, ambient, images)
        cycle = CycleService.push_forward(intersection, push, ambient.variables[:len(x_names)])
        return Correspondence(renamed_x, y, cycle)

    @staticmethod
    def rho_valid(z, n):
        """
        Evidence for ρ_n(Z): (a) proper intersection with D(g_n) over X,
        (b) finiteness of the intersection over X, (c) the boundary criterion
        when X and Y are points (None otherwise)
        """
        f1, f2, x, x_names, y = _frame(z)
        divisor = CancellationService.gn(n, z.ambient, f1, f2).divisor
        rebased = CycleService.rebase(z.cycle, x_names)
        proper = DivisorService.intersects_properly(rebased, divisor)
        finite = False
        if proper:
            try:
                intersection = DivisorService.intersect(rebased, divisor)
                finite = all(c.finite for c in intersection.components)
            except ImproperIntersectionError:
                proper = False
        boundary = None
        if x.is_point and y.is_point:
            boundary = n >= CancellationService.newton_bound(z)
        return RhoEvidence(n, proper, finite, boundary)

    @staticmethod
    def newton_bound(z):
        """
        Smallest N such that every n >= N passes the boundary criterion

        For the generator q(f1, f2) = Σ a_j(f1) f2^j of each component the
        slopes of the Newton polygons at f1 = 0 and f1 = ∞ bound the ratio
        v(f2)/v(f1) over the places at the boundary; n + 1 must exceed it.

        Raises:
            NotFiniteError: a component is not finite over the source
        """
        f1, f2, x, _, y = _frame(z)
        if not (x.is_point and y.is_point):
            raise InvalidMorphismError("the boundary bound is computed for X = Y = pt only")
        bound = 0
        line = polynomial_ring(z.ambient.field.domain, (f1,))
        for component in z.cycle.components:
            if not component.finite:
                raise NotFiniteError("component is not finite over the source", ideal=component.ideal)
            relation = AlgebraService.minimal_polynomial(component.ideal, f2, (f1,))
            coefficients = coefficients_in(relation, f2, line)
            at_zero = [(j, min(m[0] for m in a.itermonoms())) for j, a in coefficients.items() if a]
            at_infinity = [(j, -a.degree()) for j, a in coefficients.items() if a]
            zero_slopes = _slopes(at_zero)
            infinity_slopes = _slopes(at_infinity)
            if zero_slopes:
                bound = max(bound, floor(-min(zero_slopes)))
            if infinity_slopes:
                bound = max(bound, floor(max(infinity_slopes)))
        return bound

    @staticmethod
    def rho(z, n=None, cap=DEFAULT_SEARCH_CAP):
        """
        ρ_n(Z): intersect Z (over X) with D(g_n) and project to X × Y

        Args:
            z: Correspondence G_m X -> G_m Y
            n: index, or None to search for a certified one
            cap: largest n tried by the search

        Returns:
            RhoResult

        Raises:
            ImproperIntersectionError, NotFiniteError, SearchExhaustedError
        """
        if n is None:
            n = CancellationService.search(z, cap)
        f1, f2, x, x_names, y = _frame(z)
        gn = CancellationService.gn(n, z.ambient, f1, f2)
        _, intersection = CancellationService._pipeline(z, gn.divisor, x_names)
        if not all(c.finite for c in intersection.components):
            raise NotFiniteError("intersection is not finite over X", n=n)
        boundary = None
        if x.is_point and y.is_point:
            boundary = n >= CancellationService.newton_bound(z)
        evidence = RhoEvidence(n, True, True, boundary)
        correspondence = CancellationService._project(z, intersection, x, x_names, y)
        logger.debug("rho_%d has degree %d", n, correspondence.degree)
        return RhoResult(n, evidence, intersection, correspondence)

    @staticmethod
    def search(z, cap=DEFAULT_SEARCH_CAP):
        """
        Smallest certified n: from the boundary bound upward when X = Y = pt,
        otherwise the first n with (a), (b) and a certified homotopy to n + 1
        """
        _, _, x, _, y = _frame(z)
        over_point = x.is_point and y.is_point
        start = CancellationService.newton_bound(z) if over_point else 0
        for n in range(start, cap + 1):
            try:
                evidence = CancellationService.rho_valid(z, n)
                if not (evidence.proper and evidence.finite):
                    continue
                if over_point:
                    return n
                CancellationService.homotopy(z, n, n + 1)
                return n
            except CorrCancelError as exc:
                logger.debug("n=%d rejected: %s", n, exc)
        logger.error(f"Error searching for n: nothing certified up to {cap}")
        raise SearchExhaustedError("no certified n below the cap", cap=cap)

    @staticmethod
    def rho_for(z, divisor):
        """
        ρ_g(Z) for an arbitrary divisor g on the ambient of Z meeting it
        properly with finite intersection over X

        Returns:
            Correspondence X -> Y
        """
        _, _, x, x_names, y = _frame(z)
        _, intersection = CancellationService._pipeline(z, divisor, x_names)
        if not all(c.finite for c in intersection.components):
            raise NotFiniteError("intersection is not finite over X")
        return CancellationService._project(z, intersection, x, x_names, y)

    @staticmethod
    def homotopy(z, n, m):
        """
        h_{n,m}: X × A^1 -> Y, which is ρ_g of Z × A^1 for g = t·g_n + (1 − t)·g_m

        The endpoints are recomputed by evaluation at t = 0 (ρ_m side) and
        t = 1 (ρ_n side).

        Raises:
            NotFiniteError: the intersection is not finite over X × A^1
            ImproperIntersectionError
        """
        f1, f2, _, _, _ = _frame(z)
        t = fresh_name(HOMOTOPY_PARAMETER, set(z.ambient.variables))
        source = z.ambient.subcell(z.source_names)
        family_source = Cell(source.coordinates + (Coordinate(t, False),), source.field)
        along = CellMorphism(family_source, source,
                             tuple(family_source.gen(name) for name in z.source_names))
        family = Correspondence(family_source, z.target, CycleService.base_change(z.cycle, along))

        ambient = family.ambient
        ring = ambient.ring()
        var = {name: ring.gens[ambient.index(name)] for name in ambient.variables}
        a = var[f1] ** (n + 1)
        b = var[f1] ** (m + 1)
        top = var[t] * (a - 1) * (b - var[f2]) + (1 - var[t]) * (b - 1) * (a - var[f2])
        bottom = (a - var[f2]) * (b - var[f2])
        logger.debug("homotopy between rho_%d and rho_%d along %s", n, m, t)
        h = CancellationService.rho_for(family, CartierDivisor(ambient, top, bottom))

        at_zero = CancellationService.evaluate_at(h, 0)
        at_one = CancellationService.evaluate_at(h, 1)
        rho_m = CancellationService.rho(z, m).correspondence
        rho_n = CancellationService.rho(z, n).correspondence
        return HomotopyResult(n, m, h, at_zero, at_one, rho_m, rho_n)

    @staticmethod
    def evaluate_at(h, a):
        """h restricted to X × {a}, by base change along x -> (x, a)."""
        x = h.source.subcell(h.source.variables[:-1])
        t = h.source.variables[-1]
        images = {name: x.gen(name) for name in x.variables}
        images[t] = x.constant(h.source.field.scalar(a))
        inclusion = CellMorphism.from_mapping(x, h.source, images)
        cycle = CycleService.base_change(h.cycle, inclusion)
        return Correspondence(x, h.target, cycle)

    @staticmethod
    def motivic_class(z):
        """Degree of ρ_N(Z) in c(pt, pt) = Z for an endocorrespondence of G_m."""
        return CancellationService.rho(z).degree

    @staticmethod
    def verify_functor1(z, w, n):
        """ρ_n(Z ∘ (Id ⊗ W)) against ρ_n(Z) ∘ W."""
        gm = z.source.subcell(z.source.variables[:1])
        lifted = CorrespondenceService.tensor(CorrespondenceService.identity(gm), w)
        lhs = CancellationService.rho(CorrespondenceService.compose(z, lifted), n).correspondence
        rhs = CorrespondenceService.compose(CancellationService.rho(z, n).correspondence, w)
        return VerificationReport.compare('functor1', lhs, rhs, n=n)

    @staticmethod
    def verify_functor3(z, f, n):
        """ρ_n(Z ⊗ Γ_f) against ρ_n(Z) ⊗ Γ_f."""
        graph = CorrespondenceService.graph(f)
        lhs = CancellationService.rho(CorrespondenceService.tensor(z, graph), n).correspondence
        rhs = CorrespondenceService.tensor(CancellationService.rho(z, n).correspondence, graph)
        return VerificationReport.compare('functor3', lhs, rhs, n=n)

    @staticmethod
    def _unit_on(cell):
        """e ⊗ Id_X: the graph of the constant map G_m -> {1} ⊂ G_m, tensored with the identity of X."""
        name = fresh_name('f', set(cell.variables))
        gm = Cell((Coordinate(name, True),), cell.field)
        constant = CellMorphism(gm, gm, (gm.constant(1),))
        return CorrespondenceService.tensor(CorrespondenceService.graph(constant),
                                            CorrespondenceService.identity(cell))

    @staticmethod
    def verify_unit(cell, n):
        """ρ_n(e ⊗ Id_X) = 0."""
        result = CancellationService.rho(CancellationService._unit_on(cell), n).correspondence
        return VerificationReport('unit', result.is_zero, result.render(), '0',
                                  {'x': cell.describe(), 'n': n})

    @staticmethod
    def verify_str(w, n):
        """ρ_n(Id_{G_m} ⊗ W) = W and ρ_n(e ⊗ Id) = 0 for W: X -> Y."""
        field = w.source.field
        name = fresh_name('f', set(w.source.variables) | set(w.target.variables))
        gm = Cell((Coordinate(name, True),), field)
        identity = CorrespondenceService.tensor(CorrespondenceService.identity(gm), w)
        first = CancellationService.rho(identity, n).correspondence
        unit = CancellationService.verify_unit(w.source, n)
        return VerificationReport('str', first == w and unit.passed, first.render(), unit.lhs,
                                  {'w': w.render(), 'n': n})
