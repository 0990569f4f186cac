import logging

from ..errors import ImproperIntersectionError, ZeroRestrictionError
from ..models.cell import CellMorphism
from ..models.cycle import Cycle
from ..models.divisor import CartierDivisor
from ..models.results import VerificationReport
from ..utils.rings import is_unit_monomial, transfer
from .algebra_service import AlgebraService
from .correspondence_service import CorrespondenceService
from .cycle_service import CycleService
from .factor_service import FactorService
from .space_service import SpaceService

logger = logging.getLogger(__name__)


class DivisorService:
    """Cartier divisors given by global fractions, and their intersections with cycles."""

    @staticmethod
    def _factors(poly, units):
        """Irreducible factors with multiplicities, units of the cell ring dropped."""
        if poly.is_ground:
            return {}
        _, factors = FactorService.factor(poly)
        return {f: m for f, m in factors if not is_unit_monomial(f, units)}

    @staticmethod
    def reduced(divisor):
        """Cancel common irreducible factors of f₊ and f₋ and drop unit factors."""
        units = set(divisor.ambient.units)
        plus = DivisorService._factors(divisor.numerator, units)
        minus = DivisorService._factors(divisor.denominator, units)
        ring = divisor.ambient.ring()
        top = ring.one
        bottom = ring.one
        for f in set(plus) | set(minus):
            net = plus.get(f, 0) - minus.get(f, 0)
            if net > 0:
                top *= f ** net
            elif net < 0:
                bottom *= f ** (-net)
        return CartierDivisor(divisor.ambient, top, bottom)

    @staticmethod
    def divisor_cycle(divisor):
        """
        cycl(f₊⁻¹(0)) − cycl(f₋⁻¹(0)) on the ambient, over the point

        Returns:
            Cycle of codimension one
        """
        ambient = divisor.ambient
        if ambient.is_point:
            return Cycle.zero(ambient, (), 0)
        dimension = ambient.dimension - 1
        units = set(ambient.units)
        pairs = []
        for poly, sign in ((divisor.numerator, 1), (divisor.denominator, -1)):
            for factor, multiplicity in DivisorService._factors(poly, units).items():
                prime = AlgebraService.saturate_units(ambient.ideal([factor]))
                subset = CycleService.independent_set(prime, (), ambient.variables, dimension)
                residue = AlgebraService.quotient_dimension(prime, subset)
                component = CycleService.make_component(prime, ambient, (), dimension, residue)
                pairs.append((component, sign * multiplicity))
        return Cycle.build(ambient, (), dimension, pairs)

    @staticmethod
    def support(divisor):
        """Prime ideals of the components of cycl(D) with nonzero multiplicity."""
        return [component.ideal for component in DivisorService.divisor_cycle(divisor).components]

    @staticmethod
    def intersects_properly(cycle, divisor):
        """
        Whether D meets every component of a relative d-cycle properly over its base

        The component must not lie in supp(D), and the generic fiber of
        supp(D) ∩ Z_i over the base must have dimension at most d − 1.
        """
        if divisor.ambient != cycle.ambient:
            raise ValueError("divisor and cycle live on different cells")
        if cycle.is_zero:
            return True
        divisor = DivisorService.reduced(divisor)
        if cycle.relative_dimension == 0:
            return divisor.numerator.is_ground and divisor.denominator.is_ground
        ring = cycle.ambient.ring()
        for component in cycle.components:
            for part in (divisor.numerator, divisor.denominator):
                if part.is_ground:
                    continue
                if component.ideal.contains(part):
                    return False
                meet = component.ideal.with_generators([transfer(part, ring)])
                if AlgebraService.fiber_dimension(meet, cycle.base) > cycle.relative_dimension - 1:
                    return False
        return True

    @staticmethod
    def intersect(cycle, divisor):
        """
        (Z, D) = Σ n_i · (cycl(P_i + f₊) − cycl(P_i + f₋)) over the base of Z

        Raises:
            ZeroRestrictionError: f₊ or f₋ vanishes on a component
            ImproperIntersectionError: a fiber of the intersection is too large
        """
        if divisor.ambient != cycle.ambient:
            raise ValueError("divisor and cycle live on different cells")
        ambient = cycle.ambient
        relative_dimension = cycle.relative_dimension - 1
        divisor = DivisorService.reduced(divisor)
        if cycle.is_zero or (divisor.numerator.is_ground and divisor.denominator.is_ground):
            return Cycle.zero(ambient, cycle.base, max(relative_dimension, 0))
        if relative_dimension < 0:
            raise ImproperIntersectionError("cannot intersect a relative 0-cycle with a divisor")
        ring = ambient.ring()
        result = Cycle.zero(ambient, cycle.base, relative_dimension)
        for component, multiplicity in cycle.terms:
            for part, sign in ((divisor.numerator, 1), (divisor.denominator, -1)):
                if part.is_ground:
                    continue
                if component.ideal.contains(part):
                    raise ZeroRestrictionError(
                        "divisor part vanishes on a component", ideal=component.ideal,
                        part=part)
                meet = component.ideal.with_generators([transfer(part, ring)])
                if AlgebraService.fiber_dimension(meet, cycle.base) > relative_dimension:
                    raise ImproperIntersectionError(
                        "intersection has too large fibers over the base", ideal=meet)
                piece = CycleService.cycl_of_ideal(meet, ambient, cycle.base, relative_dimension)
                result = result + (sign * multiplicity) * piece
        logger.debug("intersected %d components with %s", len(cycle.terms), divisor)
        return result

    @staticmethod
    def pullback(divisor, m):
        """f*D for a morphism m into the divisor's cell."""
        return CartierDivisor(m.source,
                              SpaceService.pullback_polynomial(m, divisor.numerator),
                              SpaceService.pullback_polynomial(m, divisor.denominator))

    @staticmethod
    def restrict_to_fiber(divisor, cycle, values):
        """D restricted to the fiber of the cycle's ambient over a base point."""
        fiber_cell = cycle.ambient.subcell(cycle.fiber)
        point = SpaceService.point(cycle.ambient.subcell(cycle.base), values)
        images = {b: SpaceService.extend_function(image, fiber_cell)
                  for b, image in zip(cycle.base, point.images)}
        images.update({y: fiber_cell.gen(y) for y in cycle.fiber})
        inclusion = CellMorphism.from_mapping(fiber_cell, cycle.ambient, images)
        return DivisorService.pullback(divisor, inclusion)

    @staticmethod
    def verify_eqp1(cycle, divisor, values):
        """p*(Z, D) against (p*Z, p'*D) for the inclusion p of a base point."""
        point = SpaceService.point(cycle.ambient.subcell(cycle.base), values)
        lhs = CycleService.base_change(DivisorService.intersect(cycle, divisor), point)
        restricted = DivisorService.restrict_to_fiber(divisor, cycle, values)
        rhs = DivisorService.intersect(CycleService.base_change(cycle, point), restricted)
        return VerificationReport.compare('eqp1', lhs, rhs, point=str(values))

    @staticmethod
    def verify_eqcorr(w, z, divisor):
        """(Cor(W, Z), D) against Cor((W, D), Z)."""
        lhs = DivisorService.intersect(CorrespondenceService.cor_operator(w, z), divisor)
        rhs = CorrespondenceService.cor_operator(DivisorService.intersect(w, divisor), z)
        return VerificationReport.compare('eqcorr', lhs, rhs)

    @staticmethod
    def verify_eqp(f, cycle, divisor):
        """f_*(Z, f*D) against (f_*Z, D)."""
        lhs = CycleService.push_forward(
            DivisorService.intersect(cycle, DivisorService.pullback(divisor, f)), f, ())
        rhs = DivisorService.intersect(CycleService.push_forward(cycle, f, ()), divisor)
        return VerificationReport.compare('eqp', lhs, rhs)

    @staticmethod
    def verify_form1(ideal, function, ambient, relative_dimension):
        """
        cycl(I + f) against Σ n_i · cycl(P_i + f) where Σ n_i [P_i] = cycl(I)

        Args:
            ideal: Ideal of a (possibly reducible, non-reduced) subscheme over the point
            function: polynomial nonzero on every component
            relative_dimension: dimension of V(I)
        """
        ring = ambient.ring()
        f = transfer(function, ring)
        lhs = CycleService.cycl_of_ideal(ideal.with_generators([f]), ambient, (),
                                         relative_dimension - 1)
        rhs = Cycle.zero(ambient, (), relative_dimension - 1)
        for component, multiplicity in CycleService.cycl_of_ideal(
                ideal, ambient, (), relative_dimension).terms:
            meet = component.ideal.with_generators([f])
            rhs = rhs + multiplicity * CycleService.cycl_of_ideal(
                meet, ambient, (), relative_dimension - 1)
        return VerificationReport.compare('form1', lhs, rhs)

    @staticmethod
    def verify_flat_pullback(cycle, function, f):
        """
        p*(cycl(Z), f) against (p*cycl(Z), f∘p′) for a base map f: S' -> S

        Args:
            cycle: flat Cycle over S
            function: polynomial on the ambient of the cycle
            f: CellMorphism S' -> S
        """
        divisor = CartierDivisor.of(cycle.ambient, function)
        lhs = CycleService.base_change(DivisorService.intersect(cycle, divisor), f)
        pulled = CycleService.base_change(cycle, f)
        lifted = _base_change_morphism(cycle, f, pulled.ambient)
        rhs = DivisorService.intersect(pulled, DivisorService.pullback(divisor, lifted))
        return VerificationReport.compare('flat', lhs, rhs)


def _base_change_morphism(cycle, f, ambient):
    """p′: S' ×_S X -> X, matching fiber coordinates positionally."""
    fiber_names = ambient.variables[f.source.dimension:]
    images = {b: SpaceService.extend_function(image, ambient) for b, image in zip(cycle.base, f.images)}
    images.update({y: ambient.gen(name) for y, name in zip(cycle.fiber, fiber_names)})
    return CellMorphism.from_mapping(ambient, cycle.ambient, images)
