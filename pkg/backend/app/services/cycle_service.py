import logging
from dataclasses import replace
from itertools import combinations

from ..errors import (InvalidMorphismError, NotDominantError, NotEquidimensionalError,
                      NotFlatError, NotFiniteError, NotPrimeError,
                      NotProperOnSupportError, WrongDimensionError)
from ..models.cell import CellMorphism
from ..models.cycle import Cycle, PrimeComponent
from ..models.ideal import Ideal, MonomialOrder
from ..utils.rings import (coefficients_in, groebner_basis, is_unit_monomial,
                           leading_coefficient, polynomial_ring, rename, transfer)
from .algebra_service import INFINITE, AlgebraService
from .artinian_service import ArtinianService
from .space_service import SpaceService, fresh_name

logger = logging.getLogger(__name__)

DEDEKIND_BASE = 'dedekind-base'
FREE_BASIS = 'free-basis'


def ordered(cell, names):
    """``names`` in the order of the cell's coordinates."""
    names = set(names)
    return tuple(v for v in cell.variables if v in names)


class CycleService:
    """Relative cycles: construction from ideals, pullback, push-forward, products."""

    # -- components -----------------------------------------------------

    @staticmethod
    def independent_set(ideal, base, fiber, size):
        """First ``size``-subset S of ``fiber`` with I·k(base, S) zero-dimensional and proper."""
        for subset in combinations(fiber, size):
            dimension = AlgebraService.quotient_dimension(ideal, base + subset)
            if dimension != INFINITE and dimension > 0:
                return subset
        return None

    @staticmethod
    def is_finite(ideal, ambient, base):
        """
        Monic test: every fiber coordinate y satisfies a relation over k[base]
        whose leading coefficient is a unit, and for multiplicative y also
        whose constant coefficient is a unit (so that 1/y is integral too).
        """
        base_ring = polynomial_ring(ambient.field.domain, base)
        units = set(ambient.units)
        for name in ambient.variables:
            if name in base:
                continue
            relation = AlgebraService.minimal_polynomial(ideal, name, base)
            if relation is None:
                return False
            coefficients = coefficients_in(relation, name, base_ring)
            if not is_unit_monomial(coefficients[max(coefficients)], units):
                return False
            if name in units and not is_unit_monomial(coefficients[min(coefficients)], units):
                return False
        return True

    @staticmethod
    def is_flat(component):
        """
        Flatness certificate of a component over its base, or None (refusal)

        Bases of dimension at most one are Dedekind, so torsion-free means
        flat. Over larger bases a block basis (fiber ≫ base) whose leading
        coefficients are all units exhibits a free basis of standard monomials.
        """
        if len(component.base) <= 1:
            return DEDEKIND_BASE
        if component.relative_dimension != 0:
            return None
        fiber = component.fiber
        order = MonomialOrder.block((len(fiber), 'grevlex'), (len(component.base), 'grevlex'))
        basis = component.ideal.groebner(order, fiber + component.base)
        width = len(fiber)
        base_ring = polynomial_ring(component.ambient.field.domain, component.base)
        units = set(component.ambient.units)
        for g in basis:
            if not is_unit_monomial(transfer(leading_coefficient(g, width), base_ring), units):
                return None
        return FREE_BASIS

    @staticmethod
    def make_component(prime, ambient, base, relative_dimension, residue_degree, trusted=False):
        """Wrap an ideal already known to be prime and dominant."""
        finite = relative_dimension == 0 and CycleService.is_finite(prime, ambient, base)
        component = PrimeComponent(ambient, tuple(base), prime, relative_dimension,
                                   residue_degree, finite, None, trusted)
        return replace(component, flatness=CycleService.is_flat(component))

    @staticmethod
    def validate_component(ideal, ambient, base, expect_finite=False, relative_dimension=0):
        """
        Certify a prime component of ``ambient`` over the ``base`` coordinates

        Args:
            ideal: Ideal in the ambient's variables
            ambient: Cell
            base: base coordinate names
            expect_finite: also run the monic test over the base
            relative_dimension: expected generic fiber dimension

        Returns:
            PrimeComponent

        Raises:
            NotDominantError, NotPrimeError, NotFiniteError, WrongDimensionError
        """
        base = ordered(ambient, base)
        fiber = tuple(v for v in ambient.variables if v not in base)
        prime = AlgebraService.saturate_units(
            Ideal(ambient.field, ambient.variables, ideal.generators, ambient.units))
        if prime.is_unit:
            raise NotPrimeError("the unit ideal has no components", ideal=ideal)
        if not AlgebraService.eliminate(prime, base).is_zero:
            raise NotDominantError("component does not dominate the base", ideal=prime)
        dimension = AlgebraService.fiber_dimension(prime, base)
        if dimension != relative_dimension:
            raise WrongDimensionError(
                "unexpected fiber dimension", ideal=prime, expected=relative_dimension,
                found=dimension)
        parameters = base + CycleService.independent_set(prime, base, fiber, dimension)
        decomposition = ArtinianService.decompose(prime, parameters)
        factors = decomposition.factors
        if len(factors) != 1 or factors[0].length != 1:
            raise NotPrimeError("generic fiber is not a field", ideal=prime,
                                factors=len(factors))
        if AlgebraService.contract(prime, parameters) != prime:
            raise NotPrimeError("ideal has components that do not dominate the base", ideal=prime)
        if expect_finite:
            if dimension != 0 or not CycleService.is_finite(prime, ambient, base):
                raise NotFiniteError("component is not finite over the base", ideal=prime)
        return CycleService.make_component(prime, ambient, base, dimension,
                                           factors[0].residue_degree)

    # -- cycles ---------------------------------------------------------

    @staticmethod
    def cycl_of_ideal(ideal, ambient, base, relative_dimension=0):
        """
        Cycle of the closed subscheme V(ideal), relative to the base

        Minimal primes come from decomposing the generic fiber over
        k(base, S) for every independent set S of fiber coordinates;
        multiplicities are the local lengths.

        Raises:
            WrongDimensionError: some component has too large a generic fiber
        """
        base = ordered(ambient, base)
        fiber = tuple(v for v in ambient.variables if v not in base)
        ideal = AlgebraService.saturate_units(
            Ideal(ambient.field, ambient.variables, ideal.generators, ambient.units))
        if ideal.is_unit:
            return Cycle.zero(ambient, base, relative_dimension)
        if relative_dimension > len(fiber):
            raise WrongDimensionError("relative dimension exceeds the fiber", ideal=ideal)

        pairs = []
        seen = set()
        for subset in combinations(fiber, relative_dimension):
            parameters = base + subset
            decomposition = ArtinianService.decompose(ideal, parameters)
            for factor in decomposition.factors:
                prime = AlgebraService.contract(factor.maximal_ideal, parameters)
                if prime.is_unit or prime.canonical() in seen:
                    continue
                seen.add(prime.canonical())
                component = CycleService.make_component(
                    prime, ambient, base, relative_dimension, factor.residue_degree)
                pairs.append((component, factor.length))
        logger.debug("cycl over %s: %d components", ",".join(base) or 'pt', len(pairs))
        return Cycle.build(ambient, base, relative_dimension, pairs)

    @staticmethod
    def from_component(component, multiplicity=1):
        return Cycle.build(component.ambient, component.base, component.relative_dimension,
                           [(component, multiplicity)])

    @staticmethod
    def base_change(cycle, f):
        """
        Pull a cycle back along f: S' -> base

        The new ambient is S' followed by the fiber coordinates (renamed on
        clashes). Coordinate maps take the fast path: the pulled-back prime
        stays prime with the same multiplicity.

        Raises:
            NotFlatError: a component has no flatness certificate
        """
        base_cell = cycle.ambient.subcell(cycle.base)
        if f.target != base_cell:
            raise InvalidMorphismError("morphism does not land in the base of the cycle",
                                       base=base_cell.describe(), target=f.target.describe())
        fiber_cell = cycle.ambient.subcell(cycle.fiber)
        ambient, renaming = SpaceService.product(f.source, fiber_cell)
        new_base = f.source.variables
        images = {b: SpaceService.extend_function(image, ambient) for b, image in zip(cycle.base, f.images)}
        images.update({y: ambient.gen(renaming[y]) for y in cycle.fiber})
        pullback = CellMorphism.from_mapping(ambient, cycle.ambient, images)
        fast = f.is_coordinate_map

        result = Cycle.zero(ambient, new_base, cycle.relative_dimension)
        for component, multiplicity in cycle.terms:
            if not fast and component.flatness is None:
                raise NotFlatError("component is not certified flat over its base",
                                   ideal=component.ideal)
            generators = [SpaceService.pullback_polynomial(pullback, g)
                          for g in component.ideal.generators]
            ideal = ambient.ideal(generators)
            if fast:
                prime = AlgebraService.saturate_units(ideal)
                made = CycleService.make_component(
                    prime, ambient, new_base, component.relative_dimension,
                    component.residue_degree)
                if made.flatness is None and component.flatness is not None:
                    # flatness survives base change
                    made = replace(made, flatness=component.flatness)
                pulled = CycleService.from_component(made, multiplicity)
            else:
                pulled = multiplicity * CycleService.cycl_of_ideal(
                    ideal, ambient, new_base, cycle.relative_dimension)
            result = result + pulled
        return result

    @staticmethod
    def push_forward(cycle, p, target_base=None):
        """
        Proper push-forward along p: ambient -> target

        Each component goes to deg·[image], deg being the degree of the
        function-field extension, or to zero when the dimension drops.

        Args:
            cycle: Cycle
            p: CellMorphism from the cycle's ambient
            target_base: base coordinates of the target (default: the
                cycle's base coordinates that the target keeps)

        Raises:
            NotProperOnSupportError: properness could not be certified
        """
        if p.source != cycle.ambient:
            raise InvalidMorphismError("morphism does not start at the ambient of the cycle")
        target = p.target
        if target_base is None:
            target_base = tuple(v for v in cycle.base if v in target.variables)
        target_base = ordered(target, target_base)
        relative_dimension = cycle.relative_dimension + len(cycle.base) - len(target_base)
        if relative_dimension < 0:
            raise WrongDimensionError("target base is larger than the source base")
        pairs = []
        for component, multiplicity in cycle.terms:
            pushed = CycleService._push_component(component, p, target_base, relative_dimension)
            if pushed is not None:
                image, degree = pushed
                pairs.append((image, degree * multiplicity))
        return Cycle.build(target, target_base, relative_dimension, pairs)

    @staticmethod
    def _push_component(component, p, target_base, relative_dimension):
        source = component.ambient
        target = p.target
        graph_cell, renaming = SpaceService.product(source, target)
        target_names = tuple(renaming[v] for v in target.variables)
        generators = [transfer(g, graph_cell.ring()) for g in component.ideal.generators]
        generators += SpaceService.graph_generators(p, graph_cell, target_names)
        graph = AlgebraService.saturate_units(graph_cell.ideal(generators))

        back = {renamed: name for name, renamed in renaming.items()}
        eliminated = AlgebraService.eliminate(graph, target_names)
        image = target.ideal([rename(g, back, target.ring()) for g in eliminated.generators])
        image = AlgebraService.saturate_units(image)
        if not AlgebraService.eliminate(image, target_base).is_zero:
            raise NotDominantError("image does not dominate the target base", ideal=image)
        if AlgebraService.fiber_dimension(image, target_base) < relative_dimension:
            return None

        preserves_base = all(
            b in source.variables and p.image_of(b) == source.gen(b) for b in target_base
        ) and set(target_base) == set(component.base)
        if not (component.finite and preserves_base):
            CycleService._certify_proper(graph, source, graph_cell, target_names, eliminated)

        fiber = tuple(v for v in target.variables if v not in target_base)
        subset = CycleService.independent_set(image, target_base, fiber, relative_dimension)
        parameters = target_base + subset
        big = AlgebraService.quotient_dimension(graph, tuple(renaming[v] for v in parameters))
        if big == INFINITE:
            return None
        small = AlgebraService.quotient_dimension(image, parameters)
        degree, remainder = divmod(big, small)
        if remainder:
            raise NotProperOnSupportError("non-integral push-forward degree", ideal=image)
        pushed = CycleService.make_component(image, target, target_base, relative_dimension, small)
        return pushed, degree

    @staticmethod
    def _certify_proper(graph, source, graph_cell, target_names, image):
        """
        Every source coordinate (and the inverse of every multiplicative one)
        must satisfy a relation over the image whose leading coefficient is a
        unit modulo the image ideal.
        """
        taken = set(graph_cell.variables)
        inverses = []
        for name in source.units:
            inverse = fresh_name(f"{name}_inv", taken)
            taken.add(inverse)
            inverses.append((name, inverse))
        upper = source.variables + tuple(inverse for _, inverse in inverses)
        names = upper + target_names
        order = MonomialOrder.block((len(upper), 'grevlex'), (len(target_names), 'grevlex'))
        ring = polynomial_ring(graph.field.domain, names, order.sympy_order())
        generators = [transfer(g, ring) for g in graph.generators]
        for name, inverse in inverses:
            generators.append(ring.gens[names.index(name)] * ring.gens[names.index(inverse)] - 1)
        basis = groebner_basis(generators, ring)

        width = len(upper)
        image_ring = image.ring()
        image_basis = list(image.groebner())
        units = set(image.units)
        for index, name in enumerate(upper):
            certified = False
            for g in basis:
                lead = g.LM[:width]
                if not lead[index] or any(e for j, e in enumerate(lead) if j != index):
                    continue
                coefficient = transfer(leading_coefficient(g, width), image_ring)
                if image_basis:
                    coefficient = coefficient.rem(image_basis)
                if is_unit_monomial(coefficient, units):
                    certified = True
                    break
            if not certified:
                raise NotProperOnSupportError(
                    "map is not certified proper on the support", coordinate=name)

    @staticmethod
    def external_product(a, b):
        """
        a × b on the product ambient; bases and relative dimensions add

        The sum of two primes need not be prime, so the result is
        re-decomposed.
        """
        ambient, renaming = SpaceService.product(a.ambient, b.ambient)
        base = ordered(ambient, a.base + tuple(renaming[v] for v in b.base))
        relative_dimension = a.relative_dimension + b.relative_dimension
        ring = ambient.ring()
        result = Cycle.zero(ambient, base, relative_dimension)
        for left, m in a.terms:
            for right, n in b.terms:
                generators = [transfer(g, ring) for g in left.ideal.generators]
                generators += [rename(g, renaming, ring) for g in right.ideal.generators]
                result = result + m * n * CycleService.cycl_of_ideal(
                    ambient.ideal(generators), ambient, base, relative_dimension)
        return result

    @staticmethod
    def rebase(cycle, base):
        """
        View a cycle over a coarser base; the relative dimension grows by the
        number of dropped base coordinates

        Raises:
            NotEquidimensionalError: a component has the wrong fiber dimension
                over the new base
        """
        if not set(base) <= set(cycle.base):
            raise ValueError("new base must be contained in the old one")
        base = ordered(cycle.ambient, base)
        relative_dimension = cycle.relative_dimension + len(cycle.base) - len(base)
        fiber = tuple(v for v in cycle.ambient.variables if v not in base)
        pairs = []
        for component, multiplicity in cycle.terms:
            prime = component.ideal
            if AlgebraService.fiber_dimension(prime, base) != relative_dimension:
                raise NotEquidimensionalError(
                    "component is not equidimensional over the new base", ideal=prime)
            subset = CycleService.independent_set(prime, base, fiber, relative_dimension)
            residue = AlgebraService.quotient_dimension(prime, base + subset)
            pairs.append((CycleService.make_component(
                prime, cycle.ambient, base, relative_dimension, residue), multiplicity))
        return Cycle.build(cycle.ambient, base, relative_dimension, pairs)

    @staticmethod
    def degree_over_base(cycle):
        """Σ n_i · [k(Z_i) : k(base)] of a finite cycle."""
        if cycle.relative_dimension != 0:
            raise WrongDimensionError("degree is defined for relative 0-cycles only")
        return sum(m * c.residue_degree for c, m in cycle.terms)

    @staticmethod
    def reorder(cycle, ambient):
        """The same cycle read in an ambient with permuted (same-named) coordinates."""
        if set(ambient.coordinates) != set(cycle.ambient.coordinates):
            raise ValueError("ambients differ by more than the coordinate order")
        return CycleService.relabel(cycle, ambient, {})

    @staticmethod
    def relabel(cycle, ambient, mapping):
        """Rename coordinates by ``mapping`` into ``ambient`` (a permutation of the renamed cell)."""
        return cycle.relabeled(ambient, mapping)

    @staticmethod
    def point_cycle(ambient, values):
        """1·[a] for a k-rational point a of ``ambient``, over the point."""
        ring = ambient.ring()
        point = SpaceService.point(ambient, values)
        generators = [ring.gens[i] - ring.ground_new(image.numerator.LC if image.numerator else 0)
                      for i, image in enumerate(point.images)]
        return CycleService.cycl_of_ideal(ambient.ideal(generators), ambient, (), 0)

