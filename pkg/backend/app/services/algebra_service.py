import logging
import math

from ..models.ideal import GREVLEX, Ideal, MonomialOrder
from ..utils.rings import (degree_in, groebner_basis, krull_dimension,
                           leading_coefficient, polynomial_ring, transfer)

logger = logging.getLogger(__name__)

INFINITE = math.inf
AUXILIARY = '_w'


def _free_of(poly, count):
    """True if no monomial of ``poly`` uses the first ``count`` variables."""
    return all(not any(monom[:count]) for monom in poly.itermonoms())


class AlgebraService:
    """Gröbner-basis computations on ideals: elimination, saturation, dimensions."""

    @staticmethod
    def groebner(ideal, order=GREVLEX):
        """
        Reduced Gröbner basis of an ideal

        Args:
            ideal: the Ideal
            order: MonomialOrder (lex, grevlex or block)

        Returns:
            tuple: reduced monic basis, sorted by decreasing leading monomial
        """
        return ideal.groebner(order)

    @staticmethod
    def eliminate(ideal, keep):
        """
        Intersect an ideal with the subring in the ``keep`` variables

        Args:
            ideal: the Ideal
            keep: iterable of variable names to keep

        Returns:
            Ideal: I ∩ k[keep], in the kept variables (original order)
        """
        keep = set(keep)
        kept = tuple(v for v in ideal.variables if v in keep)
        dropped = tuple(v for v in ideal.variables if v not in keep)
        units = tuple(v for v in ideal.units if v in keep)
        if not dropped:
            return ideal
        if not kept:
            generators = [ideal.ring().one] if ideal.is_unit else []
            return Ideal(ideal.field, (), generators, (), saturated=True)
        order = MonomialOrder.block((len(dropped), 'grevlex'), (len(kept), 'grevlex'))
        basis = ideal.groebner(order, dropped + kept)
        survivors = [g for g in basis if _free_of(g, len(dropped))]
        return Ideal(ideal.field, kept, survivors, units, saturated=ideal.saturated)

    @staticmethod
    def saturate(ideal, f):
        """
        Saturation I : f^∞, through an auxiliary inverse variable

        Args:
            ideal: the Ideal
            f: nonzero polynomial in (a subset of) the ideal's variables

        Returns:
            Ideal
        """
        if not f:
            raise ValueError("cannot saturate by the zero polynomial")
        if f.is_ground or ideal.is_zero:
            return ideal
        names = (AUXILIARY,) + ideal.variables
        order = MonomialOrder.block((1, 'grevlex'), (len(ideal.variables), 'grevlex'))
        ring = polynomial_ring(ideal.field.domain, names, order.sympy_order())
        inverse = ring.gens[0]
        generators = [transfer(g, ring) for g in ideal.generators]
        generators.append(ring.one - inverse * transfer(f, ring))
        basis = groebner_basis(generators, ring)
        survivors = [g for g in basis if _free_of(g, 1)]
        return Ideal(ideal.field, ideal.variables, survivors, ideal.units,
                     saturated=ideal.saturated)

    @staticmethod
    def saturate_units(ideal):
        """Saturate with respect to the product of the unit variables."""
        if ideal.saturated:
            return ideal
        if ideal.units and not ideal.is_zero:
            ring = ideal.ring()
            product = ring.one
            for name in ideal.units:
                product *= ring.gens[ideal.variables.index(name)]
            ideal = AlgebraService.saturate(ideal, product)
        return Ideal(ideal.field, ideal.variables, ideal.generators, ideal.units,
                     saturated=True)

    @staticmethod
    def _block_basis(ideal, parameters):
        parameters = tuple(v for v in ideal.variables if v in set(parameters))
        fiber = tuple(v for v in ideal.variables if v not in set(parameters))
        if parameters:
            order = MonomialOrder.block((len(fiber), 'grevlex'), (len(parameters), 'grevlex'))
        else:
            order = GREVLEX
        return fiber, parameters, ideal.groebner(order, fiber + parameters)

    @staticmethod
    def quotient_dimension(ideal, parameters=()):
        """
        Dimension of k(parameters)[fiber]/I over k(parameters)

        Args:
            ideal: the Ideal
            parameters: variable names treated as transcendental

        Returns:
            int, or INFINITE when the extended ideal is not zero-dimensional
        """
        fiber, _, basis = AlgebraService._block_basis(ideal, parameters)
        width = len(fiber)
        if not basis:
            return INFINITE if width else 1
        leads = [g.LM[:width] for g in basis]
        if any(not any(lead) for lead in leads):
            return 0
        bounds = []
        for i in range(width):
            pure = [lead[i] for lead in leads
                    if lead[i] and not any(e for j, e in enumerate(lead) if j != i)]
            if not pure:
                return INFINITE
            bounds.append(min(pure))
        return AlgebraService._count_standard(leads, bounds)

    @staticmethod
    def _count_standard(leads, bounds):
        count = 0
        stack = [()]
        while stack:
            prefix = stack.pop()
            if len(prefix) == len(bounds):
                if not any(all(a >= b for a, b in zip(prefix, lead)) for lead in leads):
                    count += 1
                continue
            for exponent in range(bounds[len(prefix)]):
                stack.append(prefix + (exponent,))
        return count

    @staticmethod
    def dimension(ideal):
        """Krull dimension of k[variables]/I (-1 for the unit ideal)."""
        return krull_dimension(ideal.groebner(), ideal.ring())

    @staticmethod
    def fiber_dimension(ideal, parameters):
        """Dimension of the extension of I to k(parameters)[fiber] (-1 if it is the unit ideal)."""
        fiber, _, basis = AlgebraService._block_basis(ideal, parameters)
        width = len(fiber)
        if not basis:
            return width
        leads = [g.LM[:width] for g in basis]
        if any(not any(lead) for lead in leads):
            return -1
        monomial_ring = polynomial_ring(ideal.field.domain, fiber)
        monomials = [monomial_ring.from_dict({lead: monomial_ring.domain.one}) for lead in leads]
        return krull_dimension(monomials, monomial_ring)

    @staticmethod
    def minimal_polynomial(ideal, name, parameters=()):
        """
        Generator of (I k(parameters)[fiber]) ∩ k(parameters)[name], cleared of denominators

        Returns:
            PolyElement in the ring of (name, parameters), or None if the
            intersection is zero
        """
        parameters = tuple(v for v in ideal.variables if v in set(parameters))
        others = tuple(v for v in ideal.variables if v != name and v not in parameters)
        blocks = []
        if others:
            blocks.append((len(others), 'grevlex'))
        blocks.append((1, 'lex'))
        if parameters:
            blocks.append((len(parameters), 'grevlex'))
        basis = ideal.groebner(MonomialOrder.block(*blocks), others + (name,) + parameters)
        candidates = [g for g in basis if _free_of(g, len(others)) and degree_in(g, name) > 0]
        if not candidates:
            return None
        best = min(candidates, key=lambda g: degree_in(g, name))
        return transfer(best, polynomial_ring(ideal.field.domain, (name,) + parameters))

    @staticmethod
    def contract(ideal, parameters):
        """
        I k(parameters)[fiber] ∩ k[all], then saturated by the unit variables

        The leading coefficients of a block basis (fiber ≫ parameters) are the
        denominators that the extension can invert.
        """
        fiber, parameters, basis = AlgebraService._block_basis(ideal, parameters)
        if parameters:
            width = len(fiber)
            ring = ideal.ring()
            denominator = ring.one
            for g in basis:
                coefficient = leading_coefficient(g, width)
                if not coefficient.is_ground:
                    denominator *= transfer(coefficient, ring)
            if not denominator.is_ground:
                ideal = AlgebraService.saturate(ideal, denominator)
        ideal = Ideal(ideal.field, ideal.variables, ideal.generators, ideal.units)
        return AlgebraService.saturate_units(ideal)
