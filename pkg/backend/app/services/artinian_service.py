import hashlib
import logging
import random

from ..errors import DegenerateCoordinatesError, WrongDimensionError
from ..models.ideal import ArtinianDecomposition, LocalFactor, MonomialOrder
from ..utils.rings import (degree_in, format_polynomial, groebner_basis,
                           polynomial_ring, substitute, transfer)
from .algebra_service import INFINITE, AlgebraService
from .factor_service import FactorService

logger = logging.getLogger(__name__)

PRIMITIVE = '_z'
DEFAULT_RETRIES = 8


class _Retry(Exception):
    pass


class ArtinianService:
    """Decomposition of finite algebras k(P)[Y]/I into local factors."""

    retries = DEFAULT_RETRIES

    @staticmethod
    def decompose(ideal, parameters=(), retries=None):
        """
        Split a zero-dimensional ideal over k(parameters) into its local factors

        A random linear form in the fiber variables is used as primitive
        element. The draws are seeded from the ideal itself, so the output
        does not depend on global random state.

        Args:
            ideal: Ideal in fiber and parameter variables
            parameters: names of the transcendental variables
            retries: number of linear forms to try (default: the configured count)

        Returns:
            ArtinianDecomposition: maximal ideals with lengths and residue degrees

        Raises:
            WrongDimensionError: the extended ideal is not zero-dimensional
            DegenerateCoordinatesError: no separating linear form was found
        """
        retries = ArtinianService.retries if retries is None else retries
        parameters = tuple(v for v in ideal.variables if v in set(parameters))
        fiber = tuple(v for v in ideal.variables if v not in set(parameters))
        total = AlgebraService.quotient_dimension(ideal, parameters)
        if total == INFINITE:
            raise WrongDimensionError(
                "ideal is not zero-dimensional over the parameters", ideal=ideal)
        if total == 0:
            return ArtinianDecomposition(parameters, ())
        if not fiber:
            return ArtinianDecomposition(parameters, (LocalFactor(ideal, 1, 1),))

        for attempt in range(max(1, retries)):
            rng = random.Random(_seed(ideal, parameters, attempt))
            try:
                factors = ArtinianService._attempt(ideal, fiber, parameters, total, rng, attempt)
            except _Retry as exc:
                logger.debug("linear form rejected on attempt %d: %s", attempt, exc)
                continue
            return ArtinianDecomposition(parameters, tuple(factors))
        where = ','.join(parameters) or 'k'
        logger.error(f"Error decomposing over {where}: no separating form in {retries} attempts")
        raise DegenerateCoordinatesError(
            "no separating linear form found", ideal=ideal, attempts=retries)

    @staticmethod
    def _attempt(ideal, fiber, parameters, total, rng, attempt):
        field = ideal.field
        width = len(fiber)
        if attempt == 0 and width == 1:
            weights = [1]
        else:
            top = field.characteristic - 1 if field.characteristic else max(10, 3 * total)
            weights = [rng.randint(1, top) for _ in fiber]

        names = fiber + (PRIMITIVE,) + parameters
        blocks = [(width, 'grevlex'), (1, 'lex')]
        if parameters:
            blocks.append((len(parameters), 'grevlex'))
        lifted = polynomial_ring(field.domain, names, MonomialOrder.block(*blocks).sympy_order())
        form = sum((lifted.gens[i] * w for i, w in enumerate(weights)), lifted.zero)
        generators = [transfer(g, lifted) for g in ideal.generators]
        generators.append(lifted.gens[width] - form)
        basis = groebner_basis(generators, lifted)
        candidates = [
            g for g in basis
            if all(not any(m[:width]) for m in g.itermonoms()) and degree_in(g, PRIMITIVE) > 0
        ]
        if not candidates:
            raise _Retry("primitive element has no minimal polynomial")
        minimal = min(candidates, key=lambda g: degree_in(g, PRIMITIVE))
        minimal = transfer(minimal, polynomial_ring(field.domain, (PRIMITIVE,) + parameters))

        ring = ideal.ring()
        images = {name: ring.gens[ideal.variables.index(name)] for name in parameters}
        images[PRIMITIVE] = sum(
            (ring.gens[ideal.variables.index(name)] * w for name, w in zip(fiber, weights)),
            ring.zero)

        factors = []
        for piece, multiplicity in FactorService.univariate_factor(minimal, PRIMITIVE):
            at_form = substitute(piece, images, ring)
            primary = ideal.with_generators([at_form ** multiplicity])
            size = AlgebraService.quotient_dimension(primary, parameters)
            radical = [at_form]
            for name in fiber:
                eliminant = AlgebraService.minimal_polynomial(primary, name, parameters)
                if eliminant is None:
                    raise _Retry(f"no eliminant in {name}")
                radical.append(transfer(FactorService.squarefree_part(eliminant, name), ring))
            maximal = primary.with_generators(radical)
            residue = AlgebraService.quotient_dimension(maximal, parameters)
            if residue != degree_in(piece, PRIMITIVE) or not residue or size % residue:
                raise _Retry(f"form does not separate at {format_polynomial(piece)}")
            factors.append(LocalFactor(maximal, size // residue, residue))
        if sum(f.length * f.residue_degree for f in factors) != total:
            raise _Retry("local factors do not add up")
        return factors


def _seed(ideal, parameters, attempt):
    key = "|".join([ideal.field.name, ",".join(ideal.variables), ",".join(parameters),
                    ";".join(format_polynomial(g) for g in ideal.generators), str(attempt)])
    return int.from_bytes(hashlib.sha256(key.encode()).digest()[:8], 'big')
