import logging
from itertools import islice, product

from ..errors import UnsupportedBaseError
from ..utils.rings import (coefficients_in, degree_in, polynomial_ring, ring_names,
                           substitute, transfer, variables_of)

logger = logging.getLogger(__name__)

# Kronecker images above this degree are refused rather than factored.
KRONECKER_DEGREE_CAP = 20000
KRONECKER_VARIABLE = '_k'
# Recombination candidates tried before giving up on one polynomial.
RECOMBINATION_CAP = 20000
SPECIALIZATIONS = 5
SPECIALIZATION_SCAN = 64


class FactorService:
    """Factorization of polynomials over Q and F_p into monic irreducibles."""

    @staticmethod
    def factor(poly, name=None):
        """
        Factor a polynomial of a PolyRing over QQ or GF(p)

        Args:
            poly: nonzero PolyElement
            name: main variable for the content split over F_p (default: the
                first variable that occurs)

        Returns:
            tuple: (leading coefficient, [(monic irreducible factor, multiplicity), ...]),
            factors sorted by decreasing leading monomial

        Raises:
            UnsupportedBaseError: a multivariate F_p polynomial is too large
        """
        if not poly:
            raise ValueError("cannot factor the zero polynomial")
        if poly.is_ground:
            return poly.LC, []
        ring = poly.ring
        used = variables_of(poly)
        if ring.domain.is_QQ or ring.ngens == 1:
            factors = _merged(poly.factor_list()[1])
        elif len(used) == 1:
            line = polynomial_ring(ring.domain, tuple(used))
            pieces = transfer(poly, line).factor_list()[1]
            factors = _merged((transfer(piece, ring), m) for piece, m in pieces)
        else:
            if name is None or name not in used:
                name = next(v for v in ring_names(ring) if v in used)
            factors = FactorService._prime_field_factor(poly.monic(), name)
        factors.sort(key=lambda item: ring.order(item[0].LM), reverse=True)
        return poly.LC, factors

    @staticmethod
    def _prime_field_factor(poly, name):
        """
        Content in the other variables first, then the primitive part by
        Kronecker substitution with recombination pruned by the degree sets
        of specializations.
        """
        ring = poly.ring
        content = _content(poly, name)
        factors = []
        if not content.is_ground:
            _, pieces = FactorService.factor(content)
            factors.extend(pieces)
            poly, _ = poly.div(content)
        remaining = poly.monic()
        while not remaining.is_ground:
            allowed = _allowed_degrees(remaining, name)
            found = None
            if allowed:
                base = max(remaining.degrees()) + 1
                pool = FactorService._kronecker_pool(remaining, base)
                found = FactorService._smallest_divisor(remaining, pool, base, name, allowed)
            if found is None:
                factors.append((remaining.monic(), 1))
                break
            multiplicity = 0
            while True:
                quotient, remainder = remaining.div(found)
                if remainder:
                    break
                remaining = quotient
                multiplicity += 1
            factors.append((found, multiplicity))
            logger.debug("split off %s^%d over %s", found, multiplicity, ring.domain)
        return _merged(factors)

    @staticmethod
    def _kronecker_pool(poly, base):
        """Distinct univariate factors of the Kronecker image, with multiplicities."""
        width = poly.ring.ngens
        degree = sum(d * base ** i for i, d in enumerate(poly.degrees()))
        if degree > KRONECKER_DEGREE_CAP:
            raise UnsupportedBaseError(
                "polynomial too large to factor over a prime field", degree=degree)
        line = polynomial_ring(poly.ring.domain, (KRONECKER_VARIABLE,), 'lex')
        image = line.from_dict({
            (sum(e * base ** i for i, e in enumerate(monom)),): coeff
            for monom, coeff in poly.items()
        })
        _, pieces = image.factor_list()
        pool = [(piece, multiplicity) for piece, multiplicity in pieces if not piece.is_ground]
        logger.debug("kronecker image of %d variables splits into %d pieces", width, len(pool))
        return pool

    @staticmethod
    def _smallest_divisor(poly, pool, base, name, allowed):
        """
        The divisor of ``poly`` whose Kronecker image has the least degree

        Images of degree above half of the whole image are skipped, since a
        proper divisor with a larger image has a cofactor with a smaller one.
        """
        ring = poly.ring
        degrees = poly.degrees()
        half = sum(piece.degree() * m for piece, m in pool) // 2
        for candidate in _recombinations(pool, half):
            lifted = _lift(candidate, ring, base)
            if lifted is None or lifted.is_ground:
                continue
            if degree_in(lifted, name) not in allowed:
                continue
            if any(d > bound for d, bound in zip(lifted.degrees(), degrees)):
                continue
            _, remainder = poly.div(lifted)
            if not remainder:
                return lifted.monic()
        return None

    @staticmethod
    def irreducible_factors(poly, name):
        """Distinct monic irreducible factors of ``poly`` that involve ``name``."""
        _, factors = FactorService.factor(poly, name)
        return [f for f, _ in factors if degree_in(f, name) > 0]

    @staticmethod
    def univariate_factor(poly, name):
        """
        Factor ``poly`` over k(other variables)[name]

        By Gauss's lemma this is the factorization over k, keeping the
        factors that involve ``name``.

        Returns:
            list of (factor, multiplicity)
        """
        _, factors = FactorService.factor(poly, name)
        return [(f, m) for f, m in factors if degree_in(f, name) > 0]

    @staticmethod
    def squarefree_part(poly, name=None):
        """Product of the distinct irreducible factors (those in ``name`` only, if given)."""
        _, factors = FactorService.factor(poly, name)
        result = poly.ring.one
        for f, _ in factors:
            if name is None or degree_in(f, name) > 0:
                result *= f
        return result


def _merged(pieces):
    merged = {}
    for piece, multiplicity in pieces:
        if piece.is_ground:
            continue
        piece = piece.monic()
        merged[piece] = merged.get(piece, 0) + multiplicity
    return list(merged.items())


def _content(poly, name):
    """Monic gcd of the coefficients of ``poly`` as a polynomial in ``name``."""
    ring = poly.ring
    content = ring.zero
    for coefficient in coefficients_in(poly, name, ring).values():
        content = coefficient if not content else content.gcd(coefficient)
        if content.is_ground:
            return ring.one
    return content.monic()


def _allowed_degrees(poly, name):
    """
    Degrees in ``name`` that a proper divisor of the primitive ``poly`` can have

    Any divisor keeps its degree at a point where the leading coefficient
    does not vanish, so its degree is a sum of factor degrees there. An
    empty set proves irreducibility.
    """
    ring = poly.ring
    top = degree_in(poly, name)
    allowed = set(range(1, top))
    line = polynomial_ring(ring.domain, (name,))
    others = [v for v in ring_names(ring) if v != name]
    p = ring.domain.mod
    good = 0
    for point in islice(product(range(p), repeat=len(others)), SPECIALIZATION_SCAN):
        images = {v: line.ground_new(a) for v, a in zip(others, point)}
        images[name] = line.gens[0]
        special = substitute(poly, images, line)
        if special.degree() != top:
            continue
        sums = {0}
        for piece, multiplicity in special.factor_list()[1]:
            for _ in range(multiplicity):
                sums |= {s + piece.degree() for s in sums}
        allowed &= sums
        good += 1
        if not allowed or good == SPECIALIZATIONS:
            break
    return allowed


def _recombinations(pool, half):
    """
    Products of the pool's pieces up to image degree ``half``, by increasing degree

    Raises:
        UnsupportedBaseError: more than RECOMBINATION_CAP candidates
    """
    choices = [()]
    for piece, multiplicity in pool:
        grown = []
        for chosen in choices:
            used = sum(pool[i][0].degree() * k for i, k in enumerate(chosen))
            for k in range(multiplicity + 1):
                if used + k * piece.degree() > half:
                    break
                grown.append(chosen + (k,))
        choices = grown
        if len(choices) > RECOMBINATION_CAP:
            raise UnsupportedBaseError(
                "too many recombinations to factor over a prime field", candidates=len(choices))

    def degree(chosen):
        return sum(pool[i][0].degree() * k for i, k in enumerate(chosen))

    for chosen in sorted(choices, key=degree):
        if not any(chosen):
            continue
        candidate = None
        for (piece, _), k in zip(pool, chosen):
            if k:
                power = piece ** k
                candidate = power if candidate is None else candidate * power
        yield candidate


def _lift(candidate, ring, base):
    """Invert the Kronecker substitution x_i -> z^(base^i), or None if digits overflow."""
    width = ring.ngens
    terms = {}
    for (exponent,), coeff in candidate.items():
        digits = []
        for _ in range(width):
            exponent, digit = divmod(exponent, base)
            digits.append(digit)
        if exponent:
            return None
        terms[tuple(digits)] = coeff
    return ring.from_dict(terms)
