"""Plumbing on top of sympy's sparse polynomial rings.

Every polynomial in the package is a ``sympy.polys.rings.PolyElement``.
Rings are identified by their variable names, so moving a polynomial between
two rings (different variable order, extra variables, another monomial
order) is a matter of remapping exponent vectors by name.
"""
from functools import lru_cache
from itertools import combinations
from operator import itemgetter

from sympy.polys.groebnertools import groebner as sympy_groebner
from sympy.polys.monomials import monomial_divides
from sympy.polys.orderings import ProductOrder, grevlex, lex
from sympy.polys.rings import PolyRing

BASE_ORDERS = {
    'lex': lex,
    'grevlex': grevlex,
}


@lru_cache(maxsize=None)
def block_order(sizes, kinds):
    """Product order: block i (of ``sizes[i]`` variables) uses ``kinds[i]``."""
    args = []
    start = 0
    for size, kind in zip(sizes, kinds):
        args.append((BASE_ORDERS[kind], itemgetter(slice(start, start + size))))
        start += size
    return ProductOrder(*args)


@lru_cache(maxsize=None)
def polynomial_ring(domain, names, order='grevlex'):
    """
    Build (and cache) the ring over ``domain`` in ``names``.

    Args:
        domain: sympy domain (QQ or GF(p))
        names: tuple of variable names, in ring order
        order: 'lex', 'grevlex', or a sympy monomial order object

    Returns:
        PolyRing
    """
    if isinstance(order, str):
        order = BASE_ORDERS[order]
    return PolyRing(",".join(names) if names else "", domain, order)


def ring_names(ring):
    return tuple(str(symbol) for symbol in ring.symbols)


def transfer(poly, target):
    """Move ``poly`` into ``target``, matching variables by name."""
    source = poly.ring
    if source == target:
        return poly
    target_names = ring_names(target)
    positions = [
        target_names.index(name) if name in target_names else None
        for name in ring_names(source)
    ]
    width = target.ngens
    terms = {}
    for monom, coeff in poly.items():
        exponents = [0] * width
        for position, exponent in zip(positions, monom):
            if not exponent:
                continue
            if position is None:
                raise ValueError(
                    f"cannot move {format_polynomial(poly)} into ring {target_names}")
            exponents[position] = exponent
        terms[tuple(exponents)] = coeff
    return target.from_dict(terms)


def substitute(poly, images, target):
    """
    Replace every variable of ``poly`` by its image.

    Args:
        poly: PolyElement
        images: dict variable name -> PolyElement of ``target``
        target: PolyRing the result lives in

    Returns:
        PolyElement of ``target``
    """
    names = ring_names(poly.ring)
    result = target.zero
    for monom, coeff in poly.items():
        term = target.ground_new(coeff)
        for name, exponent in zip(names, monom):
            if exponent:
                term = term * images[name] ** exponent
        result += term
    return result


def variables_of(poly):
    """Names of the variables that actually occur in ``poly``."""
    names = ring_names(poly.ring)
    used = set()
    for monom in poly.itermonoms():
        used.update(name for name, exponent in zip(names, monom) if exponent)
    return used


def degree_in(poly, name):
    index = ring_names(poly.ring).index(name)
    return max((monom[index] for monom in poly.itermonoms()), default=-1)


def coefficients_in(poly, name, target):
    """
    Split ``poly`` as a polynomial in ``name``.

    Returns:
        dict exponent -> coefficient (PolyElement of ``target``, which must
        not contain ``name``)
    """
    index = ring_names(poly.ring).index(name)
    pieces = {}
    for monom, coeff in poly.items():
        rest = monom[:index] + (0,) + monom[index + 1:]
        piece = poly.ring.from_dict({rest: coeff})
        pieces[monom[index]] = pieces.get(monom[index], poly.ring.zero) + piece
    return {exponent: transfer(piece, target) for exponent, piece in pieces.items()}


def format_polynomial(poly):
    """Render with `^` powers and `*` products, terms in ring order."""
    if not poly:
        return "0"
    names = ring_names(poly.ring)
    domain = poly.ring.domain
    pieces = []
    for monom, coeff in poly.terms():
        value = domain.to_sympy(coeff)
        negative = value < 0
        magnitude = -value if negative else value
        factors = [
            name if exponent == 1 else f"{name}^{exponent}"
            for name, exponent in zip(names, monom) if exponent
        ]
        if magnitude != 1 or not factors:
            factors.insert(0, str(magnitude))
        body = "*".join(factors)
        if not pieces:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(pieces)


def reduce_basis(basis, ring):
    """Turn any Gröbner basis of ``ring`` into the reduced, monic, sorted one."""
    basis = [g.monic() for g in basis if g]
    minimal = []
    for g in sorted(basis, key=lambda h: ring.order(h.LM)):
        if not any(monomial_divides(h.LM, g.LM) for h in minimal):
            minimal.append(g)
    reduced = []
    for index, g in enumerate(minimal):
        others = minimal[:index] + minimal[index + 1:]
        reduced.append((g.rem(others) if others else g).monic())
    return tuple(sorted(reduced, key=lambda h: ring.order(h.LM), reverse=True))


def groebner_basis(polys, ring):
    """Reduced Gröbner basis of the ideal generated by ``polys`` in ``ring``."""
    generators = [transfer(p, ring) for p in polys]
    generators = [g for g in generators if g]
    if not generators:
        return ()
    if ring.ngens == 0:
        return (ring.one,)
    return reduce_basis(sympy_groebner(generators, ring), ring)


def is_unit_basis(basis):
    return len(basis) == 1 and basis[0].is_ground and bool(basis[0])


def krull_dimension(basis, ring):
    """Dimension of the ideal with Gröbner basis ``basis`` (-1 for the unit ideal)."""
    n = ring.ngens
    if not basis:
        return n
    if is_unit_basis(basis):
        return -1
    supports = [frozenset(i for i, e in enumerate(g.LM) if e) for g in basis]
    for size in range(n, -1, -1):
        for subset in combinations(range(n), size):
            chosen = set(subset)
            if not any(support <= chosen for support in supports):
                return size
    return 0


def rename(poly, mapping, target):
    """Move ``poly`` into ``target`` after renaming its variables by ``mapping``."""
    names = [mapping.get(name, name) for name in ring_names(poly.ring)]
    target_names = ring_names(target)
    width = target.ngens
    terms = {}
    for monom, coeff in poly.items():
        exponents = [0] * width
        for name, exponent in zip(names, monom):
            if exponent:
                exponents[target_names.index(name)] += exponent
        terms[tuple(exponents)] = coeff
    return target.from_dict(terms)


def is_unit_monomial(poly, units):
    """True for c·m with c a nonzero scalar and m a monomial in the ``units`` variables."""
    if not poly or len(poly) != 1:
        return False
    (monom,) = poly.itermonoms()
    names = ring_names(poly.ring)
    return all(not exponent or name in units for name, exponent in zip(names, monom))


def leading_coefficient(poly, width):
    """
    Coefficient of the leading monomial in the first ``width`` variables.

    The result lives in ``poly.ring`` but is free of those variables, so it
    can be transferred into a ring of the remaining ones.
    """
    lead = poly.LM[:width]
    padding = (0,) * width
    return poly.ring.from_dict({
        padding + monom[width:]: coeff
        for monom, coeff in poly.items() if monom[:width] == lead
    })
