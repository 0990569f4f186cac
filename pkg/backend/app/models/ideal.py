import threading
from dataclasses import dataclass, field

from ..utils.rings import (block_order, format_polynomial, groebner_basis,
                           is_unit_basis, polynomial_ring, transfer)


@dataclass(frozen=True)
class MonomialOrder:
    """lex, grevlex, or a block order given as ((size, kind), ...)."""
    kind: str = 'grevlex'
    blocks: tuple = ()

    @classmethod
    def block(cls, *blocks):
        return cls('block', tuple((int(size), kind) for size, kind in blocks))

    def sympy_order(self):
        if self.kind == 'block':
            sizes = tuple(size for size, _ in self.blocks)
            kinds = tuple(kind for _, kind in self.blocks)
            return block_order(sizes, kinds)
        return self.kind


LEX = MonomialOrder('lex')
GREVLEX = MonomialOrder('grevlex')


class Ideal:
    """
    An ideal of k[variables], localized at the unit variables.

    Generators are kept in the grevlex ring of ``variables``. Reduced Gröbner
    bases are cached per (variable order, monomial order) under a lock, so
    instances can be shared between threads.
    """

    def __init__(self, field_spec, variables, generators, units=(), saturated=False):
        self.field = field_spec
        self.variables = tuple(variables)
        self.units = tuple(name for name in self.variables if name in set(units))
        ring = self.ring()
        self.generators = tuple(g for g in (transfer(p, ring) for p in generators) if g)
        self.saturated = saturated
        self._bases = {}
        self._lock = threading.Lock()

    def ring(self, order=GREVLEX, variables=None):
        names = self.variables if variables is None else tuple(variables)
        return polynomial_ring(self.field.domain, names, order.sympy_order())

    def groebner(self, order=GREVLEX, variables=None):
        """Reduced Gröbner basis in the ring of ``variables`` (default: own order)."""
        names = self.variables if variables is None else tuple(variables)
        key = (names, order)
        with self._lock:
            cached = self._bases.get(key)
        if cached is not None:
            return cached
        basis = groebner_basis(self.generators, self.ring(order, names))
        with self._lock:
            self._bases.setdefault(key, basis)
        return basis

    @property
    def is_unit(self):
        return is_unit_basis(self.groebner())

    @property
    def is_zero(self):
        return not self.generators

    def contains(self, poly):
        ring = self.ring()
        element = transfer(poly, ring)
        basis = self.groebner()
        if not basis:
            return not element
        return not element.rem(list(basis))

    def with_generators(self, extra, saturated=False):
        return Ideal(self.field, self.variables, self.generators + tuple(extra),
                     self.units, saturated=saturated)

    def __add__(self, other):
        if self.variables != other.variables:
            raise ValueError("ideals live in different rings")
        return self.with_generators(other.generators)

    def in_variables(self, variables, units=None):
        """The same generators read in a (larger or reordered) variable list."""
        return Ideal(self.field, variables, self.generators,
                     self.units if units is None else units, saturated=False)

    def canonical(self):
        """Strings of the reduced lex basis; equal ideals give equal tuples."""
        return tuple(format_polynomial(g) for g in self.groebner(LEX))

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return (self.field, self.variables) == (other.field, other.variables) \
            and self.canonical() == other.canonical()

    def __hash__(self):
        return hash((self.field, self.variables, self.canonical()))

    def __repr__(self):
        body = ", ".join(format_polynomial(g) for g in self.generators)
        return f"Ideal({body} in {','.join(self.variables)})"


@dataclass(frozen=True)
class LocalFactor:
    """One maximal ideal of a finite algebra with its local length and residue degree."""
    maximal_ideal: Ideal
    length: int
    residue_degree: int


@dataclass(frozen=True)
class ArtinianDecomposition:
    parameters: tuple
    factors: tuple = field(default_factory=tuple)

    @property
    def dimension(self):
        return sum(f.length * f.residue_degree for f in self.factors)
