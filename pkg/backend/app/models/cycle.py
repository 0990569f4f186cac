from dataclasses import dataclass, field, replace
from functools import cached_property

from ..utils.rings import rename
from .ideal import Ideal


@dataclass(frozen=True, eq=False)
class PrimeComponent:
    """
    A prime ideal of the ambient cell, dominant over the base coordinates.

    ``residue_degree`` is the degree of the function field over k(base) when
    the component is finite; for positive relative dimension it is taken over
    k(base, S) for the first independent set S of fiber coordinates.
    """
    ambient: object
    base: tuple
    ideal: object
    relative_dimension: int = 0
    residue_degree: int = 1
    finite: bool = False
    flatness: str = None
    trusted: bool = False

    @cached_property
    def canonical(self):
        return self.ideal.canonical()

    @property
    def fiber(self):
        return tuple(v for v in self.ambient.variables if v not in self.base)

    def __eq__(self, other):
        if not isinstance(other, PrimeComponent):
            return NotImplemented
        return (self.ambient, self.base, self.canonical) == \
            (other.ambient, other.base, other.canonical)

    def __hash__(self):
        return hash((self.ambient, self.base, self.canonical))

    def to_dict(self):
        return {'groebner': list(self.canonical), 'residue_degree': self.residue_degree}


@dataclass(frozen=True, eq=False)
class Cycle:
    """
    Integer combination of prime components, relative to a base.

    Components are stored sorted by their canonical form and never with
    multiplicity zero, so two cycles are equal exactly when their canonical
    forms agree.
    """
    ambient: object
    base: tuple
    relative_dimension: int
    terms: tuple = field(default_factory=tuple)

    @classmethod
    def build(cls, ambient, base, relative_dimension, pairs):
        merged = {}
        representative = {}
        for component, multiplicity in pairs:
            if component.ambient != ambient or component.base != tuple(base):
                raise ValueError("component lives in another ambient or over another base")
            key = component.canonical
            merged[key] = merged.get(key, 0) + int(multiplicity)
            representative.setdefault(key, component)
        terms = tuple((representative[key], merged[key]) for key in sorted(merged) if merged[key])
        return cls(ambient, tuple(base), relative_dimension, terms)

    @classmethod
    def zero(cls, ambient, base, relative_dimension=0):
        return cls(ambient, tuple(base), relative_dimension, ())

    @property
    def components(self):
        return tuple(component for component, _ in self.terms)

    @property
    def is_zero(self):
        return not self.terms

    @property
    def fiber(self):
        return tuple(v for v in self.ambient.variables if v not in self.base)

    def same_frame(self, other):
        return (self.ambient, self.base, self.relative_dimension) == \
            (other.ambient, other.base, other.relative_dimension)

    def _check(self, other):
        if not self.same_frame(other):
            raise ValueError("cycles live in different ambients, bases or dimensions")

    def __add__(self, other):
        self._check(other)
        return Cycle.build(self.ambient, self.base, self.relative_dimension, self.terms + other.terms)

    def __neg__(self):
        return Cycle(self.ambient, self.base, self.relative_dimension,
                     tuple((c, -m) for c, m in self.terms))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        return Cycle.build(self.ambient, self.base, self.relative_dimension,
                           tuple((c, m * int(scalar)) for c, m in self.terms))

    __rmul__ = __mul__

    def canonical(self):
        return tuple((component.canonical, multiplicity) for component, multiplicity in self.terms)

    def __eq__(self, other):
        if not isinstance(other, Cycle):
            return NotImplemented
        return self.same_frame(other) and self.canonical() == other.canonical()

    def __hash__(self):
        return hash((self.ambient, self.base, self.relative_dimension, self.canonical()))

    def multiplicity(self, component):
        for c, m in self.terms:
            if c == component:
                return m
        return 0

    def to_dict(self):
        return {
            'ambient': self.ambient.describe(),
            'base': list(self.base),
            'r': self.relative_dimension,
            'components': [dict(c.to_dict(), mult=m) for c, m in self.terms],
        }

    def render(self):
        if self.is_zero:
            return '0'
        pieces = []
        for component, multiplicity in self.terms:
            body = f"[{', '.join(component.canonical)}]"
            pieces.append(body if multiplicity == 1 else f"{multiplicity}*{body}")
        return ' + '.join(pieces)

    def __str__(self):
        return self.render()

    def relabeled(self, ambient, mapping):
        """Rename coordinates by ``mapping``; ``ambient`` holds the renamed coordinates in any order."""
        renamed = set(mapping.get(v, v) for v in self.base)
        base = tuple(v for v in ambient.variables if v in renamed)
        ring = ambient.ring()
        pairs = []
        for component, multiplicity in self.terms:
            prime = Ideal(ambient.field, ambient.variables,
                          [rename(g, mapping, ring) for g in component.ideal.generators],
                          ambient.units, saturated=True)
            pairs.append((replace(component, ambient=ambient, base=base, ideal=prime), multiplicity))
        return Cycle.build(ambient, base, self.relative_dimension, pairs)
