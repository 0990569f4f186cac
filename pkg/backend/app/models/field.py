import re
from dataclasses import dataclass
from functools import cached_property

from sympy import isprime
from sympy.polys.domains import GF, QQ

RATIONAL = 'rational'
PRIME_FIELD = 'prime-field'
MAX_CHARACTERISTIC = 2 ** 61


@dataclass(frozen=True)
class FieldSpec:
    """The ground field k: the rationals or F_p with p < 2^61."""
    kind: str = RATIONAL
    characteristic: int = 0

    def __post_init__(self):
        if self.kind == RATIONAL:
            if self.characteristic != 0:
                raise ValueError("the rational field has characteristic 0")
        elif self.kind == PRIME_FIELD:
            p = self.characteristic
            if not (1 < p < MAX_CHARACTERISTIC and isprime(p)):
                raise ValueError(f"characteristic {p} is not a prime below 2^61")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @classmethod
    def rational(cls):
        return cls(RATIONAL, 0)

    @classmethod
    def prime(cls, p):
        return cls(PRIME_FIELD, int(p))

    @classmethod
    def from_name(cls, name):
        """Parse `Q`, `QQ` or `F<p>` / `GF<p>`."""
        text = name.strip()
        if text in ('Q', 'QQ'):
            return cls.rational()
        match = re.fullmatch(r'(?:F|GF)\(?(\d+)\)?', text)
        if not match:
            raise ValueError(f"unknown field {name!r}")
        return cls.prime(int(match.group(1)))

    @property
    def name(self):
        return 'Q' if self.kind == RATIONAL else f'F{self.characteristic}'

    @cached_property
    def domain(self):
        return QQ if self.kind == RATIONAL else GF(self.characteristic)

    def scalar(self, numerator, denominator=1):
        if self.kind == RATIONAL:
            return QQ(int(numerator), int(denominator))
        if int(denominator) % self.characteristic == 0:
            raise ZeroDivisionError(f"{denominator} is zero in {self.name}")
        return self.domain(int(numerator)) / self.domain(int(denominator))

    def is_zero(self, numerator):
        return numerator == 0 if self.kind == RATIONAL else numerator % self.characteristic == 0

    def divides_characteristic(self, n):
        return self.characteristic != 0 and n % self.characteristic == 0

    def __str__(self):
        return self.name
