from dataclasses import dataclass, field

NOT_COMPUTED = 'not computed'


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of comparing two independently computed sides of an identity."""
    name: str
    passed: bool
    lhs: str = ''
    rhs: str = ''
    details: dict = field(default_factory=dict)

    @classmethod
    def compare(cls, name, lhs, rhs, **details):
        return cls(name, lhs == rhs, _render(lhs), _render(rhs), details)

    def to_dict(self):
        payload = {'name': self.name, 'passed': self.passed, 'lhs': self.lhs, 'rhs': self.rhs}
        if self.details:
            payload['details'] = {key: _render(value) for key, value in self.details.items()}
        return payload


@dataclass(frozen=True)
class RhoEvidence:
    """The three validity conditions of ρ_n; ``boundary`` is None when not computed."""
    n: int
    proper: bool
    finite: bool
    boundary: bool = None

    @property
    def valid(self):
        return self.proper and self.finite and self.boundary is not False

    def to_dict(self):
        return {
            'n': self.n,
            'proper': self.proper,
            'finite': self.finite,
            'boundary': NOT_COMPUTED if self.boundary is None else self.boundary,
        }


@dataclass(frozen=True)
class RhoResult:
    n: int
    evidence: RhoEvidence
    intersection: object
    correspondence: object

    @property
    def degree(self):
        return self.correspondence.degree

    def to_dict(self):
        return {
            'n': self.n,
            'evidence': self.evidence.to_dict(),
            'intersection': self.intersection.to_dict(),
            'correspondence': self.correspondence.to_dict(),
            'degree': self.degree,
        }


@dataclass(frozen=True)
class HomotopyResult:
    """h_{n,m} on X × A^1 with its endpoints recomputed at t = 0 and t = 1."""
    n: int
    m: int
    correspondence: object
    at_zero: object
    at_one: object
    rho_m: object
    rho_n: object

    @property
    def endpoints_match(self):
        return self.at_zero == self.rho_m and self.at_one == self.rho_n

    def to_dict(self):
        return {
            'n': self.n,
            'm': self.m,
            'correspondence': self.correspondence.to_dict(),
            'at_zero': self.at_zero.to_dict(),
            'at_one': self.at_one.to_dict(),
            'endpoints_match': self.endpoints_match,
        }


def _render(value):
    if isinstance(value, (bool, int, str)) or value is None:
        return value
    render = getattr(value, 'render', None)
    return render() if render else str(value)
