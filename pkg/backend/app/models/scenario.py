from dataclasses import dataclass, field

VALUE = 'value'
PASS = 'pass'
FAIL = 'fail'
ERROR = 'error'


@dataclass(frozen=True)
class Location:
    line: int
    column: int


@dataclass(frozen=True)
class CellDecl:
    name: str
    cell: object
    at: Location


@dataclass(frozen=True)
class MapDecl:
    name: str
    source: str
    target: str
    images: tuple
    at: Location


@dataclass(frozen=True)
class CorrDecl:
    """
    A correspondence definition.

    ``kind`` is 'components' (explicit list of (generators text, multiplicity))
    or one of the constructions graph, transpose, id, compose, tensor, sum, scale
    with their argument names in ``args``.
    """
    name: str
    kind: str
    args: tuple
    at: Location
    source: str = None
    target: str = None
    components: tuple = ()
    aliases: tuple = ()


@dataclass(frozen=True)
class DivisorDecl:
    name: str
    on: str
    text: str
    at: Location


@dataclass(frozen=True)
class Command:
    index: int
    text: str
    verb: str
    args: tuple
    options: dict
    at: Location
    expect_fail: bool = False
    expected: str = None


@dataclass(frozen=True)
class Scenario:
    field: object
    cells: dict
    maps: dict
    correspondences: dict
    divisors: dict
    commands: tuple


@dataclass(frozen=True)
class Outcome:
    """What a command handler computed; ``passed`` is None for plain values."""
    value: object = None
    passed: bool = None
    renderings: dict = field(default_factory=dict)


@dataclass(frozen=True)
class Report:
    index: int
    command: str
    outcome: str
    value: object = None
    renderings: dict = field(default_factory=dict)
    error: dict = None
    elapsed: float = None

    @property
    def ok(self):
        return self.outcome in (VALUE, PASS)

    def to_dict(self):
        payload = {
            'index': self.index,
            'command': self.command,
            'outcome': self.outcome,
            'value': self.value,
            'renderings': self.renderings,
        }
        if self.error is not None:
            payload['error'] = self.error
        if self.elapsed is not None:
            payload['elapsed'] = self.elapsed
        return payload
