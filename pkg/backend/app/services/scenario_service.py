"""Scenario files: parsing into a Scenario and running its commands into Reports."""
import logging
import re
import time

from ..errors import (CorrCancelError, DuplicateNameError, FieldMismatchError, InvalidMorphismError,
                      ScenarioError, UnknownIdentifierError)
from ..models.cell import Cell, CellMorphism, Coordinate
from ..models.field import FieldSpec
from ..models.scenario import (ERROR, FAIL, PASS, VALUE, CellDecl, Command, CorrDecl, DivisorDecl,
                               Location, MapDecl, Report, Scenario)
from ..utils.parser import IDENTIFIER, parse_fraction, parse_function, parse_polynomial
from ..utils.rings import rename
from .correspondence_service import CorrespondenceService
from .verification_service import VerificationService

logger = logging.getLogger(__name__)

NAME = r'[A-Za-z_][A-Za-z0-9_]*'
FIELD_RE = re.compile(r'field\s+(?P<name>\S+)\s*')
CELL_RE = re.compile(rf'cell\s+(?P<name>{NAME})\s*=\s*(?P<body>.+)', re.S)
FACTOR_RE = re.compile(rf'\s*(?P<kind>Gm|A1)\s*\(\s*(?P<names>{NAME}(?:\s*,\s*{NAME})*)\s*\)\s*')
MAP_RE = re.compile(
    rf'map\s+(?P<name>{NAME})\s*:\s*(?P<source>{NAME})\s*->\s*(?P<target>{NAME})\s*\{{(?P<body>.*)\}}\s*',
    re.S)
CORR_RE = re.compile(
    rf'corr\s+(?P<name>{NAME})\s*:\s*(?P<source>{NAME})\s*->\s*(?P<target>{NAME})\s*=\s*'
    rf'\{{(?P<body>.*)\}}\s*', re.S)
BUILD_RE = re.compile(rf'corr\s+(?P<name>{NAME})\s*=\s*(?P<kind>{NAME})(?P<args>.*)', re.S)
COMPONENT_RE = re.compile(r'\s*component\s+"(?P<text>[^"]*)"(?:\s+mult\s+(?P<mult>-?\d+))?\s*')
DIVISOR_RE = re.compile(rf'divisor\s+(?P<name>{NAME})\s+on\s+(?P<on>{NAME})\s*=\s*(?P<body>.+)', re.S)
COMMAND_RE = re.compile(r'(?P<fail>expect-fail\s+)?(?P<verb>[a-z]+)(?P<rest>.*)', re.S)
TOKEN_RE = re.compile(r'\S+')

BUILDERS = {
    # kind: argument kinds
    'graph': ('map',),
    'transpose': ('map',),
    'id': ('cell',),
    'compose': ('corr', 'corr'),
    'tensor': ('corr', 'corr'),
    'sum': ('corr', 'corr'),
    'scale': ('int', 'corr'),
}

VERBS = {
    # verb: (argument kind, options taking a value, flags)
    'class': ('corr', (), ()),
    'rho': ('corr', ('n', 'divisor'), ('auto',)),
    'homotopy': ('corr', ('n', 'm'), ()),
    'newton': ('corr', (), ()),
    'degree': ('corr', (), ()),
    'show': ('any', (), ()),
    'verify': ('suite', (), ()),
}


class _Statement:
    """Statement text with the (line, column) of every character."""

    def __init__(self, text, positions):
        self.text = text
        self.positions = positions

    def at(self, offset=0):
        if not self.positions:
            return Location(0, 0)
        line, column = self.positions[min(offset, len(self.positions) - 1)]
        return Location(line, column)

    def error(self, cls, message, offset=0):
        at = self.at(offset)
        return cls(message, at.line, at.column)


def _statements(text):
    """Split on `;` and newlines outside quotes and braces; `#` starts a comment."""
    statements = []
    chars, positions = [], []
    depth = 0
    quoted = False
    comment = False
    line, column = 1, 1

    def flush():
        body = ''.join(chars)
        stripped = body.strip()
        if stripped:
            start = len(body) - len(body.lstrip())
            statements.append(_Statement(stripped, positions[start:start + len(stripped)]))
        chars.clear()
        positions.clear()

    for char in text:
        if comment and char != '\n':
            pass
        elif char == '#' and not quoted:
            comment = True
        elif char == '"':
            quoted = not quoted
            chars.append(char)
            positions.append((line, column))
        elif not quoted and char in '{}':
            depth += 1 if char == '{' else -1
            if depth < 0:
                raise ScenarioError("unbalanced '}'", line, column)
            chars.append(char)
            positions.append((line, column))
        elif not quoted and depth == 0 and char in ';\n':
            flush()
        else:
            chars.append(' ' if char == '\n' else char)
            positions.append((line, column))
        if char == '\n':
            comment = False
            line, column = line + 1, 1
        else:
            column += 1
    if quoted:
        raise ScenarioError("unterminated string", line, column)
    if depth:
        raise ScenarioError("unbalanced '{'", line, column)
    flush()
    return statements


def _split(text, separators, offset=0):
    """Pieces of ``text`` between separators, with their offsets."""
    pieces = []
    start = 0
    for index, char in enumerate(text + separators[0]):
        if char in separators:
            piece = text[start:index]
            if piece.strip():
                lead = len(piece) - len(piece.lstrip())
                pieces.append((piece.strip(), offset + start + lead))
            start = index + 1
    return pieces


class _Parser:
    def __init__(self, default_field):
        self.field = default_field
        self.field_declared = False
        self.cells = {}
        self.maps = {}
        self.correspondences = {}
        self.divisors = {}
        self.commands = []

    def names(self):
        return {**self.cells, **self.maps, **self.correspondences, **self.divisors}

    def declare(self, statement, name, offset):
        if name in self.names():
            raise statement.error(DuplicateNameError, f"name {name!r} is already defined", offset)

    def lookup(self, statement, table, name, offset, kind):
        if name not in table:
            raise statement.error(UnknownIdentifierError, f"unknown {kind} {name!r}", offset)
        return table[name]

    def parse(self, statement):
        text = statement.text
        keyword = text.split(None, 1)[0]
        handler = {
            'field': self.parse_field,
            'cell': self.parse_cell,
            'map': self.parse_map,
            'corr': self.parse_corr,
            'divisor': self.parse_divisor,
        }.get(keyword, self.parse_command)
        handler(statement)

    def parse_field(self, statement):
        match = FIELD_RE.fullmatch(statement.text)
        if not match:
            raise statement.error(ScenarioError, "expected `field Q` or `field F<p>`")
        try:
            field = FieldSpec.from_name(match.group('name'))
        except ValueError as exc:
            raise statement.error(ScenarioError, str(exc), match.start('name')) from exc
        if self.cells:
            raise statement.error(FieldMismatchError, "the field must be declared before any cell")
        if self.field_declared and field != self.field:
            raise statement.error(FieldMismatchError,
                                  f"field {field} conflicts with the field {self.field} in use")
        self.field = field
        self.field_declared = True

    def parse_cell(self, statement):
        match = CELL_RE.fullmatch(statement.text)
        if not match:
            raise statement.error(ScenarioError, "expected `cell NAME = pt` or a product of Gm(..)/A1(..)")
        name = match.group('name')
        self.declare(statement, name, match.start('name'))
        body = match.group('body')
        coordinates = []
        if body.strip() != 'pt':
            for piece, offset in _split(body, '*', match.start('body')):
                factor = FACTOR_RE.fullmatch(piece)
                if not factor:
                    raise statement.error(ScenarioError, f"bad factor {piece!r}", offset)
                multiplicative = factor.group('kind') == 'Gm'
                for variable in re.split(r'\s*,\s*', factor.group('names')):
                    coordinates.append(Coordinate(variable, multiplicative))
        try:
            cell = Cell(tuple(coordinates), self.field)
        except ValueError as exc:
            raise statement.error(DuplicateNameError, str(exc), match.start('body')) from exc
        self.cells[name] = CellDecl(name, cell, statement.at())

    def parse_map(self, statement):
        match = MAP_RE.fullmatch(statement.text)
        if not match:
            raise statement.error(ScenarioError, "expected `map NAME : X -> Y { y = ...; ... }`")
        name = match.group('name')
        self.declare(statement, name, match.start('name'))
        source = self.lookup(statement, self.cells, match.group('source'), match.start('source'), 'cell').cell
        target = self.lookup(statement, self.cells, match.group('target'), match.start('target'), 'cell').cell
        images = {}
        for piece, offset in _split(match.group('body'), ';,', match.start('body')):
            left, sep, right = piece.partition('=')
            coordinate = left.strip()
            if not sep or coordinate not in target.variables:
                raise statement.error(UnknownIdentifierError,
                                      f"expected `<coordinate of {target}> = <function>`", offset)
            if coordinate in images:
                raise statement.error(DuplicateNameError, f"{coordinate} is assigned twice", offset)
            at = statement.at(offset + len(left) + 1)
            images[coordinate] = parse_function(right, source, at.line, at.column)
        missing = [v for v in target.variables if v not in images]
        if missing:
            raise statement.error(ScenarioError, f"no image for {', '.join(missing)}", match.start('body'))
        try:
            morphism = CellMorphism.from_mapping(source, target, images)
        except InvalidMorphismError as exc:
            raise statement.error(ScenarioError, exc.message, match.start('body')) from exc
        self.maps[name] = MapDecl(name, match.group('source'), match.group('target'), morphism,
                                  statement.at())

    def parse_corr(self, statement):
        match = CORR_RE.fullmatch(statement.text)
        if match:
            self.parse_components(statement, match)
            return
        match = BUILD_RE.fullmatch(statement.text)
        if not match:
            raise statement.error(ScenarioError, "expected `corr NAME : X -> Y = { ... }` or `corr NAME = ...`")
        name = match.group('name')
        self.declare(statement, name, match.start('name'))
        kind = match.group('kind')
        if kind not in BUILDERS:
            raise statement.error(UnknownIdentifierError, f"unknown construction {kind!r}",
                                  match.start('kind'))
        tokens = [(m.group(0), match.start('args') + m.start())
                  for m in TOKEN_RE.finditer(match.group('args'))]
        expected = BUILDERS[kind]
        if len(tokens) != len(expected):
            raise statement.error(ScenarioError, f"{kind} takes {len(expected)} argument(s)",
                                  match.start('kind'))
        args = []
        for (token, offset), role in zip(tokens, expected):
            if role == 'int':
                if not re.fullmatch(r'-?\d+', token):
                    raise statement.error(ScenarioError, f"expected an integer, got {token!r}", offset)
                args.append(int(token))
                continue
            table = {'map': self.maps, 'cell': self.cells, 'corr': self.correspondences}[role]
            self.lookup(statement, table, token, offset, role)
            args.append(token)
        self.correspondences[name] = CorrDecl(name, kind, tuple(args), statement.at())

    def parse_components(self, statement, match):
        name = match.group('name')
        self.declare(statement, name, match.start('name'))
        source = self.lookup(statement, self.cells, match.group('source'), match.start('source'), 'cell').cell
        target = self.lookup(statement, self.cells, match.group('target'), match.start('target'), 'cell').cell
        ambient, target_names = CorrespondenceService.ambient_for(source, target)

        pieces = []
        for piece, offset in _split(match.group('body'), ';', match.start('body')):
            component = COMPONENT_RE.fullmatch(piece)
            if not component:
                raise statement.error(ScenarioError, 'expected `component "<polynomials>" mult <n>`', offset)
            pieces.append((component.group('text'), offset + component.start('text'),
                           int(component.group('mult') or 1)))

        # target coordinates renamed in the ambient may be written under any fresh name
        clashing = [renamed for original, renamed in zip(target.variables, target_names)
                    if original != renamed]
        free = []
        for text, offset, _ in pieces:
            for identifier in IDENTIFIER.finditer(text):
                word = identifier.group(0)
                if word in ambient.variables or word in free:
                    continue
                if len(free) == len(clashing):
                    raise statement.error(UnknownIdentifierError, f"unknown variable {word!r}",
                                          offset + identifier.start())
                free.append(word)
        aliases = tuple(zip(free, clashing))
        written = ambient.renamed({renamed: alias for alias, renamed in aliases})
        back = {alias: renamed for alias, renamed in aliases}

        components = []
        for text, offset, multiplicity in pieces:
            generators = []
            for poly, start in _split(text, ',', offset):
                at = statement.at(start)
                parsed = parse_polynomial(poly, written, at.line, at.column)
                generators.append(rename(parsed, back, ambient.ring()))
            components.append((tuple(generators), multiplicity))
        self.correspondences[name] = CorrDecl(
            name, 'components', (), statement.at(), match.group('source'), match.group('target'),
            tuple(components), aliases)

    def parse_divisor(self, statement):
        match = DIVISOR_RE.fullmatch(statement.text)
        if not match:
            raise statement.error(ScenarioError, "expected `divisor NAME on CELL = f` or `(f)/(g)`")
        name = match.group('name')
        self.declare(statement, name, match.start('name'))
        cell = self.lookup(statement, self.cells, match.group('on'), match.start('on'), 'cell').cell
        at = statement.at(match.start('body'))
        parse_fraction(match.group('body'), cell, at.line, at.column)
        self.divisors[name] = DivisorDecl(name, match.group('on'), match.group('body').strip(), at)

    def parse_command(self, statement):
        match = COMMAND_RE.fullmatch(statement.text)
        verb = match.group('verb') if match else ''
        if verb not in VERBS:
            raise statement.error(ScenarioError, f"unknown statement {statement.text.split()[0]!r}")
        tokens = [(m.group(0), match.start('rest') + m.start())
                  for m in TOKEN_RE.finditer(match.group('rest'))]
        expected = None
        if len(tokens) >= 2 and tokens[-2][0] == 'expect':
            expected = tokens[-1][0]
            tokens = tokens[:-2]
        role, valued, flags = VERBS[verb]
        args, options = [], {}
        index = 0
        while index < len(tokens):
            token, offset = tokens[index]
            if token.startswith('--'):
                option = token[2:]
                if option in flags:
                    options[option] = True
                elif option in valued and index + 1 < len(tokens):
                    index += 1
                    options[option] = self.option_value(statement, option, *tokens[index])
                else:
                    raise statement.error(ScenarioError, f"unknown or incomplete option {token!r}", offset)
            else:
                args.append((token, offset))
            index += 1
        if len(args) != 1:
            raise statement.error(ScenarioError, f"{verb} takes one argument", match.start('verb'))
        (target, offset), = args
        if role == 'corr':
            self.lookup(statement, self.correspondences, target, offset, 'correspondence')
        elif role == 'any':
            self.lookup(statement, self.names(), target, offset, 'name')
        elif target not in VerificationService.suite_names():
            raise statement.error(UnknownIdentifierError, f"unknown suite {target!r}", offset)
        if verb == 'homotopy' and not {'n', 'm'} <= set(options):
            raise statement.error(ScenarioError, "homotopy needs --n and --m", match.start('verb'))
        if verb == 'rho' and 'n' in options and 'auto' in options:
            raise statement.error(ScenarioError, "--n and --auto exclude each other", match.start('verb'))
        self.commands.append(Command(len(self.commands), statement.text, verb, (target,), options,
                                     statement.at(), bool(match.group('fail')), expected))

    def option_value(self, statement, option, token, offset):
        if option == 'divisor':
            self.lookup(statement, self.divisors, token, offset, 'divisor')
            return token
        if not re.fullmatch(r'-?\d+', token):
            raise statement.error(ScenarioError, f"--{option} expects an integer", offset)
        return int(token)

    def scenario(self):
        return Scenario(self.field, self.cells, self.maps, self.correspondences, self.divisors,
                        tuple(self.commands))


class Workspace:
    """Run-time view of a scenario: correspondences are built on first use and cached."""

    def __init__(self, scenario, seed=0, settings=None):
        self.scenario = scenario
        self.seed = seed
        self.settings = settings or {}
        self.cache = {}

    @property
    def field(self):
        return self.scenario.field

    def cell(self, name):
        return self.scenario.cells[name].cell

    def morphism(self, name):
        return self.scenario.maps[name].images

    def divisor(self, name):
        decl = self.scenario.divisors[name]
        cell = self.cell(decl.on)
        return cell, parse_fraction(decl.text, cell, decl.at.line, decl.at.column)

    def correspondence(self, name):
        if name not in self.cache:
            self.cache[name] = self._build(self.scenario.correspondences[name])
        return self.cache[name]

    def _build(self, decl):
        if decl.kind == 'components':
            return CorrespondenceService.from_components(
                self.cell(decl.source), self.cell(decl.target), list(decl.components))
        args = decl.args
        if decl.kind == 'graph':
            return CorrespondenceService.graph(self.morphism(args[0]))
        if decl.kind == 'transpose':
            return CorrespondenceService.transpose(self.morphism(args[0]))
        if decl.kind == 'id':
            return CorrespondenceService.identity(self.cell(args[0]))
        if decl.kind == 'scale':
            return args[0] * self.correspondence(args[1])
        left, right = (self.correspondence(arg) for arg in args)
        if decl.kind == 'compose':
            return CorrespondenceService.compose(left, right)
        if decl.kind == 'tensor':
            return CorrespondenceService.tensor(left, right)
        try:
            return left + right
        except ValueError as exc:
            raise InvalidMorphismError(str(exc), corr=decl.name) from exc


class ScenarioService:

    @staticmethod
    def parse_scenario(text, default_field=None):
        """
        Parse scenario text

        Returns:
            Scenario

        Raises:
            ScenarioError: the first syntax error, unknown identifier,
                duplicate name or field mismatch, with its line and column
        """
        parser = _Parser(default_field or FieldSpec.rational())
        for statement in _statements(text):
            parser.parse(statement)
        return parser.scenario()

    @staticmethod
    def run(scenario, handlers, seed=0, settings=None):
        """
        Execute the commands in order

        Never raises: every exception becomes an error Report.
        """
        workspace = Workspace(scenario, seed, settings)
        timing = bool(workspace.settings.get('REPORT_TIMING'))
        reports = []
        for command in scenario.commands:
            started = time.perf_counter()
            report = ScenarioService._execute(command, handlers, workspace)
            if timing:
                report = Report(report.index, report.command, report.outcome, report.value,
                                report.renderings, report.error,
                                round(time.perf_counter() - started, 6))
            reports.append(report)
        return reports

    @staticmethod
    def _execute(command, handlers, workspace):
        try:
            outcome = handlers[command.verb](command, workspace)
        except CorrCancelError as exc:
            if command.expect_fail:
                return Report(command.index, command.text, PASS, exc.code, {}, exc.to_dict())
            logger.error(f"Error running {command.text!r}: {str(exc)}")
            return Report(command.index, command.text, ERROR, None, {}, exc.to_dict())
        except Exception as exc:
            logger.exception("unexpected failure in %r", command.text)
            error = {'code': 'internal', 'message': f"{type(exc).__name__}: {exc}"}
            return Report(command.index, command.text, ERROR, None, {}, error)

        if outcome.passed is None:
            state = VALUE
        else:
            state = PASS if outcome.passed else FAIL
        if command.expected is not None and state == VALUE:
            state = PASS if str(outcome.value) == command.expected else FAIL
        if command.expect_fail:
            state = PASS if state == FAIL else FAIL
        return Report(command.index, command.text, state, outcome.value, outcome.renderings)

    @staticmethod
    def exit_code(reports):
        """0 when every report is a value or a pass, 1 on failures, 3 on computation errors."""
        code = 0
        for report in reports:
            if report.outcome == FAIL:
                code = max(code, 1)
            elif report.outcome == ERROR:
                code = max(code, 3)
        return code
