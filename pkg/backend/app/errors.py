"""Error hierarchy. Every error maps to a stable code and a process exit code."""


class CorrCancelError(Exception):
    code = 'internal'
    exit_code = 3

    def __init__(self, message='', **details):
        super().__init__(message)
        self.message = message
        self.details = details

    def to_dict(self):
        payload = {'code': self.code, 'message': self.message}
        if self.details:
            payload['details'] = {key: str(value) for key, value in self.details.items()}
        return payload


class UnsupportedBaseError(CorrCancelError):
    code = 'unsupported_base'


class DegenerateCoordinatesError(CorrCancelError):
    code = 'degenerate_coordinates'


class NotDominantError(CorrCancelError):
    code = 'not_dominant'


class NotPrimeError(CorrCancelError):
    code = 'not_prime'


class NotFiniteError(CorrCancelError):
    code = 'not_finite'


class NotFlatError(CorrCancelError):
    code = 'not_flat'


class WrongDimensionError(CorrCancelError):
    code = 'wrong_dimension'


class NotEquidimensionalError(CorrCancelError):
    code = 'not_equidimensional'


class NotProperOnSupportError(CorrCancelError):
    code = 'not_proper_on_support'


class ImproperIntersectionError(CorrCancelError):
    code = 'improper_intersection'


class ZeroRestrictionError(ImproperIntersectionError):
    """f+ or f- vanishes identically on a component."""
    code = 'zero_restriction'


class SearchExhaustedError(CorrCancelError):
    code = 'search_exhausted'


class InvalidMorphismError(CorrCancelError):
    code = 'invalid_morphism'


class NegativeIndexError(CorrCancelError):
    code = 'negative_index'


class ScenarioError(CorrCancelError):
    code = 'syntax_error'
    exit_code = 2

    def __init__(self, message='', line=None, column=None, **details):
        super().__init__(message, **details)
        self.line = line
        self.column = column

    def __str__(self):
        if self.line is None:
            return self.message
        return f"line {self.line}, column {self.column}: {self.message}"

    def to_dict(self):
        payload = super().to_dict()
        payload['line'] = self.line
        payload['column'] = self.column
        return payload


class UnknownIdentifierError(ScenarioError):
    code = 'unknown_identifier'


class DuplicateNameError(ScenarioError):
    code = 'duplicate_name'


class FieldMismatchError(ScenarioError):
    code = 'field_mismatch'
