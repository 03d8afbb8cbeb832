'''Error taxonomy shared by every decfit stage.'''

from dataclasses import dataclass, field
from enum import Enum
from typing import Any


class DecfitErrors(Enum):
    '''Stable error codes. Values never change once released.'''

    # ingestion
    PARSE_ERROR = 1
    WRONG_ARITY = 2
    NON_MONOTONE = 3
    NEGATIVE_VALUE = 4
    BAD_LOWER_BOUND = 5
    MIXED_METADATA = 6
    DUPLICATE_LABEL = 7
    EMPTY_DATASET = 8

    # distribution construction
    WRONG_KIND = 20

    # scoring / fitting
    LENGTH_MISMATCH = 30
    DEGENERATE_OBSERVATIONS = 31
    RANK_DEFICIENT = 32
    INVALID_DEGREE = 33
    TOO_FEW_POINTS = 34
    NOT_CONVERGED = 35

    # parameters / configuration
    INVALID_PARAMETER = 40
    INVALID_CONFIG = 41


class DecfitError(Exception):
    '''Raised when an operation cannot produce a valid result.'''

    def __init__(self, error: DecfitErrors, *data: Any, line: int | None = None):
        self.error = error
        self.data = tuple(data)
        self.line = line
        super().__init__(str(self))

    def at_line(self, line: int) -> 'DecfitError':
        '''Return a copy of this error attributed to a CSV line.'''
        return DecfitError(self.error, *self.data, line=line)

    def __str__(self) -> str:
        text = f'[{self.error.value:3}] {self.error.name}'
        if self.data:
            text += f': {self.data}'
        if self.line is not None:
            text += f' (line {self.line})'
        return text


@dataclass(repr=False)
class SeriesFailure:
    '''A problem recorded for a single series without aborting the others.'''

    label: str | None
    error: DecfitErrors
    data: tuple[Any, ...] = field(default_factory=tuple)
    line: int | None = None

    @classmethod
    def from_exception(cls, label: str | None, exc: DecfitError) -> 'SeriesFailure':
        return cls(label, exc.error, exc.data, exc.line)

    def __repr__(self):
        return f'SeriesFailure({self.label!r}, {self.error.value} - {self.error.name}: {self.data}, line={self.line})'

    def __str__(self) -> str:
        text = f'[{self.error.value:3}] {self.error.name}'
        if self.label is not None:
            text = f'{self.label}: {text}'
        if self.data:
            text += f': {self.data}'
        if self.line is not None:
            text += f' (line {self.line})'
        return text

    def __hash__(self) -> int:
        return hash((self.label, self.error, self.data, self.line))
