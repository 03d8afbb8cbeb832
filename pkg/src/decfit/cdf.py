'''Decile series and the cumulative-distribution point sets built from them.

A series holds the ten decile values of one year. Depending on how the deciles
were computed, the series becomes one of two point sets:

- mean values (set M): ``(0, 100), (x1, 90), ..., (x10, 0)``
- lower limits (set L): ``(0, 100), (x2, 90), ..., (x10, 10)``

Probabilities are percentages of the population spending more than ``x``.
'''

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

import numpy as np

from .config import Space
from .errors import DecfitError, DecfitErrors
from .model import FermiParams, invert_fermi_dirac

DECILES = 10
PROBABILITY_STEP = 10.0


class ValueKind(Enum):
    '''How each decile value was computed.'''

    MEAN = 'mean'
    LOWER_LIMIT = 'lower_limit'

    @classmethod
    def parse(cls, value: 'str | ValueKind') -> 'ValueKind':
        if isinstance(value, ValueKind):
            return value
        try:
            return cls(value.strip().lower())
        except ValueError:
            raise DecfitError(DecfitErrors.PARSE_ERROR, 'value_kind', value)


class Methodology(Enum):
    '''Point-set construction: M for mean values, L for lower limits.'''

    M = 'M'
    L = 'L'


@dataclass(frozen=True)
class Measure:
    '''What was measured: gross, disposable, or a named expenditure category.'''

    kind: str
    name: str | None = None

    KINDS = ('gross', 'disposable', 'category')

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise DecfitError(DecfitErrors.PARSE_ERROR, 'measure', self.kind)
        if (self.kind == 'category') != bool(self.name):
            raise DecfitError(DecfitErrors.PARSE_ERROR, 'measure', str(self))

    @classmethod
    def parse(cls, value: 'str | Measure') -> 'Measure':
        if isinstance(value, Measure):
            return value

        kind, _, name = value.strip().partition(':')
        return cls(kind.lower(), name.strip() or None)

    def describe(self, value_kind: ValueKind) -> str:
        '''Human-readable caption, e.g. "lower limit on gross expenditure".'''
        if self.kind == 'category':
            what = f'disposable expenditure for {self.name}'
        else:
            what = f'{self.kind} expenditure'

        if value_kind == ValueKind.LOWER_LIMIT:
            return f'lower limit on {what}'
        return f'mean {what}'

    def __str__(self) -> str:
        if self.name:
            return f'{self.kind}:{self.name}'
        return self.kind


@dataclass(frozen=True)
class DecileSeries:
    '''One labeled year of decile values. Instances are always valid.'''

    label: str
    values: tuple[float, ...]
    value_kind: ValueKind
    measure: Measure

    def __post_init__(self):
        object.__setattr__(self, 'values', tuple(float(v) for v in self.values))
        values = self.values

        if len(values) != DECILES:
            raise DecfitError(DecfitErrors.WRONG_ARITY, self.label, len(values))
        if not all(math.isfinite(v) for v in values):
            raise DecfitError(DecfitErrors.PARSE_ERROR, self.label, 'non-finite value')

        negatives = [v for v in values if v < 0]
        if negatives:
            raise DecfitError(DecfitErrors.NEGATIVE_VALUE, self.label, negatives[0])

        for i in range(1, DECILES):
            if values[i] <= values[i - 1]:
                raise DecfitError(DecfitErrors.NON_MONOTONE, self.label, f'd{i}', f'd{i + 1}')

        if self.value_kind == ValueKind.LOWER_LIMIT and values[0] != 0:
            raise DecfitError(DecfitErrors.BAD_LOWER_BOUND, self.label, values[0])


@dataclass(frozen=True, eq=False)
class CdfPoints:
    '''
    Ordered ``(x, p)`` pairs: expenditure and the percentage of the population above it.

    ``methodology`` is None for free-form point sets, which are not required to
    follow the M or L construction.
    '''

    x: np.ndarray
    p: np.ndarray
    methodology: Methodology | None = None

    def __post_init__(self):
        x = np.array(self.x, dtype=float)
        p = np.array(self.p, dtype=float)
        if x.ndim != 1 or x.shape != p.shape:
            raise DecfitError(DecfitErrors.LENGTH_MISMATCH, x.shape, p.shape)

        x.setflags(write=False)
        p.setflags(write=False)
        object.__setattr__(self, 'x', x)
        object.__setattr__(self, 'p', p)

    def __len__(self) -> int:
        return len(self.x)

    def pairs(self) -> list[tuple[float, float]]:
        return [(float(x), float(p)) for x, p in zip(self.x, self.p)]

    def validate(self) -> 'CdfPoints':
        '''Check the ordering and shape invariants; return self.'''
        if np.any(np.diff(self.x) <= 0) or np.any(np.diff(self.p) >= 0):
            raise DecfitError(DecfitErrors.NON_MONOTONE, 'points')
        if len(self) == 0 or self.x[0] != 0 or self.p[0] != 100:
            raise DecfitError(DecfitErrors.BAD_LOWER_BOUND, 'first point must be (0, 100)')

        if self.methodology == Methodology.M:
            expected_len, expected_last = DECILES + 1, 0.0
        elif self.methodology == Methodology.L:
            expected_len, expected_last = DECILES, PROBABILITY_STEP
        else:
            return self

        if len(self) != expected_len or self.p[-1] != expected_last:
            raise DecfitError(DecfitErrors.WRONG_ARITY, self.methodology.value, len(self))
        return self

    def in_space(self, space: Space) -> tuple[np.ndarray, np.ndarray]:
        '''
        Coordinates used for fitting.

        In log-log space the points with ``x == 0`` or ``p == 0`` are dropped and the
        rest become ``(ln x, ln p)``.
        '''
        if space == Space.LINEAR:
            return self.x.copy(), self.p.copy()

        keep = (self.x > 0) & (self.p > 0)
        return np.log(self.x[keep]), np.log(self.p[keep])


def validate_series(label: str,
                    values: Sequence[float],
                    value_kind: str | ValueKind,
                    measure: str | Measure) -> DecileSeries:
    '''Check raw decile values and wrap them into a DecileSeries.'''
    return DecileSeries(
        label=str(label),
        values=tuple(values),
        value_kind=ValueKind.parse(value_kind),
        measure=Measure.parse(measure),
    )


def _probabilities(count: int) -> np.ndarray:
    return 100.0 - PROBABILITY_STEP * np.arange(count)


def build_mean_cdf(s: DecileSeries) -> CdfPoints:
    '''Set M: ``(0, 100), (x1, 90), ..., (x10, 0)``.'''
    if s.value_kind != ValueKind.MEAN:
        raise DecfitError(DecfitErrors.WRONG_KIND, s.label, s.value_kind.value)

    x = np.concatenate(([0.0], s.values))
    return CdfPoints(x, _probabilities(DECILES + 1), Methodology.M).validate()


def build_lower_limit_cdf(s: DecileSeries) -> CdfPoints:
    '''
    Set L: ``(0, 100), (x2, 90), ..., (x10, 10)``.

    The first lower limit is 0 and carries the 100% point. No 0% point exists: a
    tenth of the population spends more than ``x10``.
    '''
    if s.value_kind != ValueKind.LOWER_LIMIT:
        raise DecfitError(DecfitErrors.WRONG_KIND, s.label, s.value_kind.value)

    x = np.asarray(s.values, dtype=float)
    return CdfPoints(x, _probabilities(DECILES), Methodology.L).validate()


def build_cdf(s: DecileSeries) -> CdfPoints:
    '''Build the point set matching the series' value kind.'''
    if s.value_kind == ValueKind.MEAN:
        return build_mean_cdf(s)
    return build_lower_limit_cdf(s)


def synthesize_series(params: FermiParams,
                      label: str,
                      value_kind: str | ValueKind = ValueKind.MEAN,
                      measure: str | Measure = 'disposable') -> DecileSeries:
    '''
    Decile values lying on a Fermi-Dirac curve.

    Mean series invert the curve at 90%, ..., 10% and extrapolate the tenth decile
    linearly from the previous two. Lower-limit series start at 0 and invert the
    curve at 90%, ..., 10%.
    '''
    value_kind = ValueKind.parse(value_kind)
    inner = invert_fermi_dirac(params, _probabilities(DECILES)[1:])

    values: Iterable[float]
    if value_kind == ValueKind.MEAN:
        values = [*inner, 2 * inner[-1] - inner[-2]]
    else:
        values = [0.0, *inner]

    return validate_series(label, values, value_kind, measure)
