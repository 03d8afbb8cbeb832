'''Solver configuration.'''

from dataclasses import dataclass, fields, replace
from enum import Enum
from pathlib import Path
from typing import Any

import yaml

from .errors import DecfitError, DecfitErrors

# no step is tried once the Levenberg-Marquardt damping exceeds this
MAX_DAMPING = 1e16


class Space(Enum):
    '''Coordinate space in which a model is fitted.'''

    LINEAR = 'linear'
    LOGLOG = 'loglog'

    @classmethod
    def parse(cls, value: 'str | Space') -> 'Space':
        if isinstance(value, Space):
            return value

        normalized = value.strip().lower().replace('-', '')
        for space in cls:
            if space.value == normalized:
                return space
        raise DecfitError(DecfitErrors.INVALID_CONFIG, 'space', value)


@dataclass(frozen=True)
class FitConfig:
    '''Levenberg-Marquardt settings and the fitting space.'''

    max_iterations: int = 200
    tol_step: float = 1e-10
    tol_cost: float = 1e-12
    damping_init: float = 1e-3
    damping_factor: float = 10.0
    space: Space = Space.LINEAR

    def __post_init__(self):
        # accept plain strings, e.g. from YAML or the CLI
        # NOTE: pyyaml reads "1e-10" (no dot) as a string
        object.__setattr__(self, 'space', Space.parse(self.space))
        try:
            object.__setattr__(self, 'max_iterations', int(self.max_iterations))
            for name in ('tol_step', 'tol_cost', 'damping_init', 'damping_factor'):
                object.__setattr__(self, name, float(getattr(self, name)))
        except (TypeError, ValueError) as e:
            raise DecfitError(DecfitErrors.INVALID_CONFIG, str(e))

        if self.max_iterations < 1:
            raise DecfitError(DecfitErrors.INVALID_CONFIG, 'max_iterations', self.max_iterations)
        for name in ('tol_step', 'tol_cost', 'damping_init'):
            if not getattr(self, name) > 0:
                raise DecfitError(DecfitErrors.INVALID_CONFIG, name, getattr(self, name))
        if self.damping_init >= MAX_DAMPING:
            raise DecfitError(DecfitErrors.INVALID_CONFIG, 'damping_init', self.damping_init)
        if not self.damping_factor > 1:
            raise DecfitError(DecfitErrors.INVALID_CONFIG, 'damping_factor', self.damping_factor)

    @classmethod
    def from_mapping(cls, values: dict[str, Any]) -> 'FitConfig':
        '''Build a configuration from a plain mapping, rejecting unknown keys.'''
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(values) - known)
        if unknown:
            raise DecfitError(DecfitErrors.INVALID_CONFIG, 'unknown keys', *unknown)

        return cls(**values)

    def updated(self, **overrides: Any) -> 'FitConfig':
        '''Return a copy with the non-None overrides applied.'''
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})


def load_config(path: str | Path) -> FitConfig:
    '''Load a FitConfig from a YAML file. An empty file yields the defaults.'''

    with open(path, encoding='utf-8') as f:
        content = yaml.safe_load(f)

    if content is None:
        return FitConfig()
    if not isinstance(content, dict):
        raise DecfitError(DecfitErrors.INVALID_CONFIG, 'expected a mapping', str(path))

    return FitConfig.from_mapping(content)
