'''Base classes for model fitters.'''

from abc import ABC, abstractmethod
from dataclasses import dataclass, field

import numpy as np
from numpy.typing import ArrayLike

from ..cdf import CdfPoints
from ..config import Space
from ..errors import DecfitError, DecfitErrors
from ..model import FermiParams, PolyCoeffs, eval_fermi_dirac, eval_polynomial


def r_squared(observed: ArrayLike, predicted: ArrayLike) -> float:
    '''
    Coefficient of determination, ``1 - SS_res / SS_tot``.

    Negative when the prediction is worse than the mean of the observations.
    '''
    observed = np.asarray(observed, dtype=float)
    predicted = np.asarray(predicted, dtype=float)

    if observed.shape != predicted.shape or observed.ndim != 1:
        raise DecfitError(DecfitErrors.LENGTH_MISMATCH, observed.shape, predicted.shape)
    if len(observed) < 2:
        raise DecfitError(DecfitErrors.TOO_FEW_POINTS, len(observed))

    ss_tot = float(np.sum((observed - observed.mean())**2))
    if ss_tot == 0:
        raise DecfitError(DecfitErrors.DEGENERATE_OBSERVATIONS, float(observed[0]))

    ss_res = float(np.sum((observed - predicted)**2))
    return 1.0 - ss_res / ss_tot


@dataclass(frozen=True)
class FitResult:
    '''Fitted parameters, goodness of fit and solver diagnostics for one series.'''

    params: FermiParams | PolyCoeffs
    r_squared: float
    iterations: int
    converged: bool
    residual_norm: float
    space: Space = Space.LINEAR
    cost_history: tuple[float, ...] = field(default_factory=tuple)

    @property
    def model(self) -> str:
        '''Model label used in reports: ``fermi_dirac``, ``polynomial`` or ``polynomial_<d>``.'''
        if isinstance(self.params, FermiParams):
            return 'fermi_dirac'
        if self.params.degree == 1:
            return 'polynomial'
        return f'polynomial_{self.params.degree}'

    def predict(self, x: ArrayLike) -> np.ndarray:
        '''Evaluate the fitted model in the fitting space.'''
        if isinstance(self.params, FermiParams):
            return np.asarray(eval_fermi_dirac(self.params, x), dtype=float)
        return np.asarray(eval_polynomial(self.params, x), dtype=float)


class BaseFitter(ABC):
    '''Abstract base class for model fitters.'''

    #: model label, as reported in FitResult.model
    name: str = ''

    def __init__(self, *, space: Space = Space.LINEAR):
        self.space = Space.parse(space)

    @property
    def sort_key(self) -> tuple[str, int]:
        return (self.name, 0)

    @abstractmethod
    def run(self, points: CdfPoints) -> FitResult:
        '''Fit the model to the points and return the result.'''

    def __repr__(self) -> str:
        return f'{self.__class__.__name__}({self.name}, space={self.space.value})'
