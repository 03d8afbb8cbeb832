'''Parametric models for cumulative expenditure distributions.

Two models are supported:

- a polynomial ``Y = P1 * X**d + ... + P(d+1)``, the first degree line being the
  reference case;
- the Fermi-Dirac function ``g / (exp((x - mu) / T) + 1)``.

Both return probabilities in percent. All functions accept scalars or numpy arrays
and never modify their arguments.
'''

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from numpy.typing import ArrayLike
from scipy.special import expit

from .errors import DecfitError, DecfitErrors


@dataclass(frozen=True)
class FermiParams:
    '''Fermi-Dirac parameters: degeneracy ``g``, chemical potential ``mu``, temperature ``t``.'''

    g: float
    mu: float
    t: float

    def __post_init__(self):
        for name in ('g', 'mu', 't'):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise DecfitError(DecfitErrors.INVALID_PARAMETER, name, value)
            object.__setattr__(self, name, value)

        if self.g <= 0:
            raise DecfitError(DecfitErrors.INVALID_PARAMETER, 'g', self.g)
        if self.t <= 0:
            raise DecfitError(DecfitErrors.INVALID_PARAMETER, 't', self.t)

    @property
    def c(self) -> float:
        '''Log-scale degeneracy, comparable with the tabulated ``C`` column.'''
        return math.log(self.g)

    def as_array(self) -> np.ndarray:
        return np.array([self.g, self.mu, self.t], dtype=float)

    @classmethod
    def from_array(cls, values: Sequence[float]) -> 'FermiParams':
        g, mu, t = values
        return cls(g, mu, t)


@dataclass(frozen=True)
class PolyCoeffs:
    '''Polynomial coefficients, highest degree first.'''

    coeffs: tuple[float, ...]

    def __post_init__(self):
        coeffs = tuple(float(c) for c in self.coeffs)
        if len(coeffs) < 2:
            raise DecfitError(DecfitErrors.INVALID_DEGREE, len(coeffs) - 1)
        object.__setattr__(self, 'coeffs', coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, index: int) -> float:
        return self.coeffs[index]


def eval_polynomial(coeffs: PolyCoeffs, x: ArrayLike) -> np.ndarray | float:
    '''Evaluate the polynomial at ``x`` with Horner's scheme.'''
    return np.polyval(coeffs.coeffs, x)


def eval_fermi_dirac(p: FermiParams, x: ArrayLike) -> np.ndarray | float:
    '''
    Evaluate ``g / (exp((x - mu) / T) + 1)``.

    Computed as ``g * expit(-z)``, which never overflows: far above ``mu`` the value
    saturates to 0, far below it saturates to ``g``.
    '''
    z = (np.asarray(x, dtype=float) - p.mu) / p.t
    return p.g * expit(-z)


def fermi_jacobian(p: FermiParams, x: ArrayLike) -> tuple[np.ndarray | float, np.ndarray | float, np.ndarray | float]:
    '''
    Partial derivatives of the Fermi-Dirac model with respect to ``(g, mu, T)``.

    With ``z = (x - mu) / T`` and ``s = 1 / (exp(z) + 1)``, the term
    ``exp(z) * s**2`` equals ``s * (1 - s)`` and is evaluated as ``expit(-z) * expit(z)``.
    '''
    x = np.asarray(x, dtype=float)
    z = (x - p.mu) / p.t
    s = expit(-z)
    ds = s * expit(z)

    d_g = s
    d_mu = p.g * ds / p.t
    d_t = p.g * ds * (x - p.mu) / p.t**2
    return d_g, d_mu, d_t


def fermi_jacobian_matrix(p: FermiParams, x: ArrayLike) -> np.ndarray:
    '''Jacobian as an ``(n, 3)`` matrix, columns ordered ``g, mu, T``.'''
    x = np.atleast_1d(np.asarray(x, dtype=float))
    return np.column_stack(fermi_jacobian(p, x))


def invert_fermi_dirac(p: FermiParams, prob: ArrayLike) -> np.ndarray | float:
    '''Expenditure at which the model equals ``prob``; requires ``0 < prob < g``.'''
    prob = np.asarray(prob, dtype=float)
    if np.any(prob <= 0) or np.any(prob >= p.g):
        raise DecfitError(DecfitErrors.INVALID_PARAMETER, 'prob', prob.tolist())

    result = p.mu + p.t * np.log(p.g / prob - 1)
    return float(result) if result.ndim == 0 else result
