'''Brute-force grid search over Fermi-Dirac parameters, used as a test oracle.'''

from typing import Sequence

import numpy as np
from scipy.special import expit

from ..cdf import CdfPoints
from ..config import Space
from ..errors import DecfitError, DecfitErrors
from ..model import FermiParams, eval_fermi_dirac


def fermi_sse(params: FermiParams, pts: CdfPoints, space: Space = Space.LINEAR) -> float:
    '''Sum of squared residuals of the Fermi-Dirac model on the points.'''
    x, y = pts.in_space(space)
    residual = y - eval_fermi_dirac(params, x)
    return float(residual @ residual)


def grid_oracle_fit(pts: CdfPoints,
                    bounds: Sequence[tuple[float, float]],
                    steps: int | Sequence[int],
                    space: Space = Space.LINEAR) -> FermiParams:
    '''
    Evaluate the SSE on every node of an evenly spaced ``(g, mu, T)`` grid and
    return the best node. Ties keep the first node in ``g, mu, T`` order.

    Meant for small grids in tests: the cost grows with the product of the steps.
    '''
    if isinstance(steps, int):
        steps = (steps, steps, steps)
    if len(bounds) != 3 or len(steps) != 3:
        raise DecfitError(DecfitErrors.INVALID_PARAMETER, 'expected bounds and steps for g, mu, T')
    if any(n < 2 for n in steps):
        raise DecfitError(DecfitErrors.INVALID_PARAMETER, 'steps', tuple(steps))

    (g_lo, g_hi), (mu_lo, mu_hi), (t_lo, t_hi) = bounds
    if g_lo <= 0 or t_lo <= 0 or g_hi < g_lo or mu_hi < mu_lo or t_hi < t_lo:
        raise DecfitError(DecfitErrors.INVALID_PARAMETER, 'bounds', tuple(bounds))

    g_axis = np.linspace(g_lo, g_hi, steps[0])
    mu_axis = np.linspace(mu_lo, mu_hi, steps[1])
    t_axis = np.linspace(t_lo, t_hi, steps[2])

    x, y = pts.in_space(space)
    # one (mu, T) plane at a time keeps memory at n_mu * n_t * n_points
    shape = expit(-(x[None, None, :] - mu_axis[:, None, None]) / t_axis[None, :, None])

    best_sse = np.inf
    best: tuple[int, int, int] = (0, 0, 0)
    for i, g in enumerate(g_axis):
        sse = np.sum((y - g * shape)**2, axis=-1)
        j, k = np.unravel_index(np.argmin(sse), sse.shape)
        if sse[j, k] < best_sse:
            best_sse = float(sse[j, k])
            best = (i, int(j), int(k))

    i, j, k = best
    return FermiParams(g_axis[i], mu_axis[j], t_axis[k])
