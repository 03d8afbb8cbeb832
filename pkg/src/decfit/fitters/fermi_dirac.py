'''Levenberg-Marquardt fit of the Fermi-Dirac model.'''

import logging

import numpy as np
from numpy.linalg import LinAlgError
from scipy.linalg import solve

from ..cdf import CdfPoints
from ..config import MAX_DAMPING, FitConfig
from ..errors import DecfitError, DecfitErrors
from ..model import FermiParams, eval_fermi_dirac, fermi_jacobian_matrix
from .base import BaseFitter, FitResult, r_squared

logger = logging.getLogger(__name__)

MIN_POINTS = 4

MIN_DAMPING = 1e-15

# lower bound for the Marquardt scaling, relative to the largest diagonal entry
DIAG_FLOOR = 1e-12


def initial_guess(x: np.ndarray, y: np.ndarray) -> FermiParams:
    '''
    Read a starting point off the empirical sigmoid.

    - ``g``: the value at the smallest ``x``
    - ``mu``: the ``x`` where the data cross ``g / 2`` (linear interpolation)
    - ``T``: the distance between the ``0.75 g`` and ``0.25 g`` crossings over
      ``2 ln 3``, which is exact for a true Fermi-Dirac curve; floored at a
      thousandth of the ``x`` range
    '''
    order = np.argsort(x, kind='stable')
    x, y = x[order], y[order]

    g0 = float(y[0])
    if g0 <= 0:
        g0 = float(np.max(np.abs(y))) or 1.0

    by_level = np.argsort(y, kind='stable')
    def x_at(level: float) -> float:
        return float(np.interp(level, y[by_level], x[by_level]))

    mu0 = x_at(g0 / 2)
    span = float(x[-1] - x[0])
    t0 = (x_at(0.25 * g0) - x_at(0.75 * g0)) / (2 * np.log(3))
    t0 = max(t0, 1e-3 * span)
    if t0 <= 0:
        t0 = 1.0

    return FermiParams(g0, mu0, t0)


def _sse(params: FermiParams, x: np.ndarray, y: np.ndarray) -> tuple[np.ndarray, float]:
    residual = y - eval_fermi_dirac(params, x)
    return residual, float(residual @ residual)


def fit_fermi_dirac(pts: CdfPoints,
                    config: FitConfig = FitConfig(),
                    init: FermiParams | None = None) -> FitResult:
    '''
    Minimize the sum of squared residuals of the Fermi-Dirac model.

    Classic Levenberg-Marquardt with Marquardt's diagonal scaling: the damping is
    divided by ``damping_factor`` after an accepted step and multiplied by it after
    a rejected one. Steps making ``g`` or ``T`` non-positive are rejected.
    The fit stops when every parameter moves less than ``tol_step`` (relative),
    when the cost decreases less than ``tol_cost`` (relative), or after
    ``max_iterations``. The last case returns the partial result with
    ``converged=False``, as does running out of damping (no acceptable step) while
    a Gauss-Newton step still predicts a decrease above ``tol_cost``.
    '''
    x, y = pts.in_space(config.space)

    if len(x) < MIN_POINTS:
        raise DecfitError(DecfitErrors.TOO_FEW_POINTS, len(x), MIN_POINTS)
    if np.ptp(y) == 0:
        raise DecfitError(DecfitErrors.DEGENERATE_OBSERVATIONS, float(y[0]))

    params = init if init is not None else initial_guess(x, y)
    theta = params.as_array()
    residual, cost = _sse(params, x, y)
    history = [cost]

    damping = config.damping_init
    converged = False
    iterations = 0

    logger.debug('LM start: %s cost=%.6g', params, cost)

    for iterations in range(1, config.max_iterations + 1):
        jac = fermi_jacobian_matrix(params, x)
        jtj = jac.T @ jac
        gradient = jac.T @ residual

        if cost == 0 or not np.any(gradient):
            converged = True
            break

        scaling = np.diag(jtj)
        scaling = np.maximum(scaling, DIAG_FLOOR * scaling.max())

        # inner loop: raise the damping until a step is accepted
        accepted = False
        while damping <= MAX_DAMPING:
            try:
                step = solve(jtj + damping * np.diag(scaling), gradient, assume_a='sym')
            except (LinAlgError, ValueError):
                step = None

            if step is not None and np.all(np.isfinite(step)):
                candidate = theta + step
                if candidate[0] > 0 and candidate[2] > 0:
                    new_params = FermiParams.from_array(candidate)
                    new_residual, new_cost = _sse(new_params, x, y)

                    if new_cost <= cost:
                        accepted = True
                        break
                    logger.debug('LM iteration %d: step rejected, cost increased (damping=%.3g)',
                                 iterations, damping)
                else:
                    logger.debug('LM iteration %d: step rejected, g or T not positive (damping=%.3g)',
                                 iterations, damping)
            else:
                logger.debug('LM iteration %d: step rejected, singular system (damping=%.3g)', iterations, damping)

            damping *= config.damping_factor

        if not accepted:
            # stationary only if a full Gauss-Newton step would not beat the cost tolerance
            gauss_newton = np.linalg.lstsq(jac, residual, rcond=None)[0]
            predicted_decrease = float(np.sum((jac @ gauss_newton)**2))
            converged = predicted_decrease <= config.tol_cost * cost
            logger.debug('LM iteration %d: damping saturated, stopping (predicted decrease %.3g)',
                         iterations, predicted_decrease)
            break

        damping = max(damping / config.damping_factor, MIN_DAMPING)

        small_step = bool(np.all(np.abs(step) <= config.tol_step * (np.abs(theta) + config.tol_step)))
        small_decrease = (cost - new_cost) <= config.tol_cost * cost

        theta, params = candidate, new_params
        residual, cost = new_residual, new_cost
        history.append(cost)

        logger.debug('LM iteration %d: accepted %s cost=%.6g', iterations, params, cost)

        if small_step or small_decrease:
            converged = True
            break

    if not converged:
        logger.warning('Fermi-Dirac fit stopped after %d iterations without converging', iterations)

    predicted = eval_fermi_dirac(params, x)
    return FitResult(
        params=params,
        r_squared=r_squared(y, predicted),
        iterations=iterations,
        converged=converged,
        residual_norm=cost,
        space=config.space,
        cost_history=tuple(history),
    )


class FermiDiracFitter(BaseFitter):
    '''Fits the Fermi-Dirac model with Levenberg-Marquardt.'''

    name = 'fermi_dirac'

    def __init__(self, config: FitConfig = FitConfig()):
        super().__init__(space=config.space)
        self.config = config

    def run(self, points: CdfPoints) -> FitResult:
        return fit_fermi_dirac(points, self.config)
