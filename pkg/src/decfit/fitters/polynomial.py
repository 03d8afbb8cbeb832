'''Closed-form least-squares polynomial fits.'''

import logging

import numpy as np
from scipy.linalg import solve_triangular

from ..cdf import CdfPoints
from ..config import Space
from ..errors import DecfitError, DecfitErrors
from ..model import PolyCoeffs
from .base import BaseFitter, FitResult, r_squared

logger = logging.getLogger(__name__)

MAX_DEGREE = 4


def fit_polynomial(pts: CdfPoints, degree: int, space: Space = Space.LINEAR) -> FitResult:
    '''
    Least-squares polynomial of the given degree (1 to 4).

    Solved through a QR factorization of the column-scaled Vandermonde matrix
    rather than the normal equations.
    '''
    if isinstance(degree, bool) or not isinstance(degree, (int, np.integer)) or not 1 <= degree <= MAX_DEGREE:
        raise DecfitError(DecfitErrors.INVALID_DEGREE, degree)

    space = Space.parse(space)
    x, y = pts.in_space(space)
    n_coeffs = degree + 1

    if len(x) < n_coeffs:
        raise DecfitError(DecfitErrors.RANK_DEFICIENT, 'points', len(x), 'degree', degree)

    scale = float(np.max(np.abs(x)))
    if scale == 0:
        raise DecfitError(DecfitErrors.RANK_DEFICIENT, 'all x equal to 0')

    vander = np.vander(x / scale, n_coeffs)
    q, r = np.linalg.qr(vander)

    diag = np.abs(np.diag(r))
    if diag.min() <= max(vander.shape) * np.finfo(float).eps * diag.max():
        raise DecfitError(DecfitErrors.RANK_DEFICIENT, 'repeated x values')

    scaled = solve_triangular(r, q.T @ y)
    # undo the column scaling: coefficient k multiplies x**(degree - k)
    coeffs = PolyCoeffs(tuple(scaled / scale**np.arange(degree, -1, -1)))

    predicted = np.polyval(coeffs.coeffs, x)
    sse = float(np.sum((y - predicted)**2))
    r2 = r_squared(y, predicted)

    logger.debug('polynomial degree %d: coeffs=%s R2=%.6f', degree, coeffs.coeffs, r2)

    return FitResult(
        params=coeffs,
        r_squared=r2,
        iterations=1,
        converged=True,
        residual_norm=sse,
        space=space,
        cost_history=(sse,),
    )


class PolynomialFitter(BaseFitter):
    '''Fits a polynomial of fixed degree.'''

    def __init__(self, degree: int = 1, *, space: Space = Space.LINEAR):
        super().__init__(space=space)
        if isinstance(degree, bool) or not isinstance(degree, int) or not 1 <= degree <= MAX_DEGREE:
            raise DecfitError(DecfitErrors.INVALID_DEGREE, degree)
        self.degree = degree

    @property
    def name(self) -> str:
        if self.degree == 1:
            return 'polynomial'
        return f'polynomial_{self.degree}'

    @property
    def sort_key(self) -> tuple[str, int]:
        return ('polynomial', self.degree)

    def run(self, points: CdfPoints) -> FitResult:
        return fit_polynomial(points, self.degree, self.space)
