'''Model fitters and goodness-of-fit scoring.'''

from .base import BaseFitter, FitResult, r_squared
from .polynomial import PolynomialFitter, fit_polynomial
from .fermi_dirac import FermiDiracFitter, fit_fermi_dirac, initial_guess
from .oracle import grid_oracle_fit, fermi_sse
