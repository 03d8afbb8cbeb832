'''Fit Fermi-Dirac and polynomial models to decile-ranked expenditure distributions.'''

from pathlib import Path

# Hidden, internal use only
from .pipeline import Pipeline as _Pipeline

# Public API
from .errors import DecfitErrors, DecfitError, SeriesFailure
from .config import FitConfig, Space, load_config
from .model import (FermiParams, PolyCoeffs, eval_polynomial, eval_fermi_dirac, fermi_jacobian,
                    fermi_jacobian_matrix, invert_fermi_dirac)
from .cdf import (DecileSeries, CdfPoints, ValueKind, Measure, Methodology, validate_series,
                  build_mean_cdf, build_lower_limit_cdf, build_cdf, synthesize_series)
from .fitters import (BaseFitter, FitResult, FermiDiracFitter, PolynomialFitter, r_squared, fit_polynomial,
                      fit_fermi_dirac, grid_oracle_fit, fermi_sse)
from .dataset import Dataset, parse_decile_csv, read_decile_csv, format_dataset
from .report import Report, ReportRow, ModelSummary, emit_report, emit_summary, emit_plot_data, summarize_report
from .pipeline import run_pipeline


def fit_dataset(dataset: Dataset,
                models: tuple[str, ...] = ('fermi_dirac', 'polynomial'),
                degree: int = 1,
                config: FitConfig = FitConfig(),
                workers: int = 1,
                debug: bool = False) -> Report:
    '''Fit the requested models ("fermi_dirac", "polynomial") to every series of a dataset.'''
    pipeline = _Pipeline(dataset, workers=workers, debug=debug)

    for model in models:
        if model == 'fermi_dirac':
            pipeline.add_fitter(FermiDiracFitter(config))
        elif model == 'polynomial':
            pipeline.add_fitter(PolynomialFitter(degree, space=config.space))
        else:
            raise DecfitError(DecfitErrors.INVALID_CONFIG, 'model', model)

    return pipeline.run()


def fit_file(path: str | Path,
             models: tuple[str, ...] = ('fermi_dirac', 'polynomial'),
             degree: int = 1,
             config: FitConfig = FitConfig(),
             workers: int = 1,
             debug: bool = False) -> Report:
    '''Read a decile CSV file and fit the requested models to every series.'''
    return fit_dataset(read_decile_csv(path),
                       models=models,
                       degree=degree,
                       config=config,
                       workers=workers,
                       debug=debug)
