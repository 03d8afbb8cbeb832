from pathlib import Path

import numpy as np
import pytest

from decfit import (DecfitErrors, DecfitError, SeriesFailure, FitConfig, Space, load_config,
                    FermiParams, PolyCoeffs, eval_polynomial, eval_fermi_dirac, fermi_jacobian,
                    fermi_jacobian_matrix, invert_fermi_dirac,
                    DecileSeries, CdfPoints, ValueKind, Measure, Methodology, validate_series,
                    build_mean_cdf, build_lower_limit_cdf, build_cdf, synthesize_series,
                    BaseFitter, FitResult, FermiDiracFitter, PolynomialFitter, r_squared, fit_polynomial,
                    fit_fermi_dirac, grid_oracle_fit, fermi_sse,
                    Dataset, parse_decile_csv, read_decile_csv, format_dataset,
                    Report, ReportRow, emit_report, emit_summary, emit_plot_data, summarize_report,
                    run_pipeline, fit_dataset, fit_file)

ROOT = Path(__file__).parent.parent
DATASETS = ROOT / 'datasets'

CSV_HEADER = 'label,value_kind,measure,d1,d2,d3,d4,d5,d6,d7,d8,d9,d10'

# (year, T, mu) rows of the mean disposable expenditure fits
TABLE_MEAN_DISPOSABLE = [
    ('2000/2001', 0.4999, 8.113),
    ('2001/2002', 0.4974, 8.139),
    ('2002/2003', 0.4952, 8.164),
    ('2003/2004', 0.4881, 8.196),
    ('2004/2005', 0.4866, 8.235),
    ('2005/2006', 0.4931, 8.241),
    ('2006', 0.4887, 8.285),
    ('2007', 0.4837, 8.287),
    ('2008', 0.4999, 8.309),
    ('2009', 0.4662, 8.273),
    ('2010', 0.4763, 8.316),
    ('2011', 0.4748, 8.343),
    ('2012', 0.4654, 8.347),
]

# (year, T, mu) rows of the lower limit on gross expenditure fits
TABLE_LOWER_LIMIT_GROSS = [
    ('2000/2001', 0.5977, 8.409),
    ('2001/2002', 0.607, 8.483),
    ('2002/2003', 0.5952, 8.51),
    ('2003/2004', 0.5896, 8.527),
    ('2004/2005', 0.594, 8.587),
    ('2005/2006', 0.6066, 8.611),
    ('2006', 0.6012, 8.651),
    ('2007', 0.5963, 8.689),
    ('2009', 0.5976, 8.701),
    ('2010', 0.603, 8.714),
    ('2011', 0.5904, 8.755),
    ('2012', 0.5905, 8.756),
]

REFERENCE = FermiParams(g=100, mu=8.196, t=0.4881)


def make_csv(*rows: str) -> str:
    '''CSV text with the standard header followed by the given rows.'''
    return '\n'.join([CSV_HEADER, *rows]) + '\n'


def value_row(label: str, value_kind: str, measure: str, values) -> str:
    return ','.join([label, value_kind, measure, *(f'{v:g}' for v in values)])


def spaced_points(params: FermiParams) -> CdfPoints:
    '''11 noiseless points at x = 0, 0.19 mu, ..., 1.9 mu.'''
    x = np.linspace(0, 1.9 * params.mu, 11)
    return CdfPoints(x, eval_fermi_dirac(params, x))


def quantile_points(params: FermiParams) -> CdfPoints:
    '''11 noiseless points: x = 0 and the x where the curve crosses 95%, 85%, ..., 5% of g.'''
    levels = params.g * np.linspace(0.95, 0.05, 10)
    x = np.concatenate(([0.0], invert_fermi_dirac(params, levels)))
    return CdfPoints(x, eval_fermi_dirac(params, x))


def with_noise(points: CdfPoints, rng: np.random.Generator, amplitude: float = 0.5) -> CdfPoints:
    '''Add uniform noise in [-amplitude, amplitude] to every probability.'''
    return CdfPoints(points.x, points.p + rng.uniform(-amplitude, amplitude, len(points)))


def assert_error(excinfo: pytest.ExceptionInfo, error: DecfitErrors, line: int | None = None) -> None:
    assert excinfo.value.error == error
    if line is not None:
        assert excinfo.value.line == line


def has_failure(failures: list[SeriesFailure], error: DecfitErrors, label: str | None = None,
                line: int | None = None) -> bool:
    '''Check if any recorded failure matches the given error, label and line.'''
    for failure in failures:
        if failure.error != error:
            continue
        if label is not None and failure.label != label:
            continue
        if line is not None and failure.line != line:
            continue
        return True
    return False


def count_failures(failures: list[SeriesFailure], error: DecfitErrors) -> int:
    '''Count how many failures match the given error type.'''
    return sum(1 for failure in failures if failure.error == error)


def read_sections(text: str) -> dict[str, list[list[float]]]:
    '''Split plot data into its sections, skipping the column headers.'''
    sections: dict[str, list[list[float]]] = {}
    current = None
    for line in text.splitlines():
        if line.startswith('# '):
            current = line[2:]
            sections[current] = []
        elif line and not line[0].isalpha():
            sections[current].append([float(v) for v in line.split(',')])
    return sections
