'''Fit reports and their text renderings.'''

import io
import math
from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from .cdf import CdfPoints
from .config import Space
from .errors import DecfitError, DecfitErrors, SeriesFailure
from .fitters import FitResult
from .model import FermiParams

FORMAT_VERSION = '1'

FERMI_COLUMNS = ('T', 'C', 'g', 'μ')
FERMI_CSV_COLUMNS = ('T', 'C', 'g', 'mu')


@dataclass(frozen=True)
class ReportRow:
    '''Outcome of fitting one model to one series.'''

    label: str
    model: str
    result: FitResult
    points: CdfPoints

    @property
    def params(self):
        return self.result.params

    @property
    def r_squared(self) -> float:
        return self.result.r_squared

    @property
    def converged(self) -> bool:
        return self.result.converged


@dataclass
class Report:
    '''Rows in input order, then by model; failures collected along the way.'''

    rows: list[ReportRow] = field(default_factory=list)
    failures: list[SeriesFailure] = field(default_factory=list)
    models: list[str] = field(default_factory=list)
    title: str = ''
    format_version: str = FORMAT_VERSION

    @property
    def exit_code(self) -> int:
        return 1 if self.failures else 0

    def rows_for(self, model: str) -> list[ReportRow]:
        return [row for row in self.rows if row.model == model]


@dataclass(frozen=True)
class ModelSummary:
    '''R² statistics of one model across all series of a report, in percent.'''

    model: str
    count: int
    min_pct: float
    mean_pct: float
    max_pct: float
    above_threshold: int
    threshold_pct: float


def summarize_report(report: Report, threshold_pct: float = 90.0) -> list[ModelSummary]:
    '''Per-model range of R² across the report's series.'''
    summaries: list[ModelSummary] = []
    for model in report.models:
        values = np.array([row.r_squared * 100 for row in report.rows_for(model)])
        if len(values) == 0:
            continue
        summaries.append(ModelSummary(
            model=model,
            count=len(values),
            min_pct=float(values.min()),
            mean_pct=float(values.mean()),
            max_pct=float(values.max()),
            above_threshold=int(np.sum(values > threshold_pct)),
            threshold_pct=threshold_pct,
        ))
    return summaries


# region Formatting
def format_param(value: float) -> str:
    '''Four significant digits, trailing zeros dropped.'''
    if math.isnan(value):
        return 'nan'
    text = f'{value:.4g}'
    return '0' if text == '-0' else text


def format_pct(fraction: float) -> str:
    return f'{fraction * 100:.2f}'


def _degree(model: str) -> int:
    if model == 'polynomial':
        return 1
    return int(model.rsplit('_', 1)[1])


def _poly_columns(models: list[str]) -> list[str]:
    degrees = [_degree(m) for m in models if m.startswith('polynomial')]
    if not degrees:
        return []
    return [f'P{i}' for i in range(1, max(degrees) + 2)]


def _param_cells(row: ReportRow) -> list[str]:
    params = row.params
    if isinstance(params, FermiParams):
        return [format_param(v) for v in (params.t, params.c, params.g, params.mu)]
    return [format_param(c) for c in params.coeffs]


def _align(lines: list[list[str]]) -> str:
    widths = [max(len(line[i]) for line in lines) for i in range(len(lines[0]))]
    out = io.StringIO()
    for line in lines:
        cells = [cell.ljust(width) for cell, width in zip(line, widths)]
        out.write('  '.join(cells).rstrip() + '\n')
    return out.getvalue()
# endregion


def _emit_table(report: Report) -> str:
    blocks: list[str] = []
    for model in report.models:
        if model == 'fermi_dirac':
            header = ['Year', *FERMI_COLUMNS, 'R^2 (%)', 'Converged']
        else:
            header = ['Year', *(f'P{i}' for i in range(1, _degree(model) + 2)), 'R^2 (%)']

        lines = [header]
        for row in report.rows_for(model):
            line = [row.label, *_param_cells(row), format_pct(row.r_squared)]
            if model == 'fermi_dirac':
                line.append('yes' if row.converged else 'no')
            lines.append(line)
        blocks.append(_align(lines))

    return '\n'.join(blocks)


def _emit_csv(report: Report) -> str:
    poly_columns = _poly_columns(report.models)
    fermi = 'fermi_dirac' in report.models
    header = ['label', 'model', *poly_columns, *(FERMI_CSV_COLUMNS if fermi else ()), 'r_squared_pct', 'converged']

    out = io.StringIO()
    out.write(','.join(header) + '\n')
    for row in report.rows:
        cells = _param_cells(row)
        if isinstance(row.params, FermiParams):
            poly_cells = [''] * len(poly_columns)
            fermi_cells = cells
        else:
            poly_cells = cells + [''] * (len(poly_columns) - len(cells))
            fermi_cells = [''] * len(FERMI_CSV_COLUMNS)

        line = [row.label, row.model, *poly_cells, *(fermi_cells if fermi else ()),
                format_pct(row.r_squared), 'true' if row.converged else 'false']
        out.write(','.join(_csv_cell(cell) for cell in line) + '\n')
    return out.getvalue()


def _csv_cell(cell: str) -> str:
    if any(c in cell for c in ',"\n'):
        return '"' + cell.replace('"', '""') + '"'
    return cell


def emit_report(report: Report, format: Literal['table', 'csv'] = 'table') -> str:
    '''
    Render the report.

    ``table`` prints one aligned block per model (Year, P1..P(d+1) or T, C = ln g,
    g, μ, then R² in percent); ``csv`` prints all rows in a single machine-readable
    table. Parameters use four significant digits, R² two decimals.
    '''
    if format == 'table':
        return _emit_table(report)
    if format == 'csv':
        return _emit_csv(report)
    raise DecfitError(DecfitErrors.INVALID_CONFIG, 'format', format)


def emit_summary(report: Report, threshold_pct: float = 90.0) -> str:
    '''Caption and per-model R² range, appended to table output.'''
    lines = [['Model', 'Series', 'Min R^2 (%)', 'Mean R^2 (%)', 'Max R^2 (%)', f'> {threshold_pct:g}%']]
    for s in summarize_report(report, threshold_pct):
        lines.append([s.model, str(s.count), f'{s.min_pct:.2f}', f'{s.mean_pct:.2f}', f'{s.max_pct:.2f}',
                      str(s.above_threshold)])

    caption = f'Summary of fits to {report.title}.\n' if report.title else 'Summary of fits.\n'
    return caption + _align(lines)


def emit_plot_data(pts: CdfPoints, fit: FitResult, samples: int = 100) -> str:
    '''
    Observed points and a sampled fitted curve, as two CSV sections.

    The observed section lists ``x, p`` and the fitted value at ``x``. In linear
    space the curve is sampled at ``samples`` even steps over ``[0, 1.2 * x_max]``;
    in log-log space both sections use ``(ln x, ln p)`` and the curve spans the
    observed range extended by a fifth.
    '''
    if samples < 2:
        raise DecfitError(DecfitErrors.INVALID_PARAMETER, 'samples', samples)

    x, p = pts.in_space(fit.space)
    if fit.space == Space.LINEAR:
        lo, hi = 0.0, 1.2 * float(x.max())
    else:
        lo, hi = float(x.min()), float(x.max() + 0.2 * (x.max() - x.min()))
    curve_x = np.linspace(lo, hi, samples)

    out = io.StringIO()
    out.write('# observed\n')
    out.write('x,p,fitted\n')
    for xi, pi, fi in zip(x, p, fit.predict(x)):
        out.write(f'{xi:.10g},{pi:.10g},{fi:.10g}\n')

    out.write('# fitted\n')
    out.write('x,p\n')
    for xi, fi in zip(curve_x, fit.predict(curve_x)):
        out.write(f'{xi:.10g},{fi:.10g}\n')
    return out.getvalue()
