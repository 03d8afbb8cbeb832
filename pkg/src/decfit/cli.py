'''Command line interface: ``decfit fit <input.csv> [options]``.'''

import logging
import sys
from pathlib import Path

import click

from .config import FitConfig, load_config
from .dataset import read_decile_csv
from .errors import DecfitError
from .fitters import BaseFitter, FermiDiracFitter, PolynomialFitter
from .pipeline import run_pipeline
from .report import Report, emit_plot_data, emit_report, emit_summary

logger = logging.getLogger(__name__)

# exit codes
EXIT_OK = 0
EXIT_SERIES_FAILURE = 1
EXIT_USAGE = 2


def _plot_paths(report: Report, prefix: str) -> list[Path]:
    '''
    One file per report row, ``PREFIX_<label>_<model>.csv``.

    Labels differing only in ``/`` or spaces would share a name; later rows then get
    ``-2``, ``-3``, ... appended to the label part.
    '''
    paths: list[Path] = []
    used: set[Path] = set()
    for row in report.rows:
        stem = f"{prefix}_{row.label.replace('/', '-').replace(' ', '_')}"
        path = Path(f'{stem}_{row.model}.csv')
        n = 2
        while path in used:
            path = Path(f'{stem}-{n}_{row.model}.csv')
            n += 1
        if n > 2:
            logger.warning('%s: plot file name already taken, writing %s', row.label, path)

        used.add(path)
        paths.append(path)
    return paths


def _write_plots(report: Report, prefix: str, samples: int) -> None:
    for row, path in zip(report.rows, _plot_paths(report, prefix)):
        with open(path, 'w', encoding='utf-8', newline='\n') as f:
            f.write(emit_plot_data(row.points, row.result, samples))
        logger.info('Wrote %s', path)


@click.group()
@click.version_option(package_name='decfit')
def main():
    '''Fit Fermi-Dirac and polynomial models to decile expenditure tables.'''


@main.command('fit')
@click.argument('input_path', metavar='INPUT.csv', type=click.Path(exists=True, dir_okay=False))
@click.option('--model', type=click.Choice(['fermi', 'poly', 'both']), default='both', show_default=True,
              help='Models to fit.')
@click.option('--degree', type=click.IntRange(1, 4), default=1, show_default=True,
              help='Polynomial degree.')
@click.option('--space', type=click.Choice(['linear', 'loglog']), default=None,
              help='Fit in linear space or on (ln x, ln p). [default: linear]')
@click.option('--format', 'output_format', type=click.Choice(['table', 'csv']), default='table', show_default=True,
              help='Report format.')
@click.option('--plot', 'plot_prefix', metavar='PREFIX', default=None,
              help='Write plot data to PREFIX_<label>_<model>.csv.')
@click.option('--samples', type=click.IntRange(min=2), default=100, show_default=True,
              help='Curve samples in plot data.')
@click.option('--max-iter', 'max_iterations', type=click.IntRange(min=1), default=None,
              help='Levenberg-Marquardt iteration cap. [default: 200]')
@click.option('--config', 'config_path', type=click.Path(exists=True, dir_okay=False), default=None,
              help='YAML file with solver settings.')
@click.option('--workers', type=click.IntRange(min=1), default=1, show_default=True,
              help='Series fitted concurrently.')
@click.option('--summary', is_flag=True, help='Append per-model R^2 ranges to table output.')
@click.option('--strict', is_flag=True, help='Abort on the first invalid row.')
@click.option('--debug', is_flag=True, help='Log solver progress to stderr.')
@click.pass_context
def fit(ctx: click.Context,
        input_path: str,
        model: str,
        degree: int,
        space: str | None,
        output_format: str,
        plot_prefix: str | None,
        samples: int,
        max_iterations: int | None,
        config_path: str | None,
        workers: int,
        summary: bool,
        strict: bool,
        debug: bool):
    '''Fit every series of INPUT.csv and print the coefficients and R^2.'''

    logging.basicConfig(
        level=logging.DEBUG if debug else logging.WARNING,
        stream=sys.stderr,
        format='%(levelname)s %(name)s: %(message)s',
        force=True,
    )

    if plot_prefix and not Path(plot_prefix).parent.is_dir():
        click.echo(f'decfit: plot directory does not exist: {Path(plot_prefix).parent}', err=True)
        ctx.exit(EXIT_USAGE)

    try:
        config = load_config(config_path) if config_path else FitConfig()
        config = config.updated(max_iterations=max_iterations, space=space)

        dataset = read_decile_csv(input_path, strict=strict)

        fitters: list[BaseFitter] = []
        if model in ('fermi', 'both'):
            fitters.append(FermiDiracFitter(config))
        if model in ('poly', 'both'):
            fitters.append(PolynomialFitter(degree, space=config.space))

        report = run_pipeline(dataset, fitters, workers=workers, debug=debug)
    except DecfitError as e:
        click.echo(f'decfit: {e}', err=True)
        ctx.exit(EXIT_USAGE)

    text = emit_report(report, output_format)
    if summary and output_format == 'table':
        text += '\n' + emit_summary(report)
    click.echo(text, nl=False)

    if plot_prefix:
        try:
            _write_plots(report, plot_prefix, samples)
        except OSError as e:
            click.echo(f'decfit: cannot write plot data: {e}', err=True)
            ctx.exit(EXIT_USAGE)

    for failure in report.failures:
        click.echo(f'decfit: {failure}', err=True)

    ctx.exit(EXIT_SERIES_FAILURE if report.failures else EXIT_OK)


if __name__ == '__main__':
    main()
