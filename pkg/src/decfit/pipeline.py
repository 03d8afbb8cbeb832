'''Fit every series of a dataset with a set of models.'''

import logging
from concurrent.futures import ThreadPoolExecutor

from .cdf import DecileSeries, build_cdf
from .dataset import Dataset
from .errors import DecfitError, DecfitErrors, SeriesFailure
from .fitters import BaseFitter
from .report import Report, ReportRow

logger = logging.getLogger(__name__)


class Pipeline:
    '''Manages and runs model fitters on every series of a dataset.'''

    def __init__(self,
                 dataset: Dataset,
                 *,
                 fitters: list[BaseFitter] = [],
                 workers: int = 1,
                 debug: bool = False):
        self.dataset = dataset
        self.fitters: list[BaseFitter] = []
        self.workers = max(1, workers)
        self.debug = debug

        for fitter in fitters:
            self.add_fitter(fitter)

    def add_fitter(self, fitter: BaseFitter) -> None:
        '''Add a fitter; fitters run in model-name order.'''
        if any(f.name == fitter.name for f in self.fitters):
            logger.debug('Replacing fitter %s', fitter.name)
            self.fitters = [f for f in self.fitters if f.name != fitter.name]

        self.fitters.append(fitter)
        self.fitters.sort(key=lambda f: f.sort_key)

    def fit_series(self, series: DecileSeries) -> tuple[list[ReportRow], list[SeriesFailure]]:
        '''Build the point set of one series and run every fitter on it.'''
        if self.debug:
            logger.debug('===== Series %s =====', series.label)

        try:
            points = build_cdf(series)
        except DecfitError as e:
            return [], [SeriesFailure.from_exception(series.label, e)]

        rows: list[ReportRow] = []
        failures: list[SeriesFailure] = []
        for fitter in self.fitters:
            try:
                result = fitter.run(points)
            except DecfitError as e:
                logger.info('%s: %s failed: %s', series.label, fitter.name, e)
                failures.append(SeriesFailure.from_exception(series.label, e))
                continue

            if self.debug:
                logger.debug('===== %s: %s =====', series.label, fitter.name)
                logger.debug('params=%s R2=%.6f iterations=%d converged=%s',
                             result.params, result.r_squared, result.iterations, result.converged)

            rows.append(ReportRow(series.label, fitter.name, result, points))
            if not result.converged:
                failures.append(SeriesFailure(series.label, DecfitErrors.NOT_CONVERGED,
                                              (fitter.name, result.iterations)))

        return rows, failures

    def run(self) -> Report:
        '''
        Fit all series and assemble the report.

        Series may be fitted concurrently; rows and failures keep the input order.
        '''
        if not self.dataset.series and not self.dataset.failures:
            raise DecfitError(DecfitErrors.EMPTY_DATASET, self.dataset.source)

        if self.debug:
            logger.debug('===== Dataset =====')
            logger.debug('%s: %d series (%s)', self.dataset.source, len(self.dataset), self.dataset.describe())
            logger.debug('===== Fitters =====')
            logger.debug('%s', self.fitters)

        if self.workers > 1 and len(self.dataset.series) > 1:
            with ThreadPoolExecutor(max_workers=self.workers) as executor:
                outcomes = list(executor.map(self.fit_series, self.dataset.series))
        else:
            outcomes = [self.fit_series(s) for s in self.dataset.series]

        report = Report(
            failures=list(self.dataset.failures),
            models=[f.name for f in self.fitters],
            title=self.dataset.describe(),
        )
        for rows, failures in outcomes:
            report.rows.extend(rows)
            report.failures.extend(failures)

        return report


def run_pipeline(dataset: Dataset,
                 fitters: list[BaseFitter],
                 workers: int = 1,
                 debug: bool = False) -> Report:
    '''Fit each series of the dataset with each fitter.'''
    return Pipeline(dataset, fitters=fitters, workers=workers, debug=debug).run()
