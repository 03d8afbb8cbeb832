'''Decile tables stored as CSV.

Expected layout, one series per row::

    label,value_kind,measure,d1,d2,d3,d4,d5,d6,d7,d8,d9,d10
    2003/2004,mean,disposable,130,180,...,900

``value_kind`` is ``mean`` or ``lower_limit``; ``measure`` is ``gross``,
``disposable`` or ``category:<name>``. Numbers use ``.`` as decimal point and no
thousands separators. Labels are opaque strings.
'''

import csv
import io
import logging
import re
from dataclasses import dataclass, field
from pathlib import Path

from .cdf import DECILES, DecileSeries, Measure, ValueKind, validate_series
from .errors import DecfitError, DecfitErrors, SeriesFailure

logger = logging.getLogger(__name__)

HEADER = ('label', 'value_kind', 'measure', *(f'd{i}' for i in range(1, DECILES + 1)))

_NUMBER = re.compile(r'[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?')


@dataclass
class Dataset:
    '''Series sharing one value kind and measure, plus the rows that were rejected.'''

    series: list[DecileSeries]
    source: str = '<memory>'
    failures: list[SeriesFailure] = field(default_factory=list)

    def __post_init__(self):
        labels: set[str] = set()
        for s in self.series:
            first = self.series[0]
            if (s.value_kind, s.measure) != (first.value_kind, first.measure):
                raise DecfitError(DecfitErrors.MIXED_METADATA, s.label)
            if s.label in labels:
                raise DecfitError(DecfitErrors.DUPLICATE_LABEL, s.label)
            labels.add(s.label)

    def __len__(self) -> int:
        return len(self.series)

    @property
    def value_kind(self) -> ValueKind | None:
        return self.series[0].value_kind if self.series else None

    @property
    def measure(self) -> Measure | None:
        return self.series[0].measure if self.series else None

    def describe(self) -> str:
        '''Caption such as "mean disposable expenditure".'''
        if not self.series:
            return 'empty dataset'
        return self.series[0].measure.describe(self.series[0].value_kind)


def _parse_number(cell: str, line: int) -> float:
    cell = cell.strip()
    if not _NUMBER.fullmatch(cell):
        raise DecfitError(DecfitErrors.PARSE_ERROR, 'not a number', cell, line=line)
    return float(cell)


def parse_decile_csv(content: bytes | str, source: str = '<memory>', strict: bool = False) -> Dataset:
    '''
    Parse a decile CSV table.

    Malformed content (bad header, missing metadata, non-numeric cells) raises
    ``PARSE_ERROR``. Rows that parse but fail validation, repeat a label or mix
    metadata are recorded in ``Dataset.failures``, or raised when ``strict``.
    Every error carries the 1-based line number.
    '''
    if isinstance(content, bytes):
        try:
            content = content.decode('utf-8-sig')
        except UnicodeDecodeError as e:
            raise DecfitError(DecfitErrors.PARSE_ERROR, 'not UTF-8', str(e))

    reader = csv.reader(io.StringIO(content, newline=''))
    try:
        header = next(reader)
    except StopIteration:
        raise DecfitError(DecfitErrors.PARSE_ERROR, 'empty file', line=1)

    if tuple(h.strip().lower() for h in header) != HEADER:
        raise DecfitError(DecfitErrors.PARSE_ERROR, 'unexpected header', ','.join(header), line=reader.line_num)

    series: list[DecileSeries] = []
    failures: list[SeriesFailure] = []
    labels: set[str] = set()

    for row in reader:
        line = reader.line_num
        if not any(cell.strip() for cell in row):
            continue
        if len(row) < 3:
            raise DecfitError(DecfitErrors.PARSE_ERROR, 'missing metadata', line=line)

        label, value_kind, measure = (cell.strip() for cell in row[:3])
        try:
            value_kind = ValueKind.parse(value_kind)
            measure = Measure.parse(measure)
        except DecfitError as e:
            raise e.at_line(line)
        values = [_parse_number(cell, line) for cell in row[3:]]

        try:
            s = validate_series(label, values, value_kind, measure)

            if label in labels:
                raise DecfitError(DecfitErrors.DUPLICATE_LABEL, label)
            if series and (s.value_kind, s.measure) != (series[0].value_kind, series[0].measure):
                raise DecfitError(DecfitErrors.MIXED_METADATA, label, s.value_kind.value, str(s.measure))
        except DecfitError as e:
            e = e.at_line(line)
            if strict:
                raise e
            logger.info('%s: rejected row: %s', source, e)
            failures.append(SeriesFailure.from_exception(label, e))
            continue

        labels.add(label)
        series.append(s)

    logger.debug('%s: %d series, %d rejected rows', source, len(series), len(failures))
    return Dataset(series, source=source, failures=failures)


def read_decile_csv(path: str | Path, strict: bool = False) -> Dataset:
    '''Read and parse a decile CSV file.'''
    with open(path, 'rb') as f:
        content = f.read()
    return parse_decile_csv(content, source=str(path), strict=strict)


def format_dataset(dataset: Dataset) -> str:
    '''Render the valid series of a dataset back to CSV text. Rejected rows are not written.'''
    out = io.StringIO()
    writer = csv.writer(out, lineterminator='\n')
    writer.writerow(HEADER)
    for s in dataset.series:
        writer.writerow([s.label, s.value_kind.value, str(s.measure), *(f'{v:.15g}' for v in s.values)])
    return out.getvalue()
