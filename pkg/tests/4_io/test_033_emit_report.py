from tests import *

POINTS = CdfPoints([0, 10, 20], [100, 50, 0])


def poly_row(label: str, coeffs: tuple[float, ...], r2: float) -> ReportRow:
    result = FitResult(PolyCoeffs(coeffs), r2, 1, True, 0.0)
    return ReportRow(label, result.model, result, POINTS)


def fermi_row(label: str, params: FermiParams, r2: float, converged: bool = True) -> ReportRow:
    return ReportRow(label, 'fermi_dirac', FitResult(params, r2, 12, converged, 0.0), POINTS)


def test_polynomial_table():
    report = Report([poly_row('2008', (-0.01574, 84.62), 0.9146)], models=['polynomial'])

    assert emit_report(report) == (
        'Year  P1        P2     R^2 (%)\n'
        '2008  -0.01574  84.62  91.46\n'
    )


def test_fermi_dirac_table():
    report = Report([
        fermi_row('2003/2004', REFERENCE, 0.999123),
        fermi_row('2004/2005', FermiParams(98.76543, 8.2354, 0.48662), 0.5, converged=False),
    ], models=['fermi_dirac'])

    lines = emit_report(report).splitlines()

    assert lines[0].split() == ['Year', 'T', 'C', 'g', 'μ', 'R^2', '(%)', 'Converged']
    assert lines[1].split() == ['2003/2004', '0.4881', '4.605', '100', '8.196', '99.91', 'yes']
    assert lines[2].split() == ['2004/2005', '0.4866', '4.593', '98.77', '8.235', '50.00', 'no']


def test_one_block_per_model():
    report = Report([
        fermi_row('2006', REFERENCE, 1.0),
        poly_row('2006', (-1.0, 100.0), 0.5),
        poly_row('2006', (0.5, -1.0, 100.0), 0.75),
    ], models=['fermi_dirac', 'polynomial', 'polynomial_2'])

    blocks = emit_report(report).split('\n\n')

    assert len(blocks) == 3
    assert blocks[0].startswith('Year  T')
    assert blocks[1].split('\n')[0].split() == ['Year', 'P1', 'P2', 'R^2', '(%)']
    assert blocks[2].split('\n')[0].split() == ['Year', 'P1', 'P2', 'P3', 'R^2', '(%)']
    assert blocks[2].split('\n')[1].split() == ['2006', '0.5', '-1', '100', '75.00']


def test_csv():
    report = Report([
        fermi_row('2006', REFERENCE, 1.0),
        poly_row('2006', (-1.0, 100.0), 0.5),
        poly_row('2006', (0.5, -1.0, 100.0), 0.75),
    ], models=['fermi_dirac', 'polynomial', 'polynomial_2'])

    assert emit_report(report, 'csv') == (
        'label,model,P1,P2,P3,T,C,g,mu,r_squared_pct,converged\n'
        '2006,fermi_dirac,,,,0.4881,4.605,100,8.196,100.00,true\n'
        '2006,polynomial,-1,100,,,,,,50.00,true\n'
        '2006,polynomial_2,0.5,-1,100,,,,,75.00,true\n'
    )


def test_csv_quotes_labels():
    report = Report([poly_row('Wales, 2006', (-1.0, 100.0), 0.5)], models=['polynomial'])

    assert emit_report(report, 'csv').splitlines()[1] == '"Wales, 2006",polynomial,-1,100,50.00,true'


def test_empty_report():
    report = Report(models=['polynomial'])

    assert emit_report(report) == 'Year  P1  P2  R^2 (%)\n'
    assert emit_report(report, 'csv') == 'label,model,P1,P2,r_squared_pct,converged\n'


@pytest.mark.parametrize('value, text', [
    (0.48812345, '0.4881'),
    (8.196, '8.196'),
    (100.0, '100'),
    (116.24, '116.2'),
    (-0.00001, '-1e-05'),
    (-0.0, '0'),
    (12345.6, '1.235e+04'),
])
def test_four_significant_digits(value, text):
    report = Report([poly_row('Y', (value, 1.0), 0.5)], models=['polynomial'])

    assert emit_report(report, 'csv').splitlines()[1].split(',')[2] == text


def test_negative_r_squared():
    report = Report([poly_row('Y', (1.0, 0.0), -0.25)], models=['polynomial'])

    assert emit_report(report, 'csv').splitlines()[1].endswith(',-25.00,true')


def test_unknown_format():
    with pytest.raises(DecfitError) as excinfo:
        emit_report(Report(), 'xml')

    assert_error(excinfo, DecfitErrors.INVALID_CONFIG)


def test_summary():
    report = fit_file(DATASETS / 'sample.csv')
    summaries = {s.model: s for s in summarize_report(report)}

    assert summaries['fermi_dirac'].count == 12
    assert summaries['fermi_dirac'].min_pct == pytest.approx(100, abs=1e-6)
    assert summaries['fermi_dirac'].above_threshold == 12
    assert 53 < summaries['polynomial'].min_pct < summaries['polynomial'].max_pct < 55
    assert summaries['polynomial'].above_threshold == 0

    text = emit_summary(report)
    assert text.startswith('Summary of fits to lower limit on gross expenditure.\n')
    assert text.splitlines()[2].split() == ['fermi_dirac', '12', '100.00', '100.00', '100.00', '12']
