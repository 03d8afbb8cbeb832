from tests import *


@pytest.mark.parametrize('coeffs,x,expected', [
    ((-0.0234, 85.85), 0, 85.85),
    ((0, 42.5), 123.4, 42.5),
    ((-0.0234, 85.85), 1000, 62.45),
    ((1, 0, 0), 3, 9),
])
def test_examples(coeffs, x, expected):
    assert eval_polynomial(PolyCoeffs(coeffs), x) == pytest.approx(expected, rel=1e-12)


def test_horner_matches_power_sum():
    rng = np.random.default_rng(1)

    for _ in range(200):
        degree = int(rng.integers(1, 5))
        coeffs = rng.uniform(-10, 10, degree + 1)
        x = rng.uniform(-5, 5)

        terms = [c * x**(degree - k) for k, c in enumerate(coeffs)]
        naive = sum(terms)
        scale = sum(abs(t) for t in terms)

        assert abs(eval_polynomial(PolyCoeffs(tuple(coeffs)), x) - naive) <= 1e-12 * scale


def test_array_input():
    coeffs = PolyCoeffs((-1, 100))
    result = eval_polynomial(coeffs, np.array([0, 10, 100]))

    assert np.allclose(result, [100, 90, 0])


def test_degree():
    assert PolyCoeffs((1, 2)).degree == 1
    assert PolyCoeffs((1, 2, 3, 4, 5)).degree == 4


def test_constant_is_rejected():
    with pytest.raises(DecfitError) as excinfo:
        PolyCoeffs((5,))

    assert_error(excinfo, DecfitErrors.INVALID_DEGREE)
