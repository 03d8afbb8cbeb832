import warnings

from tests import *


def central_difference(p: FermiParams, x: float) -> list[float]:
    values = p.as_array()
    result = []
    for i in range(3):
        h = 1e-6 * max(1.0, abs(values[i]))
        up, down = values.copy(), values.copy()
        up[i] += h
        down[i] -= h
        diff = eval_fermi_dirac(FermiParams.from_array(up), x) - eval_fermi_dirac(FermiParams.from_array(down), x)
        result.append(diff / (2 * h))
    return result


def test_at_chemical_potential():
    p = FermiParams(g=100, mu=8.196, t=0.4881)
    d_g, d_mu, d_t = fermi_jacobian(p, p.mu)

    assert d_g == pytest.approx(0.5)
    assert d_mu == pytest.approx(p.g / (4 * p.t))
    assert d_t == 0


def test_matches_finite_differences():
    rng = np.random.default_rng(5)

    for _ in range(1000):
        p = FermiParams(rng.uniform(50, 150), rng.uniform(1, 20), rng.uniform(0.1, 2))
        x = p.mu + rng.uniform(-30, 30) * p.t

        analytic = fermi_jacobian(p, x)
        numeric = central_difference(p, x)
        for a, n in zip(analytic, numeric):
            # absolute floor covers partials that vanish or fall below round-off
            assert a == pytest.approx(n, rel=1e-6, abs=1e-7)


def test_far_tail_underflows_quietly():
    p = FermiParams(g=100, mu=2, t=0.1)

    with warnings.catch_warnings():
        warnings.simplefilter('error')
        partials = fermi_jacobian(p, p.mu + 50 * p.t)

    for value in partials:
        assert np.isfinite(value)
        assert 0 <= value < 1e-15


def test_matrix_layout():
    x = np.linspace(0, 10, 7)
    jac = fermi_jacobian_matrix(REFERENCE, x)

    assert jac.shape == (7, 3)
    assert np.allclose(jac[:, 0], eval_fermi_dirac(REFERENCE, x) / REFERENCE.g)
