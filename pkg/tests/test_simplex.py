import random
from fractions import Fraction

import numpy as np
import pytest

from trilag.lagrangian import WeightVector
from trilag.simplex import (
    ClosedFormInput,
    closed_form,
    closed_form_matches_definition,
    gradient,
    majorization_bound_check,
    maximize,
    project_to_simplex,
    round_point_exact,
    trivariate_g,
)

from helpers import rand_weights

HALF = Fraction(1, 2)


def test_closed_form_values():
    assert closed_form([HALF, HALF]) == Fraction(3, 32)
    assert closed_form([Fraction(1)]) == 0
    assert closed_form([Fraction(1, 3)] * 3) == Fraction(5, 54)


def test_closed_form_input_caches_power_sums():
    ci = ClosedFormInput.from_weights([Fraction(1, 3)] * 3)
    assert ci.s2 == Fraction(1, 3) and ci.s3 == Fraction(1, 9)
    assert closed_form(ci) == Fraction(5, 54)
    float_ci = ClosedFormInput.from_weights([0.5, 0.5])
    assert abs(closed_form(float_ci) - 3 / 32) < 1e-15


def test_closed_form_rejects_off_simplex():
    with pytest.raises(ValueError):
        closed_form([Fraction(1, 2), Fraction(1, 4)])
    with pytest.raises(ValueError):
        closed_form([Fraction(3, 2), Fraction(-1, 2)])


def test_closed_form_matches_definition_examples():
    assert closed_form_matches_definition(2, WeightVector([HALF, HALF]))
    assert closed_form_matches_definition(3, WeightVector([Fraction(1, 3)] * 3))
    assert closed_form_matches_definition(1, WeightVector([Fraction(1)]))


def test_closed_form_matches_definition_random():
    rng = random.Random(59)
    for _ in range(10_000):
        n = rng.randint(1, 10)
        w = rand_weights(rng, n, max_part=12)
        assert closed_form_matches_definition(n, w)


def test_gradient_hand_values():
    g = gradient([0.5, 0.5])
    assert np.allclose(g, [0.0, 0.0], atol=1e-15)
    g = gradient([1.0, 0.0])
    assert np.allclose(g, [-0.5, 0.0], atol=1e-15)


def test_gradient_matches_finite_differences():
    rng = np.random.default_rng(7)
    step = 1e-5
    for n in (2, 5, 8):
        for _ in range(100):
            x = rng.dirichlet(np.ones(n))
            grad = gradient(x)
            for i in range(n):
                e = np.zeros(n)
                e[i] = step
                fd = (
                    closed_form_float(x + e) - closed_form_float(x - e)
                ) / (2 * step)
                assert abs(grad[i] - fd) < 1e-6


def closed_form_float(x):
    s2 = float(np.dot(x, x))
    s3 = float(np.sum(np.asarray(x) ** 3))
    return (1 - s3) / 6 - (1 - s2) ** 2 / 8


def test_project_to_simplex():
    p = project_to_simplex(np.array([0.4, 0.4]))
    assert np.allclose(p, [0.5, 0.5])
    p = project_to_simplex(np.array([2.0, 0.0]))
    assert np.allclose(p, [1.0, 0.0])
    x = np.array([0.2, 0.3, 0.5])
    assert np.allclose(project_to_simplex(x), x)
    for _ in range(50):
        v = np.random.default_rng(1).normal(size=6)
        p = project_to_simplex(v)
        assert p.min() >= 0 and abs(p.sum() - 1) < 1e-12


def test_round_point_exact():
    pt = round_point_exact([0.4999999997, 0.5000000003])
    assert pt == (HALF, HALF)
    assert sum(round_point_exact([0.1234, 0.8766])) == 1


def test_maximize_n2_against_grid_oracle():
    """Dense 1e-3 grid on the 1-simplex as the independent global-max oracle."""
    grid_best = max(closed_form_float(np.array([t / 1000, 1 - t / 1000])) for t in range(1001))
    assert abs(grid_best - 3 / 32) < 1e-6  # oracle locates the extremum itself
    res = maximize(2, restarts=20, seed=4)
    assert abs(float(res.value) - grid_best) < 1e-9
    assert abs(res.point[0] - 0.5) < 1e-4 and abs(res.point[1] - 0.5) < 1e-4


def test_maximize_n1():
    res = maximize(1, restarts=1, seed=0)
    assert res.value == 0 and res.point == (1.0,)


def test_maximize_n8_two_point_support():
    res = maximize(8, restarts=60, seed=2)
    assert abs(float(res.value) - 3 / 32) < 1e-9
    top = sorted(res.point, reverse=True)
    assert abs(top[0] - 0.5) < 1e-4 and abs(top[1] - 0.5) < 1e-4
    assert all(abs(v) < 1e-4 for v in top[2:])


def test_maximize_never_exceeds_bound():
    for n in range(1, 13):
        res = maximize(n, restarts=12, seed=n)
        assert res.value <= Fraction(3, 32)
        assert float(res.float_value) <= 3 / 32 + 1e-9


def test_maximize_deterministic_in_seed():
    a = maximize(5, restarts=10, seed=123)
    b = maximize(5, restarts=10, seed=123)
    assert a == b


def test_trivariate_g_values():
    assert trivariate_g(HALF, HALF, Fraction(0)) == Fraction(3, 32)
    assert trivariate_g(Fraction(1, 3), Fraction(1, 3), Fraction(1, 3)) == Fraction(5, 54)
    assert trivariate_g(Fraction(1), Fraction(0), Fraction(0)) == 0


def test_trivariate_g_domain_errors():
    with pytest.raises(ValueError):
        trivariate_g(Fraction(1, 4), HALF, Fraction(0))  # unsorted
    with pytest.raises(ValueError):
        trivariate_g(HALF, HALF, HALF)  # sum > 1
    with pytest.raises(ValueError):
        trivariate_g(HALF, Fraction(1, 4), Fraction(-1, 8))


def test_majorization_examples():
    assert majorization_bound_check([Fraction(1, 4)] * 4)
    assert majorization_bound_check([HALF, HALF, Fraction(0), Fraction(0)])
    # tail entries all equal to the third coordinate: equality case
    assert majorization_bound_check(
        [Fraction(6, 10), Fraction(2, 10), Fraction(1, 10), Fraction(1, 10)]
    )
    assert majorization_bound_check(
        [Fraction(6, 10), Fraction(2, 10), Fraction(15, 100), Fraction(5, 100)]
    )
    with pytest.raises(ValueError):
        majorization_bound_check([Fraction(1, 4), HALF, Fraction(1, 4)])
    with pytest.raises(ValueError):
        majorization_bound_check([HALF, HALF])


def test_majorization_random_sorted():
    rng = random.Random(67)
    for _ in range(400):
        n = rng.randint(3, 9)
        w = sorted(rand_weights(rng, n), reverse=True)
        assert majorization_bound_check(w)
        assert closed_form(w) <= trivariate_g(w[0], w[1], w[2])
