import numpy as np
import pytest

from distquot import (
    EvenDimension,
    GridFunction,
    build_sphere_table,
    characters_for,
    forward_transform,
    forward_transform_direct,
    index_point,
    inverse_transform,
    plancherel_check,
    size_weighted_hat_sum,
    sphere_hat_closed,
    sphere_hat_orthogonality,
    sphere_hat_table,
    sum_sphere_hat_over_radii,
    weighted_sphere_hat_sum,
    within_tolerance,
    zero_sphere_hat_max,
)
from distquot.characters import TOLERANCE

from conftest import domain

HAT_DOMAINS = [(3, 1, 2), (3, 1, 3), (5, 1, 2), (5, 1, 3), (3, 2, 2), (7, 1, 2)]


def _sphere_indicator(dom, j):
    norms = build_sphere_table(dom).norm_of
    return GridFunction.indicator(dom, np.nonzero(norms == j)[0])


def test_delta_transform_is_flat():
    dom = domain(3, 1, 2)
    fhat = forward_transform(GridFunction.indicator(dom, [0]))
    assert np.allclose(fhat.values, 1 / 9)


def test_constant_transform_is_delta():
    dom = domain(3, 1, 2)
    f = GridFunction(dom, np.ones(dom.size, dtype=np.complex128))
    fhat = forward_transform(f)
    expected = np.zeros(dom.size, dtype=np.complex128)
    expected[0] = 1.0
    assert np.max(np.abs(fhat.values - expected)) < 1e-12


def test_sphere_zero_mass_at_zero_frequency():
    dom = domain(3, 1, 2)
    fhat = forward_transform(_sphere_indicator(dom, 0))
    assert abs(fhat.values[0] - 1 / 9) < 1e-12


MATRIX_DOMAINS = [
    (p, ell, d)
    for (p, ell) in [(3, 1), (5, 1), (7, 1), (3, 2), (11, 1), (13, 1), (5, 2), (3, 3), (7, 2)]
    for d in (2, 3, 4)
    if (p**ell) ** d <= 1 << 16
]


@pytest.mark.parametrize("p,ell,d", MATRIX_DOMAINS)
def test_roundtrip_and_plancherel_random(p, ell, d):
    """Inversion and Plancherel on 100 random grid functions per domain."""
    dom = domain(p, ell, d)
    rng = np.random.Generator(np.random.PCG64(11))
    for _ in range(100):
        vals = rng.random(dom.size) - 0.5 + 1j * (rng.random(dom.size) - 0.5)
        f = GridFunction(dom, vals)
        back = inverse_transform(forward_transform(f))
        assert np.max(np.abs(back.values - vals)) < 1e-9
        lhs, rhs = plancherel_check(f)
        assert within_tolerance(lhs, rhs)


def test_roundtrip_sphere_indicator():
    dom = domain(3, 1, 3)
    f = _sphere_indicator(dom, 1)
    back = inverse_transform(forward_transform(f))
    assert np.max(np.abs(back.values - f.values)) < 1e-9


def test_inverse_of_flat_mass_recovers_delta():
    dom = domain(3, 1, 2)
    fhat = GridFunction(dom, np.full(dom.size, 1 / 9, dtype=np.complex128))
    f = inverse_transform(fhat)
    expected = np.zeros(dom.size)
    expected[0] = 1.0
    assert np.max(np.abs(f.values - expected)) < 1e-12


def test_plancherel_examples():
    dom = domain(5, 1, 2)
    f = GridFunction.indicator(dom, list(range(7)))
    lhs, rhs = plancherel_check(f)
    assert abs(lhs - 7 / 25) < 1e-12 and abs(rhs - 7 / 25) < 1e-12
    zero = GridFunction.zeros(dom)
    assert plancherel_check(zero) == (0.0, 0.0)
    full = GridFunction(domain(3, 1, 2), np.ones(9, dtype=np.complex128))
    lhs, rhs = plancherel_check(full)
    assert abs(lhs - 1) < 1e-12 and abs(rhs - 1) < 1e-12


@pytest.mark.parametrize("p,ell,d", [(3, 1, 2), (5, 1, 2), (3, 1, 3), (3, 2, 2)])
def test_factored_transform_matches_direct(p, ell, d):
    dom = domain(p, ell, d)
    rng = np.random.Generator(np.random.PCG64(3))
    vals = rng.random(dom.size) - 0.5 + 1j * (rng.random(dom.size) - 0.5)
    f = GridFunction(dom, vals)
    assert np.max(
        np.abs(forward_transform(f).values - forward_transform_direct(f).values)
    ) < 1e-10


@pytest.mark.parametrize("p,ell,d", HAT_DOMAINS)
def test_sphere_hat_closed_matches_transform_everywhere(p, ell, d):
    dom = domain(p, ell, d)
    for j in range(dom.q):
        grid = forward_transform(_sphere_indicator(dom, j)).values
        for m in range(dom.size):
            closed = sphere_hat_closed(dom, j, index_point(dom, m))
            assert abs(grid[m] - closed) <= TOLERANCE * (1 + abs(closed))


def test_sphere_hat_zero_frequency_is_density():
    dom = domain(5, 1, 2)
    sizes = build_sphere_table(dom).size_of
    for j in range(dom.q):
        val = sphere_hat_closed(dom, j, (0, 0))
        assert within_tolerance(val, sizes[j] / dom.size)


def test_sphere_hat_f3_example():
    assert within_tolerance(sphere_hat_closed(domain(3, 1, 2), 0, (1, 0)), 1 / 9)


def test_sphere_hat_table_radial_consistency():
    table = sphere_hat_table(domain(5, 1, 3))
    assert table.source == "transform"
    assert table.class_deviation <= TOLERANCE


def test_sphere_hat_table_sources_agree():
    dom = domain(5, 1, 2)
    a = sphere_hat_table(dom, source="transform")
    b = sphere_hat_table(dom, source="closed-form")
    assert np.max(np.abs(a.radial - b.radial)) <= TOLERANCE


def test_zero_hat_max_bounds():
    value, bound = zero_sphere_hat_max(domain(5, 1, 2))
    assert bound == pytest.approx(1 / 5)
    assert value <= bound + TOLERANCE
    value, bound = zero_sphere_hat_max(domain(5, 1, 3))
    assert bound == pytest.approx(1 / 25)
    assert value <= bound + TOLERANCE


def test_sum_over_radii_vanishes():
    assert abs(sum_sphere_hat_over_radii(domain(5, 1, 2), 2, (1, 0))) <= TOLERANCE
    assert abs(sum_sphere_hat_over_radii(domain(3, 1, 3), 1, (1, 1, 0))) <= TOLERANCE


def test_sum_over_radii_rejects_zero_frequency():
    with pytest.raises(ValueError):
        sum_sphere_hat_over_radii(domain(5, 1, 2), 1, (0, 0))
    with pytest.raises(ValueError):
        sum_sphere_hat_over_radii(domain(5, 1, 2), 0, (1, 0))


@pytest.mark.parametrize(
    "p,ell,d,r,m",
    [(5, 1, 2, 1, (1, 0)), (3, 1, 2, 2, (0, 1)), (3, 1, 3, 2, (1, 0, 0))],
)
def test_weighted_sum_examples(p, ell, d, r, m):
    lhs, rhs = weighted_sphere_hat_sum(domain(p, ell, d), r, m)
    assert within_tolerance(lhs, rhs)


def test_orthogonality_examples():
    dom = domain(5, 1, 2)
    res = sphere_hat_orthogonality(dom, 1, (0, 0), (0, 0))
    expected = 1 / 5 + 1 / 25 - 1 / 125
    assert res.norms_matched
    assert within_tolerance(res.direct, expected)
    assert within_tolerance(res.general_closed, expected)
    assert within_tolerance(res.parity_closed, expected)

    res = sphere_hat_orthogonality(dom, 1, (1, 0), (0, 2))
    assert not res.norms_matched
    assert within_tolerance(res.direct, -1 / 125)

    dom53 = domain(5, 1, 3)
    res = sphere_hat_orthogonality(dom53, 2, (1, 0, 0), (1, 0, 0))
    assert not res.norms_matched  # ||m|| = 1 differs from 2 * 1
    assert within_tolerance(res.direct, 1 / 625)  # -q^(-d-1) eta(2), eta(2) = -1


@pytest.mark.parametrize("p,ell,d", [(3, 1, 2), (5, 1, 2), (3, 1, 3)])
def test_orthogonality_exhaustive_small(p, ell, d):
    dom = domain(p, ell, d)
    for r in range(1, min(dom.q, 4)):
        for m in range(dom.size):
            for mp in range(0, dom.size, max(1, dom.size // 9)):
                res = sphere_hat_orthogonality(
                    dom, r, index_point(dom, m), index_point(dom, mp)
                )
                assert within_tolerance(res.direct, res.general_closed)
                assert within_tolerance(res.direct, res.parity_closed)


def test_size_weighted_sum_examples():
    direct, closed = size_weighted_hat_sum(domain(5, 1, 3), 1, (1, 2, 0))
    assert within_tolerance(direct, closed)  # ||m|| = 5 = 0: the q-1 branch
    direct, closed = size_weighted_hat_sum(domain(3, 1, 3), 2, (1, 0, 0))
    assert within_tolerance(direct, closed)  # nonzero norm: the -1 branch


def test_size_weighted_sum_rejects_even_dimension():
    with pytest.raises(EvenDimension):
        size_weighted_hat_sum(domain(5, 1, 2), 1, (1, 0))


@pytest.mark.parametrize("p,ell,d", [(3, 1, 2), (5, 1, 2), (3, 1, 3), (5, 1, 3)])
def test_gauss_power_parity_reduction(p, ell, d):
    from conftest import field

    f = field(p, ell)
    chars = characters_for(f)
    g2d = chars.gauss_sum() ** (2 * d)
    if d % 2 == 0:
        assert within_tolerance(g2d, float(f.q) ** d)
    else:
        assert within_tolerance(g2d * chars.eta(f.neg(1)), float(f.q) ** d)
