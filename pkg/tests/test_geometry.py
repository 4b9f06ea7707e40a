import numpy as np
import pytest

from distquot import (
    CapExceeded,
    GridDomain,
    build_sphere_table,
    index_point,
    point_index,
    sphere_size_closed,
    vector_norm,
)

from conftest import domain, field

SMALL_DOMAINS = [
    (3, 1, 2), (3, 1, 3), (3, 1, 4),
    (5, 1, 2), (5, 1, 3), (5, 1, 4),
    (7, 1, 2), (7, 1, 3),
    (3, 2, 2), (3, 2, 3),
    (11, 1, 2), (13, 1, 2), (13, 1, 3),
    (5, 2, 2), (3, 3, 2), (7, 2, 2),
]


def test_norm_examples(f5, f3):
    assert vector_norm(f5, (3, 4)) == 0  # 9 + 16 = 25
    assert vector_norm(f5, (0, 0)) == 0
    assert vector_norm(f3, (1, 1, 1)) == 0


def test_point_index_examples(f3):
    dom = domain(3, 1, 2)
    assert point_index(dom, (0, 0)) == 0
    assert point_index(dom, (2, 1)) == 5
    assert index_point(dom, 5) == (2, 1)


def test_point_index_roundtrip_all():
    dom = domain(5, 1, 3)
    for i in range(dom.size):
        assert point_index(dom, index_point(dom, i)) == i


def test_point_index_validation(f3):
    dom = domain(3, 1, 2)
    with pytest.raises(ValueError):
        point_index(dom, (0,))
    with pytest.raises(ValueError):
        point_index(dom, (3, 0))
    with pytest.raises(ValueError):
        index_point(dom, 9)


def test_dimension_and_cap_validation(f3):
    with pytest.raises(ValueError):
        GridDomain(f3, 1)
    with pytest.raises(CapExceeded):
        GridDomain(f3, 2, grid_cap=8)


def test_sphere_sizes_f3_2():
    table = build_sphere_table(domain(3, 1, 2))
    assert table.size_of.tolist() == [1, 4, 4]


def test_sphere_sizes_f5_2():
    table = build_sphere_table(domain(5, 1, 2))
    assert table.size_of[0] == 9
    assert table.size_of[1] == 4


def test_sphere_sizes_f3_3():
    table = build_sphere_table(domain(3, 1, 3))
    assert table.size_of[1] == 6


def test_sphere_size_closed_examples():
    dom = domain(3, 1, 2)
    assert sphere_size_closed(dom, 1) == 4
    assert sphere_size_closed(dom, 0) == 1
    assert sphere_size_closed(domain(3, 1, 3), 1) == 6


@pytest.mark.parametrize("p,ell,d", SMALL_DOMAINS)
def test_sphere_sizes_match_closed_form(p, ell, d):
    dom = domain(p, ell, d)
    table = build_sphere_table(dom)
    for t in range(dom.q):
        assert int(table.size_of[t]) == sphere_size_closed(dom, t)
    assert int(table.size_of.sum()) == dom.size


@pytest.mark.parametrize("p,ell,d", [(5, 1, 2), (3, 2, 2), (3, 1, 3)])
def test_norm_invariant_under_symmetries(p, ell, d):
    f = field(p, ell)
    dom = domain(p, ell, d)
    rng = np.random.Generator(np.random.PCG64(7))
    for _ in range(50):
        vec = [int(x) for x in rng.integers(0, dom.q, size=d)]
        n = vector_norm(f, vec)
        assert vector_norm(f, list(reversed(vec))) == n
        flipped = [f.neg(vec[0])] + vec[1:]
        assert vector_norm(f, flipped) == n
