import itertools

import pytest

from parkav import generalized as g
from parkav.parking import is_parking
from invariants import (
    consistency_triangle,
    generalized_path_sums,
    generalized_per_evaluation,
    metasylvester_identity,
)
from tables import (
    HYPOPLACTIC_MPARK,
    HYPOSYLVESTER_MULTI,
    METASYLVESTER_MPARK,
    METASYLVESTER_MULTI,
)


def test_evaluation_example():
    ev = g.evaluation((4, 4, 6, 4, 2, 2, 1), 7)
    assert ev.counts == (1, 2, 0, 3, 0, 1, 0)
    assert ev.packed == (1, 2, 3, 1)
    with pytest.raises(ValueError):
        g.evaluation((8,), 7)


def test_multiparking_membership():
    assert g.is_m_multiparking((1, 1, 2, 2), 2, 2)
    assert not g.is_m_multiparking((2, 2, 2, 2), 2, 2)
    assert not g.is_m_multiparking((1, 1, 2), 2, 2)  # wrong length


def test_m_parking_collapses_to_ordinary():
    for n in range(1, 6):
        for values in itertools.product(range(1, n + 1), repeat=n):
            assert g.is_m_parking(values, 1, n) == is_parking(values)


def test_m_parking_bound():
    assert g.is_m_parking((1, 3, 5), 2, 3)
    assert not g.is_m_parking((2, 3, 5), 2, 3)  # sorted f(1) must be 1
    assert not g.is_m_parking((1, 3, 6), 2, 3)  # exceeds 1 + m(n-1)


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
def test_hyposylvester_multipark_rows(m):
    assert [g.hyposylvester_multipark(n, m) for n in range(1, 9)] == HYPOSYLVESTER_MULTI[m]


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
def test_metasylvester_multipark_rows(m):
    assert [g.metasylvester_multipark(n, m) for n in range(1, 9)] == METASYLVESTER_MULTI[m]


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
def test_hypoplactic_mpark_rows(m):
    assert [g.hypoplactic_mpark(n, m) for n in range(1, 9)] == HYPOPLACTIC_MPARK[m]


@pytest.mark.parametrize("m", [1, 2, 3])
def test_metasylvester_mpark_rows_small_m(m):
    n_max = 8 if m <= 2 else 7
    assert [g.metasylvester_mpark(n, m) for n in range(1, n_max + 1)] == METASYLVESTER_MPARK[m][:n_max]


@pytest.mark.parametrize("m", [4, 5])
def test_metasylvester_mpark_rows_large_m(m):
    assert [g.metasylvester_mpark(n, m) for n in range(1, 7)] == METASYLVESTER_MPARK[m][:6]


def test_specific_entries():
    assert g.hyposylvester_multipark(3, 1) == 12
    assert g.hyposylvester_multipark(5, 2) == 818
    assert g.hyposylvester_multipark(2, 5) == 7
    assert g.metasylvester_multipark(4, 2) == 254
    assert g.metasylvester_multipark(3, 3) == 44
    assert g.metasylvester_mpark(3, 2) == 45
    assert g.metasylvester_mpark(2, 3) == 7
    assert g.hypoplactic_mpark(4, 2) == 249
    assert g.hypoplactic_mpark(3, 4) == 113


def test_hyposylvester_mpark_dual_route():
    assert g.hyposylvester_mpark(1, 1) == 1
    assert g.hyposylvester_mpark(2, 1) == 3
    assert g.hyposylvester_mpark(2, 2) == 5
    for m in range(1, 4):
        for n in range(1, 6):
            assert g.hyposylvester_mpark(n, m) == g.hyposylvester_mpark_by_paths(n, m)
    assert [g.hyposylvester_mpark(n, 1) for n in range(1, 9)] == HYPOSYLVESTER_MULTI[1]


def test_path_sum_cross_checks():
    generalized_path_sums(6, 3)


def test_per_evaluation_oracle():
    generalized_per_evaluation(5, 2)


def test_multipark_path_route():
    for m in (1, 2, 3):
        for n in range(1, 7):
            assert g.multipark_class_count_by_paths(n, m, "hyposylvester") == g.hyposylvester_multipark(n, m)
            assert g.multipark_class_count_by_paths(n, m, "metasylvester") == g.metasylvester_multipark(n, m)


def test_functional_identity():
    metasylvester_identity(8, 3)


def test_consistency_triangle():
    consistency_triangle(8)


def test_budget_refusal(monkeypatch):
    with pytest.raises(g.PathBudgetExceeded):
        g.metasylvester_mpark(3, 2, cap=10)
    monkeypatch.setenv(g.PATH_CAP_ENV, "10")
    with pytest.raises(g.PathBudgetExceeded):
        g.metasylvester_mpark(3, 2)
    monkeypatch.setenv(g.PATH_CAP_ENV, "100")
    assert g.metasylvester_mpark(3, 2) == 45


def test_argument_validation():
    for fn in (
        g.hyposylvester_multipark,
        g.metasylvester_multipark,
        g.metasylvester_mpark,
        g.hypoplactic_mpark,
        g.hyposylvester_mpark,
    ):
        with pytest.raises(ValueError):
            fn(0, 1)
        with pytest.raises(ValueError):
            fn(1, 0)


def test_increasing_mpark_enumeration():
    fns = list(g.enumerate_increasing_mpark(2, 2))
    assert fns == [(1, 1), (1, 2), (1, 3)]
    assert all(g.is_m_parking(f, 2, 2) for f in fns)


def test_wrapper_types():
    f = g.MMultiparking((1, 1, 2, 2), 2, 2)
    assert f.evaluation().packed == (2, 2)
    with pytest.raises(ValueError):
        g.MMultiparking((2, 2, 2, 2), 2, 2)
    p = g.MParking((1, 3, 5), 2)
    assert p.evaluation().counts == (1, 0, 1, 0, 1)
    with pytest.raises(ValueError):
        g.MParking((2, 3, 5), 2)
