import pytest
from hypothesis import given, strategies as st

from latpath import lattice as lat
from latpath.closed_form import uq_multiplicity
from latpath.errors import DomainError
from latpath.paths import count_paths
from latpath.tilting import (
    Decomposition,
    TiltingLabel,
    decompose,
    dim_table,
    dimension_total,
    tensor_step,
    tilting_dim,
    tilting_dim_formula,
    verify_against_paths,
)


def test_tensor_step_example():
    dec = Decomposition(7, {1: 1, 3: 13, 5: 6, 7: 1})
    assert tensor_step(dec, 3).as_dict() == {0: 1, 2: 28, 4: 13, 6: 7, 8: 1}


def test_tensor_step_from_trivial():
    assert tensor_step(Decomposition(0, {0: 1}), 3).as_dict() == {1: 1}


def test_decompose_examples():
    assert decompose(6, 3).as_dict() == {0: 1, 2: 9, 4: 4, 6: 1}
    assert decompose(8, 3).as_dict() == {0: 1, 2: 28, 4: 13, 6: 7, 8: 1}
    assert decompose(0, 5).as_dict() == {0: 1}


@pytest.mark.parametrize("k, l, d", [(2, 3, 3), (8, 3, 9), (0, 3, 1), (0, 7, 1), (3, 3, 6), (5, 3, 6), (4, 5, 5)])
def test_tilting_dim_examples(k, l, d):
    assert tilting_dim(k, l) == d
    assert tilting_dim_formula(k, l) == d


@pytest.mark.parametrize("l", [3, 4, 5, 7, 11])
def test_propagated_dims_match_formula(l):
    table = dim_table(l, 20 * l)
    assert list(table) == [tilting_dim_formula(k, l) for k in range(20 * l + 1)]


@pytest.mark.parametrize("l", [3, 5, 7])
def test_dimension_conservation(l):
    for N in range(41):
        assert dimension_total(decompose(N, l), l) == 2 ** N


@pytest.mark.parametrize("l", [3, 4, 5, 7])
def test_recursion_matches_paths(l):
    report = verify_against_paths(40, l)
    assert report.ok, report.mismatches[:3]
    assert report.checked > 0


@given(N=st.integers(0, 40), l=st.sampled_from([3, 5, 7]))
def test_three_routes_agree(N, l):
    dec = decompose(N, l)
    row = count_paths(lat.uq(l), N).level(N)
    assert dec.as_dict() == dict(row)
    for M in range(N % 2, N + 1, 2):
        assert dec[M] == uq_multiplicity(l, M, N)


def test_label_parts():
    lab = TiltingLabel(11, 3)
    assert (lab.k1, lab.k0, lab.on_filter) == (3, 2, True)
    assert not TiltingLabel(10, 3).on_filter
    with pytest.raises(DomainError):
        TiltingLabel(-1, 3)
    with pytest.raises(DomainError):
        TiltingLabel(1, 2)


def test_decomposition_validation():
    with pytest.raises(DomainError):
        Decomposition(3, {2: 1})
    with pytest.raises(DomainError):
        Decomposition(3, {5: 1})
    with pytest.raises(DomainError):
        Decomposition(3, {1: 0})
    with pytest.raises(DomainError):
        decompose(-1, 3)
    assert Decomposition(3, {1: 2})[3] == 0
