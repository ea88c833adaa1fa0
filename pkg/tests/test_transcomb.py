from math import factorial

import pytest
from hypothesis import given, strategies as st

from yblab import transcomb as tc


def test_pair_index_column_major():
    assert [tc.pair_index(i, j) for j in range(2, 5) for i in range(1, j)] == list(range(6))


def test_transitivity_predicate():
    assert tc.is_transitive_array(tc.TransArray(3, (1, 1, 1)))
    # c13 must be c12 or c23
    assert not tc.is_transitive_array(tc.TransArray(3, (0, 1, 0)))
    assert tc.is_transitive_array(tc.TransArray(3, (0, 0, 1)))


def test_small_counts():
    assert sum(1 for _ in tc.enumerate_transitive_arrays(3, 2)) == 6
    assert sum(1 for _ in tc.enumerate_transitive_matrices(2, 2)) == 10
    assert sum(1 for _ in tc.enumerate_transitive_matrices(3, 2)) == 74
    assert sum(1 for _ in tc.enumerate_transitive_matrices(2, palette="abcd")) == 52


def test_stirling_values():
    assert tc.stirling_transitive(5, 2) == 59
    assert tc.stirling_transitive(6, 3) == 756
    assert tc.stirling_transitive(7, 4) == 6700
    assert [tc.stirling_transitive(4, k) for k in (1, 2, 3)] == [1, 11, 5]
    with pytest.raises(ValueError):
        tc.stirling_transitive(4, 0)


def test_surjection_route_agrees():
    for n in range(2, 6):
        for k in range(1, n):
            assert tc.stirling_transitive_by_surjections(n, k) == tc.stirling_transitive(n, k)


def test_columns():
    assert [tc.stirling_transitive(n, n - 1) for n in range(2, 8)] == [tc.catalan(n - 1) for n in range(2, 8)]
    assert [tc.conj_n_minus_2(n) for n in range(4, 8)] == [11, 69, 364, 1770]


def test_bitransitive_and_q():
    assert [tc.bitransitive_count(n) for n in range(1, 7)] == [2, 10, 74, 730, 9002, 133210]
    for n in range(2, 7):
        assert tc.q_poly_eval(n, 2) == tc.bitransitive_count(n)


def test_p_values():
    assert [tc.p_poly_eval(n, 3) for n in range(2, 7)] == [3, 15, 99, 771, 6693]
    assert [tc.p_poly_eval(n, 4) for n in range(2, 7)] == [4, 28, 256, 2704, 31192]
    for n in range(2, 7):
        assert tc.p_poly_eval(n, 2) == factorial(n)


def test_matrix_level_stirling():
    rec = tc.counting_formulas(3)
    assert rec["matrix_stirling_check"]
    assert rec["k2_is_half_factorial_minus_1"]


def test_stirling_csv_stable():
    a = tc.stirling_table_csv(5)
    assert a == tc.stirling_table_csv(5)
    assert a.splitlines()[3] == "4,1,11,5,"


def test_sigma_of_identity_and_reverse():
    assert tc.sigma_of_perm((1, 2, 3)).entries == (1, 1, 1)
    assert tc.sigma_of_perm((3, 2, 1)).entries == (-1, -1, -1)
    with pytest.raises(ValueError):
        tc.perm_of_sigma(tc.TransArray(3, (1, -1, 1)))


def test_restrict_extend():
    c = tc.TransArray(3, (1, -1, -1))
    assert tc.restrict_extend(c, "minus").entries == (1,)
    assert tc.restrict_extend(c, "plus").entries == (-1,)
    assert tc.restrict_extend(c, "extend", (1, 1, 1)).n == 4
    assert tc.last_column(c) == (-1, -1)


@given(st.permutations(range(1, 7)))
def test_sigma_roundtrip(w):
    w = tuple(w)
    c = tc.sigma_of_perm(w)
    assert tc.is_transitive_array(c)
    assert tc.perm_of_sigma(c) == w


@given(st.permutations(range(1, 6)), st.lists(st.sampled_from([1, -1]), min_size=5, max_size=5))
def test_signed_perm_gives_almost_skew_transitive(w, d):
    a = tc.eps_of_signed_perm(tc.SignedPermData(tuple(w), tuple(d)))
    assert a.is_almost_skew()
    assert tc.is_transitive_matrix(a)
    assert tc.signed_perm_of_eps(a) == tc.SignedPermData(tuple(w), tuple(d))


@given(st.integers(2, 5), st.data())
def test_restrictions_stay_transitive(n, data):
    arrays = list(tc.enumerate_transitive_arrays(n, 3))
    c = data.draw(st.sampled_from(arrays))
    assert tc.is_transitive_array(tc.restrict_extend(c, "minus"))
    assert tc.is_transitive_array(tc.restrict_extend(c, "plus"))
