import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from yblab import poisson as po, transcomb as tc

ONE_LEG = tc.TransArray(1, ())


def X(i, j, k=1):
    return po.CPoly.gen(("x", k, i, j))


def test_single_leg_table():
    t = po.build_bracket_Amn(1, 2, ONE_LEG)
    a, b, c, d = X(1, 1), X(1, 2), X(2, 1), X(2, 2)
    br = lambda f, g: po.bracket(t, f, g)
    assert br(a, b) == a * b
    assert br(a, c) == a * c
    assert br(b, c).is_zero()
    assert br(b, d) == b * d
    assert br(c, d) == c * d
    assert br(a, d) == b * c * 2
    assert br(b, a) == -(a * b)


def test_missing_pair_raises():
    t = po.build_bracket_Amn(1, 2, ONE_LEG)
    with pytest.raises(KeyError):
        t.get(("x", 1, 1, 1), ("x", 2, 1, 1))


def test_det_central():
    assert po.det_central_check(2)
    with pytest.raises(ValueError):
        po.det_central_check(3)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_bowtie_equals_closed_form(n):
    arrays = list(tc.enumerate_transitive_arrays(n, palette=[1, -1])) if n > 1 else [ONE_LEG]
    for c in arrays:
        tb = po.bowtie_table_Amn(n, 2, c)
        cf = po.build_bracket_Amn(n, 2, c)
        assert po.tables_equal(tb, cf)
        assert tb.is_skew()
        assert po.jacobi_check(tb)
        assert po.mult_hom_check(n, 2, c, tb)


def test_sigma_id_formula():
    for n in (2, 3):
        ident = tc.sigma_of_perm(tuple(range(1, n + 1)))
        assert po.tables_equal(po.amn_sigma_id_formula(n, 2), po.build_bracket_Amn(n, 2, ident))


def test_relabel():
    from itertools import permutations
    for w in permutations((1, 2, 3)):
        assert po.relabel_check(3, 2, w)


def test_nontransitive_breaks_jacobi():
    t = po.bowtie_table_Amn(3, 2, tc.TransArray(3, (1, -1, 1)))
    ok, wit = po.jacobi_check(t, witness=True)
    assert not ok
    assert wit == (("x", 1, 1, 1), ("x", 2, 1, 1), ("x", 3, 1, 2))


def test_takiff_one_leg_matches_printed_forms():
    tb = po.build_takiff_tables(2, 1, None)
    disp = po.takiff_displayed_table(2, 1, None)
    assert all(tb.get(a, b) == v for (a, b), v in disp.items())


def test_takiff_two_legs_sign_of_omega():
    # printed closed forms agree with the bowtie table after c -> -c on the cross-leg Omega term
    for c in tc.enumerate_transitive_arrays(2, palette=[0, 1, 2]):
        assert po.takiff_block_agreement(2, 2, c, negate=True) == []
    assert po.takiff_block_agreement(2, 2, tc.TransArray(2, (1,))) != []


@pytest.mark.parametrize("ident", ["skew", "jacobi"])
def test_takiff_point_checks(ident):
    t = po.build_takiff_tables(2, 2, tc.TransArray(2, (2,)), d=(1, 0))
    r = po.numeric_point_check(t, ident, 2, 2, seed=3)
    assert r.ok
    assert r.trials > r.degree_bound
    assert r.error_bound < Fraction(1, 10 ** 15)


def test_point_check_catches_wrong_table():
    t = po.build_takiff_tables(2, 2, tc.TransArray(2, (1,)))
    disp = po.takiff_displayed_table(2, 2, tc.TransArray(2, (1,)))
    r = po.numeric_point_check(t, "consistency", 2, 2, other=disp)
    assert not r.ok and r.witness is not None


def test_random_point_inverse():
    rng = random.Random(0)
    pt = po.random_point(po.takiff_gens(2, 1), 2, 1, rng)
    x = [[pt["x", 1, i, j] for j in (1, 2)] for i in (1, 2)]
    xb = [[pt["xb", 1, i, j] for j in (1, 2)] for i in (1, 2)]
    prod = [[sum(x[i][k] * xb[k][j] for k in range(2)) for j in range(2)] for i in range(2)]
    assert prod == [[1, 0], [0, 1]]


gens = [("x", 1, i, j) for i in (1, 2) for j in (1, 2)]
mono = st.lists(st.sampled_from(gens), min_size=0, max_size=3).map(lambda g: tuple(sorted(g)))
poly = st.dictionaries(mono, st.integers(-3, 3), max_size=3).map(po.CPoly)


@settings(max_examples=40, deadline=None)
@given(poly, poly, poly)
def test_bracket_is_skew_biderivation(f, g, k):
    t = po.build_bracket_Amn(1, 2, ONE_LEG)
    br = lambda u, v: po.bracket(t, u, v)
    assert br(f, g) == -br(g, f)
    assert br(f, g * k) == br(f, g) * k + g * br(f, k)
    assert (br(br(f, g), k) + br(br(g, k), f) + br(br(k, f), g)).is_zero()
