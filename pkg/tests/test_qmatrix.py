import pathlib
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from yblab import qmatrix as qm, transcomb as tc
from yblab.scalars import RationalFunctionQ as Q

GOLDEN = pathlib.Path(__file__).parent / "golden" / "qmatrix_m2_rules.txt"
q = Q.q()
h = q - q ** -1


def rules_text(m=2):
    rs = qm.RewriteSystem(m, 1)
    lines = []
    for (a, b), p in sorted(rs.rules.items(), key=lambda t: (rs.rank[t[0][0]], rs.rank[t[0][1]])):
        lines.append("%s -> %s" % (qm.pretty(qm.NCPoly({(a, b): 1})), qm.pretty(p)))
    return "\n".join(lines) + "\n"


def x(i, j, k=1):
    return qm.NCPoly({((k, i, j),): 1})


def test_golden_relations():
    assert rules_text() == GOLDEN.read_text()


def test_q_matrix_relations_by_hand():
    rs = qm.RewriteSystem(2, 1)
    a, b, c, d = x(1, 1), x(1, 2), x(2, 1), x(2, 2)
    nf = lambda p: qm.normal_form(p, rs)
    assert nf(b * a) == (a * b).scale(q ** -1)
    assert nf(c * a) == (a * c).scale(q ** -1)
    assert nf(c * b) == b * c
    assert nf(d * a) == a * d - (b * c).scale(h)
    assert nf(d * b) == (b * d).scale(q ** -1)
    # ad - da = (q - 1/q) bc
    assert nf(a * d - d * a) == (b * c).scale(h)


def test_R_generator_table():
    assert qm.R_gen(1, (1, 1), (1, 1)) == q
    assert qm.R_gen(1, (1, 1), (2, 2)) == 1
    assert qm.R_gen(1, (2, 1), (1, 2)) == h
    assert qm.R_gen(1, (1, 2), (2, 1)) == 0
    assert qm.R_gen(-1, (1, 2), (2, 1)) == -h


def test_convolution_inverse():
    words = [()] + [((i, j),) for i, j in product((1, 2), repeat=2)]
    words += [((1, 1), (2, 2)), ((1, 2), (2, 1))]
    for c in (1, -1):
        for u_, v_ in product(words, repeat=2):
            assert qm.convolution_check(c, u_, v_)


def test_psi_closed_form():
    gens = [(i, j) for i, j in product((1, 2), repeat=2)]
    for eps in (1, -1):
        for gp, g in product(gens, repeat=2):
            assert qm.psi(eps, (gp,), (g,)) == qm.psi_closed_form(eps, gp, g)


def test_confluence_small():
    assert qm.confluence_check(qm.RewriteSystem(2, 1))
    for w in ((1, 2), (2, 1)):
        assert qm.confluence_check(qm.RewriteSystem(2, 2, tc.sigma_of_perm(w)))


def test_nontransitive_array_is_not_confluent():
    assert not qm.confluence_check(qm.RewriteSystem(2, 3, tc.TransArray(3, (1, -1, 1))))


def test_rule_compatibility_and_braiding():
    assert qm.rule_compatibility_check(2)
    assert qm.coquasi_braiding_check(2)


def test_relative_twist():
    assert qm.relative_twist_check(1)
    assert qm.relative_twist_check(-1)


@pytest.mark.parametrize("c", list(tc.enumerate_transitive_arrays(2, palette=[1, -1])), ids=str)
def test_twisted_product_n2(c):
    assert qm.associativity_check(c, route="rewrite")
    assert qm.associativity_check(c, route="braid")
    assert qm.routes_agree_check(c, degree=2)
    assert qm.coproduct_compat_check(c)
    assert qm.dual_twist_axiom_check(c)
    assert qm.mult_hom_check(c)


def test_nonisom_witness():
    w = qm.nonisom_witness(2, 2, 1)
    assert w == {(((2, 2),), ((1, 1),)): h, (((1, 1),), ((2, 2),)): -h}
    assert w == qm.expected_nonisom(2, 1)
    assert qm.at_q(w, 1) == {}
    with pytest.raises(ValueError):
        qm.nonisom_witness(2, 1, 2)


def test_semiclassical():
    assert qm.semiclassical_check(1, 2)
    for c in tc.enumerate_transitive_arrays(2, palette=[1, -1]):
        assert qm.semiclassical_check(2, 2, c)
    assert qm.semiclassical_check(2, 2, reverse_legs=True)


word = st.lists(st.tuples(st.integers(1, 2), st.integers(1, 2)), min_size=0, max_size=4)


@settings(max_examples=40, deadline=None)
@given(word, word, word)
def test_normal_form_is_associative_and_idempotent(u_, v_, w_):
    rs = qm.RewriteSystem(2, 1)
    U, V, W = (qm.NCPoly({tuple((1,) + g for g in t): 1}) for t in (u_, v_, w_))
    nf = lambda p: qm.normal_form(p, rs)
    assert nf(nf(U * V) * W) == nf(U * nf(V * W))
    assert nf(nf(U)) == nf(U)
    assert all(rs.is_normal(k) for k in nf(U * V * W).terms)
