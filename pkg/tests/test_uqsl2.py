import cmath
from itertools import product
from math import comb

import numpy as np
import pytest
from hypothesis import given, strategies as st

from yblab import uqsl2 as u
from yblab.scalars import CyclotomicNumber


def to_complex(x, N):
    z = cmath.exp(2j * cmath.pi / N)
    if isinstance(x, CyclotomicNumber):
        return sum(float(c) * z ** k for k, c in enumerate(x.coefficients))
    return complex(x)


def dense(op, N=12):
    M = np.zeros((op.size, op.size), dtype=complex)
    for (i, j), v in op.entries.items():
        M[i, j] = to_complex(v, N)
    return M


def literal_R(ell, eps, epsp):
    """Float oracle: the defining quadruple sum on V x V with explicit matrices."""
    N = 4 * ell
    z = cmath.exp(2j * cmath.pi / N)
    q = z ** 2
    E = np.zeros((3, 3), complex)
    F = np.zeros((3, 3), complex)
    for i in (1, 2):
        E[i - 1, i] = q + 1 / q
    for i in (0, 1):
        F[i + 1, i] = 1
    L = np.diag([q ** (1 - i) for i in range(3)])
    mp = np.linalg.matrix_power
    R = np.zeros((9, 9), complex)
    for k in range(ell):
        fac = np.prod([(q ** t - q ** -t) / (q - 1 / q) for t in range(1, k + 1)])
        for i in range(N):
            for j in range(N):
                if epsp == 1:
                    c = q ** comb(k, 2) * z ** (-i * j) * eps ** (i * j) * (q - 1 / q) ** k / fac
                    R += c * np.kron(mp(L, i) @ mp(E, k), mp(L, j) @ mp(F, k))
                else:
                    c = q ** -comb(k, 2) * z ** (i * j) * eps ** (i * j) * (1 / q - q) ** k / fac
                    R += c * np.kron(mp(F, k) @ mp(L, i), mp(E, k) @ mp(L, j))
    return R / N


@pytest.mark.parametrize("member", u.MEMBERS)
def test_R_matches_float_oracle(member):
    assert np.allclose(dense(u.build_R(3, *member)), literal_R(3, *member), atol=1e-9)


def test_root_data():
    rd = u.RootData(3)
    assert rd.N == 12
    assert rd.q_order() == 6
    assert u.RootData(5).q_order() == 10
    with pytest.raises(ValueError):
        u.RootData(2)


def test_module_actions():
    V = u.build_module(3)
    rd = V.root
    q = rd.q()
    assert [V.L[i, i] for i in range(3)] == [q, 1, q ** -1]
    assert V.E[0, 1] == q + q ** -1
    assert V.F[1, 0] == 1 and V.F[2, 1] == 1
    assert all(u.relations_check(V, 2).values())


def test_qfactorial_nonvanishing():
    rd = u.RootData(3)
    assert u.qfactorial(rd, 2) == rd.q() + rd.q(-1)
    with pytest.raises(ZeroDivisionError):
        u.qfactorial(rd, 6)


def test_cartan_block_diagonal_value():
    rd = u.RootData(3)
    q = rd.q()
    for r, s in product(range(3), repeat=2):
        a, b = 1 - r, 1 - s
        # weights a, b: eigenvalue q^{2ab} for the q^{-ij/2} block, q^{-2ab} for q^{+ij/2}
        assert u.cartan_sum_literal(rd, a, b, -1, 1) == q ** (2 * a * b)
        assert u.cartan_sum_literal(rd, a, b, 1, 1) == q ** (-2 * a * b)


@given(st.integers(-2, 2), st.integers(-2, 2), st.sampled_from([1, -1]), st.sampled_from([1, -1]),
       st.sampled_from([3, 4]))
def test_cartan_closed_equals_literal(a, b, sign, eps, ell):
    rd = u.RootData(ell)
    assert u.cartan_sum_closed(rd, a, b, sign, eps) == u.cartan_sum_literal(rd, a, b, sign, eps)


def test_members():
    assert all(u.qybe_members_check(3).values())
    assert u.tau_inverse_check(3)
    # eps only enters through even powers of L on this module
    assert u.distinct_members(3) == [(1, 1), (1, -1)]


def test_intertwiner():
    res = u.intertwiner_check(3)
    assert res[(1, 1), "F"] and res[(-1, -1), "E"]
    assert all(res.values())


def test_transitive_triples_and_scan():
    assert all(u.transitive_triples_check(3).values())
    rep = u.scan(3, 2)
    assert (rep.total, rep.passed) == (52, 52)


def test_diag_embed_n2():
    assert all(u.diag_embed_check(3, 2).values())


def test_counterexample():
    res = u.counterexample_check(3)
    rd = u.RootData(3)
    q = rd.q()
    assert res["coefficient"] == q ** 2 * (q ** 4 - 1)
    # 1 - zeta^4 reduces to 2 - zeta^2 modulo Phi_12
    assert res["coefficient"].coefficients[:3] == (2, 0, -1)
    assert res["Fu"] == {}
    with pytest.raises(ValueError):
        u.counterexample_check(2)


def test_ell_four():
    assert u.tau_inverse_check(4)
    assert all(u.qybe_members_check(4).values())
    assert u.counterexample_check(4)["coefficient"]
