import pytest
from hypothesis import given, strategies as st

from yblab.tensorop import (TensorOp, embed, invert, perm_op, block_swap, permute_legs, kron,
                            compose, encode, decode)


def diag(vals):
    return TensorOp((len(vals),), {(i, i): v for i, v in enumerate(vals)})


def test_encode_decode():
    dims = (2, 3, 2)
    for code in range(12):
        assert encode(decode(code, dims), dims) == code
    assert decode(7, dims) == (1, 0, 1)


def test_embed_places_legs():
    a = TensorOp((2,), {(1, 0): 1})  # e_0 -> e_1
    op = embed(a, (2,), (2, 2, 2))
    assert op.apply({encode((0, 0, 1), (2, 2, 2)): 1}) == {encode((0, 1, 1), (2, 2, 2)): 1}


def test_embed_reversed_positions_is_flip():
    x = kron(TensorOp((2,), {(1, 0): 1}), diag([1, 2]))
    assert embed(x, (2, 1), (2, 2)) == compose(compose(perm_op((2, 1), (2, 2)), x), perm_op((2, 1), (2, 2)))


def test_embed_errors():
    a = diag([1, 1])
    with pytest.raises(ValueError):
        embed(a, (4,), (2, 2, 2))
    with pytest.raises(ValueError):
        embed(a, (1,), (3, 2))


def test_perm_op_one_line():
    P = perm_op((2, 3, 1), (2, 2, 2))
    # v_1 x v_2 x v_3 -> v_2 x v_3 x v_1
    src = encode((1, 0, 0), (2, 2, 2))
    assert P.apply({src: 1}) == {encode((0, 0, 1), (2, 2, 2)): 1}


def test_block_swap_and_permute():
    x = kron(diag([1, 2]), diag([3, 5]))
    assert block_swap(x) == kron(diag([3, 5]), diag([1, 2]))
    assert permute_legs(x, (2, 1)) == block_swap(x)


def test_invert_singular():
    with pytest.raises(ZeroDivisionError):
        invert(TensorOp((2,), {(0, 0): 1, (0, 1): 1}))


@given(st.lists(st.integers(-4, 4), min_size=10, max_size=10),
       st.lists(st.integers(1, 3), min_size=4, max_size=4))
def test_invert_unitriangular(off, dg):
    # upper triangular with nonzero diagonal on 4 states
    e = {(i, i): dg[i] for i in range(4)}
    t = 0
    for i in range(4):
        for j in range(i + 1, 4):
            e[i, j] = off[t]
            t += 1
    op = TensorOp((2, 2), e)
    assert compose(op, invert(op)) == TensorOp.identity((2, 2))


@given(st.permutations([1, 2, 3]), st.permutations([1, 2, 3]))
def test_perm_op_is_homomorphism(s, t):
    dims = (2, 2, 2)
    st_ = tuple(t[s[i] - 1] for i in range(3))
    # with v -> v_sigma(1) x ... the hat map reverses composition: (t o s)^ = s^ t^
    assert perm_op(st_, dims) == compose(perm_op(s, dims), perm_op(t, dims))
