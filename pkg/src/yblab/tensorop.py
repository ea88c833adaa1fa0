"""Sparse exact linear operators on tensor products V_1 x ... x V_N.

Basis vectors are encoded as mixed-radix integers with leg 1 most
significant.  Entries live in any exact scalar domain that supports
+, -, * and truthiness as a zero test.
"""

from itertools import product

from .scalars import invert as sinvert


def encode(idx, dims):
    code = 0
    for i, d in zip(idx, dims):
        code = code * d + i
    return code


def decode(code, dims):
    out = []
    for d in reversed(dims):
        code, r = divmod(code, d)
        out.append(r)
    return tuple(reversed(out))


class TensorOp:
    """Sparse operator: entries[(row, col)] = scalar, rows and cols are basis codes."""

    __slots__ = ("dims", "entries", "_rows")

    def __init__(self, dims, entries=None):
        self.dims = tuple(dims)
        self.entries = {k: v for k, v in (entries or {}).items() if v}
        self._rows = None

    @property
    def legs(self):
        return len(self.dims)

    @property
    def size(self):
        s = 1
        for d in self.dims:
            s *= d
        return s

    @classmethod
    def identity(cls, dims, one=1):
        dims = tuple(dims)
        op = cls(dims)
        s = 1
        for d in dims:
            s *= d
        op.entries = {(i, i): one for i in range(s)}
        return op

    @classmethod
    def from_matrix(cls, dims, rows):
        return cls(dims, {(i, j): v for i, r in enumerate(rows) for j, v in enumerate(r) if v})

    def to_matrix(self, zero=0):
        s = self.size
        m = [[zero] * s for _ in range(s)]
        for (i, j), v in self.entries.items():
            m[i][j] = v
        return m

    def rows(self):
        if self._rows is None:
            rows = {}
            for (i, j), v in self.entries.items():
                rows.setdefault(i, []).append((j, v))
            self._rows = rows
        return self._rows

    def __getitem__(self, ij):
        return self.entries.get(ij, 0)

    def entry(self, row_idx, col_idx):
        return self.entries.get((encode(row_idx, self.dims), encode(col_idx, self.dims)), 0)

    def _check(self, other):
        if self.dims != other.dims:
            raise ValueError("shape mismatch %r vs %r" % (self.dims, other.dims))

    def __add__(self, other):
        self._check(other)
        e = dict(self.entries)
        for k, v in other.entries.items():
            e[k] = e[k] + v if k in e else v
        return TensorOp(self.dims, e)

    def __neg__(self):
        return TensorOp(self.dims, {k: -v for k, v in self.entries.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s):
        return TensorOp(self.dims, {k: s * v for k, v in self.entries.items()})

    def __matmul__(self, other):
        return compose(self, other)

    def __eq__(self, other):
        if not isinstance(other, TensorOp) or self.dims != other.dims:
            return False
        if self.entries.keys() != other.entries.keys():
            return False
        return all(v == other.entries[k] for k, v in self.entries.items())

    def __hash__(self):
        return hash((self.dims, len(self.entries)))

    def apply(self, vec):
        """Apply to a sparse vector {code: scalar}."""
        out = {}
        cols = {}
        for (i, j), v in self.entries.items():
            cols.setdefault(j, []).append((i, v))
        for j, x in vec.items():
            for i, v in cols.get(j, ()):
                out[i] = out[i] + v * x if i in out else v * x
        return {k: v for k, v in out.items() if v}

    def dump(self):
        lines = []
        for (i, j) in sorted(self.entries):
            lines.append("%s %s %r" % (decode(i, self.dims), decode(j, self.dims), self.entries[i, j]))
        return "\n".join(lines)

    def __repr__(self):
        return "TensorOp(dims=%r, nnz=%d)" % (self.dims, len(self.entries))


def compose(a, b):
    """The product a o b (apply b first)."""
    a._check(b)
    brows = b.rows()
    out = {}
    for (i, k), x in a.entries.items():
        for j, y in brows.get(k, ()):
            key = (i, j)
            out[key] = out[key] + x * y if key in out else x * y
    return TensorOp(a.dims, out)


def compose_all(ops):
    ops = list(ops)
    r = ops[0]
    for o in ops[1:]:
        r = compose(r, o)
    return r


def embed(op, positions, dims):
    """Place op (on k legs) on the given 1-based leg positions of a tensor with leg dims."""
    dims = tuple(dims)
    N = len(dims)
    positions = tuple(positions)
    if len(set(positions)) != len(positions) or len(positions) != op.legs:
        raise ValueError("positions must be distinct and match the operator arity")
    if any(not 1 <= p <= N for p in positions):
        raise ValueError("position out of range")
    for p, d in zip(positions, op.dims):
        if dims[p - 1] != d:
            raise ValueError("leg dimension mismatch at position %d" % p)
    others = [t for t in range(1, N + 1) if t not in positions]
    weights = [1] * N
    for t in range(N - 2, -1, -1):
        weights[t] = weights[t + 1] * dims[t + 1]
    pw = [weights[p - 1] for p in positions]
    ow = [weights[p - 1] for p in others]
    offsets = [sum(i * w for i, w in zip(idx, ow)) for idx in product(*[range(dims[p - 1]) for p in others])]
    local = {}
    for (r, c), v in op.entries.items():
        ri = decode(r, op.dims)
        ci = decode(c, op.dims)
        local[sum(i * w for i, w in zip(ri, pw)), sum(i * w for i, w in zip(ci, pw))] = v
    out = {}
    for off in offsets:
        for (r, c), v in local.items():
            out[r + off, c + off] = v
    return TensorOp(dims, out)


def invert(op):
    """Exact inverse by Gauss-Jordan elimination, block by block on connected supports."""
    n = op.size
    adj = {}
    for (i, j) in op.entries:
        adj.setdefault(i, set()).add(j)
        adj.setdefault(j, set()).add(i)
    seen = set()
    out = {}
    for s in range(n):
        if s in seen:
            continue
        comp = []
        stack = [s]
        seen.add(s)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in adj.get(x, ()):
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        comp.sort()
        if len(comp) == 1 and (s, s) not in op.entries:
            raise ZeroDivisionError("singular operator")
        out.update(_invert_block(op, comp))
    return TensorOp(op.dims, out)


def _invert_block(op, comp):
    pos = {c: t for t, c in enumerate(comp)}
    k = len(comp)
    m = [dict() for _ in range(k)]
    for (i, j), v in op.entries.items():
        if i in pos and j in pos:
            m[pos[i]][pos[j]] = v
    inv = [{t: 1} for t in range(k)]
    for col in range(k):
        piv = next((r for r in range(col, k) if m[r].get(col)), None)
        if piv is None:
            raise ZeroDivisionError("singular operator")
        m[col], m[piv] = m[piv], m[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        p = sinvert(m[col][col])
        m[col] = {j: v * p for j, v in m[col].items()}
        inv[col] = {j: v * p for j, v in inv[col].items()}
        for r in range(k):
            f = m[r].get(col) if r != col else None
            if f:
                for j, v in m[col].items():
                    x = m[r].get(j, 0) - f * v
                    if x:
                        m[r][j] = x
                    else:
                        m[r].pop(j, None)
                for j, v in inv[col].items():
                    x = inv[r].get(j, 0) - f * v
                    if x:
                        inv[r][j] = x
                    else:
                        inv[r].pop(j, None)
    return {(comp[r], comp[j]): v for r in range(k) for j, v in inv[r].items()}


def perm_op(sigma, dims):
    """Operator of sigma-hat: v_1 x ... x v_n -> v_sigma(1) x ... x v_sigma(n).

    sigma is in one-line notation (1-based); dims are the input leg dims.
    """
    n = len(sigma)
    dims = tuple(dims)
    if sorted(sigma) != list(range(1, n + 1)) or len(dims) != n:
        raise ValueError("bad permutation")
    out_dims = tuple(dims[s - 1] for s in sigma)
    if out_dims != dims:
        raise ValueError("perm_op needs a permutation preserving leg dimensions")
    out = {}
    for idx in product(*[range(d) for d in dims]):
        out[encode(tuple(idx[s - 1] for s in sigma), dims), encode(idx, dims)] = 1
    return TensorOp(dims, out)


def block_swap_perm(n):
    return tuple(list(range(n + 1, 2 * n + 1)) + list(range(1, n + 1)))


def block_swap(op):
    """X^op = P X P, with P exchanging legs 1..n and n+1..2n."""
    if op.legs % 2:
        raise ValueError("block_swap needs an even number of legs")
    n = op.legs // 2
    P = perm_op(block_swap_perm(n), op.dims)
    return compose(compose(P, op), P)


def permute_legs(op, sigma):
    """Conjugate by sigma-hat: the operator sigma-hat o op o sigma-hat^{-1}."""
    n = len(sigma)
    inv = [0] * n
    for i, s in enumerate(sigma):
        inv[s - 1] = i + 1
    P = perm_op(sigma, op.dims)
    Pi = perm_op(tuple(inv), op.dims)
    return compose(compose(P, op), Pi)


def kron(a, b):
    """a x b on the concatenated legs."""
    dims = a.dims + b.dims
    sb = b.size
    return TensorOp(dims, {(ra * sb + rb, ca * sb + cb): x * y
                           for (ra, ca), x in a.entries.items()
                           for (rb, cb), y in b.entries.items()})
