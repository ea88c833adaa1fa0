"""Quantum R-matrix families, the products R^(a), twists J_c and R(c,d), QYBE checkers.

Two routes decide QYBE.  ``exact`` composes sparse operators in the scalar
field.  ``certified`` maps every entry to an integer polynomial, evaluates
at one large integer and multiplies dense integer blocks with flint; the
evaluation point is chosen above a proven coefficient bound, so equality of
the images is equivalent to equality of the operators.
"""

from dataclasses import dataclass, field
from math import lcm

import flint

from .scalars import RationalFunctionQ, CyclotomicNumber, cyclotomic_poly
from .tensorop import TensorOp, embed, invert, compose, compose_all, block_swap, perm_op, decode
from . import transcomb as tc


def upsilon(x):
    return 1 if x > 0 else 0


def standard_qR(m):
    """R_{(k,k'),(l,l')} = q^{d(k,k')} d(k,l) d(k',l') + (q - 1/q) Y(k-k') d(k,l') d(k',l)."""
    q = RationalFunctionQ.q()
    h = q - q ** -1
    e = {}
    for k in range(m):
        for kp in range(m):
            row = k * m + kp
            if k == kp:
                e[row, row] = q
            else:
                e[row, row] = 1
                if k > kp:
                    e[row, kp * m + k] = h
    return TensorOp((m, m), e)


def flip(R):
    """tau o R o tau, i.e. R_{2,1}."""
    P = perm_op((2, 1), R.dims)
    return compose(compose(P, R), P)


def r_eps(R, eps):
    if eps == 1:
        return R
    if eps == -1:
        return flip(invert(R))
    raise ValueError("eps must be +1 or -1")


@dataclass
class QFamily:
    members: dict
    name: str = ""
    palette: list = field(default=None)

    def __post_init__(self):
        if self.palette is None:
            self.palette = list(self.members)
        dims = {R.dims for R in self.members.values()}
        if len(dims) != 1:
            raise ValueError("family members act on different spaces")
        d = dims.pop()
        if len(d) != 2 or d[0] != d[1]:
            raise ValueError("members must act on W x W")
        self.local_dim = d[0]
        self._inv = {}

    def __getitem__(self, c):
        return self.members[c]

    def inverse(self, c):
        if c not in self._inv:
            self._inv[c] = invert(self.members[c])
        return self._inv[c]


def standard_family(m=2):
    R = standard_qR(m)
    return QFamily({1: R, -1: r_eps(R, -1)}, name="standard-quantum", palette=[1, -1])


# ---------------------------------------------------------------- QYBE checks

def _qybe_sides(R12, R13, R23):
    return compose(compose(R12, R13), R23), compose(compose(R23, R13), R12)


def _three_leg_embeddings(Ra, Rb, Rc, n):
    """Embeddings R_{12}, R_{13}, R_{23} of 2n-leg operators on W^{x3}, W = n legs."""
    d = Ra.dims[:n]
    dims = d * 3
    A = list(range(1, n + 1))
    B = list(range(n + 1, 2 * n + 1))
    C = list(range(2 * n + 1, 3 * n + 1))
    return (embed(Ra, A + B, dims), embed(Rb, A + C, dims), embed(Rc, B + C, dims))


def qybe_check(R, method="auto"):
    """R_12 R_13 R_23 = R_23 R_13 R_12 on W^{x3}; R acts on W x W (any even leg count)."""
    return trans_qybe_ops(R, R, R, method=method)


def trans_qybe_ops(Ra, Rb, Rc, method="auto"):
    if Ra.legs % 2:
        raise ValueError("operator must act on W x W")
    n = Ra.legs // 2
    if method == "auto":
        method = "exact" if Ra.size <= 64 else "certified"
    if method == "exact":
        lhs, rhs = _qybe_sides(*_three_leg_embeddings(Ra, Rb, Rc, n))
        return lhs == rhs
    if method == "certified":
        return certified_product_equal([Ra, Rb, Rc], n)
    raise ValueError("unknown method %r" % method)


def trans_qybe_check(fam, c, cp, cpp, method="auto"):
    if cp not in (c, cpp):
        raise ValueError("transitive QYBE needs c' in {c, c''}")
    return trans_qybe_ops(fam[c], fam[cp], fam[cpp], method=method)


def admissible_triples(palette):
    return [(a, b, c) for a in palette for b in palette for c in palette if b in (a, c)]


# ---------------------------------------------------------------- certified route

def _int_form(x):
    """(shift, integer coefficient list, modulus N or None, denominator) for a scalar."""
    if isinstance(x, int):
        return 0, [x], None, 1
    if isinstance(x, RationalFunctionQ):
        lf = x.laurent()
        if lf is None:
            raise ValueError("entry is not a Laurent polynomial")
        return lf[0], lf[1], None, 1
    if isinstance(x, CyclotomicNumber):
        cs = x.coefficients
        den = lcm(*[c.denominator for c in cs]) if cs else 1
        return 0, [int(c * den) for c in cs], x.N, den
    from fractions import Fraction
    if isinstance(x, Fraction):
        return 0, [x.numerator], None, x.denominator
    raise TypeError("unsupported scalar %r" % type(x))


def _integerize(op):
    """Scale op to integer polynomial entries: returns (entries -> coeff lists, modulus)."""
    forms = {k: _int_form(v) for k, v in op.entries.items()}
    mods = {f[2] for f in forms.values()} - {None}
    if len(mods) > 1:
        raise ValueError("mixed cyclotomic orders")
    mod = mods.pop() if mods else None
    shift = min((f[0] for f in forms.values()), default=0)
    den = lcm(*[f[3] for f in forms.values()]) if forms else 1
    out = {}
    for k, (s, cs, _, d) in forms.items():
        mul = den // d
        out[k] = [0] * (s - shift) + [c * mul for c in cs]
    return out, mod


def _grading(dims):
    def g(code):
        return sum(decode(code, dims))
    return g


def certified_product_equal(ops, n):
    """Decide R_a12 R_b13 R_c23 == R_c23 R_b13 R_a12 for operators ops=[Ra,Rb,Rc] on W x W."""
    Ra, Rb, Rc = ops
    ints = [_integerize(o) for o in ops]
    mods = {m for _, m in ints} - {None}
    if len(mods) > 1:
        raise ValueError("mixed scalar domains")
    mod = mods.pop() if mods else None
    # each side contains each operator once, so separate integer scalings cancel
    nu = 1
    for ent, _ in ints:
        rows = {}
        for (i, _), cs in ent.items():
            rows[i] = rows.get(i, 0) + sum(abs(c) for c in cs)
        nu *= max(rows.values(), default=0)
    bound = 2 * nu  # l1 bound on every entry of lhs - rhs as an integer polynomial
    if mod is None:
        t = bound + 2
        phi_t = None
    else:
        Phi = [int(c) for c in cyclotomic_poly(mod).coeffs()]
        phi = len(Phi) - 1
        maxdeg = 3 * (phi - 1)
        h = _reduction_height(Phi, maxdeg)
        H = h * bound
        t = 2 * (H + 2)
        while True:
            phi_t = sum(c * t ** i for i, c in enumerate(Phi))
            if H * (t ** phi - 1) // (t - 1) + 1 < phi_t:
                break
            t *= 2
    vals = []
    for ent, _ in ints:
        vals.append({k: sum(c * t ** i for i, c in enumerate(cs)) for k, cs in ent.items()})
    small = [TensorOp(o.dims, v) for o, v in zip(ops, vals)]
    E12, E13, E23 = _three_leg_embeddings(*small, n)
    dims = E12.dims
    g = _grading(dims)
    graded = all(g(i) == g(j) for o in (E12, E13, E23) for (i, j) in o.entries)
    size = E12.size
    if graded:
        sectors = {}
        for code in range(size):
            sectors.setdefault(g(code), []).append(code)
        sectors = list(sectors.values())
    else:
        sectors = [list(range(size))]
    for sec in sectors:
        pos = {c: i for i, c in enumerate(sec)}
        k = len(sec)
        mats = []
        for E in (E12, E13, E23):
            flat = [0] * (k * k)
            for (i, j), v in E.entries.items():
                if i in pos and j in pos:
                    flat[pos[i] * k + pos[j]] = v
            mats.append(flint.fmpz_mat(k, k, flat))
        A, B, C = mats
        lhs = A * B * C
        rhs = C * B * A
        if mod is None:
            if lhs != rhs:
                return False
        else:
            diff = lhs - rhs
            for i in range(k):
                for j in range(k):
                    if int(diff[i, j]) % phi_t:
                        return False
    return True


def _reduction_height(Phi, maxdeg):
    """Max |coefficient| of x^k mod Phi over 0 <= k <= maxdeg (Phi monic integer)."""
    phi = len(Phi) - 1
    h = 1
    cur = [0] * phi
    cur[0] = 1
    for k in range(1, maxdeg + 1):
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [a - top * b for a, b in zip(cur, Phi[:-1])]
        h = max(h, max(abs(c) for c in cur))
    return h


# ---------------------------------------------------------------- products and twists

def _emb(fam, c, i, j, N, inverse=False):
    R = fam.inverse(c) if inverse else fam[c]
    return embed(R, (i, j), (fam.local_dim,) * N)


def build_R_product(fam, a):
    """R^(a) = prod_{k=n..1} (R_{1,n+k}^{(a_{k,1})} ... R_{n,n+k}^{(a_{k,n})})."""
    n = a.n
    if not set(a.entries) <= set(fam.members):
        raise ValueError("palette mismatch")
    factors = [_emb(fam, a[k, i], i, n + k, 2 * n) for k in range(n, 0, -1) for i in range(1, n + 1)]
    return compose_all(factors)


def jc_factors(c):
    """Leg pairs and colors of J_c = prod->_{2<=i<=n} prod<-_{1<=j<=i-1} R_{i,n+j}^{(c(j,i))}."""
    n = c.n
    return [((i, n + j), c[j, i]) for i in range(2, n + 1) for j in range(i - 1, 0, -1)]


def build_Jc(fam, c):
    n = c.n
    dims = (fam.local_dim,) * (2 * n)
    fs = jc_factors(c)
    if not fs:
        return TensorOp.identity(dims)
    return compose_all(_emb(fam, col, i, j, 2 * n) for (i, j), col in fs)


def build_Jc_inverse(fam, c):
    n = c.n
    dims = (fam.local_dim,) * (2 * n)
    fs = jc_factors(c)
    if not fs:
        return TensorOp.identity(dims)
    return compose_all(_emb(fam, col, i, j, 2 * n, inverse=True) for (i, j), col in reversed(fs))


def build_Jc_rec_minus(fam, c):
    """J_c = phi_{[1,2n-1] minus n}(J_{c-}) prod<-_{1<=i<=n-1} R_{n,i+n}^{(c(i,n))}."""
    n = c.n
    if n == 1:
        return TensorOp.identity((fam.local_dim,) * 2)
    inner = build_Jc_rec_minus(fam, tc.restrict_extend(c, "minus"))
    pos = [p for p in range(1, 2 * n) if p != n]
    out = embed(inner, pos, (fam.local_dim,) * (2 * n))
    for i in range(n - 1, 0, -1):
        out = compose(out, _emb(fam, c[i, n], n, i + n, 2 * n))
    return out


def build_Jc_rec_plus(fam, c):
    """J_c = phi_{[2,2n] minus (n+1)}(J_{c+}) prod->_{2<=i<=n} R_{i,n+1}^{(c(1,i))}."""
    n = c.n
    if n == 1:
        return TensorOp.identity((fam.local_dim,) * 2)
    inner = build_Jc_rec_plus(fam, tc.restrict_extend(c, "plus"))
    pos = [p for p in range(2, 2 * n + 1) if p != n + 1]
    out = embed(inner, pos, (fam.local_dim,) * (2 * n))
    for i in range(2, n + 1):
        out = compose(out, _emb(fam, c[1, i], i, n + 1, 2 * n))
    return out


def build_Rcd(fam, c, d):
    """R(c,d) = (J_c^op)^{-1} R_{1,n+1}^{(d_1)} ... R_{n,2n}^{(d_n)} J_c."""
    n = c.n
    if len(d) != n:
        raise ValueError("|d| must equal n")
    mid = compose_all([_emb(fam, d[i - 1], i, n + i, 2 * n) for i in range(1, n + 1)])
    J = build_Jc(fam, c)
    Jop_inv = block_swap(build_Jc_inverse(fam, c))
    return compose(compose(Jop_inv, mid), J)


# ---------------------------------------------------------------- braid identity

def _jc_on(fam, gamma, N):
    fs = jc_factors(gamma)
    dims = (fam.local_dim,) * N
    if not fs:
        return TensorOp.identity(dims)
    return compose_all(_emb(fam, col, i, j, N) for (i, j), col in fs)


def braid_identity_sides(fam, gamma, alpha):
    """Both sides of the compressed-monoid relation on V^{x(2m-1)}, m = gamma.n.

    J_g (prod<-_{1<=j<=m-1} R_{1,m+j}^{(a_j)}) (prod<-_{2<=j<=m} R_{1,j}^{(a_j)})
      = R_{1,m}^{(a_m)} (prod<-_{2<=j<=m-1} R_{1,m+j}^{(a_j)} R_{1,j}^{(a_j)}) R_{1,m+1}^{(a_1)} J_g
    """
    m = gamma.n
    alpha = list(alpha)
    if len(alpha) != m:
        raise ValueError("alpha must have length m")
    N = 2 * m - 1
    J = _jc_on(fam, gamma, N)
    a = {j: alpha[j - 1] for j in range(1, m + 1)}
    lhs = [J]
    lhs += [_emb(fam, a[j], 1, m + j, N) for j in range(m - 1, 0, -1)]
    lhs += [_emb(fam, a[j], 1, j, N) for j in range(m, 1, -1)]
    rhs = [_emb(fam, a[m], 1, m, N)]
    for j in range(m - 1, 1, -1):
        rhs += [_emb(fam, a[j], 1, m + j, N), _emb(fam, a[j], 1, j, N)]
    rhs += [_emb(fam, a[1], 1, m + 1, N), J]
    return compose_all(lhs), compose_all(rhs)


def braid_identity_check(fam, gamma, alpha, require_transitive=True):
    """Test the compressed-monoid relation; gamma^alpha must be transitive unless disabled."""
    if require_transitive and not tc.is_transitive_array(tc.restrict_extend(gamma, "extend", tuple(alpha))):
        raise ValueError("gamma^alpha is not transitive")
    lhs, rhs = braid_identity_sides(fam, gamma, alpha)
    return lhs == rhs


# ---------------------------------------------------------------- scans

@dataclass
class ScanReport:
    family: str
    n: int
    total: int = 0
    passed: int = 0
    failed: int = 0
    witnesses: list = field(default_factory=list)

    def add(self, ok, matrix=None, support=0):
        self.total += 1
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            self.witnesses.append([matrix, support])

    def as_dict(self):
        return {"family": self.family, "n": self.n, "total": self.total, "passed": self.passed,
                "failed": self.failed, "witnesses": self.witnesses}


def check_family(fam, method="auto"):
    return all(trans_qybe_check(fam, *t, method=method) for t in admissible_triples(fam.palette))


def conjecture_quantum_scan(fam, n, method="auto", matrices=None, progress=None):
    if not check_family(fam):
        raise ValueError("family fails transitive QYBE")
    rep = ScanReport(fam.name, n)
    if matrices is None:
        matrices = tc.enumerate_transitive_matrices(n, palette=fam.palette)
    for a in matrices:
        R = build_R_product(fam, a)
        ok = qybe_check(R, method=method)
        rep.add(ok, a.rows() if not ok else None, 0 if ok else -1)
        if progress:
            progress(rep)
    return rep
