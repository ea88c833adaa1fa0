"""Small quantum group u_q(sl_2) at a root of unity on its 3-dimensional module.

Scalars live in Q(zeta) with zeta of order 4l and q = zeta^2, so q has order 2l
and the half-integer powers q^{ij/2} are integral powers of zeta.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import comb, gcd

from .scalars import CyclotomicNumber
from .tensorop import TensorOp, compose, compose_all, embed, invert, kron
from .quantumybe import QFamily, flip, qybe_check, trans_qybe_check, admissible_triples, \
    conjecture_quantum_scan, build_Rcd
from . import transcomb as tc

MEMBERS = ((1, 1), (1, -1), (-1, 1), (-1, -1))


@dataclass(frozen=True)
class RootData:
    ell: int = 3

    def __post_init__(self):
        if self.ell <= 2:
            raise ValueError("need l > 2")

    @property
    def N(self):
        return 4 * self.ell

    def zeta(self, k=1):
        return CyclotomicNumber.zeta(self.N, k)

    def q(self, k=1):
        return self.zeta(2 * k)

    def one(self):
        return CyclotomicNumber(self.N, [1])

    def zero(self):
        return CyclotomicNumber(self.N, [0])

    def q_order(self):
        one = self.one()
        return next(k for k in range(1, self.N + 1) if self.q(k) == one)


def qint(rd, k):
    return (rd.q(k) - rd.q(-k)) / (rd.q() - rd.q(-1))


def qfactorial(rd, k):
    """[k]_q!, refusing to return a vanishing value since callers invert it."""
    r = rd.one()
    for t in range(1, k + 1):
        r = r * qint(rd, t)
    if not r:
        raise ZeroDivisionError("[%d]_q! vanishes at q of order %d" % (k, rd.q_order()))
    return r


@dataclass
class ModuleV:
    root: RootData
    E: TensorOp
    F: TensorOp
    L: TensorOp
    Linv: TensorOp
    dim: int = 3

    def gen(self, name):
        return {"E": self.E, "F": self.F, "L": self.L, "Linv": self.Linv}[name]


def build_module(ell=3):
    rd = RootData(ell)
    qq = rd.q() + rd.q(-1)
    E = TensorOp((3,), {(i - 1, i): qq for i in (1, 2)})
    F = TensorOp((3,), {(i + 1, i): rd.one() for i in (0, 1)})
    L = TensorOp((3,), {(i, i): rd.q(1 - i) for i in range(3)})
    Linv = TensorOp((3,), {(i, i): rd.q(i - 1) for i in range(3)})
    return ModuleV(rd, E, F, L, Linv)


def _power(op, k):
    r = TensorOp.identity(op.dims, 1)
    for _ in range(k):
        r = compose(r, op)
    return r


def _ident(V):
    return TensorOp.identity((V.dim,), V.root.one())


def coproduct_terms(V, h, N):
    """Delta^{(N)}(h) as a list of simple tensors, each a list of N one-leg operators."""
    one = _ident(V)
    if h == "L":
        return [[V.L] * N]
    if h == "Linv":
        return [[V.Linv] * N]
    L2 = compose(V.L, V.L)
    Lm2 = compose(V.Linv, V.Linv)
    if h == "E":
        # Delta(E) = E x L^2 + 1 x E
        return [[one] * k + [V.E] + [L2] * (N - k - 1) for k in range(N)]
    if h == "F":
        # Delta(F) = F x 1 + L^-2 x F
        return [[Lm2] * k + [V.F] + [one] * (N - k - 1) for k in range(N)]
    raise ValueError("unknown generator %r" % h)


def simple_op(legs):
    r = legs[0]
    for o in legs[1:]:
        r = kron(r, o)
    return r


def action(V, h, N):
    terms = coproduct_terms(V, h, N)
    r = simple_op(terms[0])
    for t in terms[1:]:
        r = r + simple_op(t)
    return r


def relations_check(V, N):
    """Defining relations of u_q(sl_2) as operators on V^{xN}."""
    rd = V.root
    E, F, L, Li = (action(V, h, N) for h in ("E", "F", "L", "Linv"))
    I = TensorOp.identity(E.dims, rd.one())
    L2, Lm2 = compose(L, L), compose(Li, Li)
    ok = {}
    ok["LLinv"] = compose(L, Li) == I
    ok["EF"] = compose(E, F) - compose(F, E) == (L2 - Lm2).scale((rd.q() - rd.q(-1)).inverse())
    ok["LE"] = compose(compose(L, E), Li) == E.scale(rd.q())
    ok["LF"] = compose(compose(L, F), Li) == F.scale(rd.q(-1))
    ok["Eell"] = not _power(E, rd.ell).entries
    ok["Fell"] = not _power(F, rd.ell).entries
    ok["L2ell"] = _power(L, 2 * rd.ell) == I
    return ok


# ---------------------------------------------------------------- R-matrices

def _weight(r):
    return 1 - r


def _zeta_exponent_factor(rd, sign, eps):
    """q^{sign ij/2} eps^{ij} = zeta^{ij * s} with s = sign + 2l[eps=-1]."""
    return sign + (2 * rd.ell if eps == -1 else 0)


def cartan_sum_literal(rd, a, b, sign, eps):
    """(1/4l) sum_{i,j} q^{sign ij/2} eps^{ij} q^{ia} q^{jb}, summed term by term."""
    s = _zeta_exponent_factor(rd, sign, eps)
    N = rd.N
    tot = [0] * N
    for i in range(N):
        for j in range(N):
            tot[(s * i * j + 2 * i * a + 2 * j * b) % N] += 1
    acc = rd.zero()
    for e, c in enumerate(tot):
        if c:
            acc = acc + rd.zeta(e) * c
    return acc / N


def cartan_sum_closed(rd, a, b, sign, eps):
    """Only i with s*i + 2b = 0 mod 4l survives the j-sum; s is a unit mod 4l."""
    s = _zeta_exponent_factor(rd, sign, eps)
    N = rd.N
    if gcd(s, N) != 1:
        raise ValueError("exponent factor not invertible")
    i0 = (-2 * b * pow(s, -1, N)) % N
    return rd.zeta(2 * a * i0)


@lru_cache(maxsize=None)
def _cartan(ell, a, b, sign, eps, literal):
    rd = RootData(ell)
    closed = cartan_sum_closed(rd, a, b, sign, eps)
    if literal:
        lit = cartan_sum_literal(rd, a, b, sign, eps)
        if lit != closed:
            raise AssertionError("Cartan sum mismatch at weights (%d,%d)" % (a, b))
    return closed


def build_R(ell=3, eps=1, epsp=1, literal=True):
    """R^{(eps, eps')} on V x V.

    eps' = 1:  sum q^{C(k,2) - ij/2} eps^{ij} (q-1/q)^k/[k]! L^i E^k x L^j F^k
    eps' = -1: sum q^{-C(k,2) + ij/2} eps^{ij} (1/q-q)^k/[k]! F^k L^i x E^k L^j
    with the (1/4l) normalisation.  The Cartan double sum is evaluated in
    closed form and, when literal is set, also term by term.
    """
    if eps not in (1, -1) or epsp not in (1, -1):
        raise ValueError("eps, eps' must be +-1")
    V = build_module(ell)
    rd = V.root
    h = rd.q() - rd.q(-1)
    out = {}
    for k in range(ell):
        fk = qfactorial(rd, k)
        if epsp == 1:
            coef = rd.q(comb(k, 2)) * h ** k / fk
            A, B = _power(V.E, k), _power(V.F, k)
        else:
            coef = rd.q(-comb(k, 2)) * (-h) ** k / fk
            A, B = _power(V.F, k), _power(V.E, k)
        for (r1, c1), x in A.entries.items():
            for (r2, c2), y in B.entries.items():
                # L acts after E^k/F^k for eps'=1 and before F^k/E^k for eps'=-1
                wa, wb = (_weight(r1), _weight(r2)) if epsp == 1 else (_weight(c1), _weight(c2))
                cs = _cartan(ell, wa, wb, -epsp, eps, literal)
                key = (r1 * 3 + r2, c1 * 3 + c2)
                out[key] = out.get(key, rd.zero()) + coef * x * y * cs
    return TensorOp((3, 3), out)


@lru_cache(maxsize=None)
def _members(ell):
    return {m: build_R(ell, *m) for m in MEMBERS}


def uqsl2_family(ell=3):
    return QFamily(dict(_members(ell)), name="uqsl2", palette=list(MEMBERS))


def tau_inverse_check(ell=3):
    """R^{(eps,-eps')} = tau(R^{(eps,eps')})^{-1} for all four members."""
    R = _members(ell)
    return all(R[e, -ep] == invert(flip(R[e, ep])) for e, ep in MEMBERS)


def distinct_members(ell=3):
    R = _members(ell)
    out = []
    for m in MEMBERS:
        if not any(R[m] == R[o] for o in out):
            out.append(m)
    return out


def qybe_members_check(ell=3):
    return {m: qybe_check(R) for m, R in _members(ell).items()}


def intertwiner_check(ell=3, members=MEMBERS, gens=("E", "F", "L")):
    """R Delta(h) = Delta^op(h) R on V x V for every member and generator."""
    V = build_module(ell)
    R = _members(ell)
    res = {}
    for m in members:
        for h in gens:
            D = action(V, h, 2)
            Dop = flip(D)
            res[m, h] = compose(R[m], D) == compose(Dop, R[m])
    return res


def transitive_triples_check(ell=3):
    fam = uqsl2_family(ell)
    return {t: trans_qybe_check(fam, *t) for t in admissible_triples(fam.palette)}


def scan(ell=3, n=2):
    return conjecture_quantum_scan(uqsl2_family(ell), n)


def hom_bialg_intern_check(ell, colors, h, k=1):
    """(prod-> R_{i,n}^{(c_i)}) Delta^{(n)}(h) = (prod-> R_{i,n}, i<k) Delta_k(h) (prod-> R_{i,n}, i>=k)

    on V^{xn}, n = len(colors)+1, where Delta_k moves the k-th Sweedler factor to the last leg.
    """
    V = build_module(ell)
    R = _members(ell)
    n = len(colors) + 1
    dims = (3,) * n
    I = TensorOp.identity(dims, V.root.one())
    facs = [embed(R[c], (i, n), dims) for i, c in enumerate(colors, start=1)]
    terms = coproduct_terms(V, h, n)
    D = None
    Dk = None
    for t in terms:
        a = simple_op(t)
        b = simple_op(t[:k - 1] + t[k:] + [t[k - 1]])
        D = a if D is None else D + a
        Dk = b if Dk is None else Dk + b
    F = compose_all(facs) if facs else I
    left = compose_all(facs[:k - 1]) if k > 1 else I
    right = compose_all(facs[k - 1:]) if k <= n - 1 else I
    return compose(F, D) == compose(compose(left, Dk), right)


def diag_embed_check(ell=3, n_max=3):
    """Module-level diagonal-embedding identity for all colour tuples, generators, k."""
    res = {}
    for n in range(2, n_max + 1):
        for cols in product(MEMBERS, repeat=n - 1):
            for h in ("E", "F", "L"):
                for k in range(1, n + 1):
                    res[cols, h, k] = hom_bialg_intern_check(ell, cols, h, k)
    return res


def rcd_qybe_check(ell=3, n=2):
    """QYBE for the twisted R(c,d) over all transitive c and all d, palette the four members."""
    fam = uqsl2_family(ell)
    out = {}
    for c in tc.enumerate_transitive_arrays(n, palette=fam.palette):
        for d in product(fam.palette, repeat=n):
            out[tuple(c.entries), d] = qybe_check(build_Rcd(fam, c, list(d)))
    return out


# ---------------------------------------------------------------- counterexample

def basis_vector(rd, idx):
    code = 0
    for i in idx:
        code = code * 3 + i
    return {code: rd.one()}


def apply(op, vec):
    out = {}
    for (r, c), x in op.entries.items():
        if c in vec:
            out[r] = out.get(r, 0) + x * vec[c]
    return {k: v for k, v in out.items() if v}


def counterexample_check(ell=3):
    """Delta_{H x H}(F x 1) R_{1,4} R_{3,2} (u) with u = v2 x v1 x v2 x v2, R = R^{(1,1)}.

    Returns the dict of intermediate and final vectors; raises if any expected
    value fails.  H x H acts on (V x V) x (V x V) with F x 1 on legs 1 and 3.
    """
    if 2 * ell <= 4:
        raise ValueError("need 2l > 4")
    V = build_module(ell)
    rd = V.root
    R = _members(ell)[1, 1]
    dims = (3,) * 4
    u = basis_vector(rd, (2, 1, 2, 2))
    Lm2 = compose(V.Linv, V.Linv)
    DF = embed(V.F, (1,), dims) + embed(kron(Lm2, V.F), (1, 3), dims)
    R14R32 = compose(embed(R, (1, 4), dims), embed(R, (3, 2), dims))
    mid = apply(embed(R, (3, 2), dims), u)
    w = apply(R14R32, u)
    final = apply(DF, w)
    q = rd.q()
    v2212 = basis_vector(rd, (2, 2, 1, 2))
    (c_u,), (c_w,) = u, v2212
    expected_mid = {c_u: rd.one(), c_w: q ** 2 - q ** -2}
    expected_w = {c_u: q ** 2, c_w: q ** 4 - 1}
    (c_top,) = basis_vector(rd, (2, 2, 2, 2))
    coeff = q ** 2 * (q ** 4 - 1)
    res = {
        "Fu": apply(DF, u),
        "mid": mid,
        "Ru": w,
        "final": final,
        "coefficient": coeff,
    }
    assert res["Fu"] == {}, "Delta(F) u should vanish"
    assert mid == expected_mid, "R_{3,2}(u) mismatch"
    assert w == expected_w, "R_{1,4}R_{3,2}(u) mismatch"
    assert final == {c_top: coeff}, "final vector mismatch"
    assert coeff, "coefficient vanished"
    return res
