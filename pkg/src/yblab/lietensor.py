"""Structure-constant Lie algebras, sparse tensors over them, and classical r-matrix checks.

Everything is evaluated inside g^{x k} by leg-wise brackets; no universal
enveloping algebra is ever formed.  Tensors over g^{+n} use the basis of
the direct sum, whose index is copy * dim(g) + a (copies counted from 0).
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from . import transcomb as tc


class LieAlgebra:
    def __init__(self, dim, labels, brackets, center=None, check=True):
        self.dim = dim
        self.labels = list(labels)
        self.br = {}
        for (a, b), out in brackets.items():
            out = {c: Fraction(v) for c, v in out.items() if v}
            if out:
                self.br[a, b] = out
        self.center = center
        if check:
            self.check()

    def bracket(self, a, b):
        return self.br.get((a, b), {})

    def bracket_vec(self, u, v):
        out = {}
        for a, x in u.items():
            for b, y in v.items():
                for c, z in self.bracket(a, b).items():
                    out[c] = out.get(c, 0) + x * y * z
        return {c: z for c, z in out.items() if z}

    def check(self):
        d = self.dim
        for a in range(d):
            if self.bracket(a, a):
                raise ValueError("bracket not alternating at %s" % self.labels[a])
            for b in range(d):
                s = {c: v + self.bracket(b, a).get(c, 0) for c, v in self.bracket(a, b).items()}
                if any(s.values()) or any(c not in self.bracket(a, b) for c in self.bracket(b, a)):
                    raise ValueError("bracket not antisymmetric")
        for a in range(d):
            for b in range(a + 1, d):
                for c in range(b + 1, d):
                    t = {}
                    for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
                        for e, v in self.bracket_vec(self.bracket(x, y), {z: 1}).items():
                            t[e] = t.get(e, 0) + v
                    if any(t.values()):
                        raise ValueError("Jacobi identity fails")

    def index(self, label):
        return self.labels.index(label)


def gl(m):
    """gl_m with basis E_{ab}, index (a-1)*m + (b-1); [E_ab, E_cd] = d_bc E_ad - d_da E_cb."""
    labels = ["E%d%d" % (a + 1, b + 1) for a in range(m) for b in range(m)]
    br = {}
    for a, b, c, d in product(range(m), repeat=4):
        out = {}
        if b == c:
            out[a * m + d] = out.get(a * m + d, 0) + 1
        if d == a:
            out[c * m + b] = out.get(c * m + b, 0) - 1
        br[a * m + b, c * m + d] = out
    center = [{a * m + a: 1 for a in range(m)}]
    g = LieAlgebra(m * m, labels, br, center=center)
    g.m = m
    return g


def direct_sum(g, n):
    d = g.dim
    labels = ["%s^%d" % (l, k + 1) for k in range(n) for l in g.labels]
    br = {}
    for k in range(n):
        for (a, b), out in g.br.items():
            br[k * d + a, k * d + b] = {k * d + c: v for c, v in out.items()}
    center = None
    if g.center is not None:
        center = [{k * d + a: v for a, v in z.items()} for k in range(n) for z in g.center]
    s = LieAlgebra(n * d, labels, br, center=center, check=False)
    s.base, s.copies = g, n
    return s


def takiff(g):
    """V x| g with V the adjoint module as an abelian ideal: basis v_a (0..d-1), x_a (d..2d-1)."""
    d = g.dim
    labels = ["v_" + l for l in g.labels] + ["x_" + l for l in g.labels]
    br = {}
    for (a, b), out in g.br.items():
        br[d + a, d + b] = {d + c: v for c, v in out.items()}
        br[d + a, b] = dict(out)
        br[a, d + b] = dict(out)
    center = None
    if g.center is not None:
        center = [dict(z) for z in g.center] + [{d + a: v for a, v in z.items()} for z in g.center]
    t = LieAlgebra(2 * d, labels, br, center=center)
    t.base = g
    return t


class LieTensor:
    """Sparse element of a^{x k}: terms[(i_1,...,i_k)] = Fraction."""

    __slots__ = ("alg", "arity", "terms")

    def __init__(self, alg, arity, terms=None):
        self.alg = alg
        self.arity = arity
        self.terms = {}
        for k, v in (terms or {}).items():
            if v:
                self.terms[tuple(k)] = Fraction(v)

    def __add__(self, other):
        self._check(other)
        t = dict(self.terms)
        for k, v in other.terms.items():
            t[k] = t.get(k, 0) + v
        return LieTensor(self.alg, self.arity, t)

    def __neg__(self):
        return LieTensor(self.alg, self.arity, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s):
        return LieTensor(self.alg, self.arity, {k: s * v for k, v in self.terms.items()})

    __rmul__ = scale

    def _check(self, other):
        if self.alg is not other.alg or self.arity != other.arity:
            raise ValueError("tensors on different algebras or arities")

    def __eq__(self, other):
        return (isinstance(other, LieTensor) and self.alg is other.alg
                and self.arity == other.arity and self.terms == other.terms)

    def __hash__(self):
        return hash((self.arity, len(self.terms)))

    def is_zero(self):
        return not self.terms

    def tau(self):
        if self.arity != 2:
            raise ValueError("tau needs arity 2")
        return LieTensor(self.alg, 2, {(b, a): v for (a, b), v in self.terms.items()})

    def permute(self, perm):
        """Output leg t carries input leg perm[t] (0-based)."""
        return LieTensor(self.alg, self.arity,
                         {tuple(k[p] for p in perm): v for k, v in self.terms.items()})

    def support_size(self):
        return len(self.terms)

    def __repr__(self):
        parts = ["%s*%s" % (v, "(x)".join(self.alg.labels[i] for i in k))
                 for k, v in sorted(self.terms.items())]
        return " + ".join(parts) if parts else "0"


def tensor(alg, terms, arity=2):
    return LieTensor(alg, arity, terms)


# ---------------------------------------------------------------- standard r-matrices

def standard_r(m):
    """r = sum_i E_ii (x) E_ii + 2 sum_{i<j} E_ij (x) E_ji on gl_m."""
    g = gl(m)
    t = {}
    for i in range(m):
        t[i * m + i, i * m + i] = 1
        for j in range(i + 1, m):
            t[i * m + j, j * m + i] = 2
    return LieTensor(g, 2, t)


def skew_r(m, g=None):
    """r = sum_t d_t (E_1t (x) E_tm - E_tm (x) E_1t), d_t = 2 - d_{t,1} - d_{t,m}."""
    g = g or gl(m)
    t = {}
    for s in range(m):
        d = 2 - (s == 0) - (s == m - 1)
        a, b = 0 * m + s, s * m + (m - 1)
        t[a, b] = t.get((a, b), 0) + d
        t[b, a] = t.get((b, a), 0) - d
    return LieTensor(g, 2, t)


def casimir(g):
    m = g.m
    return LieTensor(g, 2, {(a * m + b, b * m + a): 1 for a in range(m) for b in range(m)})


def hat(r, t):
    """(f (x) id + id (x) f)(r) in t (x) t, f = identity g -> V."""
    d = r.alg.dim
    out = {}
    for (a, b), v in r.terms.items():
        out[a, d + b] = out.get((a, d + b), 0) + v
        out[d + a, b] = out.get((d + a, b), 0) + v
    return LieTensor(t, 2, out)


def f_tensor_f(s, t):
    return LieTensor(t, 2, {(a, b): v for (a, b), v in s.terms.items()})


# ---------------------------------------------------------------- CYBE

def _leg_bracket(alg, A, B, legA, legB, out_legs, out):
    """Accumulate sum A-term (x) B-term with legs legA, legB bracketed together."""
    for ka, va in A.terms.items():
        for kb, vb in B.terms.items():
            br = alg.bracket(ka[legA], kb[legB])
            if not br:
                continue
            for c, w in br.items():
                key = out_legs(ka, kb, c)
                out[key] = out.get(key, 0) + va * vb * w


def mixed_cybe(r, rp, rpp):
    """[r_12, r'_13] + [r_12, r''_23] + [r'_13, r''_23]."""
    alg = r.alg
    out = {}
    _leg_bracket(alg, r, rp, 0, 0, lambda a, b, c: (c, a[1], b[1]), out)
    _leg_bracket(alg, r, rpp, 1, 0, lambda a, b, c: (a[0], c, b[1]), out)
    _leg_bracket(alg, rp, rpp, 1, 1, lambda a, b, c: (a[0], b[0], c), out)
    return LieTensor(alg, 3, out)


def cybe(r):
    return mixed_cybe(r, r, r)


@dataclass
class RFamily:
    alg: object
    members: dict
    name: str = ""
    palette: list = field(default=None)

    def __post_init__(self):
        if self.palette is None:
            self.palette = list(self.members)
        if any(r.alg is not self.alg for r in self.members.values()):
            raise ValueError("family members on different algebras")

    def __getitem__(self, c):
        return self.members[c]


def standard_classical_family(m=2):
    r = standard_r(m)
    return RFamily(r.alg, {1: r, -1: -r.tau()}, name="standard-classical", palette=[1, -1])


def takiff_family(m=2, palette=(0, 1, 2)):
    """{r_hat + lam Omega}: r the skew r-matrix of gl_m, Omega = (f (x) f)(Casimir)."""
    g = gl(m)
    t = takiff(g)
    rh = hat(skew_r(m, g), t)
    om = f_tensor_f(casimir(g), t)
    members = {lam: rh + om.scale(Fraction(lam)) for lam in palette}
    fam = RFamily(t, members, name="takiff", palette=list(palette))
    fam.omega = om
    fam.rhat = rh
    return fam


def transitive_cybe_check(fam, c, cp, cpp):
    if cp not in (c, cpp):
        raise ValueError("transitive CYBE needs c' in {c, c''}")
    return mixed_cybe(fam[c], fam[cp], fam[cpp]).is_zero()


def admissible_triples(palette):
    return [(a, b, c) for a in palette for b in palette for c in palette if b in (a, c)]


def check_family(fam):
    return all(transitive_cybe_check(fam, *t) for t in admissible_triples(fam.palette))


# ---------------------------------------------------------------- invariance, cobracket

def ad_action(s, x):
    """(sum over legs of ad_x on that leg)(s) for a basis element x."""
    alg = s.alg
    out = {}
    for k, v in s.terms.items():
        for leg in range(s.arity):
            for c, w in alg.bracket(x, k[leg]).items():
                key = k[:leg] + (c,) + k[leg + 1:]
                out[key] = out.get(key, 0) + v * w
    return LieTensor(alg, s.arity, out)


def invariance_check(s):
    return all(ad_action(s, x).is_zero() for x in range(s.alg.dim))


def delta_r(r, x):
    """[r, x (x) 1 + 1 (x) x] = -(ad_x (x) 1 + 1 (x) ad_x)(r)."""
    return -ad_action(r, x)


def cobracket_axioms_check(r):
    return {"antisym": invariance_check(r + r.tau()), "coJacobi": invariance_check(cybe(r))}


def in_center_tensor(s):
    """s lies in z (x) z iff ad_x kills every leg separately."""
    alg = s.alg
    for x in range(alg.dim):
        for leg in range(s.arity):
            out = {}
            for k, v in s.terms.items():
                for c, w in alg.bracket(x, k[leg]).items():
                    key = k[:leg] + (c,) + k[leg + 1:]
                    out[key] = out.get(key, 0) + v * w
            if any(out.values()):
                return False
    return True


# ---------------------------------------------------------------- direct sums

_SUMS = {}


def sum_algebra(g, n):
    key = (id(g), n)
    if key not in _SUMS:
        _SUMS[key] = (g, direct_sum(g, n))
    return _SUMS[key][1]


def place(r, i, j, S):
    """r with first factor in copy i and second in copy j of S = g^{+n} (copies 1-based)."""
    d = r.alg.dim
    return {((i - 1) * d + a, (j - 1) * d + b): v for (a, b), v in r.terms.items()}


def _accumulate(S, parts):
    out = {}
    for p in parts:
        for k, v in p.items():
            out[k] = out.get(k, 0) + v
    return LieTensor(S, 2, out)


def build_r_matrix(fam, a):
    """r^(a) = sum_{i,j} (r^{(a_ij)})_{j, i+n}."""
    n = a.n
    S = sum_algebra(fam.alg, n)
    return _accumulate(S, [place(fam[a[i, j]], j, i, S) for i in range(1, n + 1) for j in range(1, n + 1)])


def build_jc(fam, c):
    """j_c = sum_{i<j} (r^{(c(i,j))})_{j, n+i}."""
    n = c.n
    S = sum_algebra(fam.alg, n)
    return _accumulate(S, [place(fam[c[i, j]], j, i, S) for j in range(1, n + 1) for i in range(1, j)])


def diagonal_r(fam, d):
    n = len(d)
    S = sum_algebra(fam.alg, n)
    return _accumulate(S, [place(fam[d[i - 1]], i, i, S) for i in range(1, n + 1)])


def classical_twist_check(j, r0):
    """cybe(r0 + j - tau(j)) = 0."""
    return cybe(r0 + j - j.tau()).is_zero()


def build_rcd(fam, c, d):
    """r(c,d) = sum_i (r^{(d_i)})_{i,i+n} + sum_{i<j} (r^{(c_ij)})_{j,i+n} - (r^{(c_ij)})_{j+n,i}."""
    n = c.n
    if len(d) != n:
        raise ValueError("|d| must equal n")
    S = sum_algebra(fam.alg, n)
    parts = [place(fam[d[i - 1]], i, i, S) for i in range(1, n + 1)]
    for j in range(1, n + 1):
        for i in range(1, j):
            r = fam[c[i, j]]
            parts.append(place(r, j, i, S))
            parts.append({k: -v for k, v in place(r.tau(), i, j, S).items()})
    return _accumulate(S, parts)


def quasi_invariance_condition(fam, a):
    """r^{(a_ik)} + tau(r^{(a_ki)}) in z (x) z for all i < k."""
    n = a.n
    return all(in_center_tensor(fam[a[i, k]] + fam[a[k, i]].tau())
               for i in range(1, n + 1) for k in range(i + 1, n + 1))


def quasi_invariance_lhs(fam, a):
    r = build_r_matrix(fam, a)
    return invariance_check(r + r.tau())


@dataclass
class ScanReport:
    family: str
    n: int
    total: int = 0
    passed: int = 0
    failed: int = 0
    witnesses: list = field(default_factory=list)
    quasi_invariant: int = 0
    notes: list = field(default_factory=list)

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


def conjecture_classical_scan(fam, n, with_invariance=True):
    if not check_family(fam):
        raise ValueError("family fails transitive CYBE")
    rep = ScanReport(fam.name, n)
    for a in tc.enumerate_transitive_matrices(n, palette=fam.palette):
        res = cybe(build_r_matrix(fam, a))
        ok = res.is_zero()
        rep.add(ok, None if ok else a.rows(), res.support_size())
        if with_invariance:
            qi = quasi_invariance_lhs(fam, a)
            rep.quasi_invariant += qi
            if ok and not qi and not a.is_almost_skew():
                rep.notes.append(a.rows())
    return rep


def diag_embed_check(fam, c, x, d=None):
    """[r(c,d), Delta(sum_i x_i)] == sum_{i,j} delta(x)_{i,j+n} for a basis element x of g."""
    n = c.n
    d = d if d is not None else tuple(fam.palette[0] for _ in range(n))
    S = sum_algebra(fam.alg, n)
    gd = fam.alg.dim
    r = build_rcd(fam, c, d)
    lhs = LieTensor(S, 2)
    for k in range(n):
        lhs = lhs + delta_r(r, k * gd + x)
    dx = delta_r(fam[fam.palette[0]], x)
    rhs = _accumulate(S, [place(dx, i, j, S) for i in range(1, n + 1) for j in range(1, n + 1)])
    return lhs == rhs


# ---------------------------------------------------------------- leg calculus for the key identity

class LegTensor:
    """Element of g^{x N} with unit legs: terms[((leg, basis), ...)] sorted by leg."""

    __slots__ = ("alg", "N", "terms")

    def __init__(self, alg, N, terms=None):
        self.alg, self.N = alg, N
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    def __add__(self, other):
        t = dict(self.terms)
        for k, v in other.terms.items():
            t[k] = t.get(k, 0) + v
        return LegTensor(self.alg, self.N, t)

    def __neg__(self):
        return LegTensor(self.alg, self.N, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        return self.N == other.N and self.terms == other.terms

    def is_zero(self):
        return not self.terms


def leg_r(r, i, j, N):
    """Image of the generator r_{i,j}: first factor on leg i, second on leg j."""
    out = {}
    for (a, b), v in r.terms.items():
        key = tuple(sorted(((i, a), (j, b))))
        out[key] = out.get(key, 0) + v
    return LegTensor(r.alg, N, out)


def commutator(X, Y):
    """[X, Y] for elements each of whose monomials share at most one leg."""
    alg = X.alg
    out = {}
    for kx, vx in X.terms.items():
        dx = dict(kx)
        for ky, vy in Y.terms.items():
            dy = dict(ky)
            common = [l for l in dx if l in dy]
            if not common:
                continue
            if len(common) > 1:
                raise ValueError("commutator leaves g^{x N}: legs overlap twice")
            l = common[0]
            for c, w in alg.bracket(dx[l], dy[l]).items():
                m = dict(dx)
                m.update(dy)
                m[l] = c
                key = tuple(sorted(m.items()))
                out[key] = out.get(key, 0) + vx * vy * w
    return LegTensor(alg, X.N, out)


def _sum(alg, N, xs):
    out = LegTensor(alg, N)
    for x in xs:
        out = out + x
    return out


def jgamma_minus_pairs(gamma):
    """Generators of j_g - sigma_m(j_g) as (sign, color, i, j) on 2m abstract legs."""
    m = gamma.n
    out = []
    for j in range(1, m + 1):
        for i in range(1, j):
            c = gamma[i, j]
            out.append((1, c, j, m + i))
            out.append((-1, c, j + m, i))
    return out


def key_identity_sides(fam, gamma, alpha):
    m = gamma.n
    alpha = list(alpha)
    if len(alpha) != m:
        raise ValueError("alpha must have length m")
    N = 3 * m + 3
    alg = fam.alg
    jm = jgamma_minus_pairs(gamma)

    def psi(I):
        return _sum(alg, N, [leg_r(fam[c], I[i - 1], I[j - 1], N) if s > 0 else -leg_r(fam[c], I[i - 1], I[j - 1], N)
                             for s, c, i, j in jm])

    I1 = list(range(m + 2, 2 * m + 2)) + list(range(2 * m + 3, 3 * m + 3))
    I2 = list(range(1, m + 1)) + list(range(2 * m + 3, 3 * m + 3))
    I3 = list(range(1, m + 1)) + list(range(m + 2, 2 * m + 2))
    P1, P2, P3 = psi(I1), psi(I2), psi(I3)
    r = lambda i, j, c: leg_r(fam[c], i, j, N)
    lhs = LegTensor(alg, N)
    for i in range(1, m + 1):
        a = alpha[i - 1]
        lhs = lhs + commutator(P1, r(m + 1, m + 1 + i, a) + r(m + 1, 2 * m + 2 + i, a))
        lhs = lhs - commutator(P2, r(2 * m + 2, i, a) + r(2 * m + 2, 2 * m + 2 + i, a))
        lhs = lhs + commutator(P3, r(3 * m + 3, i, a) + r(3 * m + 3, m + 1 + i, a))
    rhs = LegTensor(alg, N)
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            if i == j:
                continue
            ai, aj = alpha[i - 1], alpha[j - 1]
            rhs = rhs + commutator(r(m + 1, i + m + 1, ai), r(m + 1, j + 2 * m + 2, aj))
            rhs = rhs + commutator(r(2 * m + 2, i + 2 * m + 2, ai), r(2 * m + 2, j, aj))
            rhs = rhs + commutator(r(3 * m + 3, i, ai), r(3 * m + 3, j + m + 1, aj))
    return lhs, rhs


def key_identity_check(fam, gamma, alpha, require_transitive=True):
    if require_transitive and not tc.is_transitive_array(tc.restrict_extend(gamma, "extend", tuple(alpha))):
        raise ValueError("gamma^alpha is not transitive")
    lhs, rhs = key_identity_sides(fam, gamma, alpha)
    return lhs == rhs


# ---------------------------------------------------------------- bowtie

@dataclass
class ActionTable:
    """left[(x, f)] = x |> f and right[(f, x)] = f <| x for basis x and generator f."""
    left: dict
    right: dict
    zero: object = 0

    def act_left(self, x, f):
        try:
            return self.left[x, f]
        except KeyError:
            raise KeyError("missing action entry %r |> %r" % (x, f))

    def act_right(self, f, x):
        try:
            return self.right[f, x]
        except KeyError:
            raise KeyError("missing action entry %r <| %r" % (f, x))


def poisson_bowtie(r, actions, f, fp):
    """mu(r bowtie (f (x) f')) with (x (x) y) bowtie (f (x) f') = (f<|x)(f'<|y) - (x|>f)(y|>f')."""
    out = actions.zero
    for (x, y), v in r.terms.items():
        term = actions.act_right(f, x) * actions.act_right(fp, y) - actions.act_left(x, f) * actions.act_left(y, fp)
        out = out + term * v
    return out
