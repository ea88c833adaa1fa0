"""Poisson brackets on k[Mat_m]^{(x) n} and Takiff coordinate rings.

Brackets come from mu(r(c, d) bowtie (f (x) f')) with g^{+n} acting leg by
leg; the closed forms are kept alongside as an independent route.
Generators are named ("x", k, i, j), ("xb", k, i, j) for inverse-matrix
entries and ("y", k, i, j) for the Takiff coordinates.
"""

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from . import lietensor as lt
from . import transcomb as tc


def sign(x):
    return (x > 0) - (x < 0)


class CPoly:
    """Commutative polynomial: {sorted tuple of generator names: Fraction}."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        for k, v in (terms or {}).items():
            if v:
                k = tuple(sorted(k))
                self.terms[k] = self.terms.get(k, 0) + Fraction(v)
        self.terms = {k: v for k, v in self.terms.items() if v}

    @classmethod
    def gen(cls, name):
        return cls({(tuple(name),): 1})

    @classmethod
    def const(cls, c):
        return cls({(): c})

    def _lift(self, other):
        if isinstance(other, CPoly):
            return other
        return CPoly.const(other)

    def __add__(self, other):
        other = self._lift(other)
        t = dict(self.terms)
        for k, v in other.terms.items():
            t[k] = t.get(k, 0) + v
        out = CPoly()
        out.terms = {k: v for k, v in t.items() if v}
        return out

    __radd__ = __add__

    def __neg__(self):
        out = CPoly()
        out.terms = {k: -v for k, v in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, CPoly):
            other = Fraction(other)
            out = CPoly()
            out.terms = {k: v * other for k, v in self.terms.items()} if other else {}
            return out
        t = {}
        for a, x in self.terms.items():
            for b, y in other.terms.items():
                k = tuple(sorted(a + b))
                t[k] = t.get(k, 0) + x * y
        out = CPoly()
        out.terms = {k: v for k, v in t.items() if v}
        return out

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, CPoly):
            other = CPoly.const(other)
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self):
        return not self.terms

    def as_monomials(self):
        return dict(self.terms)

    def variables(self):
        return {g for k in self.terms for g in k}

    def degree(self, weight=None):
        weight = weight or (lambda g: 1)
        return max((sum(weight(g) for g in k) for k in self.terms), default=0)

    def derivative(self, name):
        t = {}
        for k, v in self.terms.items():
            c = k.count(name)
            if c:
                lst = list(k)
                lst.remove(name)
                kk = tuple(lst)
                t[kk] = t.get(kk, 0) + v * c
        out = CPoly()
        out.terms = {k: v for k, v in t.items() if v}
        return out

    def evaluate(self, point):
        total = Fraction(0)
        for k, v in self.terms.items():
            x = v
            for g in k:
                x *= point[g]
            total += x
        return total

    def map_gens(self, fn):
        return CPoly({tuple(fn(g) for g in k): v for k, v in self.terms.items()})

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms):
            mono = "*".join("%s%d;%d,%d" % g for g in k) or "1"
            parts.append("%s*%s" % (self.terms[k], mono))
        return " + ".join(parts)


# ---------------------------------------------------------------- bracket tables

@dataclass
class BracketTable:
    gens: list
    entries: dict = field(default_factory=dict)
    name: str = ""

    def __post_init__(self):
        done = dict(self.entries)
        for (a, b), v in self.entries.items():
            if (b, a) in self.entries:
                continue
            done[b, a] = -v
        for g in self.gens:
            done.setdefault((g, g), CPoly())
        self.entries = done

    def get(self, a, b):
        if a == b:
            return CPoly()
        v = self.entries.get((a, b))
        if v is None:
            raise KeyError("no bracket entry for %r, %r" % (a, b))
        return v

    def is_skew(self):
        return all(self.get(a, b) == -self.get(b, a) for a in self.gens for b in self.gens)


def bracket(table, f, g):
    """Biderivation extension of the generator table."""
    f = f if isinstance(f, CPoly) else CPoly.const(f)
    g = g if isinstance(g, CPoly) else CPoly.const(g)
    out = CPoly()
    fv, gv = f.variables(), g.variables()
    for a in fv:
        da = f.derivative(a)
        for b in gv:
            e = table.get(a, b)
            if e.is_zero():
                continue
            out = out + da * g.derivative(b) * e
    return out


def jacobi_expr(table, a, b, c):
    A, B, C = CPoly.gen(a), CPoly.gen(b), CPoly.gen(c)
    return (bracket(table, bracket(table, A, B), C) + bracket(table, bracket(table, B, C), A)
            + bracket(table, bracket(table, C, A), B))


def jacobi_check(table, gens=None, witness=False):
    gens = list(gens if gens is not None else table.gens)
    for t, a in enumerate(gens):
        for u in range(t + 1, len(gens)):
            for v in range(u + 1, len(gens)):
                if not jacobi_expr(table, a, gens[u], gens[v]).is_zero():
                    return (False, (a, gens[u], gens[v])) if witness else False
    return (True, None) if witness else True


# ---------------------------------------------------------------- actions

def _x(k, i, j):
    return CPoly.gen(("x", k, i, j))


def _xb(k, i, j):
    return CPoly.gen(("xb", k, i, j))


def _y(k, i, j):
    return CPoly.gen(("y", k, i, j))


def gl_actions(m, n, with_inverse=False):
    """E_ab acting on matrix coordinates of leg k through copy k of gl_m^{+n}."""
    d = m * m
    left, right = {}, {}
    gens = matrix_gens(m, n, with_inverse)
    for p in range(n):
        for a, b in product(range(1, m + 1), repeat=2):
            e = p * d + (a - 1) * m + (b - 1)
            for g in gens:
                kind, k, i, j = g
                L = R = CPoly()
                if k == p + 1:
                    if kind == "x":
                        L = _x(k, i, a) if b == j else CPoly()
                        R = _x(k, b, j) if a == i else CPoly()
                    else:
                        L = -_xb(k, b, j) if i == a else CPoly()
                        R = -_xb(k, i, a) if b == j else CPoly()
                left[e, g], right[g, e] = L, R
    return lt.ActionTable(left, right, CPoly())


def matrix_gens(m, n, with_inverse=False):
    kinds = ("x", "xb") if with_inverse else ("x",)
    return [(kind, k, i, j) for kind in kinds for k in range(1, n + 1)
            for i in range(1, m + 1) for j in range(1, m + 1)]


def takiff_gens(m, n):
    return [(kind, k, i, j) for kind in ("y", "x", "xb") for k in range(1, n + 1)
            for i in range(1, m + 1) for j in range(1, m + 1)]


def takiff_actions(m, n):
    """Takiff(gl_m)^{+n} acting on k[V x| GL_m]^{(x) n}; basis v_a then x_a per copy."""
    d = m * m
    left, right = {}, {}
    gens = takiff_gens(m, n)
    for p in range(n):
        for a, b in product(range(1, m + 1), repeat=2):
            ab = (a - 1) * m + (b - 1)
            ev = p * 2 * d + ab          # f(E_ab)
            ex = p * 2 * d + d + ab      # E_ab
            for g in gens:
                kind, k, i, j = g
                Lv = Rv = Lx = Rx = CPoly()
                if k == p + 1:
                    if kind == "y":
                        Lv = _x(k, i, a) * _xb(k, b, j)
                        Rv = CPoly.const(1) if (i, j) == (a, b) else CPoly()
                        Rx = (_y(k, b, j) if i == a else CPoly()) - (_y(k, i, a) if b == j else CPoly())
                    elif kind == "x":
                        Lx = _x(k, i, a) if b == j else CPoly()
                        Rx = _x(k, b, j) if a == i else CPoly()
                    else:
                        Lx = -_xb(k, b, j) if i == a else CPoly()
                        Rx = -_xb(k, i, a) if b == j else CPoly()
                left[ev, g], right[g, ev] = Lv, Rv
                left[ex, g], right[g, ex] = Lx, Rx
    return lt.ActionTable(left, right, CPoly())


def table_from_r(r, actions, gens, name=""):
    """{f, f'} = mu(r bowtie (f (x) f')) on generator pairs."""
    entries = {}
    for s, a in enumerate(gens):
        for b in gens[s + 1:]:
            entries[a, b] = lt.poisson_bowtie(r, actions, a, b)
    return BracketTable(list(gens), entries, name)


# ---------------------------------------------------------------- k[Mat_m]^{(x) n}

def _default_d(fam, n):
    return tuple(fam.palette[0] for _ in range(n))


def bowtie_table_Amn(n, m, c, with_inverse=False, d=None):
    fam = lt.standard_classical_family(m)
    c = c if n > 1 else tc.TransArray(1, ())
    r = lt.build_rcd(fam, c, d or _default_d(fam, n))
    return table_from_r(r, gl_actions(m, n, with_inverse), matrix_gens(m, n, with_inverse), "A_m^n bowtie")


def build_bracket_Amn(n, m, c):
    """Closed-form generator table for {.,.}_c on k[Mat_m]^{(x) n}, c over {+1, -1}."""
    if n > 1 and not tc.is_transitive_array(c):
        raise ValueError("c must be transitive")
    gens = matrix_gens(m, n)
    entries = {}
    for s, g in enumerate(gens):
        for h in gens[s + 1:]:
            _, k, i, j = g
            _, kp, ip, jp = h
            if k == kp:
                entries[g, h] = (sign(ip - i) + sign(jp - j)) * _x(k, i, jp) * _x(k, ip, j)
            elif k > kp:
                entries[g, h] = _cross(c[kp, k], k, i, j, kp, ip, jp)
            else:
                entries[g, h] = -_cross(c[k, kp], kp, ip, jp, k, i, j)
    return BracketTable(gens, entries, "A_m^n closed form")


def _cross(eps, l, i, j, k, ip, jp):
    """{x^{(l)}_{ij}, x^{(k)}_{i'j'}} for k < l with colour eps = c(k, l)."""
    return ((sign(ip - i) + eps) * _x(l, ip, j) * _x(k, i, jp)
            - (sign(j - jp) + eps) * _x(l, i, jp) * _x(k, ip, j))


def amn_sigma_id_formula(n, m):
    """The sigma_id bracket written with sign(k - k')."""
    gens = matrix_gens(m, n)
    entries = {}
    for s, g in enumerate(gens):
        for h in gens[s + 1:]:
            _, k, i, j = g
            _, kp, ip, jp = h
            entries[g, h] = ((sign(ip - i) + sign(k - kp)) * _x(k, ip, j) * _x(kp, i, jp)
                             + (sign(jp - j) - sign(k - kp)) * _x(k, i, jp) * _x(kp, ip, j))
    return BracketTable(gens, entries, "sigma_id formula")


def tables_equal(t1, t2):
    return all(t1.get(a, b) == t2.get(a, b) for a in t1.gens for b in t1.gens)


def collapse(p):
    """mu^{(n)}: leg index forgotten."""
    return p.map_gens(lambda g: (g[0], 1) + tuple(g[2:]))


def mult_hom_check(n, m, c, table=None):
    table = table or build_bracket_Amn(n, m, c)
    base = build_bracket_Amn(1, m, tc.TransArray(1, ()))
    for a in table.gens:
        for b in table.gens:
            if a[1] > b[1]:
                continue
            want = base.get(("x", 1) + a[2:], ("x", 1) + b[2:])
            if collapse(table.get(a, b)) != want:
                return False
    return True


def det_poly(m=2, k=1):
    if m != 2:
        raise ValueError("only m = 2")
    return _x(k, 1, 1) * _x(k, 2, 2) - _x(k, 1, 2) * _x(k, 2, 1)


def det_central_check(m=2):
    t = build_bracket_Amn(1, m, tc.TransArray(1, ()))
    D = det_poly(m)
    return all(bracket(t, D, CPoly.gen(g)).is_zero() for g in t.gens)


def relabel_check(n, m, w):
    """x^{(k)} -> x^{(w(k))} carries {.,.}_{sigma_id} to {.,.}_{sigma_w'} for w' = w^{-1}."""
    ident = build_bracket_Amn(n, m, tc.sigma_of_perm(tuple(range(1, n + 1))))
    winv = [0] * n
    for t, v in enumerate(w):
        winv[v - 1] = t + 1
    tw = build_bracket_Amn(n, m, tc.sigma_of_perm(tuple(winv)))
    mv = lambda g: (g[0], w[g[1] - 1]) + tuple(g[2:])
    return all(ident.get(a, b).map_gens(mv) == tw.get(mv(a), mv(b)) for a in ident.gens for b in ident.gens)


# ---------------------------------------------------------------- Takiff

def build_takiff_tables(m, n, c, palette=(0, 1, 2), d=None):
    """Generator table on {y, x, xb}^{(k)} from r(c, d) of the Takiff family."""
    fam = lt.takiff_family(m, palette)
    c = c if n > 1 else tc.TransArray(1, ())
    r = lt.build_rcd(fam, c, d or _default_d(fam, n))
    return table_from_r(r, takiff_actions(m, n), takiff_gens(m, n), "takiff bowtie")


def _skew_ext(c, k, l):
    if k == l:
        return 0
    return c[k, l] if k < l else -c[l, k]


def takiff_displayed_table(m, n, c):
    """The closed forms for {y, y}, {y, x}, {x, x} as printed, with c extended skew-symmetrically."""
    dt = lambda t: 2 - (t == 1) - (t == m)
    D = lambda a, b: 1 if a == b else 0
    gens = takiff_gens(m, n)
    entries = {}
    for g in gens:
        for h in gens:
            if (h, g) in entries or g == h:
                continue
            kg, k, i, j = g
            kh, l, ip, jp = h
            if kg == "y" and kh == "y":
                v = (D(1, i) * D(jp, m) * (dt(ip) * _y(k, ip, j) - dt(j) * _y(l, ip, j))
                     - D(1, ip) * D(j, m) * (dt(i) * _y(l, i, jp) - dt(jp) * _y(k, i, jp))
                     + D(i, jp) * dt(i) * (D(j, m) * _y(l, ip, 1) - D(1, ip) * _y(k, m, j))
                     - D(ip, j) * dt(ip) * (D(jp, m) * _y(k, i, 1) - D(1, i) * _y(l, m, jp)))
                cc = _skew_ext(c, k, l) if n > 1 else 0
                if cc:
                    s = CPoly.const(D(i, jp) * D(ip, j))
                    for a in range(1, m + 1):
                        for b in range(1, m + 1):
                            s = s - _x(k, i, a) * _xb(k, b, j) * _x(l, ip, b) * _xb(l, a, jp)
                    v = v + s * cc
                entries[g, h] = v
            elif kg == "y" and kh in ("x",):
                v = (dt(j) * D(1, i) * D(ip, j) * _x(l, m, jp) - dt(i) * D(m, j) * D(1, ip) * _x(l, i, jp)
                     + dt(jp) * _x(k, i, jp) * _xb(k, m, j) * _x(l, ip, 1))
                if jp == m:
                    for t in range(1, m + 1):
                        v = v - dt(t) * _x(k, i, 1) * _x(l, ip, t) * _xb(k, t, j)
                entries[g, h] = v
            elif kg in ("x",) and kh == "x":
                entries[g, h] = CPoly()
    return entries


# ---------------------------------------------------------------- exact random points

def random_point(gens, m, n, rng, bound=1000):
    """Random integer x per leg (resampled until invertible), xb its exact inverse, random y."""
    import flint
    pt = {}
    for k in range(1, n + 1):
        while True:
            X = [[rng.randint(-bound, bound) for _ in range(m)] for _ in range(m)]
            M = flint.fmpq_mat(m, m, [v for row in X for v in row])
            if M.det() != 0:
                break
        inv = M.inv()
        for i in range(m):
            for j in range(m):
                pt["x", k, i + 1, j + 1] = Fraction(X[i][j])
                e = inv[i, j]
                pt["xb", k, i + 1, j + 1] = Fraction(int(e.p), int(e.q))
                pt["y", k, i + 1, j + 1] = Fraction(rng.randint(-bound, bound))
    return {g: pt[g] for g in gens if g in pt}


def _weight(m):
    return lambda g: m if g[0] == "xb" else 1


@dataclass
class PointReport:
    identity: str
    ok: bool
    trials: int
    checked: int
    degree_bound: int
    sample_size: int
    seed: int
    witness: object = None
    symbolic_zero: int = 0

    @property
    def error_bound(self):
        """Schwartz-Zippel bound on a false pass, per nonzero identity."""
        return Fraction(self.degree_bound, self.sample_size) ** self.trials


def numeric_point_check(table, identity, m, n, trials=None, seed=0, bound=1000, gens=None, other=None):
    """Evaluate skew / jacobi / consistency / hom identities at random exact points.

    Degrees: xb_ij = adj_ij / det, so clearing det from an expression of
    weighted degree D (xb weighted m) leaves a polynomial in the sampled
    integers of degree <= D.  D is taken over the summands before
    cancellation, so it bounds the identity whatever the table.
    """
    rng = random.Random(seed)
    gens = list(gens if gens is not None else table.gens)
    w = _weight(m)
    exprs = []
    D = 0

    def add(key, parts):
        nonlocal D
        D = max([D] + [p.degree(w) for p in parts if not p.is_zero()])
        tot = CPoly()
        for p in parts:
            tot = tot + p
        exprs.append((key, tot))

    if identity == "skew":
        for a in gens:
            for b in gens:
                add((a, b), [table.get(a, b), table.get(b, a)])
    elif identity == "jacobi":
        br = lambda f, g: bracket(table, f, g)
        for t, a in enumerate(gens):
            for u in range(t + 1, len(gens)):
                for v in range(u + 1, len(gens)):
                    A, B, C = CPoly.gen(a), CPoly.gen(gens[u]), CPoly.gen(gens[v])
                    add((a, gens[u], gens[v]), [br(br(A, B), C), br(br(B, C), A), br(br(C, A), B)])
    elif identity == "consistency":
        # other maps generator pairs to reference brackets; only those pairs are compared
        for (a, b), v in other.items():
            add((a, b), [table.get(a, b), -v])
    elif identity == "hom":
        for i, a in product(range(1, m + 1), repeat=2):
            add((i, a), [sum((_x(1, i, b) * _x(2, b, a) for b in range(1, m + 1)), CPoly())])
    else:
        raise ValueError("unknown identity %r" % identity)
    zeros = sum(1 for _, e in exprs if e.is_zero()) if identity != "hom" else 0
    if trials is None:
        trials = D + 1
    checked = 0
    for _ in range(trials):
        pt = random_point(takiff_gens(m, n), m, n, rng, bound)
        if identity == "hom":
            # x(g g') against the product matrix
            g1 = [[pt["x", 1, i, j] for j in range(1, m + 1)] for i in range(1, m + 1)]
            g2 = [[pt["x", min(2, n), i, j] for j in range(1, m + 1)] for i in range(1, m + 1)]
            prod_ = [[sum(g1[i][b] * g2[b][a] for b in range(m)) for a in range(m)] for i in range(m)]
            if n < 2:
                raise ValueError("hom identity needs two legs")
            for (i, a), e in exprs:
                checked += 1
                if e.evaluate(pt) != prod_[i - 1][a - 1]:
                    return PointReport(identity, False, trials, checked, D, 2 * bound + 1, seed, (i, a), zeros)
            continue
        for key, e in exprs:
            checked += 1
            if e.evaluate(pt) != 0:
                return PointReport(identity, False, trials, checked, D, 2 * bound + 1, seed, key, zeros)
    return PointReport(identity, True, trials, checked, D, 2 * bound + 1, seed, None, zeros)


def takiff_block_agreement(m, n, c, palette=(0, 1, 2), trials=2, seed=0, negate=False):
    """Generator pairs where the printed closed forms differ from the bowtie table at exact points.

    With negate the closed forms are evaluated at -c: the bowtie places the
    Omega term of legs k < l with coefficient c(l, k) = -c(k, l).
    """
    table = build_takiff_tables(m, n, c, palette)
    cd = tc.TransArray(c.n, tuple(-v for v in c.entries)) if (negate and c is not None) else c
    disp = takiff_displayed_table(m, n, cd)
    rng = random.Random(seed)
    pts = [random_point(takiff_gens(m, n), m, n, rng) for _ in range(trials)]
    bad = []
    for (g, h), v in disp.items():
        diff = table.get(g, h) - v
        if any(diff.evaluate(p) != 0 for p in pts):
            bad.append((g, h))
    return bad
