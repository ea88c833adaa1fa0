"""Transitive arrays and matrices: enumeration, bijections, counting formulas.

A transitive array is a coloring c of the pairs i < j with
c(i,k) in {c(i,j), c(j,k)} whenever i < j < k.  A transitive matrix is a
coloring of all ordered pairs with the same condition over every triple.
"""

from dataclasses import dataclass
from itertools import permutations
from math import comb, factorial


def pair_index(i, j):
    """Position of (i,j), 1 <= i < j, in column-major order (1,2),(1,3),(2,3),(1,4),..."""
    return (j - 1) * (j - 2) // 2 + (i - 1)


@dataclass(frozen=True)
class TransArray:
    n: int
    entries: tuple  # column-major over the pairs i < j

    def __post_init__(self):
        if len(self.entries) != self.n * (self.n - 1) // 2:
            raise ValueError("wrong number of entries for n=%d" % self.n)

    def __getitem__(self, ij):
        i, j = ij
        if not 1 <= i < j <= self.n:
            raise KeyError(ij)
        return self.entries[pair_index(i, j)]

    @classmethod
    def from_dict(cls, n, colors):
        return cls(n, tuple(colors[i, j] for j in range(1, n + 1) for i in range(1, j)))

    @classmethod
    def constant(cls, n, color):
        return cls(n, (color,) * (n * (n - 1) // 2))

    def as_dict(self):
        return {(i, j): self[i, j] for j in range(1, self.n + 1) for i in range(1, j)}

    def palette(self):
        return set(self.entries)


@dataclass(frozen=True)
class TransMatrix:
    n: int
    entries: tuple  # row-major n*n

    def __post_init__(self):
        if len(self.entries) != self.n * self.n:
            raise ValueError("wrong number of entries for n=%d" % self.n)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[(i - 1) * self.n + (j - 1)]

    @classmethod
    def from_rows(cls, rows):
        return cls(len(rows), tuple(x for r in rows for x in r))

    def rows(self):
        n = self.n
        return [list(self.entries[r * n:(r + 1) * n]) for r in range(n)]

    def is_almost_skew(self):
        return all(self[j, i] == -self[i, j]
                   for i in range(1, self.n + 1) for j in range(i + 1, self.n + 1))


# ---------------------------------------------------------------- predicates

def is_transitive_array(c):
    n = c.n
    for k in range(3, n + 1):
        for j in range(2, k):
            for i in range(1, j):
                v = c[i, k]
                if v != c[i, j] and v != c[j, k]:
                    return False
    return True


def is_transitive_matrix(a):
    n = a.n
    r = range(1, n + 1)
    for i in r:
        for j in r:
            for k in r:
                v = a[i, k]
                if v != a[i, j] and v != a[j, k]:
                    return False
    return True


# ---------------------------------------------------------------- enumeration

def _columns(prev, j, palette):
    """All valid new columns (alpha(1..j-1)) extending the columns in prev."""
    out = []
    alpha = [None] * (j - 1)

    def rec(i):
        if i == 0:
            out.append(tuple(alpha))
            return
        if i == j - 1:
            choices = palette
        else:
            choices = [x for x in palette
                       if all(x == prev[pair_index(i, jj)] or x == alpha[jj - 1]
                              for jj in range(i + 1, j))]
        for x in choices:
            alpha[i - 1] = x
            rec(i - 1)
        alpha[i - 1] = None

    rec(j - 1)
    out.sort(key=lambda t: [palette.index(x) for x in t])
    return out


def enumerate_transitive_arrays(n, k=2, palette=None):
    """Yield every transitive array on I_n with colors from palette (default 0..k-1)."""
    palette = list(range(k)) if palette is None else list(palette)

    def rec(j, entries):
        if j > n:
            yield TransArray(n, tuple(entries))
            return
        for col in _columns(entries, j, palette):
            yield from rec(j + 1, entries + list(col))

    yield from rec(2, [])


def _matrix_positions(n):
    order = []
    for s in range(1, n + 1):
        for i in range(1, s):
            order.append((i, s))
            order.append((s, i))
        order.append((s, s))
    return order


def _matrix_constraints(n):
    """For each position in the extension order, the triples completed by it."""
    order = _matrix_positions(n)
    rank = {p: t for t, p in enumerate(order)}
    cons = [[] for _ in order]
    r = range(1, n + 1)
    for i in r:
        for j in r:
            for k in r:
                if j == i or j == k:
                    continue
                ps = [(i, k), (i, j), (j, k)]
                last = max(rank[p] for p in ps)
                cons[last].append(tuple(rank[p] for p in ps))
    return order, cons


def _matrix_search(n, palette, canonical=False):
    order, cons = _matrix_constraints(n)
    vals = [None] * len(order)
    npos = len(order)

    def rec(t, used):
        if t == npos:
            yield tuple(vals), used
            return
        choices = palette[:used + 1] if canonical else palette
        for x in choices:
            vals[t] = x
            if all(vals[a] == vals[b] or vals[a] == vals[c] for a, b, c in cons[t]):
                yield from rec(t + 1, max(used, palette.index(x) + 1) if canonical else used)
        vals[t] = None

    for v, used in rec(0, 0):
        yield order, v, used


def enumerate_transitive_matrices(n, k=2, palette=None):
    """Yield every transitive n x n matrix over the palette (default 0..k-1)."""
    palette = list(range(k)) if palette is None else list(palette)
    for order, v, _ in _matrix_search(n, palette):
        d = dict(zip(order, v))
        yield TransMatrix(n, tuple(d[i, j] for i in range(1, n + 1) for j in range(1, n + 1)))


# ---------------------------------------------------------------- bijections

def _sign(x):
    return (x > 0) - (x < 0)


def sigma_of_perm(w):
    """sigma_w(i,j) = sign(w(j) - w(i)); w in one-line notation."""
    n = len(w)
    if sorted(w) != list(range(1, n + 1)):
        raise ValueError("not a permutation: %r" % (w,))
    return TransArray(n, tuple(_sign(w[j - 1] - w[i - 1])
                               for j in range(1, n + 1) for i in range(1, j)))


def perm_of_sigma(c):
    n = c.n
    if not set(c.entries) <= {1, -1}:
        raise ValueError("array is not over {+1,-1}")
    w = tuple(1 + sum(1 for j in range(1, i) if c[j, i] == 1)
              + sum(1 for j in range(i + 1, n + 1) if c[i, j] == -1)
              for i in range(1, n + 1))
    if sorted(w) != list(range(1, n + 1)) or sigma_of_perm(w) != c:
        raise ValueError("array is not transitive")
    return w


@dataclass(frozen=True)
class SignedPermData:
    w: tuple
    d: tuple

    def __post_init__(self):
        if len(self.w) != len(self.d):
            raise ValueError("|d| must equal n")


def eps_of_signed_perm(s):
    """The matrix eps(w,d)_{ij} = delta_ij d_i + sign(w(j) - w(i))."""
    w, d = s.w, s.d
    n = len(w)
    return TransMatrix(n, tuple((d[i] if i == j else 0) + _sign(w[j] - w[i])
                                for i in range(n) for j in range(n)))


def signed_perm_of_eps(a):
    n = a.n
    d = tuple(a[i, i] for i in range(1, n + 1))
    c = TransArray(n, tuple(a[i, j] for j in range(1, n + 1) for i in range(1, j)))
    return SignedPermData(perm_of_sigma(c), d)


def all_signed_perms(n):
    for w in permutations(range(1, n + 1)):
        for bits in range(2 ** n):
            yield SignedPermData(w, tuple(-1 if bits >> t & 1 else 1 for t in range(n)))


# ---------------------------------------------------------------- restriction / extension

def restrict_extend(c, mode, alpha=None):
    """mode 'minus': drop index n; 'plus': drop index 1 and shift; 'extend': append column alpha."""
    n = c.n
    if mode == "minus":
        return TransArray(n - 1, c.entries[:(n - 1) * (n - 2) // 2])
    if mode == "plus":
        return TransArray(n - 1, tuple(c[i + 1, j + 1] for j in range(1, n) for i in range(1, j)))
    if mode == "extend":
        if alpha is None or len(alpha) != n:
            raise ValueError("extend needs a column of length n")
        return TransArray(n + 1, tuple(c.entries) + tuple(alpha))
    raise ValueError("unknown mode %r" % mode)


def last_column(c):
    n = c.n
    return tuple(c[i, n] for i in range(1, n))


# ---------------------------------------------------------------- counting

def _canonical_array_counts(n):
    """Number of transitive colorings of I_n up to relabeling, by number of colors."""
    counts = {}
    pos = []
    for j in range(2, n + 1):
        for i in range(j - 1, 0, -1):
            pos.append((i, j))
    val = {}

    def rec(t, used):
        if t == len(pos):
            counts[used] = counts.get(used, 0) + 1
            return
        i, j = pos[t]
        if i == j - 1:
            choices = range(used + 1)
        else:
            choices = [x for x in range(used)
                       if all(x == val[i, jj] or x == val[jj, j] for jj in range(i + 1, j))]
        for x in choices:
            val[i, j] = x
            rec(t + 1, max(used, x + 1))

    rec(0, 0)
    return counts


_STIRLING_CACHE = {}


def stirling_transitive(n, k):
    """<K_n, k>: number of k-part partitions of I_n induced by transitive colorings."""
    if k < 1:
        raise ValueError("k must be positive")
    if n not in _STIRLING_CACHE:
        _STIRLING_CACHE[n] = _canonical_array_counts(n)
    if n == 1:
        return 0
    return _STIRLING_CACHE[n].get(k, 0)


def stirling_transitive_by_surjections(n, k):
    """Same number, computed as (surjective transitive colorings onto [k]) / k!."""
    total = sum(1 for c in enumerate_transitive_arrays(n, k) if len(set(c.entries)) == k)
    assert total % factorial(k) == 0
    return total // factorial(k)


def stirling_transitive_matrices(n, k):
    """Matrix-level analogue: k-part partitions of [n]x[n] from transitive matrices."""
    palette = list(range(n * n))
    return sum(1 for _, _, used in _matrix_search(n, palette, canonical=True) if used == k)


def stirling2(n, k):
    return sum((-1) ** (k - j) * comb(k, j) * j ** n for j in range(k + 1)) // factorial(k)


def falling(x, k):
    r = 1
    for t in range(k):
        r *= x - t
    return r


def bitransitive_count(n):
    """B_n = sum_k S2(n,k) 2^k k!."""
    return sum(stirling2(n, k) * 2 ** k * factorial(k) for k in range(1, n + 1))


def catalan(n):
    return comb(2 * n, n) // (n + 1)


def conj_n_minus_2(n):
    return (n - 2) * comb(2 * n - 3, n) + comb(2 * n - 4, n)


def p_poly_eval(n, x):
    """p_n(x) = sum_k <K_n,k> (x)_k, the number of transitive arrays with x colors."""
    if n == 1:
        return 1
    return sum(stirling_transitive(n, k) * falling(x, k) for k in range(1, n))


def q_poly_coeffs(n):
    """Coefficients (constant term first) of q_n(x) = 2x^n - x + (B_n/2 - 2^n + 1) x(x-1)."""
    b = bitransitive_count(n)
    t = b // 2 - 2 ** n + 1
    coeffs = [0] * (n + 1)
    coeffs[n] += 2
    coeffs[1] += -1 - t
    coeffs[2] += t
    return coeffs


def q_poly_eval(n, x):
    return sum(c * x ** i for i, c in enumerate(q_poly_coeffs(n)))


def p_poly_coeffs(n):
    """Power-basis coefficients of p_n."""
    coeffs = [0] * (n + 1)
    for k in range(1, max(n, 2)):
        s = stirling_transitive(n, k) if n > 1 else (1 if k == 1 else 0)
        poly = [1]
        for t in range(k):
            poly = [0] + poly
            for e in range(len(poly) - 1):
                poly[e] -= t * poly[e + 1]
        for e, v in enumerate(poly):
            coeffs[e] += s * v
    if n == 1:
        coeffs = [1, 0]
    return coeffs


def counting_formulas(n, matrix_level=True):
    if n < 2:
        raise ValueError("n must be at least 2")
    b = bitransitive_count(n)
    row = [stirling_transitive(n, k) for k in range(1, n)]
    rec = {
        "n": n,
        "stirling2_row": [stirling2(n, k) for k in range(1, n + 1)],
        "B_n": b,
        "stirling_transitive_row": row,
        "p_coeffs": p_poly_coeffs(n),
        "q_coeffs": q_poly_coeffs(n),
        "p_at_2_is_factorial": p_poly_eval(n, 2) == factorial(n),
        "q_at_2_is_B": q_poly_eval(n, 2) == b,
        "k2_is_half_factorial_minus_1": stirling_transitive(n, 2) == factorial(n) // 2 - 1,
        "catalan_check": stirling_transitive(n, n - 1) == catalan(n - 1),
        "conj_n_minus_2_value": conj_n_minus_2(n) if n >= 4 else None,
        "conj_n_minus_2_check": (stirling_transitive(n, n - 2) == conj_n_minus_2(n)) if n >= 4 else None,
    }
    if matrix_level:
        ok = True
        for k in range(1, n * n + 1):
            got = stirling_transitive_matrices(n, k)
            want = 1 if k == 1 else (b // 2 - 1 if k == 2 else 2 * stirling2(n, k))
            ok = ok and got == want
        rec["matrix_stirling_check"] = ok
    return rec


def stirling_table_csv(n_max, n_min=2):
    """Rows n, columns k = 1..n_max-1; empty cells where k >= n."""
    lines = ["n," + ",".join("k=%d" % k for k in range(1, n_max))]
    for n in range(n_min, n_max + 1):
        cells = [str(stirling_transitive(n, k)) if k < n else "" for k in range(1, n_max)]
        lines.append("%d," % n + ",".join(cells))
    return "\n".join(lines) + "\n"
