"""Exact scalar domains: rationals, rational functions in q, cyclotomic numbers.

Rationals are plain ``fractions.Fraction``.  The other two domains wrap
python-flint polynomials and keep a canonical form so that equality is
representation equality.
"""

from fractions import Fraction
from functools import lru_cache

import flint

Rational = Fraction


def _ipoly(p):
    return p if isinstance(p, flint.fmpz_poly) else flint.fmpz_poly(p)


class RationalFunctionQ:
    """A reduced fraction num/den of integer polynomials in q."""

    __slots__ = ("num", "den", "_key")

    def __init__(self, num, den=1, _reduced=False):
        num, den = _ipoly(num), _ipoly(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if not _reduced:
            if num.is_zero():
                den = flint.fmpz_poly([1])
            else:
                g = num.gcd(den)
                if not g.is_one():
                    num, _ = divmod(num, g)
                    den, _ = divmod(den, g)
                c = flint.fmpz(num.content()).gcd(den.content())
                if den.leading_coefficient() < 0:
                    c = -c
                if c != 1:
                    num = flint.fmpz_poly([x // c for x in num.coeffs()])
                    den = flint.fmpz_poly([x // c for x in den.coeffs()])
        self.num, self.den = num, den
        self._key = None

    @classmethod
    def q(cls, k=1):
        """The monomial q**k (k may be negative)."""
        if k >= 0:
            return cls(flint.fmpz_poly([0] * k + [1]), 1, True)
        return cls(1, flint.fmpz_poly([0] * (-k) + [1]), True)

    def key(self):
        if self._key is None:
            self._key = (tuple(int(c) for c in self.num.coeffs()),
                         tuple(int(c) for c in self.den.coeffs()))
        return self._key

    def _coerce(self, other):
        if isinstance(other, RationalFunctionQ):
            return other
        if isinstance(other, int):
            return RationalFunctionQ(other, 1, True)
        if isinstance(other, Fraction):
            return RationalFunctionQ(other.numerator, other.denominator)
        raise TypeError("domain mismatch: RationalFunctionQ and %s" % type(other).__name__)

    def __add__(self, other):
        o = self._coerce(other)
        if self.den == o.den:
            return RationalFunctionQ(self.num + o.num, self.den)
        return RationalFunctionQ(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunctionQ(-self.num, self.den, True)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        return RationalFunctionQ(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RationalFunctionQ(self.den, self.num)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        return RationalFunctionQ(self.num ** k, self.den ** k, True)

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self.key() == o.key()

    def __hash__(self):
        return hash(self.key())

    def __bool__(self):
        return not self.num.is_zero()

    def laurent(self):
        """Return (shift, coeffs) with self = q**shift * sum coeffs[i] q**i, or None."""
        d = self.den.coeffs()
        if any(d[:-1]) or abs(d[-1]) != 1:
            return None
        shift = -(len(d) - 1)
        c = [int(x) * int(d[-1]) for x in self.num.coeffs()]
        lo = 0
        while lo < len(c) and c[lo] == 0:
            lo += 1
        return shift + lo, c[lo:]

    def __repr__(self):
        if self.den.is_one():
            return "RationalFunctionQ(%s)" % str(self.num).replace("x", "q")
        return "RationalFunctionQ((%s)/(%s))" % (str(self.num).replace("x", "q"),
                                                  str(self.den).replace("x", "q"))


def qpoly(coeffs, shift=0):
    """Laurent polynomial sum coeffs[i] q**(i+shift) as a RationalFunctionQ."""
    num = flint.fmpz_poly(list(coeffs))
    if shift >= 0:
        return RationalFunctionQ(num * flint.fmpz_poly([0] * shift + [1]))
    return RationalFunctionQ(num, flint.fmpz_poly([0] * (-shift) + [1]))


def _fq(c):
    if isinstance(c, int):
        return c
    c = Fraction(c)
    return flint.fmpq(c.numerator, c.denominator)


@lru_cache(maxsize=None)
def _cyclo_coeffs(N):
    if N < 1:
        raise ValueError("N must be positive")
    p = flint.fmpz_poly([-1] + [0] * (N - 1) + [1])
    for d in range(1, N):
        if N % d == 0:
            p, r = divmod(p, flint.fmpz_poly(list(_cyclo_coeffs(d))))
            assert r.is_zero()
    return tuple(int(c) for c in p.coeffs())


def cyclotomic_poly(N):
    """Phi_N, obtained by dividing x^N - 1 by Phi_d over the proper divisors d."""
    return flint.fmpz_poly(list(_cyclo_coeffs(N)))


@lru_cache(maxsize=None)
def _modulus(N):
    return flint.fmpq_poly(list(_cyclo_coeffs(N)))


class CyclotomicNumber:
    """Element of Q(zeta_N) stored as a residue modulo Phi_N."""

    __slots__ = ("N", "poly", "_key")

    def __init__(self, N, coeffs=(), _reduced=False):
        self.N = N
        p = coeffs if isinstance(coeffs, flint.fmpq_poly) else flint.fmpq_poly(
            [_fq(c) for c in coeffs] or [0])
        if not _reduced:
            mod = _modulus(N)
            if p.degree() >= mod.degree():
                p = p % mod
        self.poly = p
        self._key = None

    @classmethod
    def zeta(cls, N, k=1):
        return cls(N, [0] * (k % N) + [1])

    @property
    def coefficients(self):
        deg = _modulus(self.N).degree()
        c = [Fraction(int(x.p), int(x.q)) for x in self.poly.coeffs()]
        return tuple(c + [Fraction(0)] * (deg - len(c)))

    def key(self):
        if self._key is None:
            self._key = (self.N, tuple((int(x.p), int(x.q)) for x in self.poly.coeffs()))
        return self._key

    def _coerce(self, other):
        if isinstance(other, CyclotomicNumber):
            if other.N != self.N:
                raise TypeError("domain mismatch: Q(zeta_%d) and Q(zeta_%d)" % (self.N, other.N))
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber(self.N, flint.fmpq_poly([_fq(other)]), True)
        raise TypeError("domain mismatch: CyclotomicNumber and %s" % type(other).__name__)

    def __add__(self, other):
        return CyclotomicNumber(self.N, self.poly + self._coerce(other).poly, True)

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.N, -self.poly, True)

    def __sub__(self, other):
        return CyclotomicNumber(self.N, self.poly - self._coerce(other).poly, True)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        return CyclotomicNumber(self.N, self.poly * self._coerce(other).poly)

    __rmul__ = __mul__

    def inverse(self):
        if self.poly.is_zero():
            raise ZeroDivisionError("inverse of zero")
        g, s, _ = self.poly.xgcd(_modulus(self.N))
        return CyclotomicNumber(self.N, s / g)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        r = CyclotomicNumber(self.N, [1])
        b = self
        while k:
            if k & 1:
                r = r * b
            b = b * b
            k >>= 1
        return r

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self.key() == o.key()

    def __hash__(self):
        return hash(self.key())

    def __bool__(self):
        return not self.poly.is_zero()

    def __repr__(self):
        return "CyclotomicNumber(%d, %s)" % (self.N, str(self.poly).replace("x", "z"))


def field_arith(a, b, op):
    """Exact a op b for op in {'add', 'sub', 'mul'}; both operands in one domain."""
    if type(a) is not type(b) and not (isinstance(a, (int, Fraction)) and isinstance(b, (int, Fraction))):
        raise TypeError("domain mismatch: %s and %s" % (type(a).__name__, type(b).__name__))
    if isinstance(a, CyclotomicNumber) and a.N != b.N:
        raise TypeError("domain mismatch: different cyclotomic orders")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError("unknown op %r" % op)


def invert(a):
    if isinstance(a, (int, Fraction)):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)
    return a.inverse()


def evaluate_q(f, v):
    """Substitute q = v (a rational) into f."""
    v = Fraction(v)
    num = sum((Fraction(int(c)) * v ** i for i, c in enumerate(f.num.coeffs())), Fraction(0))
    den = sum((Fraction(int(c)) * v ** i for i, c in enumerate(f.den.coeffs())), Fraction(0))
    if den == 0:
        raise ZeroDivisionError("pole at q = %s" % v)
    return num / den


def is_zero(x):
    return not x
