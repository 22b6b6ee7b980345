"""Laurent polynomials in q with exact rational coefficients.

Everything here is exact; no floating point. RatFunc exists only as a
controlled intermediate (norm denominators and the like) and converts back
to LaurentPoly when the division is exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

from .errors import ExactDivisionError, NotAPerfectSquareError


class LaurentPoly:
    """Sparse Laurent polynomial: dict exponent -> nonzero Fraction."""

    __slots__ = ("_t", "_hash")

    def __init__(self, terms=None):
        t = {}
        if terms:
            for e, c in terms.items():
                c = Fraction(c)
                if c:
                    t[int(e)] = c
        self._t = t
        self._hash = None

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero() -> "LaurentPoly":
        return _ZERO

    @staticmethod
    def one() -> "LaurentPoly":
        return _ONE

    @staticmethod
    def q(exp: int = 1, coeff=1) -> "LaurentPoly":
        return LaurentPoly({exp: Fraction(coeff)})

    @staticmethod
    def const(c) -> "LaurentPoly":
        return LaurentPoly({0: Fraction(c)})

    @staticmethod
    def coerce(x) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, (int, Fraction)):
            return LaurentPoly.const(x)
        raise TypeError(f"cannot coerce {x!r} to LaurentPoly")

    # -- structure ------------------------------------------------------

    def items(self):
        return self._t.items()

    def __bool__(self):
        return bool(self._t)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._t == other._t

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    def min_exp(self) -> int:
        if not self._t:
            raise ValueError("zero polynomial has no exponents")
        return min(self._t)

    def max_exp(self) -> int:
        if not self._t:
            raise ValueError("zero polynomial has no exponents")
        return max(self._t)

    def coeff(self, e: int) -> Fraction:
        return self._t.get(e, Fraction(0))

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other):
        other = LaurentPoly.coerce(other)
        t = dict(self._t)
        for e, c in other._t.items():
            s = t.get(e, Fraction(0)) + c
            if s:
                t[e] = s
            else:
                t.pop(e, None)
        out = LaurentPoly.__new__(LaurentPoly)
        out._t = t
        out._hash = None
        return out

    __radd__ = __add__

    def __neg__(self):
        out = LaurentPoly.__new__(LaurentPoly)
        out._t = {e: -c for e, c in self._t.items()}
        out._hash = None
        return out

    def __sub__(self, other):
        return self + (-LaurentPoly.coerce(other))

    def __rsub__(self, other):
        return LaurentPoly.coerce(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return _ZERO
            out = LaurentPoly.__new__(LaurentPoly)
            out._t = {e: c * other for e, c in self._t.items()}
            out._hash = None
            return out
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        t = {}
        for e1, c1 in self._t.items():
            for e2, c2 in other._t.items():
                e = e1 + e2
                s = t.get(e, Fraction(0)) + c1 * c2
                if s:
                    t[e] = s
                else:
                    t.pop(e, None)
        out = LaurentPoly.__new__(LaurentPoly)
        out._t = t
        out._hash = None
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not Laurent-closed here")
        out = _ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shifted(self, n: int) -> "LaurentPoly":
        out = LaurentPoly.__new__(LaurentPoly)
        out._t = {e + n: c for e, c in self._t.items()}
        out._hash = None
        return out

    def bar(self) -> "LaurentPoly":
        """Substitute q -> q^{-1}."""
        out = LaurentPoly.__new__(LaurentPoly)
        out._t = {-e: c for e, c in self._t.items()}
        out._hash = None
        return out

    def at_one(self) -> Fraction:
        return sum(self._t.values(), Fraction(0))

    def divexact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact division; raises ExactDivisionError with the remainder."""
        other = LaurentPoly.coerce(other)
        if not other:
            raise ZeroDivisionError("division by zero LaurentPoly")
        if not self:
            return _ZERO
        # An exact quotient has min exponent exactly this; going below it
        # means the division is inexact (Laurent descent never terminates).
        bound = self.min_exp() - other.min_exp()
        rem = dict(self._t)
        dmax = other.max_exp()
        dlead = other._t[dmax]
        quot = {}
        while rem:
            rmax = max(rem)
            e = rmax - dmax
            if e < bound:
                raise ExactDivisionError("non-exact Laurent division", LaurentPoly(rem))
            c = rem[rmax] / dlead
            quot[e] = c
            for e2, c2 in other._t.items():
                k = e2 + e
                s = rem.get(k, Fraction(0)) - c * c2
                if s:
                    rem[k] = s
                else:
                    rem.pop(k, None)
        return LaurentPoly(quot)

    def is_nonnegative_integral(self) -> bool:
        return all(c.denominator == 1 and c >= 0 for c in self._t.values())

    # -- rendering ------------------------------------------------------

    def render(self) -> str:
        """Human form, highest exponent first: ``q^2 + 1 + q^-2``."""
        if not self._t:
            return "0"
        chunks = []
        for e in sorted(self._t, reverse=True):
            c = self._t[e]
            neg = c < 0
            c = abs(c)
            if e == 0:
                body = str(c)
            else:
                qpart = "q" if e == 1 else f"q^{e}"
                body = qpart if c == 1 else f"{c}*{qpart}"
            if not chunks:
                chunks.append(("-" if neg else "") + body)
            else:
                chunks.append(("- " if neg else "+ ") + body)
        return " ".join(chunks)

    def structured(self) -> list:
        """[exponent, numerator, denominator] triples, ascending exponent."""
        return [[e, self._t[e].numerator, self._t[e].denominator] for e in sorted(self._t)]

    def __repr__(self):
        return f"LaurentPoly({self.render()})"


_ZERO = LaurentPoly()
_ONE = LaurentPoly({0: Fraction(1)})


def q_int(k: int, d: int = 1) -> LaurentPoly:
    """Balanced q-integer [k] with q -> q^d: q^{d(k-1)} + q^{d(k-3)} + ..."""
    if k < 0:
        raise ValueError("q_int requires k >= 0")
    return LaurentPoly({d * (k - 1 - 2 * j): Fraction(1) for j in range(k)})


def q_factorial(k: int, d: int = 1) -> LaurentPoly:
    if k < 0:
        raise ValueError("q_factorial requires k >= 0")
    out = _ONE
    for j in range(2, k + 1):
        out = out * q_int(j, d)
    return out


def q_binom(m: int, k: int, d: int = 1) -> LaurentPoly:
    if not 0 <= k <= m:
        raise ValueError("q_binom requires 0 <= k <= m")
    num = q_factorial(m, d)
    den = q_factorial(k, d) * q_factorial(m - k, d)
    return num.divexact(den)


def bar(p: LaurentPoly) -> LaurentPoly:
    return p.bar()


def _sqrt_fraction(c: Fraction):
    if c < 0:
        return None
    n, d = c.numerator, c.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn != n or rd * rd != d:
        return None
    return Fraction(rn, rd)


def laurent_sqrt(p: LaurentPoly) -> LaurentPoly:
    """The square root of a perfect square, normalized positive at q = 1.

    Solves coefficients from the top exponent down and verifies by squaring;
    failure raises NotAPerfectSquareError carrying the residual witness.
    """
    if not p:
        return _ZERO
    hi, lo = p.max_exp(), p.min_exp()
    if (hi - lo) % 2 or hi % 2:
        raise NotAPerfectSquareError("odd exponent spread", witness=p)
    lead = _sqrt_fraction(p.coeff(hi))
    if lead is None:
        raise NotAPerfectSquareError("leading coefficient is not a square", witness=p)
    half = (hi - lo) // 2
    root = {hi // 2: lead}
    for k in range(1, half + 1):
        e = hi // 2 - k
        acc = Fraction(0)
        for j in range(1, k):
            acc += root.get(hi // 2 - j, Fraction(0)) * root.get(e + j, Fraction(0))
        root[e] = (p.coeff(hi - k) - acc) / (2 * lead)
    r = LaurentPoly(root)
    rem = p - r * r
    if rem:
        raise NotAPerfectSquareError("residual after square", witness=rem)
    sign = r.at_one()
    if sign < 0 or (sign == 0 and r.coeff(r.min_exp()) < 0):
        r = -r
    return r


def _laurent_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Monic gcd (up to q-power) via Euclid on shifted polynomials."""
    if not a:
        return b
    if not b:
        return a
    a = a.shifted(-a.min_exp())
    b = b.shifted(-b.min_exp())
    while b:
        # remainder of a by b in plain polynomial division
        r = dict(a._t)
        dmax = b.max_exp()
        dlead = b._t[dmax]
        while r and max(r) >= dmax:
            rmax = max(r)
            c = r[rmax] / dlead
            for e2, c2 in b._t.items():
                k = e2 + rmax - dmax
                s = r.get(k, Fraction(0)) - c * c2
                if s:
                    r[k] = s
                else:
                    r.pop(k, None)
        a, b = b, LaurentPoly(r)
        if b:
            b = b.shifted(-b.min_exp())
    lead = a._t[a.max_exp()]
    return a * (1 / lead)


class RatFunc:
    """Quotient of Laurent polynomials, canonicalized by gcd reduction."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = LaurentPoly.coerce(num)
        den = _ONE if den is None else LaurentPoly.coerce(den)
        if not den:
            raise ZeroDivisionError("RatFunc with zero denominator")
        if not num:
            self.num, self.den = _ZERO, _ONE
            return
        g = _laurent_gcd(num, den)
        num = num.divexact(g)
        den = den.divexact(g)
        shift = den.min_exp()
        den = den.shifted(-shift)
        num = num.shifted(-shift)
        lead = den._t[den.max_exp()]
        self.num = num * (1 / lead)
        self.den = den * (1 / lead)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, LaurentPoly)):
            other = RatFunc(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __mul__(self, other):
        if isinstance(other, RatFunc):
            return RatFunc(self.num * other.num, self.den * other.den)
        return RatFunc(self.num * LaurentPoly.coerce(other), self.den)

    __rmul__ = __mul__

    def __add__(self, other):
        if not isinstance(other, RatFunc):
            other = RatFunc(other)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other):
        if not isinstance(other, RatFunc):
            other = RatFunc(other)
        return RatFunc(self.num * other.den - other.num * self.den, self.den * other.den)

    def __truediv__(self, other):
        if not isinstance(other, RatFunc):
            other = RatFunc(other)
        return RatFunc(self.num * other.den, self.den * other.num)

    def inverse(self) -> "RatFunc":
        return RatFunc(self.den, self.num)

    def to_laurent(self) -> LaurentPoly:
        return self.num.divexact(self.den)

    def __repr__(self):
        if self.den == _ONE:
            return f"RatFunc({self.num.render()})"
        return f"RatFunc(({self.num.render()}) / ({self.den.render()}))"


def brace_factorial(a: int, b: int) -> RatFunc:
    """prod_{j=1..a} (1 - q^{jb}) / (1 - q^b)."""
    if a < 0 or b < 1:
        raise ValueError("brace_factorial requires a >= 0, b >= 1")
    num = _ONE
    den = _ONE
    one_minus_qb = _ONE - LaurentPoly.q(b)
    for j in range(1, a + 1):
        num = num * (_ONE - LaurentPoly.q(j * b))
        den = den * one_minus_qb
    return RatFunc(num, den)
