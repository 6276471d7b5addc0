"""Exact arithmetic in the field of rational functions of one deformation
parameter q, represented as reduced ratios of integer Laurent polynomials.

Every QRat is kept in a canonical form:
  * numerator and denominator have no common polynomial factor,
  * the denominator is an honest polynomial with nonzero constant term
    (any q-power is moved into the numerator's offset),
  * the denominator's leading coefficient is positive.
Equal values therefore have equal representations, so dict/hash use is safe.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _igcd
import re


def _trim(off, cs):
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    k = 0
    while k < len(cs) and cs[k] == 0:
        k += 1
    if k:
        cs = cs[k:]
        off += k
    if not cs:
        return 0, ()
    return off, tuple(cs)


class LPoly:
    """Integer Laurent polynomial in q: sum(cs[i] * q**(off+i))."""

    __slots__ = ("off", "cs")

    def __init__(self, off=0, cs=()):
        self.off, self.cs = _trim(off, cs)

    @staticmethod
    def const(n):
        return LPoly(0, (n,))

    @staticmethod
    def qpow(k, c=1):
        return LPoly(k, (c,))

    def is_zero(self):
        return not self.cs

    def __bool__(self):
        return bool(self.cs)

    def __eq__(self, other):
        return self.off == other.off and self.cs == other.cs

    def __hash__(self):
        return hash((self.off, self.cs))

    def __neg__(self):
        return LPoly(self.off, tuple(-c for c in self.cs))

    def __add__(self, other):
        if not self.cs:
            return other
        if not other.cs:
            return self
        off = min(self.off, other.off)
        top = max(self.off + len(self.cs), other.off + len(other.cs))
        cs = [0] * (top - off)
        for i, c in enumerate(self.cs):
            cs[self.off - off + i] += c
        for i, c in enumerate(other.cs):
            cs[other.off - off + i] += c
        return LPoly(off, cs)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not self.cs or not other.cs:
            return LPoly()
        cs = [0] * (len(self.cs) + len(other.cs) - 1)
        for i, a in enumerate(self.cs):
            if a:
                for j, b in enumerate(other.cs):
                    cs[i + j] += a * b
        return LPoly(self.off + other.off, cs)

    def shift(self, k):
        return LPoly(self.off + k, self.cs)

    def content(self):
        g = 0
        for c in self.cs:
            g = _igcd(g, abs(c))
        return g

    def degree(self):
        if not self.cs:
            raise ValueError("degree of zero")
        return self.off + len(self.cs) - 1

    def eval_at(self, x):
        """Value at q = x (x a Fraction)."""
        acc = Fraction(0)
        for c in reversed(self.cs):
            acc = acc * x + c
        return acc * x ** self.off

    def __repr__(self):
        return f"LPoly({lpoly_to_str(self)})"


def _frac_divmod(a, b):
    # a, b ascending Fraction coefficient lists, b nonzero trailing
    a = list(a)
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] / b[-1]
        q[i] = c
        if c:
            for j, bc in enumerate(b):
                a[i + j] -= c * bc
    while a and a[-1] == 0:
        a.pop()
    return q, a


def _poly_gcd_lists(a, b):
    # gcd of integer coefficient lists (ascending), result primitive with
    # positive leading coefficient, via Fraction Euclid then rescale
    fa = [Fraction(c) for c in a]
    fb = [Fraction(c) for c in b]
    while fb:
        _, r = _frac_divmod(fa, fb)
        fa, fb = fb, r
    # rescale fa to primitive integers
    den = 1
    for c in fa:
        den = den * c.denominator // _igcd(den, c.denominator)
    ints = [int(c * den) for c in fa]
    g = 0
    for c in ints:
        g = _igcd(g, abs(c))
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return ints


def lp_gcd(a: LPoly, b: LPoly) -> LPoly:
    """gcd including integer content, ignoring q-power offsets."""
    if not a.cs:
        return LPoly(0, tuple(b.cs))
    if not b.cs:
        return LPoly(0, tuple(a.cs))
    prim = _poly_gcd_lists(a.cs, b.cs)
    c = _igcd(a.content(), b.content())
    gp = 0
    for x in prim:
        gp = _igcd(gp, abs(x))
    return LPoly(0, tuple(x // gp * c for x in prim))


def lp_divexact(a: LPoly, b: LPoly) -> LPoly:
    if not a.cs:
        return LPoly()
    fa = [Fraction(c) for c in a.cs]
    fb = [Fraction(c) for c in b.cs]
    q, r = _frac_divmod(fa, fb)
    if r:
        raise ValueError("inexact polynomial division")
    out = []
    for c in q:
        if c.denominator != 1:
            raise ValueError("inexact polynomial division")
        out.append(int(c))
    return LPoly(a.off - b.off, out)


class QRat:
    """Canonical rational function in q over the integers."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: LPoly, den: LPoly, _reduced=False):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator in QRat")
        if not _reduced:
            if num.is_zero():
                num, den = LPoly(), LPoly.const(1)
            else:
                g = lp_gcd(num, den)
                num = lp_divexact(num, g)
                den = lp_divexact(den, g)
                num = num.shift(-den.off)
                den = den.shift(-den.off)
                if den.cs[-1] < 0:
                    num, den = -num, -den
        self.num = num
        self.den = den
        self._hash = hash((num.off, num.cs, den.cs))

    @staticmethod
    def from_int(n):
        return QRat(LPoly.const(n), LPoly.const(1))

    @staticmethod
    def q_power(k, c=1):
        if c == 0:
            return QRat.from_int(0)
        return QRat(LPoly.qpow(k, c), LPoly.const(1), _reduced=True)

    def is_zero(self):
        return self.num.is_zero()

    def is_one(self):
        return self.num.cs == (1,) and self.num.off == 0 and self.den.cs == (1,)

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        if isinstance(other, int):
            other = QRat.from_int(other)
        if not isinstance(other, QRat):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return self._hash

    def __neg__(self):
        return QRat(-self.num, self.den, _reduced=True)

    def _coerce(self, other):
        if isinstance(other, int):
            return QRat.from_int(other)
        if isinstance(other, QRat):
            return other
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return QRat(self.num + o.num, self.den)
        return QRat(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QRat(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.num.is_zero():
            raise ZeroDivisionError("QRat division by zero")
        return QRat(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def inverse(self):
        return QRat.from_int(1) / self

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def subs_q(self, x) -> Fraction:
        """Substitute a rational value for q; raises if that value is a pole."""
        x = Fraction(x)
        if x == 0:
            raise ZeroDivisionError("q = 0 is never admissible")
        d = self.den.eval_at(x)
        if d == 0:
            raise ZeroDivisionError(f"q = {x} is a pole")
        return self.num.eval_at(x) / d

    def __repr__(self):
        return qrat_to_str(self)


ZERO = QRat.from_int(0)
ONE = QRat.from_int(1)
Q = QRat.q_power(1)
QINV = QRat.q_power(-1)


def qnum(k):
    """The balanced q-integer (q^k - q^-k)/(q - q^-1)."""
    num = LPoly.qpow(k) - LPoly.qpow(-k)
    den = LPoly.qpow(1) - LPoly.qpow(-1)
    return QRat(num, den)


# ---------------------------------------------------------------- text form

def lpoly_to_str(p: LPoly) -> str:
    if not p.cs:
        return "0"
    parts = []
    for i, c in enumerate(p.cs):
        if c == 0:
            continue
        e = p.off + i
        if e == 0:
            mono = str(abs(c))
        else:
            base = "q" if e == 1 else f"q^{e}"
            mono = base if abs(c) == 1 else f"{abs(c)}*{base}"
        if not parts:
            parts.append(("-" if c < 0 else "") + mono)
        else:
            parts.append((" - " if c < 0 else " + ") + mono)
    return "".join(parts)


def qrat_to_str(r: QRat) -> str:
    ns = lpoly_to_str(r.num)
    if r.den.cs == (1,):
        return ns
    return f"({ns})/({lpoly_to_str(r.den)})"


_MONO_RE = re.compile(
    r"^(?P<s>[+-])?(?P<c>\d+)?\*?(?P<q>q(?:\^(?P<e>-?\d+))?)?$")


def lpoly_from_str(s: str) -> LPoly:
    s = s.strip()
    if s == "0":
        return LPoly()
    chunks = re.split(r"(?<!\^)(?=[+-])", s.replace(" ", ""))
    out = LPoly()
    for ch in chunks:
        if not ch:
            continue
        if ch in "+-":
            raise ValueError(f"bad polynomial text: {s!r}")
        m = _MONO_RE.match(ch)
        if not m or (m.group("c") is None and m.group("q") is None):
            raise ValueError(f"bad monomial: {ch!r}")
        coeff = int(m.group("c")) if m.group("c") is not None else 1
        if m.group("s") == "-":
            coeff = -coeff
        if m.group("q") is not None:
            e = int(m.group("e")) if m.group("e") is not None else 1
        else:
            e = 0
        out = out + LPoly.qpow(e, coeff)
    return out


def qrat_from_str(s: str) -> QRat:
    s = s.strip()
    if s.startswith("(") and ")/(" in s and s.endswith(")"):
        ns, ds = s[1:-1].split(")/(")
        return QRat(lpoly_from_str(ns), lpoly_from_str(ds))
    return QRat(lpoly_from_str(s), LPoly.const(1))
