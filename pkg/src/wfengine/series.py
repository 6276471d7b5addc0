"""Truncated multivariate Laurent series with explicit exactness windows.

Variables carry a fixed order, earlier variables dominating later ones; all
rational factors are expanded in the region where each ratio
(later variable)/(earlier variable) is small.

A Series stores coefficients on a box [lo, hi] (componentwise).  Floors may
be NEG_INF per axis ("exact everywhere on this axis"); a series with all
floors at NEG_INF is entire.  The contract: coefficients are exact on the
whole upper orthant {e >= lo} -- stored inside the box, true zeros above the
ceiling -- and every support point outside the orthant "escapes downward":
it has a witness coordinate j with e[j] < lo[j] and e[i] <= hi[i] for all
i < j.

The escape property is exactly what a nested Laurent expansion in the
declared region satisfies, and it makes the window bookkeeping of sums and
products sound: an unknown term of one factor can never combine with a
stored term of the other factor to land inside the result window.

Coefficients are generic: anything with +, unary -, * and truth testing
(QRat, noncommutative algebra elements, module vectors).
"""

from __future__ import annotations

import itertools

from .qfield import QRat, ONE


class WindowError(ValueError):
    pass


def _cmax(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _cmin(a, b):
    return tuple(min(x, y) for x, y in zip(a, b))


def _cadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


NEG_INF = -(10 ** 9)


def _satadd(a, b):
    # NEG_INF floors are absorbing: "known everywhere below" survives shifts
    return tuple(NEG_INF if (x <= NEG_INF // 2 or y <= NEG_INF // 2)
                 else max(NEG_INF, x + y) for x, y in zip(a, b))


class Series:
    __slots__ = ("names", "terms", "lo", "hi")

    def __init__(self, names, terms, lo=None, hi=None, entire=False):
        self.names = tuple(names)
        n = len(self.names)
        self.terms = {e: c for e, c in terms.items() if c}
        if entire:
            _, hull_hi = self._hull(n)
            self.lo = (NEG_INF,) * n
            self.hi = hull_hi if hi is None else _cmax(tuple(hi), hull_hi)
        else:
            if lo is None or hi is None:
                raise WindowError("windowed series needs explicit lo and hi")
            self.lo, self.hi = tuple(lo), tuple(hi)
            for e in self.terms:
                if not self._inside(e):
                    raise WindowError(f"term {e} outside window {self.lo}..{self.hi}")

    @property
    def entire(self):
        return all(l <= NEG_INF // 2 for l in self.lo)

    def _hull(self, n):
        if not self.terms:
            z = (0,) * n
            return z, z
        es = list(self.terms)
        lo = tuple(min(e[j] for e in es) for j in range(n))
        hi = tuple(max(e[j] for e in es) for j in range(n))
        return lo, hi

    def _inside(self, e):
        return all(l <= x <= h for x, l, h in zip(e, self.lo, self.hi))

    # -------------------------------------------------------- constructors

    @staticmethod
    def zero(names, lo=None, hi=None):
        if lo is None:
            return Series(names, {}, entire=True)
        return Series(names, {}, lo, hi)

    @staticmethod
    def monomial(names, exp, coeff):
        return Series(names, {tuple(exp): coeff}, entire=True)

    @staticmethod
    def from_poly(names, terms):
        """Entire series from a finite exponent->coefficient map."""
        return Series(names, dict(terms), entire=True)

    @staticmethod
    def from_box(names, lo, hi, coeff_fn):
        """Windowed series whose box coefficients come from coeff_fn(exp).

        The caller asserts that the underlying series is a nested Laurent
        series in the declared region (the escape property above).
        """
        lo, hi = tuple(lo), tuple(hi)
        terms = {}
        ranges = [range(l, h + 1) for l, h in zip(lo, hi)]
        for e in itertools.product(*ranges):
            c = coeff_fn(e)
            if c:
                terms[e] = c
        return Series(names, terms, lo, hi)

    @staticmethod
    def from_ray(names, base, step, coeff_fn, lo, hi, kstart=0):
        """Series sum_{k>=kstart} coeff_fn(k) * x^(base + k*step).

        step must be lex-negative for the declared variable order.  Terms are
        kept until the ray's leading coordinate falls below lo; the window is
        stretched upward so that dropped terms escape legitimately.
        """
        base, step = tuple(base), tuple(step)
        jstar = next((j for j, s in enumerate(step) if s), None)
        if jstar is None or step[jstar] > 0:
            raise WindowError(f"ray step {step} is not lex-negative")
        lo, hi = tuple(lo), tuple(hi)
        terms = {}
        k = kstart
        while base[jstar] + k * step[jstar] >= lo[jstar]:
            c = coeff_fn(k)
            if c:
                terms[_cadd(base, tuple(k * s for s in step))] = c
            k += 1
        # tight ceiling (the ray's own hull); the floor binds only on the
        # leading axis of the step, elsewhere the ray is exact everywhere
        hull_hi = base
        for e in terms:
            hull_hi = _cmax(hull_hi, e)
        w_lo = [NEG_INF] * len(names)
        w_lo[jstar] = min(lo[jstar], base[jstar])
        for e in terms:
            w_lo[jstar] = min(w_lo[jstar], e[jstar])
        return Series(names, terms, tuple(w_lo), hull_hi)

    # ------------------------------------------------------------- algebra

    def _check_names(self, other):
        if self.names != other.names:
            raise WindowError(f"variable mismatch {self.names} vs {other.names}")

    def __neg__(self):
        return Series(self.names, {e: -c for e, c in self.terms.items()},
                      self.lo, self.hi)

    def __add__(self, other):
        self._check_names(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms[e] + c if e in terms else c
        lo = _cmax(self.lo, other.lo)
        hi = _cmax(self.hi, other.hi)
        terms = {e: c for e, c in terms.items()
                 if all(x >= l for x, l in zip(e, lo))}
        return Series(self.names, terms, lo, hi)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Series):
            return self.scale(other)
        self._check_names(other)
        hi = _cadd(self.hi, other.hi)
        lo = _cmax(_satadd(self.lo, other.hi), _satadd(other.lo, self.hi))
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = _cadd(e1, e2)
                if any(x < l for x, l in zip(e, lo)):
                    continue
                c = c1 * c2
                if e in terms:
                    terms[e] = terms[e] + c
                else:
                    terms[e] = c
        return Series(self.names, terms, lo, hi)

    def scale(self, coeff):
        return Series(self.names, {e: coeff * c for e, c in self.terms.items()},
                      self.lo, self.hi)

    def scale_right(self, coeff):
        return Series(self.names, {e: c * coeff for e, c in self.terms.items()},
                      self.lo, self.hi)

    def map_coeffs(self, fn):
        return Series(self.names, {e: fn(c) for e, c in self.terms.items()},
                      self.lo, self.hi)

    def truncate_lo(self, new_lo):
        """Raise the window floor (soundly forgets coefficients below it)."""
        new_lo = _cmax(tuple(new_lo), self.lo)
        terms = {e: c for e, c in self.terms.items()
                 if all(x >= l for x, l in zip(e, new_lo))}
        return Series(self.names, terms, new_lo, self.hi)

    # -------------------------------------------------------------- access

    def knows(self, e):
        """Exact at e iff e lies in the upper orthant at the floor: inside
        the box the coefficient is stored, above the ceiling it is a true
        zero of the underlying series."""
        return all(x >= l for x, l in zip(tuple(e), self.lo))

    def coeff(self, e, zero=None):
        e = tuple(e)
        if not self.knows(e):
            raise WindowError(f"coefficient at {e} is outside the exact region")
        return self.terms.get(e, zero)

    def box_coeffs(self, lo, hi):
        lo, hi = tuple(lo), tuple(hi)
        if not all(a >= b for a, b in zip(lo, self.lo)):
            raise WindowError(
                f"requested box floor {lo} below exact region floor {self.lo}")
        out = {}
        for e, c in self.terms.items():
            if all(l <= x <= h for x, l, h in zip(e, lo, hi)):
                out[e] = c
        return out

    def common_box(self, other):
        lo = _cmax(self.lo, other.lo)
        hi = _cmin(self.hi, other.hi)
        if any(l > h for l, h in zip(lo, hi)):
            raise WindowError("empty common window")
        return lo, hi

    def nonzero_hull(self):
        if not self.terms:
            return None
        return self._hull(len(self.names))

    # ---------------------------------------------------------- reshaping

    def reorder(self, new_names):
        """Permute the variable axes.  This is raw bookkeeping: the result's
        window semantics refer to the new region order, which is only sound
        when the series is known to be a power series on the compared box."""
        perm = [self.names.index(n) for n in new_names]
        pick = lambda t: tuple(t[i] for i in perm)
        return Series(new_names, {pick(e): c for e, c in self.terms.items()},
                      pick(self.lo), pick(self.hi))

    def lift(self, names, window=None):
        """Embed into a larger variable set; new axes get exponent zero."""
        pos = {n: i for i, n in enumerate(names)}
        idx = [pos[n] for n in self.names]

        def emb(t, fill):
            out = list(fill)
            for i, v in zip(idx, t):
                out[i] = v
            return tuple(out)

        if window is None:
            lo = emb(self.lo, [NEG_INF] * len(names))
            hi = emb(self.hi, [0] * len(names))
        else:
            lo = emb(self.lo, list(window[0]))
            hi = emb(self.hi, list(window[1]))
        zeros = [0] * len(names)
        terms = {emb(e, zeros): c for e, c in self.terms.items()}
        return Series(names, terms, lo, hi)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return (self.names == other.names and self.terms == other.terms
                and self.lo == other.lo and self.hi == other.hi)

    def __repr__(self):
        kind = "entire" if self.entire else f"{self.lo}..{self.hi}"
        return f"Series({','.join(self.names)}; {len(self.terms)} terms; {kind})"


def compare_on_common_box(a: Series, b: Series):
    """Exact coefficient comparison wherever both series are exact.

    Returns (lo, hi, mismatches) where mismatches maps exponents to the two
    differing coefficients."""
    lo, hi = a.common_box(b)
    ca = a.box_coeffs(lo, hi)
    cb = b.box_coeffs(lo, hi)
    bad = {}
    for e in set(ca) | set(cb):
        x, y = ca.get(e), cb.get(e)
        if x is None or y is None:
            if (x or y):
                bad[e] = (x, y)
        elif x != y:
            bad[e] = (x, y)
    return lo, hi, bad


# ------------------------------------------------------- rational expansion

def _binomial_inverse(names, factor, lo, hi):
    """Ray expansion of 1/(c_L x^L + c_S x^S) with x^L lex-dominant."""
    (e1, c1), (e2, c2) = factor.items()
    if e1 > e2:  # tuple comparison is exactly the lex region order
        L, cL, S, cS = e1, c1, e2, c2
    else:
        L, cL, S, cS = e2, c2, e1, c1
    step = tuple(s - l for s, l in zip(S, L))
    base = tuple(-x for x in L)
    ratio = -cS / cL
    inv = cL.inverse()
    return Series.from_ray(names, base, step,
                           lambda k: inv * ratio ** k, lo, hi)


def expand_rational(names, numer, denom_factors, lo, hi, max_rounds=None):
    """Expand numer / prod(denom_factors) in the declared region.

    numer: exponent->QRat map (a finite Laurent polynomial).
    denom_factors: list of exponent->QRat maps, each with one or two terms
    (every denominator in this engine arrives as a product of binomials).
    The result window contains the requested box or a WindowError is raised.
    """
    names = tuple(names)
    n = len(names)
    lo, hi = tuple(lo), tuple(hi)
    numer = {tuple(e): c for e, c in numer.items() if c}
    if not numer:
        return Series.zero(names, lo, hi)
    mono_shift = (0,) * n
    mono_coeff = ONE
    binoms = []
    for f in denom_factors:
        f = {tuple(e): c for e, c in f.items() if c}
        if not f:
            raise ZeroDivisionError("zero factor in denominator")
        if len(f) == 1:
            (e, c), = f.items()
            mono_shift = _cadd(mono_shift, tuple(-x for x in e))
            mono_coeff = mono_coeff * c.inverse()
        elif len(f) == 2:
            binoms.append(f)
        else:
            raise WindowError(
                "denominator factors with more than two terms are not supported")
    num_series = Series.from_poly(
        names, {_cadd(e, mono_shift): mono_coeff * c for e, c in numer.items()})
    if not binoms:
        return num_series
    if max_rounds is None:
        max_rounds = n + 3
    # request boxes for each ray, widened until the product window covers
    # the requested box; stabilizes because a ray can only raise a
    # coordinate by first lowering an earlier one
    req_lo = [lo] * len(binoms)
    prev = None
    for _ in range(max_rounds):
        rays = [_binomial_inverse(names, f, rl, hi)
                for f, rl in zip(binoms, req_lo)]
        hulls = [r.nonzero_hull() or (r.lo, r.hi) for r in rays]
        nh = num_series.nonzero_hull()[1]
        new_req = []
        for i in range(len(binoms)):
            tot = nh
            for j, h in enumerate(hulls):
                if j != i:
                    tot = _cadd(tot, h[1])
            new_req.append(tuple(l - t for l, t in zip(lo, tot)))
        if new_req == prev:
            break
        prev = req_lo = new_req
    rays = [_binomial_inverse(names, f, rl, hi) for f, rl in zip(binoms, req_lo)]
    out = num_series
    for r in rays:
        out = out * r
    if any(a > b for a, b in zip(out.lo, lo)):
        raise WindowError(
            f"expansion window {out.lo} does not reach requested floor {lo}")
    return out
