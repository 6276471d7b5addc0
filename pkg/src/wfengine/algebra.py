"""The lowering half of the rank-one quantum loop algebra, presented by
generating-current relations, as a free module on words.

Generators: f[n] for n in Z, psi[n] for n >= 0 (the nonnegative modes of the
diagonal current; psi[0] is invertible but only its nonnegative powers occur
here).  A word is a tuple of ('f', n) / ('p', n) letters; elements are
finite QRat-linear combinations of words.

Canonical form: all f letters first, modes ascending, then all psi letters,
modes ascending.  The rewriting rules implement the exchange relations

  (z - q^-2 w) f(z) f(w) = (q^-2 z - w) f(w) f(z)
  psi(z) f(w) = (q^-2 - w/z)/(1 - q^-2 w/z) f(w) psi(z)

in mode form.  Adjacent descending f pairs straighten by a closed recursion
that shrinks the mode gap by two:

  f[b+1] f[b] = q^-2 f[b] f[b+1]
  f[a] f[b]   = q^-2 f[b] f[a] + q^-2 f[a-1] f[b+1] - f[b+1] f[a-1]  (a > b+1)
"""

from __future__ import annotations

import re
from functools import lru_cache

from .qfield import QRat, ZERO, ONE, QRat as _QR

QM2 = QRat.q_power(-2)
QP2 = QRat.q_power(2)


class RewriteLimit(RuntimeError):
    pass


MAX_REWRITE_STEPS = 10 ** 6


def f(n):
    return ("f", n)


def psi(n):
    if n < 0:
        raise ValueError("psi modes are nonnegative")
    return ("p", n)


def word_text(word):
    return " ".join(("f" if k == "f" else "psi") + f"[{n}]" for k, n in word)


_LETTER_RE = re.compile(r"^(f|psi)\[(-?\d+)\]$")


def word_from_text(s):
    out = []
    for tok in s.split():
        m = _LETTER_RE.match(tok)
        if not m:
            raise ValueError(f"bad letter {tok!r}")
        kind = "f" if m.group(1) == "f" else "p"
        n = int(m.group(2))
        if kind == "p" and n < 0:
            raise ValueError("psi modes are nonnegative")
        out.append((kind, n))
    return tuple(out)


class Elt:
    """Linear combination of words.  Multiplication is concatenation; use
    canonical() to straighten."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for w, c in terms.items():
                if c:
                    self.terms[tuple(w)] = c

    @staticmethod
    def unit(coeff=ONE):
        return Elt({(): coeff})

    @staticmethod
    def word(*letters):
        return Elt({tuple(letters): ONE})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, Elt):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __neg__(self):
        return Elt({w: -c for w, c in self.terms.items()})

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w)
            out[w] = c if s is None else s + c
        return Elt(out)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (QRat, int)):
            return self.scale(other)
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                c = c1 * c2
                s = out.get(w)
                out[w] = c if s is None else s + c
        return Elt(out)

    def __rmul__(self, other):
        if isinstance(other, (QRat, int)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c):
        return Elt({w: c * x for w, x in self.terms.items()})

    def map_coeffs(self, fn):
        return Elt({w: fn(c) for w, c in self.terms.items()})

    def canonical(self):
        out = {}
        steps = 0
        for w, c in self.terms.items():
            for w2, c2 in straighten_word(w).terms.items():
                s = out.get(w2)
                out[w2] = c * c2 if s is None else s + c * c2
            steps += 1
        return Elt(out)

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for w in sorted(self.terms):
            c = self.terms[w]
            wt = word_text(w) if w else "1"
            bits.append(f"({c!r})*{wt}")
        return " + ".join(bits)


# ----------------------------------------------------------- straightening

@lru_cache(maxsize=None)
def _ff_pair(a, b):
    """Straightened form of f[a] f[b] for a > b, as a word->coeff dict."""
    if a == b + 1:
        return {(f(b), f(a)): QM2}
    out = {(f(b), f(a)): QM2}
    mid_hi, mid_lo = a - 1, b + 1
    if mid_hi == mid_lo:
        w = (f(mid_lo), f(mid_hi))
        out[w] = out.get(w, ZERO) + (QM2 - ONE)
    else:
        for w, c in _ff_pair(mid_hi, mid_lo).items():
            out[w] = out.get(w, ZERO) + QM2 * c
        w = (f(mid_lo), f(mid_hi))
        out[w] = out.get(w, ZERO) - ONE
    return {w: c for w, c in out.items() if c}


@lru_cache(maxsize=None)
def _pf_pair(m, n):
    """Straightened form of psi[m] f[n]."""
    out = {(f(n), psi(m)): QM2}
    fac = QM2 - QP2
    for k in range(1, m + 1):
        out[(f(n + k), psi(m - k))] = fac * QRat.q_power(-2 * k)
    return out


def _violation(word):
    for i in range(len(word) - 1):
        (k1, n1), (k2, n2) = word[i], word[i + 1]
        if k1 == "f" and k2 == "f" and n1 > n2:
            return i
        if k1 == "p" and k2 == "f":
            return i
        if k1 == "p" and k2 == "p" and n1 > n2:
            return i
    return None


_straighten_cache = {}


def straighten_word(word, max_steps=MAX_REWRITE_STEPS):
    """Canonical (separated, sorted) form of a single word."""
    word = tuple(word)
    hit = _straighten_cache.get(word)
    if hit is not None:
        return hit
    pending = {word: ONE}
    done = {}
    steps = 0
    while pending:
        w, c = pending.popitem()
        i = _violation(w)
        if i is None:
            s = done.get(w)
            done[w] = c if s is None else s + c
            continue
        steps += 1
        if steps > max_steps:
            raise RewriteLimit(f"straightening exceeded {max_steps} steps")
        (k1, n1), (k2, n2) = w[i], w[i + 1]
        if k1 == "f":
            repl = _ff_pair(n1, n2)
        elif k2 == "f":
            repl = _pf_pair(n1, n2)
        else:
            repl = {(psi(n2), psi(n1)): ONE}
        pre, post = w[:i], w[i + 2:]
        for mid, rc in repl.items():
            nw = pre + mid + post
            nc = c * rc
            s = pending.get(nw)
            pending[nw] = nc if s is None else s + nc
        pending = {k: v for k, v in pending.items() if v}
    out = Elt(done)
    _straighten_cache[word] = out
    return out


def is_canonical_word(word):
    return _violation(word) is None


# -------------------------------------------------- structure maps

def counit(el: Elt) -> QRat:
    """Multiplicative counit: 1 on psi[0], 0 on every f[n] and psi[n>0]."""
    total = ZERO
    for w, c in el.terms.items():
        if all(k == "p" and n == 0 for k, n in w):
            total = total + c
        # any other letter contributes factor 0
    return total


def principal_degree(word):
    return sum(n for _, n in word)


def degrees(el: Elt):
    return sorted({principal_degree(w) for w in el.terms})


def separate(el: Elt):
    """Canonical form split as (negative-or-zero f block, positive f block,
    psi block) per word: returns list of (coeff, wneg, wpos, wpsi)."""
    out = []
    for w, c in el.canonical().terms.items():
        wneg = tuple(l for l in w if l[0] == "f" and l[1] <= 0)
        wpos = tuple(l for l in w if l[0] == "f" and l[1] > 0)
        wpsi = tuple(l for l in w if l[0] == "p")
        out.append((c, wneg, wpos, wpsi))
    return out


def project(el: Elt) -> Elt:
    """Projection onto the Borel-intersection subalgebra: straighten, then
    keep only words whose f letters all have positive mode (the counit of
    the nonpositive f block is zero unless the block is empty)."""
    out = {}
    for w, c in el.canonical().terms.items():
        if any(k == "f" and n <= 0 for k, n in w):
            continue
        s = out.get(w)
        out[w] = c if s is None else s + c
    return Elt(out)


# ------------------------------------------------------ Drinfeld coproduct

class TensorElt:
    """Element of the two-fold tensor square: pairs of words."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for w, c in terms.items():
                if c:
                    self.terms[w] = c

    @staticmethod
    def unit():
        return TensorElt({((), ()): ONE})

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w)
            out[w] = c if s is None else s + c
        return TensorElt(out)

    def __mul__(self, other):
        out = {}
        for (a1, a2), c1 in self.terms.items():
            for (b1, b2), c2 in other.terms.items():
                w = (a1 + b1, a2 + b2)
                c = c1 * c2
                s = out.get(w)
                out[w] = c if s is None else s + c
        return TensorElt(out)

    def scale(self, c):
        return TensorElt({w: c * x for w, x in self.terms.items()})

    def __repr__(self):
        return " + ".join(
            f"({c!r})*[{word_text(w1) or '1'} (x) {word_text(w2) or '1'}]"
            for (w1, w2), c in self.terms.items()) or "0"


def coproduct_f(n, kmax) -> TensorElt:
    """Level-zero current coproduct of f[n]:
    1 (x) f[n]  +  sum_{k>=0} f[n-k] (x) psi[k], truncated at k = kmax."""
    terms = {((), (f(n),)): ONE}
    for k in range(0, kmax + 1):
        terms[((f(n - k),), (psi(k),))] = ONE
    return TensorElt(terms)


def coproduct_f_word(modes, kmax) -> TensorElt:
    out = TensorElt.unit()
    for n in modes:
        out = out * coproduct_f(n, kmax)
    return out


def clear_straighten_cache():
    _straighten_cache.clear()
    _ff_pair.cache_clear()
    _pf_pair.cache_clear()
