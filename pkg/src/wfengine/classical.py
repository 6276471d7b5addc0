"""Classical (q -> 1) engine over the free Lie algebra.

Letters are colors 1..r; the free Lie algebra is handled in the Lyndon
basis with exact Fraction coefficients.  Loop generators carry an integer
mode, with bracket [x[m], y[n]] = [x, y][m+n]; the enveloping algebra uses
PBW words sorted by (mode, Lyndon word).  The classical weight series is
computed two independent ways:

  * directly, as the projection of a product of lowering currents
    (coefficient of prod t_k^(e_k) equals the projection of the PBW-ordered
    word f_{c_1}[-e_1] ... f_{c_n}[-e_n]);
  * by the block formula: a sum over ordered set partitions of the
    positions, each block contributing a nested-bracket half current in its
    first variable times geometric tails (t_last/t_j).

Agreement of the two on a common window is a strong functional test, and
the rank-one case doubles as an oracle for the q -> 1 limit of the
q-deformed engine.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .series import Series, NEG_INF

ZERO = Fraction(0)
ONE = Fraction(1)


# ----------------------------------------------------------- Lyndon words

def is_lyndon(w):
    w = tuple(w)
    if not w:
        return False
    return all(w < w[i:] for i in range(1, len(w)))


def std_factorization(w):
    """w = u.v with v the longest proper Lyndon suffix; both parts Lyndon."""
    w = tuple(w)
    if len(w) < 2:
        raise ValueError("letters have no factorization")
    for i in range(1, len(w)):
        if is_lyndon(w[i:]):
            return w[:i], w[i:]
    raise ValueError(f"{w} is not a Lyndon word")


def _merge(dst, src, scale=ONE):
    for k, c in src.items():
        v = dst.get(k, ZERO) + scale * c
        if v:
            dst[k] = v
        else:
            dst.pop(k, None)
    return dst


def bracket_words(u, v):
    """Lie bracket of two Lyndon basis elements, as {lyndon word: Fraction}.

    Recursion: for u < v the concatenation uv is Lyndon; it equals the
    basis element [b(u), b(v)] exactly when v is the longest Lyndon proper
    suffix of uv (u is a letter, or u = u1.u2 standard with u2 >= v),
    otherwise Jacobi against the standard factorization of u applies.
    """
    u, v = tuple(u), tuple(v)
    if u == v:
        return {}
    if v < u:
        return {w: -c for w, c in bracket_words(v, u).items()}
    if len(u) == 1:
        return {u + v: ONE}
    u1, u2 = std_factorization(u)
    if u2 >= v:
        return {u + v: ONE}
    # [u, v] = [[u1, u2], v] = [[u1, v], u2] + [u1, [u2, v]]
    out = {}
    _merge(out, bracket_elts(bracket_words(u1, v), {u2: ONE}))
    _merge(out, bracket_elts({u1: ONE}, bracket_words(u2, v)))
    return out


def bracket_elts(x, y):
    """Bilinear extension of bracket_words to {word: coeff} combinations."""
    out = {}
    for wu, cu in x.items():
        for wv, cv in y.items():
            _merge(out, bracket_words(wu, wv), cu * cv)
    return out


def nested_bracket(colors):
    """Left-nested bracket [[...[f_{c1}, f_{c2}], ...], f_{cn}]."""
    colors = tuple(colors)
    out = {(colors[0],): ONE}
    for c in colors[1:]:
        out = bracket_elts(out, {(c,): ONE})
    return out


def assoc_expand(word):
    """Associative-polynomial expansion of a Lyndon basis element, the
    independent model used to certify bracket_words."""
    word = tuple(word)
    if len(word) == 1:
        return {word: ONE}
    u, v = std_factorization(word)
    a, b = assoc_expand(u), assoc_expand(v)
    out = {}
    for wu, cu in a.items():
        for wv, cv in b.items():
            _merge(out, {wu + wv: cu * cv})
            _merge(out, {wv + wu: -cu * cv})
    return out


def assoc_of_elt(x):
    out = {}
    for w, c in x.items():
        _merge(out, assoc_expand(w), c)
    return out


# ------------------------------------------- loop enveloping algebra (PBW)

# a loop letter is (mode, lyndon word); PBW order sorts by that key

class UElt:
    """Element of the enveloping algebra of the loop-extended free Lie
    algebra: {tuple of loop letters: Fraction}, words kept PBW-sorted."""

    __slots__ = ("terms",)

    def __init__(self, terms=None, _sorted=False):
        raw = {}
        if terms:
            for w, c in terms.items():
                if c:
                    raw[tuple(w)] = raw.get(tuple(w), ZERO) + c
        if _sorted:
            self.terms = {w: c for w, c in raw.items() if c}
        else:
            self.terms = {}
            for w, c in raw.items():
                if c:
                    _merge(self.terms, _pbw_sort(w), c)

    @staticmethod
    def unit(coeff=ONE):
        return UElt({(): coeff}, _sorted=True)

    @staticmethod
    def gen(mode, word):
        return UElt({((mode, tuple(word)),): ONE}, _sorted=True)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, UElt):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        _merge(out, other.terms)
        return UElt(out, _sorted=True)

    def __sub__(self, other):
        out = dict(self.terms)
        _merge(out, other.terms, -ONE)
        return UElt(out, _sorted=True)

    def __neg__(self):
        return UElt({w: -c for w, c in self.terms.items()}, _sorted=True)

    def __mul__(self, other):
        if isinstance(other, Fraction) or isinstance(other, int):
            return UElt({w: c * other for w, c in self.terms.items()},
                        _sorted=True)
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                _merge(out, _pbw_sort(w1 + w2), c1 * c2)
        return UElt(out, _sorted=True)

    def __rmul__(self, other):
        if isinstance(other, Fraction) or isinstance(other, int):
            return self.__mul__(other)
        return NotImplemented

    def __repr__(self):
        if not self.terms:
            return "UElt(0)"
        bits = []
        for w, c in sorted(self.terms.items()):
            ws = " ".join(f"{''.join(map(str, word))}[{m}]" for m, word in w)
            bits.append(f"({c})*{ws or '1'}")
        return " + ".join(bits)


def _pbw_sort(word):
    """Sort a product of loop letters into PBW order; swapping adjacent
    letters costs a loop-bracket correction term of shorter length."""
    out = {}
    stack = [(tuple(word), ONE)]
    while stack:
        w, coeff = stack.pop()
        i = next((i for i in range(len(w) - 1) if w[i] > w[i + 1]), None)
        if i is None:
            v = out.get(w, ZERO) + coeff
            if v:
                out[w] = v
            else:
                out.pop(w, None)
            continue
        (m1, u1), (m2, u2) = w[i], w[i + 1]
        stack.append((w[:i] + (w[i + 1], w[i]) + w[i + 2:], coeff))
        for bw, bc in bracket_words(u1, u2).items():
            stack.append((w[:i] + ((m1 + m2, bw),) + w[i + 2:], coeff * bc))
    return out


def classical_project(el: UElt) -> UElt:
    """Drop every PBW word containing a letter of nonpositive mode."""
    return UElt({w: c for w, c in el.terms.items()
                 if all(m >= 1 for m, _ in w)}, _sorted=True)


# --------------------------------------------------- classical weight series

def _names(n):
    return tuple(f"t{i + 1}" for i in range(n))


def direct_classical_weight(colors, lo, hi) -> Series:
    """Coefficient of prod t_k^(e_k) is the projected PBW form of the word
    f_{c_1}[-e_1] ... f_{c_n}[-e_n]."""
    n = len(colors)
    lo, hi = tuple(lo), tuple(hi)
    # bracket collapse shortens PBW words, so a projected word can keep as
    # little as one letter: support needs total mode sum >= 1
    tot = sum(lo)
    hi = tuple(max(h, -1 - (tot - l)) for h, l in zip(hi, lo))

    def coeff(e):
        if sum(e) > -1:
            return UElt.unit(ZERO)
        word = tuple((-x, (c,)) for x, c in zip(e, colors))
        return classical_project(UElt({word: ONE}))

    return Series.from_box(_names(n), lo, hi, coeff)


def block_series(colors, block, names, lo, hi) -> Series:
    """Half-current of one partition block: the nested bracket of the block's
    colors as a current in the block's first variable, times the geometric
    tail sum_{k>=1} (t_last/t_j)^k for every earlier position j."""
    block = sorted(block)
    first = block[0]
    br = nested_bracket([colors[i] for i in block])
    n = len(names)
    if not br:
        return Series.zero(names, lo, hi)
    e_first = tuple(-1 if i == first else 0 for i in range(n))

    def num_coeff(k):
        return UElt({((k + 1, w),): c for w, c in br.items()}, _sorted=True)

    out = Series.from_ray(names, e_first, e_first, num_coeff, lo, hi)
    zero = tuple(0 for _ in range(n))
    for j, jnext in zip(block, block[1:]):
        step = tuple(1 if i == jnext else (-1 if i == j else 0)
                     for i in range(n))
        # tail sum_{k>=0} (t_{j+1}/t_j)^k between consecutive block
        # positions; k = 0 included because the projection keeps only
        # modes >= 1 (mode-0 letters fall on the counit side)
        tail = Series.from_ray(names, zero, step,
                               lambda k: UElt.unit(), lo, hi)
        out = out * tail
    return out


def _ordered_partitions(items):
    """Set partitions listed with blocks ordered by their minimum."""
    items = list(items)
    if not items:
        yield []
        return
    head, rest = items[0], items[1:]
    for sub in _ordered_partitions(rest):
        yield [[head]] + sub
        for i in range(len(sub)):
            yield sub[:i] + [[head] + sub[i]] + sub[i + 1:]


def partition_classical_weight(colors, lo, hi) -> Series:
    """Sum over ordered set partitions of the product of block half-currents
    (blocks multiplied in order of their minimal position)."""
    n = len(colors)
    names = _names(n)
    lo, hi = tuple(lo), tuple(hi)
    total = Series.zero(names, lo, hi)
    for part in _ordered_partitions(range(n)):
        term = None
        for block in part:
            s = block_series(colors, block, names, lo, hi)
            term = s if term is None else term * s
        total = total + term
    return total.truncate_lo(lo)


def check_q1_limit(n, lo=None, hi=None):
    """The q -> 1 specialization of the q-deformed weight series must match
    the rank-one classical weight, once both are written as mode multisets.
    Returns (lo, hi, mismatches)."""
    from .series import compare_on_common_box
    from .weightfn import universal_weight, default_window, specialize_q1
    if lo is None or hi is None:
        dlo, dhi = default_window(n)
        lo = lo or dlo
        hi = hi or dhi
    quantum = specialize_q1(universal_weight(n, lo, hi))

    def as_modes(el: UElt):
        out = {}
        for w, c in el.terms.items():
            key = tuple(m for m, _ in w)
            out[key] = out.get(key, ZERO) + c
        return {k: v for k, v in out.items() if v}

    classical = direct_classical_weight((1,) * n, lo, hi).map_coeffs(as_modes)
    return compare_on_common_box(quantum, classical)


def check_classical(colors, lo=None, hi=None):
    """Compare the direct projection against the partition formula.
    Returns (lo, hi, mismatches)."""
    n = len(colors)
    if lo is None:
        lo = tuple(-4 for _ in range(n))
    if hi is None:
        hi = tuple(-1 if k == 0 else k + 1 for k in range(n))
    from .series import compare_on_common_box
    direct = direct_classical_weight(colors, lo, hi)
    part = partition_classical_weight(colors, lo, hi)
    return compare_on_common_box(direct, part)
