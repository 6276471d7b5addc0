"""Weight-function series: box-exact expansions of the projected product of
lowering currents, the closed two-point form, the antisymmetrized version,
and the q -> 1 specialization.

Conventions: in region order the k-th variable carries the k-th current;
the coefficient of prod t_k^(e_k) is the projection of the word
f[-e_1] ... f[-e_n].  Region order is t_1 >> t_2 >> ... for the identity
ordering; for a permuted ordering the same labels are listed in permuted
order and dominance follows the listing.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .qfield import QRat, Q, QINV, ONE
from .series import Series, expand_rational, compare_on_common_box, WindowError
from .algebra import Elt, f, project, straighten_word


def default_window(n):
    lo = tuple(-6 for _ in range(n))
    hi = tuple(-1 if k == 0 else k + 3 for k in range(n))
    return lo, hi


def _names(n, order):
    return tuple(f"t{i + 1}" for i in order)


def universal_weight(n, lo=None, hi=None, order=None) -> Series:
    """Series whose box coefficients are the projected straightened words.

    order: tuple listing variable indices (0-based) in region order;
    identity by default.  Axes are named after the original labels, so a
    permuted result can be reorder()ed back for comparisons."""
    if order is None:
        order = tuple(range(n))
    if lo is None or hi is None:
        dlo, dhi = default_window(n)
        lo = lo or dlo
        hi = hi or dhi
    # a projected word survives only if every mode is >= 1, and straightening
    # preserves the total mode sum, so support needs sum(e) <= -n; with the
    # floor lo that caps each axis, and extending the ceiling there makes
    # "zero above the box" literally true on the whole upper orthant
    tot = sum(lo)
    hi = tuple(max(h, -n - (tot - l)) for h, l in zip(hi, lo))

    def coeff(e):
        if sum(e) > -n:
            return Elt({})
        word = tuple(f(-x) for x in e)
        return project(Elt({word: ONE}))

    return Series.from_box(_names(n, order), lo, hi, coeff)


def fplus_ray(names, axis, lo, hi, power_offset=0):
    """Positive half current on one axis: sum_{k>=1} f[k] t_axis^-k."""
    base = tuple(-1 if i == axis else 0 for i in range(len(names)))
    step = base
    return Series.from_ray(names, base, step,
                           lambda k: Elt.word(f(k + 1)), lo, hi)


def closed_form_pair(lo=None, hi=None) -> Series:
    """Two-point closed form:
    f+(t1) f+(t2) - (q - q^-1) t1/(q t1 - q^-1 t2) * f+(t1)^2,
    expanded with t2/t1 small, coefficients straightened."""
    if lo is None or hi is None:
        dlo, dhi = default_window(2)
        lo = lo or dlo
        hi = hi or dhi
    names = ("t1", "t2")
    r1 = fplus_ray(names, 0, lo, hi)
    r2 = fplus_ray(names, 1, lo, hi)
    lead = r1 * r2
    scal = expand_rational(names, {(1, 0): Q - QINV},
                           [{(1, 0): Q, (0, 1): -QINV}], lo, hi)
    corr = scal * (r1 * r1)
    out = lead - corr
    return out.truncate_lo(lo).map_coeffs(lambda e: e.canonical())


def check_closed_form(lo=None, hi=None):
    """Compare the closed two-point form with the direct projection.
    Returns (lo, hi, mismatches)."""
    if lo is None or hi is None:
        dlo, dhi = default_window(2)
        lo = lo or dlo
        hi = hi or dhi
    direct = universal_weight(2, lo, hi)
    closed = closed_form_pair(lo, hi)
    return compare_on_common_box(direct, closed)


def prefactor(n, order=None) -> Series:
    """prod_{k<l in region order} (t_k^-1 - q^2 t_l^-1): the pole-clearing
    polynomial that turns the weight series into an antisymmetric power
    series in the inverse variables."""
    if order is None:
        order = tuple(range(n))
    names = _names(n, order)
    out = Series.monomial(names, (0,) * n, ONE)
    qsq = Q * Q
    for k in range(n):
        for l in range(k + 1, n):
            ek = tuple(-1 if i == k else 0 for i in range(n))
            el = tuple(-1 if i == l else 0 for i in range(n))
            out = out * Series.from_poly(names, {ek: ONE, el: -qsq})
    return out


def symmetrized_weight(n, lo=None, hi=None, order=None) -> Series:
    if order is None:
        order = tuple(range(n))
    w = universal_weight(n, lo, hi, order)
    return (prefactor(n, order) * w).map_coeffs(lambda e: e.canonical())


def _parity(perm):
    inv = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm))
              if perm[i] > perm[j])
    return -1 if inv % 2 else 1


def check_antisymmetry(n, lo=None, hi=None):
    """The antisymmetrized weight must (a) be supported on strictly negative
    exponents and (b) change by the sign of the permutation when the
    ordering of the variables is permuted.  Returns a dict report."""
    if lo is None or hi is None:
        dlo, dhi = default_window(n)
        lo = lo or dlo
        hi = hi or dhi
    base = symmetrized_weight(n, lo, hi)
    report = {"regularity": [], "pairs": {}}
    for e, c in base.terms.items():
        if c and any(x >= 0 for x in e):
            report["regularity"].append(e)
    canon = base.names
    for perm in itertools.permutations(range(n)):
        if perm == tuple(range(n)):
            continue
        # the permuted ordering needs a window that covers the base box
        # after relabeling
        plo = tuple(lo[perm[k]] for k in range(n))
        phi = tuple(hi[perm[k]] for k in range(n))
        other = symmetrized_weight(n, plo, phi, order=perm).reorder(canon)
        sign = _parity(perm)
        expected = base if sign == 1 else -base
        _, _, bad = compare_on_common_box(expected, other)
        report["pairs"][perm] = bad
    return report


# ------------------------------------------------------------- q = 1 limit

def word_modes(word):
    if any(k != "f" for k, _ in word):
        raise ValueError("expected a pure lowering word")
    return tuple(n for _, n in word)


def specialize_q1(series: Series):
    """Coefficientwise q -> 1: each straightened word becomes a sorted mode
    tuple with a Fraction coefficient."""

    def conv(el: Elt):
        out = {}
        for w, c in el.terms.items():
            key = word_modes(w)
            v = c.subs_q(1)
            if v:
                out[key] = out.get(key, Fraction(0)) + v
        return {k: v for k, v in out.items() if v}

    return series.map_coeffs(conv)
