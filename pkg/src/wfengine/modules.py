"""Evaluation modules, weight vectors, tensor factorization and the
eigenvector-product identity.

An evaluation module with parameter z acts by
    f[n] v_i = c_i q^{s_i n} z^n v_{i+1},
    e[n] v_i = c'_i q^{s'_i n} z^n v_{i-1},
and psi^+/psi^- act diagonally as the two expansions (in z/u resp. u/z) of
one rational function Lambda_i(z/u).  k(u) is the diagonal operator fixed by
k(u) v_0 = v_0 and the exchange rule k(u) f(w) k(u)^{-1} = phi(w/u) f(w)
with phi(x) = q(1 - q^{-2}x)/(1 - x); its eigenvalue on v_i is the product
of phi at the q-shifted evaluation points passed on the way down.

All module data is certified by validate_relations (cross-multiplied defining
relations checked mode by mode) plus rational identities tying k to psi.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .qfield import QRat, Q, QINV, ONE, ZERO, qnum
from .series import Series, expand_rational, compare_on_common_box, NEG_INF, _cadd, _cmax
from .algebra import Elt, f, project, coproduct_f_word


# ------------------------------------------------------------------ vectors

class Vec:
    """Finite combination of module basis vectors; keys are state tuples so
    that tensor products concatenate keys."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for k, c in terms.items():
                if c:
                    self.terms[tuple(k)] = c

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, Vec):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k)
            s = c if s is None else s + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return Vec(out)

    def __neg__(self):
        return Vec({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, QRat) or isinstance(other, int):
            return Vec({k: c * other for k, c in self.terms.items()})
        if isinstance(other, Vec):  # tensor product
            out = {}
            for k1, c1 in self.terms.items():
                for k2, c2 in other.terms.items():
                    k = k1 + k2
                    s = out.get(k)
                    v = c1 * c2
                    out[k] = v if s is None else s + v
            return Vec(out)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, QRat) or isinstance(other, int):
            return Vec({k: other * c for k, c in self.terms.items()})
        return NotImplemented

    def __repr__(self):
        if not self.terms:
            return "Vec(0)"
        return " + ".join(f"({c})*v{list(k)}"
                          for k, c in sorted(self.terms.items()))


# --------------------------------------------- univariate rational helpers

def _ptrim(p):
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return tuple(p)


def _pmul(a, b):
    a, b = _ptrim(a), _ptrim(b)
    if not a or not b:
        return ()
    out = [ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return _ptrim(out)


def _pscale_arg(p, k):
    """p(q^k x) for a coefficient tuple p."""
    return tuple(c * QRat.q_power(k * j) for j, c in enumerate(p))


def _taylor(num, den, K):
    """First K+1 coefficients of num(x)/den(x) at x = 0 (den(0) != 0)."""
    num, den = _ptrim(num), _ptrim(den)
    inv0 = den[0].inverse()
    out = []
    for k in range(K + 1):
        acc = num[k] if k < len(num) else ZERO
        for j in range(1, min(k, len(den) - 1) + 1):
            acc = acc - den[j] * out[k - j]
        out.append(acc * inv0)
    return out


def _expand_at_infinity(num, den, K):
    """Coefficients c_0..c_K of num(x)/den(x) = sum_j c_j x^{-j} for large x
    (requires deg num <= deg den, else the shift makes leading c_j with j<0
    which we reject)."""
    num, den = _ptrim(num), _ptrim(den)
    p, r = len(num) - 1, len(den) - 1
    shift = r - p
    if shift < 0:
        raise ValueError("rational function not proper at infinity")
    rnum, rden = tuple(reversed(num)), tuple(reversed(den))
    t = _taylor(rnum, rden, K)
    return [t[j - shift] if j >= shift else ZERO for j in range(K + 1)]


# ------------------------------------------------------------ eval modules

@dataclass(frozen=True)
class EvalModule:
    """Finite-dimensional evaluation module; see module docstring for the
    action conventions."""
    name: str
    dim: int
    fsteps: tuple       # (coeff, q-shift) for v_i -> v_{i+1}
    esteps: tuple       # (coeff, q-shift) for v_{i+1} -> v_i
    psi: tuple          # per state: (num tuple, den-factor tuples (a+b*x))
    ktilde: tuple       # per state: same encoding, top entry trivial
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    # --- rational data helpers

    def _expanded(self, which, i):
        key = ("den", which, i)
        if key not in self._cache:
            num, factors = (self.psi if which == "p" else self.ktilde)[i]
            den = (ONE,)
            for fac in factors:
                den = _pmul(den, fac)
            self._cache[key] = (_ptrim(num), den)
        return self._cache[key]

    def psi_plus_mode(self, i, k):
        """Scalar a with psi^+[k] v_i = a z^k v_i."""
        if k < 0:
            return ZERO
        key = ("p+", i)
        cache = self._cache.get(key)
        if cache is None or len(cache) <= k:
            num, den = self._expanded("p", i)
            cache = _taylor(num, den, max(k, 8))
            self._cache[key] = cache
        return cache[k]

    def psi_minus_mode(self, i, k):
        """Scalar a with psi^-[k] v_i = a z^k v_i (k <= 0)."""
        if k > 0:
            return ZERO
        key = ("p-", i)
        cache = self._cache.get(key)
        if cache is None or len(cache) <= -k:
            num, den = self._expanded("p", i)
            cache = _expand_at_infinity(num, den, max(-k, 8))
            self._cache[key] = cache
        return cache[-k]

    # --- mode actions: dicts {(state, zexp): coeff}

    def act(self, kind, mode, state):
        if kind == "f":
            if state + 1 >= self.dim:
                return {}
            c, s = self.fsteps[state]
            return {(state + 1, mode): c * QRat.q_power(s * mode)}
        if kind == "e":
            if state == 0:
                return {}
            c, s = self.esteps[state - 1]
            return {(state - 1, mode): c * QRat.q_power(s * mode)}
        if kind == "p+":
            a = self.psi_plus_mode(state, mode)
            return {(state, mode): a} if a else {}
        if kind == "p-":
            a = self.psi_minus_mode(state, mode)
            return {(state, mode): a} if a else {}
        raise ValueError(kind)

    def apply_ops(self, ops, state):
        """Apply a product of (kind, mode) operators, rightmost first."""
        cur = {(state, 0): ONE}
        for kind, mode in reversed(ops):
            nxt = {}
            for (st, ze), c in cur.items():
                for (st2, dz), a in self.act(kind, mode, st).items():
                    k = (st2, ze + dz)
                    s = nxt.get(k)
                    v = c * a
                    nxt[k] = v if s is None else s + v
            cur = {k: v for k, v in nxt.items() if v}
        return cur

    def apply_word(self, word, state):
        """Apply an algebra word (letters ('f', n) / ('p', n))."""
        ops = [("f" if k == "f" else "p+", n) for k, n in word]
        return self.apply_ops(ops, state)


def spin_half(name="half"):
    x1 = (ONE, -ONE)              # 1 - x
    return EvalModule(
        name=name, dim=2,
        fsteps=((ONE, 0),),
        esteps=((ONE, 0),),
        psi=(((Q, -QINV), (x1,)),             # (q - q^-1 x)/(1-x)
             ((QINV, -Q), (x1,))),            # (q^-1 - q x)/(1-x)
        ktilde=(((ONE,), ()),
                ((Q, -QINV), (x1,))),         # phi(x)
    )


def spin_one(name="one"):
    x1 = (ONE, -ONE)                          # 1 - x
    xq2 = (ONE, -QRat.q_power(-2))            # 1 - q^-2 x
    q2, qm2 = QRat.q_power(2), QRat.q_power(-2)
    lam0 = ((q2, -qm2), (x1,))                # (q^2 - q^-2 x)/(1-x)
    lam1 = (_pmul((q2, -qm2), (qm2, -ONE)), (x1, xq2))
    lam2 = ((qm2, -ONE), (xq2,))              # (q^-2 - x)/(1 - q^-2 x)
    phi = (Q, -QINV)                          # q - q^-1 x
    phi_shift = (Q, -QRat.q_power(-3))        # q - q^-3 x  (phi at q^-2 x)
    return EvalModule(
        name=name, dim=3,
        fsteps=((ONE, 0), (qnum(2), -2)),
        esteps=((qnum(2), 0), (ONE, -2)),
        psi=(lam0, lam1, lam2),
        ktilde=(((ONE,), ()),
                (phi, (x1,)),
                (_pmul(phi, phi_shift), (x1, xq2))),
    )


def spin_module(d, name=None):
    """Evaluation module of dimension d (spin (d-1)/2).

    The f-f relation forces the q-shifts s_i = -2i; the e-f relation then
    fixes c_i c'_i = [i+1][d-1-i] and pins the diagonal series to
      Lambda_i(x) = q^{2i-d+1}
        + (q-q^-1) (d_i/(1 - q^{-2i} x) - d_{i-1}/(1 - q^{2-2i} x)).
    Everything is re-certified by validate_relations.
    """
    if name is None:
        name = f"spin{d - 1}/2"
    fsteps = tuple((qnum(i + 1), -2 * i) for i in range(d - 1))
    esteps = tuple((qnum(d - 1 - i), -2 * i) for i in range(d - 1))
    dd = [qnum(i + 1) * qnum(d - 1 - i) for i in range(d - 1)]
    psi = []
    for i in range(d):
        kconst = QRat.q_power(2 * i - d + 1)
        num = (kconst,)
        factors = []
        if i < d - 1:
            fac = (ONE, -QRat.q_power(-2 * i))
            num = _pmul(num, fac)
            factors.append(fac)
        if i > 0:
            fac = (ONE, -QRat.q_power(2 - 2 * i))
            num = _pmul(num, fac)
            factors.append(fac)
        num = list(num) + [ZERO] * (3 - len(num))
        qq = Q - QINV
        if i < d - 1:
            extra = (qq * dd[i],) if i == 0 else \
                _pmul((qq * dd[i],), (ONE, -QRat.q_power(2 - 2 * i)))
            for j, c in enumerate(extra):
                num[j] = num[j] + c
        if i > 0:
            extra = (-qq * dd[i - 1],) if i == d - 1 else \
                _pmul((-qq * dd[i - 1],), (ONE, -QRat.q_power(-2 * i)))
            for j, c in enumerate(extra):
                num[j] = num[j] + c
        psi.append((_ptrim(num), tuple(factors)))
    ktilde = [((ONE,), ())]
    for i in range(d - 1):
        knum, kfac = ktilde[-1]
        phi_fac = (ONE, -QRat.q_power(-2 * i))
        ktilde.append((_pmul(knum, (Q, -QRat.q_power(-1 - 2 * i))),
                       kfac + (phi_fac,)))
    return EvalModule(name=name, dim=d, fsteps=fsteps, esteps=esteps,
                      psi=tuple(psi), ktilde=tuple(ktilde))


MODULES = {"half": spin_half, "one": spin_one,
           "3/2": lambda: spin_module(4)}


# -------------------------------------------------------------- validation

def validate_relations(module, lo=-3, hi=3):
    """Check all defining relations in cross-multiplied mode form on every
    basis vector, plus the rational identities tying k to psi and to the
    exchange function.  Returns a list of failure descriptions."""
    fails = []
    rng = range(lo, hi + 1)
    qm2, qp2 = QRat.q_power(-2), QRat.q_power(2)

    def combo(parts, state):
        out = {}
        for coeff, ops in parts:
            for k, v in module.apply_ops(ops, state).items():
                s = out.get(k, ZERO) + coeff * v
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return out

    for state in range(module.dim):
        for m in rng:
            for n in rng:
                checks = {
                    "ff": [(ONE, [("f", m + 1), ("f", n)]),
                           (-qm2, [("f", m), ("f", n + 1)]),
                           (-qm2, [("f", n), ("f", m + 1)]),
                           (ONE, [("f", n + 1), ("f", m)])],
                    "ee": [(ONE, [("e", m + 1), ("e", n)]),
                           (-qp2, [("e", m), ("e", n + 1)]),
                           (-qp2, [("e", n), ("e", m + 1)]),
                           (ONE, [("e", n + 1), ("e", m)])],
                    "ef": [(ONE, [("e", m), ("f", n)]),
                           (-ONE, [("f", n), ("e", m)]),
                           (-(Q - QINV).inverse(), [("p+", m + n)]),
                           ((Q - QINV).inverse(), [("p-", m + n)])],
                }
                for p in ("p+", "p-"):
                    checks[p + "f"] = [
                        (ONE, [(p, m + 1), ("f", n)]),
                        (-qm2, [(p, m), ("f", n + 1)]),
                        (-qm2, [("f", n), (p, m + 1)]),
                        (ONE, [("f", n + 1), (p, m)])]
                    checks[p + "e"] = [
                        (ONE, [(p, m + 1), ("e", n)]),
                        (-qp2, [(p, m), ("e", n + 1)]),
                        (-qp2, [("e", n), (p, m + 1)]),
                        (ONE, [("e", n + 1), (p, m)])]
                for tag, parts in checks.items():
                    r = combo(parts, state)
                    if r:
                        fails.append((tag, state, m, n, r))

    # k(u q^-2) k(u) psi = psi-top as rational functions in x:
    # kappa_i(q^2 x) kappa_i(x) Lambda_i(x) = Lambda_0(x), cross-multiplied
    for i in range(module.dim):
        knum, kden = module._expanded("k", i)
        pnum, pden = module._expanded("p", i)
        tnum, tden = module._expanded("p", 0)
        lhs_n = _pmul(_pmul(_pscale_arg(knum, 2), knum), _pmul(pnum, tden))
        lhs_d = _pmul(_pmul(_pscale_arg(kden, 2), kden), _pmul(pden, tnum))
        if _pmul(lhs_n, (ONE,)) != _pmul(lhs_d, (ONE,)):
            fails.append(("k-psi", i, _ptrim(lhs_n), _ptrim(lhs_d)))

    # exchange rule: kappa_{i+1}(x) = kappa_i(x) * phi(q^{s_i} x)
    phi_n, phi_d = (Q, -QINV), (ONE, -ONE)
    for i in range(module.dim - 1):
        _, s = module.fsteps[i]
        kn, kd = module._expanded("k", i)
        kn1, kd1 = module._expanded("k", i + 1)
        lhs = _pmul(kn1, _pmul(kd, _pscale_arg(phi_d, s)))
        rhs = _pmul(kd1, _pmul(kn, _pscale_arg(phi_n, s)))
        if lhs != rhs:
            fails.append(("k-exchange", i))
    return fails


# ----------------------------------------------------------- weight vector

def weight_vector(module, n, lo, hi, tnames=None, zname="z") -> Series:
    """Weight-function series applied to the highest vector: the coefficient
    at t-exponent e is the projected word f[-e_1]...f[-e_n] acting on v_0;
    the module parameter exponent rides on a dedicated trailing axis."""
    if tnames is None:
        tnames = tuple(f"t{i + 1}" for i in range(n))
    names = tuple(tnames) + (zname,)
    lo, hi = tuple(lo), tuple(hi)
    tot = sum(lo)
    hi = tuple(max(h, -n - (tot - l)) for h, l in zip(hi, lo))
    terms = {}
    ranges = [range(l, h + 1) for l, h in zip(lo, hi)]
    for e in itertools.product(*ranges):
        if sum(e) > -n:
            continue
        el = project(Elt({tuple(f(-x) for x in e): ONE}))
        acc = {}
        for w, c in el.terms.items():
            for (st, ze), a in module.apply_word(w, 0).items():
                v = c * a
                s = acc.get((st, ze))
                acc[(st, ze)] = v if s is None else s + v
        for (st, ze), v in acc.items():
            if not v:
                continue
            key = e + (ze,)
            vec = terms.get(key)
            add = Vec({(st,): v})
            terms[key] = add if vec is None else vec + add
    w_lo = lo + (NEG_INF,)
    w_hi = hi + (-tot,)
    return Series(names, {k: v for k, v in terms.items() if v}, w_lo, w_hi)


def _state_component(series, key):
    """Scalar sub-series multiplying one basis key of a Vec-valued series."""
    terms = {}
    for e, vec in series.terms.items():
        c = vec.terms.get(key)
        if c:
            terms[e] = c
    return Series(series.names, terms, series.lo, series.hi)


def _tag_state(series, key):
    return series.map_coeffs(lambda c: Vec({key: c}))


# ------------------------------------------------------ tensor factorization

def tensor_weight_vector(mod1, mod2, n, lo, hi) -> Series:
    """Left side of the factorization: the coproduct of each weight-series
    coefficient, legs projected, applied to v_0 (x) w_0."""
    names = tuple(f"t{i + 1}" for i in range(n)) + ("z1", "z2")
    lo, hi = tuple(lo), tuple(hi)
    tot = sum(lo)
    hi_t = tuple(max(h, -n - (tot - l)) for h, l in zip(hi, lo))
    proj_cache = {}

    def proj(word):
        out = proj_cache.get(word)
        if out is None:
            out = project(Elt({word: ONE}))
            proj_cache[word] = out
        return out

    terms = {}
    ranges = [range(l, h + 1) for l, h in zip(lo, hi_t)]
    for e in itertools.product(*ranges):
        if sum(e) > -n:
            continue
        modes = tuple(-x for x in e)
        apos = sum(max(a, 0) for a in modes)
        kmax = max(0, apos - 1)
        cop = coproduct_f_word(modes, kmax)
        acc = {}
        for (w1, w2), c in cop.terms.items():
            p1, p2 = proj(w1), proj(w2)
            if not p1 or not p2:
                continue
            for u1, c1 in p1.terms.items():
                r1 = mod1.apply_word(u1, 0)
                if not r1:
                    continue
                for u2, c2 in p2.terms.items():
                    r2 = mod2.apply_word(u2, 0)
                    if not r2:
                        continue
                    cc = c * c1 * c2
                    for (s1, z1), a1 in r1.items():
                        for (s2, z2), a2 in r2.items():
                            k = (e, z1, z2, s1, s2)
                            v = cc * a1 * a2
                            s = acc.get(k)
                            acc[k] = v if s is None else s + v
        for (ee, z1, z2, s1, s2), v in acc.items():
            if not v:
                continue
            key = ee + (z1, z2)
            add = Vec({(s1, s2): v})
            old = terms.get(key)
            terms[key] = add if old is None else old + add
    w_lo = lo + (NEG_INF, NEG_INF)
    w_hi = hi_t + (-tot, -tot)
    return Series(names, {k: v for k, v in terms.items() if v}, w_lo, w_hi)


def factorized_rhs_cleared(mod1, mod2, n, lo, hi,
                           drop_bridge=False, drop_lambda=False) -> Series:
    """Pole-cleared right side of the factorization.  The raw identity is

      Delta-side = sum_S (wv of mod1 on t_S) (x) (wv of mod2 on t_~S)
        * prod_{i in S} Lambda_top^{(2)}(z2/t_i)
        * prod_{k<l, k in S, l not in S} (q^-2 t_k - t_l)/(t_k - q^-2 t_l);

    multiplying by C = prod_{k<l} (t_k - q^-2 t_l) * prod_i D_i(t_i, z2),
    where D_i clears the Lambda denominator, turns every S-term polynomial,
    avoiding denominator-expansion window loss.  This builds C * RHS; the
    drop_* flags deliberately break the formula (negative controls)."""
    names = tuple(f"t{i + 1}" for i in range(n)) + ("z1", "z2")
    N = len(names)
    lo, hi = tuple(lo), tuple(hi)
    qm2 = QRat.q_power(-2)
    lam_num, _ = mod2._expanded("p", 0)
    lam_fac = mod2.psi[0][1]

    def unitvec(i, v=1):
        return tuple(v if j == i else 0 for j in range(N))

    z2ax = N - 1
    total = None
    for r in range(n + 1):
        for S in itertools.combinations(range(n), r):
            Sbar = tuple(i for i in range(n) if i not in S)
            wv1 = weight_vector(mod1, len(S),
                                tuple(lo[i] for i in S),
                                tuple(hi[i] for i in S),
                                tnames=tuple(f"t{i + 1}" for i in S),
                                zname="z1")
            wv2 = weight_vector(mod2, len(Sbar),
                                tuple(lo[i] for i in Sbar),
                                tuple(hi[i] for i in Sbar),
                                tnames=tuple(f"t{i + 1}" for i in Sbar),
                                zname="z2")
            piece = wv1.lift(names) * wv2.lift(names)
            for i in range(n):
                if i in S and not drop_lambda:
                    # cleared Lambda: t_i^m * lam_num(z2/t_i) with m factors
                    # (a t_i + b z2) removed from the denominator
                    xv = _cadd(unitvec(z2ax), unitvec(i, -1))
                    shift = unitvec(i, len(lam_fac))
                    poly = {_cadd(shift, tuple(j * c for c in xv)): co
                            for j, co in enumerate(lam_num) if co}
                else:
                    # cleared denominator D_i = prod_fac (a t_i + b z2)
                    poly = {(0,) * N: ONE}
                    for a, b in lam_fac:
                        fac = {unitvec(i): a, unitvec(z2ax): b}
                        poly = _poly_mul_map(poly, fac)
                piece = piece * Series.from_poly(names, poly)
            for k in range(n):
                for l in range(k + 1, n):
                    if k in S and l in Sbar and not drop_bridge:
                        fac = {unitvec(k): qm2, unitvec(l): -ONE}
                    else:
                        fac = {unitvec(k): ONE, unitvec(l): -qm2}
                    piece = piece * Series.from_poly(names, fac)
            total = piece if total is None else total + piece
    return total


def _poly_mul_map(a, b):
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = _cadd(e1, e2)
            c = c1 * c2
            out[e] = out[e] + c if e in out else c
    return {e: c for e, c in out.items() if c}


def check_factorization(mod1, mod2, n, lo=None, hi=None,
                        drop_bridge=False, drop_lambda=False):
    """Compare both sides of the factorization, pole-cleared, on the common
    exact box; returns (lo, hi, mismatches, support) where support counts
    the nonzero coefficients actually compared (guards against vacuous
    agreement)."""
    if lo is None:
        lo = tuple(-5 for _ in range(n))
    if hi is None:
        hi = tuple(-1 if k == 0 else k + 1 for k in range(n))
    names = tuple(f"t{i + 1}" for i in range(n)) + ("z1", "z2")
    N = len(names)
    qm2 = QRat.q_power(-2)
    lam_fac = mod2.psi[0][1]

    def unitvec(i, v=1):
        return tuple(v if j == i else 0 for j in range(N))

    clear = {(0,) * N: ONE}
    for k in range(n):
        for l in range(k + 1, n):
            clear = _poly_mul_map(clear, {unitvec(k): ONE, unitvec(l): -qm2})
    for i in range(n):
        for a, b in lam_fac:
            clear = _poly_mul_map(clear, {unitvec(i): a, unitvec(N - 1): b})
    lhs = Series.from_poly(names, clear) \
        * tensor_weight_vector(mod1, mod2, n, lo, hi)
    rhs = factorized_rhs_cleared(mod1, mod2, n, lo, hi,
                                 drop_bridge=drop_bridge,
                                 drop_lambda=drop_lambda)
    blo, bhi, bad = compare_on_common_box(lhs, rhs)
    support = sum(1 for e in lhs.terms
                  if all(l <= x <= h for x, l, h in zip(e, blo, bhi)))
    return blo, bhi, bad, support


# ------------------------------------------------- eigenvector-product check

def _phi_factors_sq(names, n, squared=True):
    """prod_{i<j} (q z_i - q^-1 z_j)^2 (or first power) as an entire series."""
    N = len(names)
    out = Series.monomial(names, (0,) * N, ONE)
    for i in range(n):
        for j in range(i + 1, n):
            ei = tuple(1 if k == i else 0 for k in range(N))
            ej = tuple(1 if k == j else 0 for k in range(N))
            p = Series.from_poly(names, {ei: Q, ej: -QINV})
            out = out * p
            if squared:
                out = out * p
    return out


def _vandermonde(names, n):
    N = len(names)
    out = Series.monomial(names, (0,) * N, ONE)
    for i in range(n):
        for j in range(i + 1, n):
            ei = tuple(1 if k == i else 0 for k in range(N))
            ej = tuple(1 if k == j else 0 for k in range(N))
            out = out * Series.from_poly(names, {ei: ONE, ej: -ONE})
    return out


def apply_fplus(series, module, axis, lo):
    """Apply sum_{m>=1} f[m] u_axis^{-m} to a Vec-valued series."""
    names = series.names
    ax = names.index(axis)
    zax = len(names) - 1
    base = tuple(-1 if i == ax else (1 if i == zax else 0)
                 for i in range(len(names)))
    out = Series.zero(names, series.lo, series.hi)
    for st in range(module.dim - 1):
        comp = _state_component(series, (st,))
        if not comp.terms:
            continue
        c, s = module.fsteps[st]
        ray = Series.from_ray(names, base, base,
                              lambda k: c * QRat.q_power(s * (k + 1)),
                              lo, series.hi)
        out = out + _tag_state(ray * comp, (st + 1,))
    return out


def apply_ktilde(series, module, axis, lo):
    """Apply the diagonal operator k(u_axis) to a Vec-valued series."""
    names = series.names
    N = len(names)
    ax = names.index(axis)
    zax = N - 1
    xv = tuple(-1 if i == ax else (1 if i == zax else 0) for i in range(N))
    out = Series.zero(names, series.lo, series.hi)
    for st in range(module.dim):
        comp = _state_component(series, (st,))
        if not comp.terms:
            continue
        knum, _ = module._expanded("k", st)
        if knum == (ONE,) and not module.ktilde[st][1]:
            out = out + _tag_state(comp, (st,))
            continue
        num = {tuple(j * c for c in xv): co
               for j, co in enumerate(knum) if co}
        dens = [{(0,) * N: fac[0], xv: fac[1]} for fac in module.ktilde[st][1]]
        kap = expand_rational(names, num, dens, lo, series.hi)
        out = out + _tag_state(kap * comp, (st,))
    return out


def eigenproduct_check(module, n, lo=None, drop_exchange=False):
    """Both sides of the creation-product identity, pole-cleared:
      prod_{i<j} (z_i - z_j)(q z_i - q^-1 z_j) * B(z_1)...B(z_n) v_0
      == prod_{i<j} (q z_i - q^-1 z_j)^2 * [weight vector at t = z].
    B(u) = f+(u) k(u).  drop_exchange omits the exchange prefactor on the
    right (negative control).  Returns (lo, hi, mismatches, support) with
    support the number of nonzero coefficients compared; n must stay below
    the module dimension or both sides vanish identically."""
    if lo is None:
        lo = tuple(-5 for _ in range(n))
    names = tuple(f"z{i + 1}" for i in range(n)) + ("z",)
    full_lo = tuple(lo) + (NEG_INF,)
    state = Series.monomial(names, (0,) * (n + 1), Vec({(0,): ONE}))
    for i in range(n, 0, -1):
        state = apply_ktilde(state, module, f"z{i}", full_lo)
        state = apply_fplus(state, module, f"z{i}", full_lo)
    lhs = _vandermonde(names, n) * _phi_factors_sq(names, n, squared=False) \
        * state
    hi = tuple(-1 if k == 0 else k + 2 for k in range(n))
    wv = weight_vector(module, n, lo, hi,
                       tnames=names[:-1], zname="z")
    if drop_exchange:
        rhs = _vandermonde(names, n) \
            * _phi_factors_sq(names, n, squared=False) * wv
    else:
        rhs = _phi_factors_sq(names, n, squared=True) * wv
    blo, bhi, bad = compare_on_common_box(lhs, rhs)
    support = sum(1 for e in lhs.terms
                  if all(l <= x <= h for x, l, h in zip(e, blo, bhi)))
    return blo, bhi, bad, support


# ----------------------------------------------------- rational read-off

def rational_reconstruct(series, den_terms):
    """Multiply a box-exact series by a claimed denominator polynomial and
    read the numerator off the product.  Returns (numerator terms, surplus),
    where surplus counts the box points beyond the numerator support that
    vanished as predicted; a healthy reconstruction has many."""
    den = Series.from_poly(series.names, den_terms)
    prod = den * series
    lo = tuple(l if l > NEG_INF // 2 else h_min
               for l, h_min in zip(prod.lo,
                                   prod.nonzero_hull()[0] if prod.terms
                                   else prod.hi))
    hi = prod.hi
    numer = {}
    surplus = 0
    for e in itertools.product(*[range(l, h + 1) for l, h in zip(lo, hi)]):
        c = prod.terms.get(e)
        if c:
            numer[e] = c
        else:
            surplus += 1
    return numer, surplus
