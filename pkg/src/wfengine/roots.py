"""Affine root systems: reflection ladders built from a periodic word of
simple reflections, the induced normal order on positive roots, its circular
extension to negative roots, and checkers for the convexity-type conditions
the rest of the engine relies on.

Roots are integer coefficient vectors on the simple roots alpha_0..alpha_r;
the null root delta is the vector of marks.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class AffineCartan:
    matrix: tuple          # Cartan matrix a[i][j], rows/cols 0..r
    sym: tuple             # symmetrizers d_i, so d_i a_ij is symmetric
    marks: tuple           # delta = sum marks[i] alpha_i, marks[0] == 1

    def __post_init__(self):
        a, d, n = self.matrix, self.sym, self.marks
        r = len(a)
        if not (len(d) == len(n) == r):
            raise ValueError("inconsistent Cartan data sizes")
        for i in range(r):
            if a[i][i] != 2:
                raise ValueError("Cartan diagonal must be 2")
            for j in range(r):
                if i != j and a[i][j] > 0:
                    raise ValueError("off-diagonal Cartan entries must be <= 0")
                if d[i] * a[i][j] != d[j] * a[j][i]:
                    raise ValueError("symmetrizers do not symmetrize the matrix")
        if n[0] != 1:
            raise ValueError("mark of node 0 must be 1")
        for i in range(r):
            if sum(a[i][j] * n[j] for j in range(r)) != 0:
                raise ValueError("marks are not a null vector of the matrix")

    @property
    def rank(self):
        return len(self.matrix) - 1

    @property
    def delta(self):
        return self.marks

    def pairing(self, x, y):
        a, d = self.matrix, self.sym
        return sum(x[i] * d[i] * a[i][j] * y[j]
                   for i in range(len(a)) for j in range(len(a)))

    def coroot_pairing(self, x, i):
        """<x, alpha_i^vee>."""
        a = self.matrix
        return sum(x[j] * a[i][j] for j in range(len(a)))

    def reflect(self, i, x):
        c = self.coroot_pairing(x, i)
        out = list(x)
        out[i] -= c
        return tuple(out)

    def alpha(self, i):
        return tuple(1 if j == i else 0 for j in range(len(self.matrix)))

    def is_real(self, x):
        return self.pairing(x, x) > 0

    def imaginary_level(self, x):
        """m if x == m*delta else None."""
        n = self.marks
        if x[0] == 0:
            return None
        m = x[0]
        if all(x[i] == m * n[i] for i in range(len(n))):
            return m
        return None

    def finite_part(self, x):
        """Write a root as beta + l*delta with beta supported away from
        node 0; returns (beta, l)."""
        l = x[0]
        beta = tuple(x[i] - l * self.marks[i] for i in range(len(x)))
        return beta, l


def preset(name: str) -> AffineCartan:
    name = name.upper().rstrip("~")
    if name in ("A1", "A1(1)"):
        return AffineCartan(((2, -2), (-2, 2)), (1, 1), (1, 1))
    if name in ("A2", "A2(1)"):
        return AffineCartan(((2, -1, -1), (-1, 2, -1), (-1, -1, 2)),
                            (1, 1, 1), (1, 1, 1))
    raise ValueError(f"unknown preset {name!r}")


class OrderingError(ValueError):
    pass


@dataclass
class NormalOrdering:
    cartan: AffineCartan
    word: tuple
    forward: list = field(default_factory=list)   # gamma_1, gamma_2, ...
    backward: list = field(default_factory=list)  # gamma_0, gamma_-1, ...
    _key: dict = field(default_factory=dict)

    def key(self, root):
        k = self._key.get(tuple(root))
        if k is None:
            m = self.cartan.imaginary_level(root)
            if m is not None and m > 0:
                return (1, m)
            raise OrderingError(f"root {root} outside the generated range")
        return k

    def precedes(self, a, b):
        return self.key(a) < self.key(b)

    def sequence(self, imaginary_up_to=None):
        """All generated roots in order; imaginary levels up to the given
        bound (default: number of forward roots)."""
        if imaginary_up_to is None:
            imaginary_up_to = len(self.forward)
        d = self.cartan.delta
        ims = [tuple(m * x for x in d) for m in range(1, imaginary_up_to + 1)]
        return list(self.forward) + ims + list(reversed(self.backward))


def build_ordering(cartan: AffineCartan, word, count, validate=True):
    """Ladder roots from one period of a periodic reflection word.

    word = (i_0, ..., i_{m-1}); the forward ladder applies reflections
    starting at i_1, the backward ladder walks down from i_0.  With
    validate on, the word must start at node 0 and one full period must
    act as a translation moving every finite simple root strictly down.
    """
    word = tuple(word)
    m = len(word)
    if validate and word[0] != 0:
        raise OrderingError("reflection word must start at node 0")
    idx = lambda k: word[k % m]
    fwd = []
    for k in range(1, count + 1):
        x = cartan.alpha(idx(k))
        for j in range(k - 1, 0, -1):
            x = cartan.reflect(idx(j), x)
        fwd.append(x)
    bwd = [cartan.alpha(idx(0))]
    for l in range(1, count + 1):
        x = cartan.alpha(idx(-l))
        for j in range(1 - l, 1):
            x = cartan.reflect(idx(j), x)
        bwd.append(x)
    roots = fwd + bwd
    seen = set()
    for x in roots:
        if any(c < 0 for c in x) or all(c == 0 for c in x):
            raise OrderingError(f"ladder produced a non-positive root {x}")
        if not cartan.is_real(x):
            raise OrderingError(f"ladder produced an imaginary root {x}")
        if x in seen:
            raise OrderingError(f"ladder repeats root {x}")
        seen.add(x)
    if validate:
        # one period must be a translation: alpha_j -> alpha_j + k_j delta
        # with k_j < 0 for every finite node j
        for jnode in range(1, cartan.rank + 1):
            x = cartan.alpha(jnode)
            for j in range(m - 1, -1, -1):
                x = cartan.reflect(word[j], x)
            beta, l = cartan.finite_part(x)
            if beta != cartan.alpha(jnode) or l >= 0:
                raise OrderingError(
                    f"period is not a strictly dominant translation: "
                    f"alpha_{jnode} -> {x}")
    ordering = NormalOrdering(cartan, word, fwd, bwd)
    for k, x in enumerate(fwd, start=1):
        ordering._key[x] = (0, k)
    for l, x in enumerate(bwd):
        ordering._key[x] = (2, -l)
    return ordering


def is_positive_root(x):
    return all(c >= 0 for c in x) and any(c > 0 for c in x)


def circular_compare(ordering: NormalOrdering, a, b):
    """'precedes' / 'follows' / 'incomparable' in the circular order on
    positive and negative roots: opposite pairs and equal roots are
    incomparable; among positives the normal order applies; a negative
    root sits where its opposite tells it to by the turning rule."""
    a, b = tuple(a), tuple(b)
    if a == b or tuple(-x for x in a) == b:
        return "incomparable"
    pa, pb = is_positive_root(a), is_positive_root(b)
    na = a if pa else tuple(-x for x in a)
    nb = b if pb else tuple(-x for x in b)
    if pa and pb:
        res = ordering.precedes(a, b)
    elif not pa and not pb:
        res = ordering.precedes(na, nb)
    elif pa and not pb:
        res = ordering.precedes(nb, a)
    else:
        res = ordering.precedes(b, na)
    return "precedes" if res else "follows"


def classify_positive(cartan: AffineCartan, x):
    """'raising' for l*delta + (finite positive), 'imaginary' for m*delta,
    'lowering' for (n+1)*delta - (finite positive)."""
    if cartan.imaginary_level(x) is not None:
        return "imaginary"
    beta, l = cartan.finite_part(x)
    if is_positive_root(beta):
        return "raising"
    if is_positive_root(tuple(-c for c in beta)):
        return "lowering"
    raise OrderingError(f"{x} is not of affine real-root shape")


def check_ord1_sequence(cartan: AffineCartan, seq):
    """Check the convexity pattern: every raising root before every
    imaginary root, imaginary roots by level, every lowering root after.
    Returns a list of violating index pairs (empty means the pattern holds)."""
    rankvals = {"raising": 0, "imaginary": 1, "lowering": 2}
    tagged = []
    for x in seq:
        cls = classify_positive(cartan, x)
        lvl = cartan.imaginary_level(x) if cls == "imaginary" else None
        tagged.append((rankvals[cls], lvl))
    bad = []
    for i in range(len(tagged)):
        for j in range(i + 1, len(tagged)):
            ri, li = tagged[i]
            rj, lj = tagged[j]
            if ri > rj or (ri == rj == 1 and li > lj):
                bad.append((i, j))
    return bad


def verify_ord1(ordering: NormalOrdering, height):
    """Restrict the generated ordering to roots of height <= height and
    check the convexity pattern."""
    seq = [x for x in ordering.sequence() if sum(x) <= height]
    return check_ord1_sequence(ordering.cartan, seq)


def verify_shift_correspondence(cartan: AffineCartan, word, c, count):
    """The ordering built from the shifted periodic word (j_n = i_{n-c})
    must agree with the circular order of the base ordering after mapping
    through the first c reflections.  Returns a list of violations."""
    word = tuple(word)
    m = len(word)
    if c < 0:
        raise OrderingError("shift must be nonnegative")
    base = build_ordering(cartan, word, count + c + m, validate=False)
    shifted_word = tuple(word[(k - c) % m] for k in range(m))
    shifted = build_ordering(cartan, shifted_word, count, validate=False)

    def push(x):
        for j in range(c - 1, -1, -1):
            x = cartan.reflect(word[j], x)
        return x

    roots = shifted.sequence(imaginary_up_to=2)
    bad = []
    for i, at in enumerate(roots):
        for bt in roots[i + 1:]:
            a, b = push(at), push(bt)
            res = circular_compare(base, a, b)
            if res != "precedes":
                bad.append((at, bt, a, b, res))
    return bad
