"""Acceptance gate: one test per criterion, each printing an explicit
PASS/FAIL line and enforcing a wall-clock budget."""

import time

from wfengine.qfield import QRat, ONE
from wfengine.algebra import Elt, f, project, straighten_word, \
    is_canonical_word
from wfengine.weightfn import check_closed_form, check_antisymmetry
from wfengine.classical import check_classical, check_q1_limit
from wfengine.roots import (preset, build_ordering, verify_ord1,
                            verify_shift_correspondence)
from wfengine.modules import (MODULES, spin_half, spin_one, spin_module,
                              validate_relations, check_factorization,
                              eigenproduct_check, weight_vector,
                              rational_reconstruct, _poly_mul_map)


ACCEPT_LINES = []


def _gate(name, ok, t0, budget):
    dt = time.time() - t0
    status = "PASS" if ok and dt <= budget else "FAIL"
    line = f"ACCEPT {name}: {status} ({dt:.1f}s, budget {budget}s)"
    ACCEPT_LINES.append(line)
    print(line)
    assert ok, name
    assert dt <= budget, f"{name} exceeded {budget}s ({dt:.1f}s)"


def test_accept_closed_form():
    t0 = time.time()
    _, _, bad = check_closed_form()
    _gate("closed-form-two-variables", not bad, t0, 10)


def test_accept_straightening():
    t0 = time.time()
    ok = True
    for word in ((f(3), f(1)), (f(2), f(2), f(1)), (f(5), f(0), f(2))):
        el = straighten_word(word)
        ok = ok and all(is_canonical_word(w) for w in el.terms)
        ok = ok and all(sum(n for _, n in w) == sum(n for _, n in word)
                        for w in el.terms)
    ok = ok and project(Elt({(f(0), f(2)): ONE})) == Elt({})
    ok = ok and project(Elt({(f(1), f(2)): ONE})) == \
        Elt({(f(1), f(2)): ONE})
    _gate("straightening-and-projection", ok, t0, 1)


def test_accept_antisymmetry():
    t0 = time.time()
    ok = True
    for n in (2, 3):
        rep = check_antisymmetry(n)
        ok = ok and not rep["regularity"]
        ok = ok and all(not bad for bad in rep["pairs"].values())
    _gate("antisymmetry-n2-n3", ok, t0, 60)


def test_accept_classical():
    t0 = time.time()
    ok = True
    for colors in ((1,), (1, 1), (1, 2), (1, 2, 1), (1, 2, 2)):
        _, _, bad = check_classical(colors)
        ok = ok and not bad
    _gate("classical-partition-formula", ok, t0, 60)


def test_accept_q1_limit():
    t0 = time.time()
    ok = True
    for n in (1, 2, 3):
        _, _, bad = check_q1_limit(n)
        ok = ok and not bad
    _gate("q1-limit", ok, t0, 60)


def test_accept_module_relations():
    t0 = time.time()
    ok = all(validate_relations(spin_module(d)) == [] for d in (2, 3, 4))
    _gate("module-relations", ok, t0, 30)


def test_accept_factorization():
    t0 = time.time()
    mods = (spin_half(), spin_one())
    ok = True
    for m1 in mods:
        for m2 in mods:
            _, _, bad, sup = check_factorization(m1, m2, 2)
            ok = ok and not bad and sup > 0
    _, _, bad, _ = check_factorization(mods[0], mods[1], 2, drop_bridge=True)
    ok = ok and bool(bad)
    _, _, bad, _ = check_factorization(mods[0], mods[1], 2, drop_lambda=True)
    ok = ok and bool(bad)
    _gate("coproduct-factorization", ok, t0, 300)


def test_accept_eigenproduct():
    t0 = time.time()
    ok = True
    for mod, n in ((spin_half(), 1), (spin_one(), 2), (spin_module(4), 3)):
        _, _, bad, sup = eigenproduct_check(mod, n)
        ok = ok and not bad and sup > 0
    _, _, bad, _ = eigenproduct_check(spin_one(), 2, drop_exchange=True)
    ok = ok and bool(bad)
    _gate("eigenvector-product", ok, t0, 120)


def test_accept_roots():
    t0 = time.time()
    ok = True
    for typ, word in (("a1", (0, 1)), ("a2", (0, 1, 2, 1))):
        cartan = preset(typ)
        ordering = build_ordering(cartan, word, 40)
        ok = ok and verify_ord1(ordering, 8) == []
        for c in (1, 2):
            ok = ok and verify_shift_correspondence(cartan, word, c, 8) == []
    _gate("root-orderings", ok, t0, 5)


def test_accept_reconstruction():
    t0 = time.time()
    wv = weight_vector(spin_one(), 2, (-6, -6), (-1, 4))
    qm2, q2 = QRat.q_power(-2), QRat.q_power(2)

    def uv(i):
        return tuple(1 if j == i else 0 for j in range(3))

    den = {(0, 0, 0): ONE}
    for fac in ({uv(0): ONE, uv(2): -ONE}, {uv(1): ONE, uv(2): -ONE},
                {uv(0): ONE, uv(2): -qm2}, {uv(1): ONE, uv(2): -qm2},
                {uv(0): q2, uv(1): -ONE}):
        den = _poly_mul_map(den, fac)
    numer, surplus = rational_reconstruct(wv, den)
    _gate("rational-reconstruction", bool(numer) and surplus >= 20, t0, 60)
