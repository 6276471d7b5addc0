import itertools

from hypothesis import given, settings, strategies as st

from wfengine.qfield import QRat, ONE, ZERO, Q, QINV
from wfengine.algebra import (Elt, f, psi, project, straighten_word,
                              is_canonical_word, counit, coproduct_f_word,
                              word_text, word_from_text)

modes = st.integers(-3, 4)
fwords = st.lists(modes, min_size=0, max_size=4).map(
    lambda ms: tuple(f(m) for m in ms))


@given(fwords)
@settings(max_examples=100, deadline=None)
def test_straighten_is_canonical_and_idempotent(w):
    el = straighten_word(w)
    for u in el.terms:
        assert is_canonical_word(u), u
    again = sum((straighten_word(u).scale(c) for u, c in el.terms.items()),
                Elt({}))
    assert again == el


@given(fwords)
@settings(max_examples=100, deadline=None)
def test_projection_idempotent(w):
    p = project(Elt({w: ONE}))
    assert project(p) == p
    for u in p.terms:
        assert all(n >= 1 for kind, n in u if kind == "f"), u


@given(fwords, st.integers(0, 3))
@settings(max_examples=60, deadline=None)
def test_projection_kills_low_left_factors(w, m):
    # f[nonpositive] * x lies in the complement of the projected subalgebra:
    # straightening keeps the leading letter's mode nonpositive
    assert project(Elt({(f(-m),) + w: ONE})) == Elt({})


@given(fwords)
@settings(max_examples=100, deadline=None)
def test_straightening_preserves_degree_and_mode_sum(w):
    el = straighten_word(w)
    for u in el.terms:
        assert len(u) == len(w)
        assert sum(n for _, n in u) == sum(n for _, n in w)


def test_exchange_relation_mode_form():
    # f[m+1]f[n] - q^-2 f[m]f[n+1] = q^-2 f[n]f[m+1] - f[n+1]f[m]
    qm2 = QRat.q_power(-2)
    for m in range(-2, 3):
        for n in range(-2, 3):
            lhs = straighten_word((f(m + 1), f(n))) \
                - straighten_word((f(m), f(n + 1))).scale(qm2)
            rhs = straighten_word((f(n), f(m + 1))).scale(qm2) \
                - straighten_word((f(n + 1), f(m)))
            assert lhs == rhs, (m, n)


def test_psi_straightening_mode_form():
    qm2 = QRat.q_power(-2)
    for m in range(0, 4):
        for n in range(-2, 3):
            lhs = straighten_word((psi(m + 1), f(n))) \
                - straighten_word((psi(m), f(n + 1))).scale(qm2)
            rhs = straighten_word((f(n), psi(m + 1))).scale(qm2) \
                - straighten_word((f(n + 1), psi(m)))
            assert lhs == rhs, (m, n)


def test_coproduct_counit():
    # applying the counit to the psi leg recovers the original element
    for ms in ((1,), (2, 1), (1, 1, 3)):
        cop = coproduct_f_word(ms, kmax=0)
        left = Elt({})
        for (w1, w2), c in cop.terms.items():
            if all(kind == "p" and n == 0 for kind, n in w2):
                left = left + straighten_word(w1).scale(c)
        assert left == straighten_word(tuple(f(m) for m in ms))


def test_coproduct_respects_mode_sum():
    for ms in ((2,), (1, 2), (3, 1)):
        cop = coproduct_f_word(ms, kmax=4)
        for (w1, w2), c in cop.terms.items():
            assert sum(n for _, n in w1) + sum(n for _, n in w2) == sum(ms)


@given(fwords)
@settings(max_examples=60, deadline=None)
def test_word_text_roundtrip(w):
    el = straighten_word(w)
    for u in el.terms:
        assert word_from_text(word_text(u)) == u
