from wfengine.qfield import ONE, ZERO
from wfengine.algebra import Elt, f
from wfengine.weightfn import (universal_weight, default_window,
                               check_closed_form, check_antisymmetry,
                               symmetrized_weight, specialize_q1)


def test_single_variable_terms():
    w = universal_weight(1, (-4,), (-1,))
    for m in range(1, 5):
        assert w.terms[(-m,)] == Elt({(f(m),): ONE})
    assert (0,) not in w.terms


def test_mode_sum_ceiling():
    # all coefficients live on total exponent <= -n
    w = universal_weight(2)
    for e in w.terms:
        assert sum(e) <= -2


def test_closed_form_two_variables():
    _, _, bad = check_closed_form()
    assert not bad


def test_antisymmetry():
    for n in (2, 3):
        rep = check_antisymmetry(n)
        assert rep["regularity"] == [], n
        for perm, bad in rep["pairs"].items():
            assert not bad, (n, perm)


def test_symmetrized_supported_on_negative_exponents():
    s = symmetrized_weight(2)
    assert s.terms
    for e, c in s.terms.items():
        if c:
            assert all(x < 0 for x in e)


def test_specialize_q1_drops_nothing_silently():
    w = universal_weight(2, (-3, -3), (-1, 1))
    cl = specialize_q1(w)
    assert set(cl.terms) <= set(w.terms)
    assert cl.terms
