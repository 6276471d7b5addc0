import itertools

import pytest

from wfengine.qfield import QRat, ONE, ZERO, Q, QINV, qnum
from wfengine.series import NEG_INF
from wfengine.modules import (Vec, spin_half, spin_one, spin_module,
                              validate_relations, weight_vector,
                              check_factorization, eigenproduct_check,
                              rational_reconstruct, _pmul, _taylor,
                              _expand_at_infinity, _poly_mul_map)


def test_vec_tensor_and_scalar():
    a = Vec({(0,): Q})
    b = Vec({(1,): QINV})
    assert (a * b).terms == {(0, 1): ONE}
    assert (Q * a).terms == {(0,): Q * Q}
    assert a - a == Vec({})
    assert not Vec({})


def test_taylor_against_geometric():
    # 1/(1 - qx) = sum q^k x^k
    got = _taylor((ONE,), (ONE, -Q), 5)
    assert got == [QRat.q_power(k) for k in range(6)]


def test_expand_at_infinity():
    # (1 - x)/(1 - qx) = q^-1 + (q^-1 - q^-2)/x + ... for large x
    got = _expand_at_infinity((ONE, -ONE), (ONE, -Q), 3)
    assert got[0] == QINV
    # den(x) * sum_j got_j x^-j must reproduce the numerator's coefficients
    den = (ONE, -Q)
    acc = {}
    for j, c in enumerate(got):
        for i, d in enumerate(den):
            acc[i - j] = acc.get(i - j, ZERO) + c * d
    assert acc.get(1, ZERO) == -ONE and acc.get(0, ZERO) == ONE


def test_relations_all_modules():
    for mod in (spin_half(), spin_one(), spin_module(4)):
        assert validate_relations(mod) == []


def test_general_module_matches_hand_tables():
    for d, hand in ((2, spin_half()), (3, spin_one())):
        gen = spin_module(d)
        assert gen.fsteps == hand.fsteps
        assert gen.esteps == hand.esteps
        for i in range(d):
            for which in ("p", "k"):
                ng, dg = gen._expanded(which, i)
                nh, dh = hand._expanded(which, i)
                assert _pmul(ng, dh) == _pmul(nh, dg), (d, i, which)


def test_psi_modes_cut_off():
    mod = spin_one()
    assert mod.psi_plus_mode(1, -2) == ZERO
    assert mod.psi_minus_mode(1, 3) == ZERO
    assert mod.psi_plus_mode(0, 0) == QRat.q_power(2)
    assert mod.psi_minus_mode(0, 0) == QRat.q_power(-2)


def test_f_action_nilpotent():
    mod = spin_half()
    assert mod.apply_word((("f", 1), ("f", 2)), 0) == {}
    out = mod.apply_word((("f", 3),), 0)
    assert out == {(1, 3): ONE}


def test_weight_vector_diagonal_z_grading():
    mod = spin_one()
    wv = weight_vector(mod, 2, (-3, -3), (-1, 1))
    for e, vec in wv.terms.items():
        assert e[-1] == -(e[0] + e[1])
        assert vec


def test_weight_vector_single_variable():
    # n = 1: coefficient at t^-m is f[m] v0 = z^m v1
    mod = spin_half()
    wv = weight_vector(mod, 1, (-4,), (-1,))
    for m in range(1, 5):
        assert wv.terms[(-m, m)] == Vec({(1,): ONE})


def test_factorization_negative_controls():
    h, o = spin_half(), spin_one()
    _, _, bad, sup = check_factorization(h, o, 2, drop_bridge=True)
    assert bad
    _, _, bad, sup = check_factorization(h, o, 2, drop_lambda=True)
    assert bad


def test_eigenproduct_negative_control():
    _, _, bad, sup = eigenproduct_check(spin_one(), 2, drop_exchange=True)
    assert bad and sup > 0


def test_eigenproduct_trivial_above_dimension():
    # n excitations above the module dimension vanish on both sides
    _, _, bad, sup = eigenproduct_check(spin_half(), 2, lo=(-3, -3))
    assert not bad and sup == 0


def test_reconstruct_reads_off_polynomial():
    # a series that is already polynomial reconstructs with trivial denominator
    mod = spin_half()
    wv = weight_vector(mod, 1, (-4,), (-1,))
    numer, surplus = rational_reconstruct(
        wv, {(1, 0): ONE, (0, 1): -ONE})  # t - z clears the single pole
    assert numer and surplus > 0
