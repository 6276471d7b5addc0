import pytest

from wfengine.roots import (preset, build_ordering, circular_compare,
                            verify_ord1, verify_shift_correspondence,
                            classify_positive, OrderingError)


def test_a1_ladder_shape():
    cartan = preset("a1")
    ordering = build_ordering(cartan, (0, 1), 8)
    seq = ordering.sequence(imaginary_up_to=3)
    real = [x for x in seq if cartan.is_real(x)]
    # ascending ladder, imaginary roots, descending ladder
    assert real[0] in ((0, 1), (1, 0))
    levels = [cartan.imaginary_level(x) for x in seq
              if not cartan.is_real(x)]
    assert levels == sorted(levels)


def test_a2_valid_words():
    cartan = preset("a2")
    build_ordering(cartan, (0, 1, 2, 1), 10)
    build_ordering(cartan, (0, 2, 1, 2), 10)
    with pytest.raises(OrderingError):
        build_ordering(cartan, (0, 1, 1, 2), 10)


def test_ord1_convexity():
    for typ, word in (("a1", (0, 1)), ("a2", (0, 1, 2, 1))):
        cartan = preset(typ)
        ordering = build_ordering(cartan, word, 40)
        assert verify_ord1(ordering, 8) == []


def test_circular_compare_consistency():
    cartan = preset("a1")
    ordering = build_ordering(cartan, (0, 1), 12)
    seq = ordering.sequence(imaginary_up_to=2)
    for i, a in enumerate(seq):
        for b in seq[i + 1:]:
            assert circular_compare(ordering, a, b) == "precedes"


def test_shift_correspondence():
    for typ, word in (("a1", (0, 1)), ("a2", (0, 1, 2, 1))):
        cartan = preset(typ)
        for c in (1, 2):
            assert verify_shift_correspondence(cartan, word, c, 8) == []


def test_classify_positive():
    cartan = preset("a1")
    assert classify_positive(cartan, (1, 2)) == "raising"
    assert classify_positive(cartan, (2, 1)) == "lowering"
    assert classify_positive(cartan, (2, 2)) == "imaginary"
