import math
import random

import pytest

from coxwalls import INFINITY, CapExceededError, CoxeterSystem, InvalidInputError
from coxwalls.core import Caps, all_reduced_words, ball, distance, normal_form, reduce
from coxwalls.systems import STANDARD, a1_a2, a2, affine_a2, b2, dihedral, grid, infinite_dihedral, right_angled

from _util import random_element


def test_reduce_examples():
    d = infinite_dihedral()
    assert reduce(d, "stst") == d.word("stst")
    assert normal_form(d, "stst").length == 4
    assert a2().normal_form("tst").word == a2().word("sts")
    m2 = dihedral(2)
    assert str(m2.element("ts")) == "st"
    assert m2.element("stst").is_identity
    assert str(m2.identity) == "1"


def test_distance_example():
    d = infinite_dihedral()
    assert distance(d, d.identity, d.element("tst")) == 3
    assert d.distance(d.element("s"), d.element("t")) == 2


@pytest.mark.parametrize(
    "factory, order",
    [(a2, 6), (b2, 8), (lambda: dihedral(5), 10), (a1_a2, 12), (lambda: right_angled(3), 8)],
)
def test_finite_group_orders(factory, order):
    sys = factory()
    assert len(ball(sys, order)) == order
    assert len(sys.ball(order + 2)) == order


def test_shortlex_and_multiplication():
    sys = affine_a2()
    x, y = sys.element("stu"), sys.element("us")
    assert (x * y) == sys.element("stuus") == sys.element("sts")
    assert x.inverse() == sys.element("uts")
    assert (x * x.inverse()).is_identity
    assert sys.element("s") < sys.element("t") < sys.element("st")
    assert sys.conjugate(sys.element("s"), sys.element("t")) == sys.element("sts")


def test_descents():
    sys = a2()
    w = sys.element("st")
    assert sys.is_right_descent(w, 1) and not sys.is_right_descent(w, 0)
    assert sys.is_left_descent(w, 0) and not sys.is_left_descent(w, 1)


def test_all_reduced_words():
    sys = a2()
    assert all_reduced_words(sys, sys.element("sts")) == {sys.word("sts"), sys.word("tst")}
    g = grid()
    assert len(g.all_reduced_words(g.element("ac"))) == 2


def test_braid_closure_cap():
    sys = right_angled(4)
    with pytest.raises(CapExceededError):
        sys.braid_closure(sys.word("stuv"), cap=5)


def test_ball_cap():
    with pytest.raises(CapExceededError):
        grid().ball(10, cap=50)


@pytest.mark.parametrize(
    "matrix, message",
    [
        ([[1, 2], [3, 1]], "matrix not symmetric"),
        ([[2, 3], [3, 1]], "must be 1"),
        ([[1, 1], [1, 1]], ">= 2 off the diagonal"),
    ],
)
def test_invalid_matrices(matrix, message):
    with pytest.raises(InvalidInputError, match=message):
        CoxeterSystem("st", matrix)


def test_invalid_names_and_letters():
    with pytest.raises(InvalidInputError):
        CoxeterSystem(["s", "s"], [[1, 2], [2, 1]])
    with pytest.raises(InvalidInputError, match="unknown generator"):
        a2().element("x")
    with pytest.raises(InvalidInputError):
        a2().normal_form((0, 5))
    with pytest.raises(InvalidInputError, match="system mismatch"):
        a2().distance(a2().identity, b2().identity)


def test_multichar_generators():
    sys = CoxeterSystem(["s1", "s2"], [[1, 3], [3, 1]])
    w = sys.element("s2 s1 s2")
    assert sys.format_word(w.word) == "s1 s2 s1"
    assert sys.element(["s1", "s1"]).is_identity


def test_float_engine_noncrystallographic():
    sys = dihedral(5)
    assert not sys.exact
    assert sys.element("ststs") == sys.element("tstst")
    assert len(sys.element("ststs")) == 5


def test_engines_agree_small(any_system):
    tits = any_system.with_engine("tits")
    for w in any_system.ball(5):
        assert tits.normal_form(w.word).word == w.word


def test_engines_agree_random_words():
    rng = random.Random(7)
    for sys in (infinite_dihedral(), a2(), b2(), a1_a2(), affine_a2(), dihedral(5)):
        tits = sys.with_engine("tits")
        for _ in range(150):
            w = tuple(rng.randrange(sys.rank) for _ in range(rng.randint(0, 8)))
            assert sys.normal_form(w).word == tits.normal_form(w).word


def test_length_is_word_metric(any_system, rng):
    sys = any_system
    for _ in range(50):
        a, b, c = (random_element(sys, rng) for _ in range(3))
        assert sys.distance(a, b) == sys.distance(b, a)
        assert sys.distance(a, c) <= sys.distance(a, b) + sys.distance(b, c)
        assert sys.distance(a, b) == len(sys.multiply(sys.inverse(a), b))


def test_caps_replace():
    sys = grid().with_caps(Caps(depth=3))
    assert sys.caps.depth == 3 and sys.caps.order == 200
    assert INFINITY == math.inf


def test_standard_catalogue_has_six_systems():
    assert set(STANDARD) == {"dinf", "a2", "b2", "a1a2", "a2tilde", "grid"}
