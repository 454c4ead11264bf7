import pytest
from hypothesis import given, strategies as st

import conftest

from theaetetus.powers import integers, ratio, surd
from theaetetus.powers.errors import NotNaturalError
from theaetetus.powers.ratio import Ratio
from theaetetus.powers.surd import Commensurable, Incommensurable, Surd


@pytest.mark.parametrize("n, expected", [(18, Surd(Ratio(3, 1), 2)), (9, Surd(Ratio(3, 1), 1)),
                                         (2, Surd(Ratio(1, 1), 2))])
def test_sqrt_of_integer(n, expected):
    assert surd.sqrt_of_integer(n) == expected


@pytest.mark.parametrize("r, expected", [(Ratio(9, 4), Surd(Ratio(3, 2), 1)), (Ratio(1, 1), Surd(Ratio(1, 1), 1)),
                                         (Ratio(1, 2), Surd(Ratio(1, 2), 2))])
def test_sqrt_of_ratio(r, expected):
    s = surd.sqrt_of_ratio(r)
    assert s == expected
    assert surd.square(s) == r


def test_kernel_must_be_squarefree():
    with pytest.raises(NotNaturalError):
        Surd(Ratio(1, 1), 8)
    with pytest.raises(NotNaturalError):
        Surd(Ratio(1, 1), 0)


@pytest.mark.parametrize("coeff", [3, 1.5, "3/2", None])
def test_coefficient_must_be_a_ratio(coeff):
    with pytest.raises(TypeError):
        Surd(coeff, 2)


@pytest.mark.parametrize("s, expected", [(Surd(Ratio(3, 2), 1), Ratio(3, 2)), (Surd(Ratio(1, 1), 2), None),
                                         (Surd(Ratio(1, 1), 1), Ratio(1, 1))])
def test_is_rational(s, expected):
    assert surd.is_rational(s) == expected
    assert surd.commensurable_with_unit(s) == (expected is not None)


@pytest.mark.parametrize("s, expected", [(Surd(Ratio(1, 1), 17), Ratio(17, 1)), (Surd(Ratio(3, 2), 1), Ratio(9, 4)),
                                         (Surd(Ratio(1, 2), 2), Ratio(1, 2))])
def test_square(s, expected):
    assert surd.square(s) == expected


def test_text_forms():
    assert str(surd.sqrt_of_integer(3)) == "(1/1)·√3"
    assert surd.sqrt_of_integer(3).pretty() == "√3"
    assert surd.sqrt_of_integer(18).pretty() == "3√2"
    assert surd.sqrt_of_ratio(Ratio(9, 2)).pretty() == "(3/2)√2"
    assert surd.sqrt_of_integer(9).compact() == "3"
    assert surd.sqrt_of_integer(9).pretty() == "3"


def test_canonicalization_is_sound():
    for n in range(1, 10 ** 4 + 1):
        assert surd.square(surd.sqrt_of_integer(n)) == Ratio(n, 1)


def test_rational_iff_perfect_square(oracle_limit):
    for n in range(1, oracle_limit + 1):
        assert (surd.is_rational(surd.sqrt_of_integer(n)) is not None) == integers.is_perfect_square(n)


@pytest.mark.parametrize("a, b, expected", [
    (18, 8, Commensurable(Ratio(3, 2))),
    (2, 2, Commensurable(Ratio(1, 1))),
    (2, 3, Incommensurable(Ratio(2, 3))),
])
def test_commensurable(a, b, expected):
    assert surd.commensurable(surd.sqrt_of_integer(a), surd.sqrt_of_integer(b)) == expected


def test_commensurable_text_forms():
    assert str(Commensurable(Ratio(3, 2))) == "commensurable 3/2"
    assert str(Incommensurable(Ratio(2, 3))) == "incommensurable, square ratio 2/3"


def test_commensurability_agrees_with_square_to_square(rng):
    for _ in range(10 ** 4):
        s1, s2 = conftest.random_surd(rng), conftest.random_surd(rng)
        result = surd.commensurable(s1, s2)
        squares = surd.square(s1).compound(surd.square(s2).invert())
        if ratio.is_square_to_square(squares.num, squares.den):
            assert isinstance(result, Commensurable)
            assert surd.scale(s2, result.ratio) == s1
        else:
            assert isinstance(result, Incommensurable)
            assert result.square_ratio == squares


def test_commensurability_survives_scaling(rng):
    for _ in range(10 ** 3):
        s1, s2, c = conftest.random_surd(rng), conftest.random_surd(rng), conftest.random_ratio(rng)
        before = surd.commensurable(s1, s2)
        after = surd.commensurable(surd.scale(s1, c), surd.scale(s2, c))
        assert type(before) is type(after)
        assert before == after


@given(st.integers(min_value=1, max_value=500), st.integers(min_value=1, max_value=500))
def test_multiply_and_divide(a, b):
    s1, s2 = surd.sqrt_of_integer(a), surd.sqrt_of_integer(b)
    assert surd.multiply(s1, s2) == surd.sqrt_of_integer(a * b)
    assert surd.square(surd.divide(s1, s2)) == ratio.reduce(a, b)
    assert surd.multiply(surd.divide(s1, s2), s2) == s1


def test_commensurability_classes():
    classes = surd.commensurability_classes(20)
    assert classes[2] == [2, 8, 18]
    assert classes[1] == [1, 4, 9, 16]
    assert list(classes) == sorted(classes)
    assert sorted(n for members in classes.values() for n in members) == list(range(1, 21))
