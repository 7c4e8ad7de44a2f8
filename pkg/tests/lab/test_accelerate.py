from fractions import Fraction

import pytest

from upcross.lab.accelerate import AccelerationError, AccelerationExhausted, accelerate


def tails(base, count, A=1):
    return [A - Fraction(1, base ** i) for i in range(1, count + 1)]


def test_squared_tails_at_half():
    result = accelerate(tails(2, 16), tails(4, 16), Fraction(1, 2), Fraction(1, 2 ** 20), 1)
    assert result.visited == [1, 3, 7, 15]
    assert result.rounds == 3
    assert result.value == 1 - Fraction(1, 4 ** 15)
    assert result.error_bound == Fraction(1, 16)
    assert 1 - result.value <= result.error_bound


def test_cubed_tails_at_quarter():
    result = accelerate(tails(2, 16), tails(8, 16), Fraction(1, 4), Fraction(1, 2 ** 20), 1)
    assert result.rounds == 2
    assert 1 - result.value <= Fraction(1, 2 ** 20)


def test_first_value_may_already_be_close_enough():
    result = accelerate(tails(2, 4), tails(4, 4), Fraction(1, 2), Fraction(1, 4), 1)
    assert result.rounds == 0
    assert result.visited == [1]
    assert result.to_dict() == {'value': '3/4', 'rounds': 0, 'error_bound': '1/2', 'visited': [1]}


def test_short_prefix_is_exhausted():
    with pytest.raises(AccelerationExhausted):
        accelerate(tails(2, 10), tails(4, 10), Fraction(1, 2), Fraction(1, 2 ** 20), 1)


@pytest.mark.parametrize('c, precision', [(0, Fraction(1, 8)), (1, Fraction(1, 8)), (Fraction(1, 2), 0)])
def test_argument_checks(c, precision):
    with pytest.raises(AccelerationError):
        accelerate(tails(2, 4), tails(4, 4), c, precision, 1)


def test_premise_is_checked_on_the_prefix():
    with pytest.raises(AccelerationError) as exc_info:
        accelerate(tails(2, 4), tails(2, 4), Fraction(1, 2), Fraction(1, 8), 1)
    assert not isinstance(exc_info.value, AccelerationExhausted)


def test_unequal_lengths():
    with pytest.raises(AccelerationError):
        accelerate(tails(2, 4), tails(4, 3), Fraction(1, 2), Fraction(1, 8), 1)
