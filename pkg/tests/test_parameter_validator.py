import pytest

from utils.parameter_validator import MAX_RANK, NON_INTEGRAL, validate_rank, validate_ratio


@pytest.mark.parametrize("value, expected", [("3", 3), (" 4 ", 4), (5, 5), ("0", 0)])
def test_valid_rank(value, expected):
    assert validate_rank(value) == (True, expected, "")


@pytest.mark.parametrize("value", ["", None, "-1", "2.5", "three"])
def test_invalid_rank(value):
    is_valid, _, error = validate_rank(value)
    assert not is_valid
    assert error


def test_zero_rank_can_be_refused():
    is_valid, parsed, error = validate_rank("0", "n", allow_zero=False)
    assert (is_valid, parsed) == (False, 0)
    assert error == "n must be positive"


def test_rank_above_maximum():
    is_valid, _, error = validate_rank(str(MAX_RANK + 1), "n-max")
    assert not is_valid
    assert error.startswith("n-max=")


@pytest.mark.parametrize("value, expected", [
    ("1", 1),
    ("4", 4),
    (2, 2),
    ("nonintegral", NON_INTEGRAL),
    ("Non-Integral", NON_INTEGRAL),
])
def test_valid_ratio(value, expected):
    assert validate_ratio(value) == (True, expected, "")


@pytest.mark.parametrize("value", ["", "0", "-2", "1/2", "half"])
def test_invalid_ratio(value):
    is_valid, _, error = validate_ratio(value)
    assert not is_valid
    assert error


def test_nonintegral_can_be_refused():
    is_valid, _, error = validate_ratio("nonintegral", allow_nonintegral=False)
    assert not is_valid
    assert error == "r must be an integer here"
