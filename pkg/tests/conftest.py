import pytest

from core.orders import alternating_scheme, constant_scheme
from core.words import Alphabet, parse_finite, parse_infinite


@pytest.fixture
def alphabet_ab():
    return Alphabet.from_string("ab")


@pytest.fixture
def sigma_alt():
    """a < b at odd positions, b < a at even positions."""
    return alternating_scheme(2)


@pytest.fixture
def constant_ab():
    return constant_scheme(2)


@pytest.fixture
def fw(alphabet_ab):
    return lambda text: parse_finite(text, alphabet_ab)


@pytest.fixture
def iw(alphabet_ab):
    return lambda text: parse_infinite(text, alphabet_ab)
