import pytest

from stringalg import fixtures

CORPUS_SEED = 20260809


@pytest.fixture(scope="session")
def skew6():
    return fixtures.skew6()


@pytest.fixture(scope="session")
def thirteen():
    return fixtures.thirteen()


@pytest.fixture(scope="session")
def nine():
    return fixtures.nine()


@pytest.fixture(scope="session")
def commsquare():
    return fixtures.commutative_square()


@pytest.fixture(scope="session")
def corpus500():
    from stringalg.corpus import string_corpus

    return string_corpus(CORPUS_SEED, 500)
