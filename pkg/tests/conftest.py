import pytest

from sylvester.words import enumerate_words


@pytest.fixture(scope="session")
def words4():
    return list(enumerate_words(4))


@pytest.fixture(scope="session")
def words5():
    return list(enumerate_words(5))
