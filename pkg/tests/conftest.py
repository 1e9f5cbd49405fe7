import pytest
from hypothesis import strategies as st

from blore.words import ALPHABET, Word

ACCEPTANCE_LINES: list[str] = []


def word_texts(alphabet_size=2, min_size=0, max_size=12):
    return st.text(alphabet=ALPHABET[:alphabet_size], min_size=min_size, max_size=max_size)


@st.composite
def words(draw, max_alphabet=4, min_size=0, max_size=12):
    k = draw(st.integers(1, max_alphabet))
    text = draw(word_texts(k, min_size, max_size))
    return Word(text, k)


@pytest.fixture(scope="session")
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def pytest_addoption(parser):
    parser.addoption("--extended", action="store_true", help="run slow extended sweeps")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--extended"):
        return
    skip = pytest.mark.skip(reason="needs --extended")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)
