import pytest

from mtlab.corpus import build_corpus, supplementary_rings
from mtlab.ideals import enumerate_ideals
from mtlab.ring import build_null_extension, build_product, build_zn


@pytest.fixture(scope="session")
def corpus():
    return build_corpus(24)


@pytest.fixture(scope="session")
def corpus_rings(corpus):
    return [c.ring for c in corpus]


@pytest.fixture(scope="session")
def wide_rings(corpus_rings):
    """Corpus plus rings outside the constructor families."""
    return corpus_rings + supplementary_rings()


@pytest.fixture(scope="session")
def lattices(wide_rings):
    return {id(R): enumerate_ideals(R) for R in wide_rings}


@pytest.fixture
def n22():
    return build_null_extension(2, 2)


@pytest.fixture
def z12():
    return build_zn(12)


@pytest.fixture
def z2z3():
    return build_product([build_zn(2), build_zn(3)])


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_mtlab_acceptance", None)
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in lines:
        terminalreporter.write_line(line)
