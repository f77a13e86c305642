import pytest

from qathin.corpus import load_corpus, load_grids
from qathin.diagram import parse_pd
from qathin.families import rational_pd


@pytest.fixture(scope="session")
def corpus():
    return load_corpus()


@pytest.fixture(scope="session")
def corpus_by_name(corpus):
    return {e.name: e for e in corpus}


@pytest.fixture(scope="session")
def grids():
    return load_grids()


@pytest.fixture(scope="session")
def grids_by_name(grids):
    return {g.name: g for g in grids}


@pytest.fixture(scope="session")
def rh_trefoil():
    # all-positive trefoil, traced by hand: signs +++, 1 component, 5 faces
    return parse_pd("X 1,5,2,4; X 3,1,4,6; X 5,3,6,2", name="rh_trefoil")


@pytest.fixture(scope="session")
def pos_hopf():
    return parse_pd("X 1,3,2,4; X 3,1,4,2", name="hopf_pos")


@pytest.fixture(scope="session")
def figure_eight():
    return rational_pd((2, 2), name="4_1")


@pytest.fixture(scope="session")
def unknot():
    return parse_pd("", name="unknot")
