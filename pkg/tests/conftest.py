import pytest

from app.corpus.corpus import load_corpus
from app.diagram.link import LinkDiagram, parse_pd
from app.settings import reset_settings

TREFOIL = "PD[X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)]"
RIGHT_TREFOIL = "PD[X(4,2,5,1),X(6,4,1,3),X(2,6,3,5)]"
FIGURE_EIGHT = "PD[X(4,2,5,1),X(8,6,1,5),X(6,3,7,4),X(2,7,3,8)]"
HOPF_POSITIVE = "PD[X(1,3,2,4),X(3,1,4,2)]"
HOPF_NEGATIVE = "PD[X(4,1,3,2),X(2,3,1,4)]"
KINK = "PD[X(1,1,2,2)]"

SETTINGS_ENV = (
    "KNOTREADER_LOG_LEVEL",
    "KNOTREADER_WORKERS",
    "KNOTREADER_MAX_CROSSINGS",
    "KNOTREADER_STABLE_COLUMNS",
)


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    for key in SETTINGS_ENV:
        monkeypatch.delenv(key, raising=False)
    reset_settings()
    yield
    reset_settings()


def corpus_diagram(name: str) -> LinkDiagram:
    return parse_pd(load_corpus().entry(name).pd)


CORPUS_NAMES = [e.name for e in load_corpus().entries]
KNOT_NAMES = [e.name for e in load_corpus().entries if e.components == 1]
PAIR_NAMES = [p.name for p in load_corpus().pairs]


@pytest.fixture
def unknot() -> LinkDiagram:
    return corpus_diagram("unknot")


@pytest.fixture
def trefoil() -> LinkDiagram:
    return parse_pd(TREFOIL)


@pytest.fixture
def right_trefoil() -> LinkDiagram:
    return parse_pd(RIGHT_TREFOIL)


@pytest.fixture
def figure_eight() -> LinkDiagram:
    return parse_pd(FIGURE_EIGHT)


@pytest.fixture
def hopf_positive() -> LinkDiagram:
    return parse_pd(HOPF_POSITIVE)


@pytest.fixture
def hopf_negative() -> LinkDiagram:
    return parse_pd(HOPF_NEGATIVE)


@pytest.fixture
def unlink2() -> LinkDiagram:
    return corpus_diagram("unlink2")


@pytest.fixture(params=CORPUS_NAMES)
def any_diagram(request) -> LinkDiagram:
    return corpus_diagram(request.param)


@pytest.fixture(params=KNOT_NAMES)
def any_knot(request) -> LinkDiagram:
    return corpus_diagram(request.param)
