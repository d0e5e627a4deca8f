import pytest

from app.complexes import build_khovanov
from app.corpus import load_corpus
from app.homology import core_invariants
from app.service.checks import check_pair, run_checks
from tests.conftest import PAIR_NAMES


@pytest.mark.parametrize("name", PAIR_NAMES)
def test_curated_pairs_agree(name):
    corpus = load_corpus()
    pair = next(p for p in corpus.pairs if p.name == name)
    left = corpus.diagram(pair.left)
    results = check_pair(left, corpus.diagram(pair.right))
    failed = [(r.name, r.witness) for r in results if not r.passed]
    assert not failed
    names = {r.name for r in results}
    assert {"invariance kh", "invariance kk", "invariance bn", "invariance filtered"} <= names
    assert ("invariance reduced_kh" in names) == left.is_knot


def test_pairs_cover_every_reidemeister_move():
    moves = {p.move.split(",")[0] for p in load_corpus().pairs}
    assert moves == {"Reidemeister I", "Reidemeister II", "Reidemeister III"}


def test_braid_closures_are_the_negative_hopf_link():
    corpus = load_corpus()
    expected = core_invariants(build_khovanov(corpus.diagram("hopf_negative"))).kh
    for name in ("hopf_braid_121", "hopf_braid_212"):
        d = corpus.diagram(name)
        assert d.k == 2
        assert d.signs == (-1, -1, -1)
        assert core_invariants(build_khovanov(d)).kh.entries == expected.entries


def test_consistency_suite(any_diagram):
    results = run_checks(any_diagram)
    failed = [(r.name, r.detail) for r in results if not r.passed and not r.informational]
    assert not failed
    assert any(r.name == "stable isomorphism" for r in results)


def test_harmonic_is_informational(hopf_positive):
    harmonic = next(r for r in run_checks(hopf_positive) if r.name == "harmonic representatives")
    assert harmonic.informational
    assert set(harmonic.witness) == {"harmonic", "monomial", "filtered"}
