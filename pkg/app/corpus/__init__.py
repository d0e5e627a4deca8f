from app.corpus.corpus import (
    Corpus,
    CorpusEntry,
    CuratedPair,
    corpus_diagrams,
    load_corpus,
    resolve_diagram_text,
)

__all__ = [
    "Corpus",
    "CorpusEntry",
    "CuratedPair",
    "corpus_diagrams",
    "load_corpus",
    "resolve_diagram_text",
]
