"""Bundled PD codes used by the consistency suite and the tests."""

import json
import logging
from functools import lru_cache
from pathlib import Path
from typing import Dict, List, Tuple

from pydantic import BaseModel, Field, model_validator

from app.diagram.link import LinkDiagram, parse_pd
from app.exceptions import TheoryConfigError

CORPUS_PATH = Path(__file__).with_name("corpus.json")


class CorpusEntry(BaseModel):
    name: str
    pd: str = Field(..., description="PD code in the grammar accepted by read_pd")
    components: int = Field(..., description="Number of link components")
    provenance: str = Field(..., description="Where the diagram comes from")


class CuratedPair(BaseModel):
    name: str
    left: str
    right: str
    move: str = Field(..., description="Diagram move relating the two entries")


class Corpus(BaseModel):
    entries: List[CorpusEntry]
    pairs: List[CuratedPair] = Field(default_factory=list)

    @model_validator(mode="after")
    def _pairs_resolve(self):
        names = {e.name for e in self.entries}
        for pair in self.pairs:
            for side in (pair.left, pair.right):
                if side not in names:
                    raise ValueError(f"pair {pair.name} names unknown entry {side}")
        return self

    def entry(self, name: str) -> CorpusEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise TheoryConfigError(
            f"Unknown corpus entry '{name}'. Known: {', '.join(self.names)}"
        )

    @property
    def names(self) -> List[str]:
        return [e.name for e in self.entries]

    def diagram(self, name: str) -> LinkDiagram:
        return parse_pd(self.entry(name).pd)

    def pair_diagrams(self) -> List[Tuple[CuratedPair, LinkDiagram, LinkDiagram]]:
        return [(p, self.diagram(p.left), self.diagram(p.right)) for p in self.pairs]


@lru_cache(maxsize=1)
def load_corpus() -> Corpus:
    corpus = Corpus.model_validate(json.loads(CORPUS_PATH.read_text()))
    logging.debug("Loaded %d corpus entries from %s", len(corpus.entries), CORPUS_PATH)
    return corpus


def corpus_diagrams() -> Dict[str, LinkDiagram]:
    corpus = load_corpus()
    return {name: corpus.diagram(name) for name in corpus.names}


def resolve_diagram_text(text: str) -> str:
    """Corpus names stand in for their PD codes."""
    key = text.strip()
    corpus = load_corpus()
    if key in corpus.names:
        return corpus.entry(key).pd
    return text
