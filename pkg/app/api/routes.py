import asyncio
import logging
from typing import Any, Dict, List

from fastapi import APIRouter
from pydantic import BaseModel, Field

from app.corpus.corpus import load_corpus
from app.exceptions import TheoryConfigError
from app.service.models import TheoryRequest
from app.service.theories import THEORIES, TheoryService

router = APIRouter()


class CorpusListing(BaseModel):
    entries: List[Dict[str, Any]]
    pairs: List[Dict[str, Any]]


class BatchRequest(BaseModel):
    items: List[TheoryRequest] = Field(..., description="Requests run with the same theory")


class BatchResponse(BaseModel):
    responses: List[Dict[str, Any]]


def make_service(theory: str) -> TheoryService:
    """Factory function to create the service for a theory name"""
    if theory not in THEORIES:
        raise TheoryConfigError(f"Unknown theory: {theory}. Use one of {sorted(THEORIES)}")
    return TheoryService(theory)


@router.get("/health")
async def health() -> Dict[str, str]:
    return {"status": "ok"}


@router.get("/corpus", response_model=CorpusListing)
async def corpus_endpoint():
    """Bundled diagrams and the curated equivalent pairs"""
    corpus = load_corpus()
    return CorpusListing(
        entries=[e.model_dump() for e in corpus.entries],
        pairs=[p.model_dump() for p in corpus.pairs],
    )


@router.post("/invariants/{theory}")
async def invariants_endpoint(theory: str, req: TheoryRequest) -> Dict[str, Any]:
    """Compute one theory for one diagram"""
    service = make_service(theory)
    try:
        report = await asyncio.to_thread(service.run, req)
    except Exception as e:
        logging.error(f"Error computing {theory} for {req.pd}: {str(e)}")
        raise
    return report.to_json_dict()


@router.post("/invariants/{theory}/batch", response_model=BatchResponse)
async def invariants_batch(theory: str, req: BatchRequest):
    """Process multiple diagrams concurrently"""
    service = make_service(theory)
    tasks = [run_async(service, item) for item in req.items]
    responses = await asyncio.gather(*tasks)
    return BatchResponse(responses=responses)


async def run_async(service: TheoryService, req: TheoryRequest) -> Dict[str, Any]:
    """Process a single request; failures are reported in place"""
    try:
        report = await asyncio.to_thread(service.run, req)
        return report.to_json_dict()
    except Exception as e:
        logging.error(f"Error computing {service.name} for {req.pd}: {str(e)}")
        details = e.to_dict() if hasattr(e, "to_dict") else {"detail": str(e)}
        return {"diagram": req.pd, "error": details}
