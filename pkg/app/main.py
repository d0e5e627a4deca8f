import logging
import os
from contextlib import asynccontextmanager

from dotenv import load_dotenv
from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse

from app.api.routes import router
from app.corpus.corpus import load_corpus
from app.exceptions import KnotReaderError
from app.settings import LOG_FORMAT, get_settings

# Configure logging
logging.basicConfig(
    level=os.getenv("KNOTREADER_LOG_LEVEL", "INFO").upper(),
    format=LOG_FORMAT,
)

# Load .env
load_dotenv()


@asynccontextmanager
async def lifespan(app: FastAPI):
    logging.info("🪢 Starting KnotReader API")

    settings = get_settings()
    logging.info(
        "🔧 max crossings %d, BN workers %d, stable columns %d",
        settings.max_crossings,
        settings.workers,
        settings.stable_columns,
    )

    try:
        corpus = load_corpus()
        logging.info("✅ Corpus loaded: %d diagrams, %d curated pairs", len(corpus.entries), len(corpus.pairs))
    except Exception as e:
        logging.error("❌ Corpus failed to load: %s", e)

    yield

    logging.info("🛑 Shutting down KnotReader API")


app = FastAPI(
    title="KnotReader API",
    description="Characteristic-2 Khovanov, secondary and Bar-Natan invariants of PD diagrams",
    lifespan=lifespan,
)


@app.exception_handler(KnotReaderError)
async def knotreader_error(request: Request, exc: KnotReaderError):
    return JSONResponse(status_code=exc.status_code, content=exc.to_dict())


@app.exception_handler(RequestValidationError)
async def validation_error(request: Request, exc: RequestValidationError):
    return JSONResponse(
        status_code=400,
        content={"detail": "Invalid request", "errors": exc.errors()},
    )


@app.exception_handler(Exception)
async def all_exceptions(request: Request, exc: Exception):
    return JSONResponse(
        status_code=500, content={"detail": f"Unexpected error: {exc}"}
    )


app.include_router(router)
