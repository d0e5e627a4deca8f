import logging
import os

from dotenv import load_dotenv

LOG_FORMAT = "%(asctime)s %(name)s [%(levelname)s] %(message)s"


class Settings:
    """Runtime knobs read from the environment (and .env, if present)."""

    def __init__(self):
        self.log_level = os.getenv("KNOTREADER_LOG_LEVEL", "INFO").upper()
        self.workers = max(1, int(os.getenv("KNOTREADER_WORKERS", "1")))
        self.max_crossings = int(os.getenv("KNOTREADER_MAX_CROSSINGS", "14"))
        self.stable_columns = max(1, int(os.getenv("KNOTREADER_STABLE_COLUMNS", "2")))


_settings = None


def get_settings() -> Settings:
    global _settings
    if _settings is None:
        load_dotenv()
        _settings = Settings()
    return _settings


def reset_settings() -> None:
    global _settings
    _settings = None


def configure_logging(level: str | int | None = None) -> None:
    level = level or get_settings().log_level
    logging.basicConfig(level=level, format=LOG_FORMAT, force=True)
