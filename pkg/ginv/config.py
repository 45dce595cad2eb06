# ginv/config.py
import os
import logging

from dotenv import load_dotenv

load_dotenv()

logger = logging.getLogger(__name__)


def _env_int(name: str, default: int, minimum: int = 1) -> int:
    raw = os.getenv(name, "")
    if not raw:
        return default
    try:
        value = int(raw)
    except ValueError:
        logger.warning(f"{name}={raw!r} is not an integer, using {default}")
        return default
    if value < minimum:
        logger.warning(f"{name}={value} below {minimum}, using {default}")
        return default
    return value


# Environment Variables
BRUTE_FORCE_LIMIT = _env_int("GINV_BRUTE_FORCE_LIMIT", 20)
LOG_LEVEL = os.getenv("GINV_LOG_LEVEL", "INFO").upper()
WORKERS = _env_int("GINV_WORKERS", 1)
GENERATION_RETRIES = _env_int("GINV_GENERATION_RETRIES", 200)
