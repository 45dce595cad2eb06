# ginv/utils/formatting.py
import json
from typing import Any, Dict

from pydantic import BaseModel


def trim(s: str, n: int = 4000) -> str:
    s = (s or "").strip()
    return s if len(s) <= n else s[: n-3] + "..."


def to_json(model: BaseModel) -> str:
    return model.model_dump_json(indent=2) + "\n"


def error_body(reason: str, detail: str, **extra: Any) -> Dict[str, Any]:
    return {"ok": False, "error": reason, "detail": trim(detail), **extra}


def error_json(reason: str, detail: str, **extra: Any) -> str:
    return json.dumps(error_body(reason, detail, **extra), indent=2) + "\n"
