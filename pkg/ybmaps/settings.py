# settings.py
import os
from dotenv import load_dotenv, find_dotenv

load_dotenv(find_dotenv(usecwd=True))


def _int_env(name: str, default: int, minimum: int = 0) -> int:
    raw = (os.getenv(name) or "").strip()
    if not raw:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise RuntimeError(f"{name} must be an integer, got {raw!r}")
    if value < minimum:
        raise RuntimeError(f"{name} must be >= {minimum}, got {value}")
    return value


def _flag_env(name: str) -> bool:
    return (os.getenv(name) or "").strip().lower() in {"1", "true", "yes", "on"}


# ---------- ENV ----------
YB_SEED = _int_env("YB_SEED", 0)
YB_NUM_BOX = _int_env("YB_NUM_BOX", 20, minimum=1)
YB_DEN_BOX = _int_env("YB_DEN_BOX", 10, minimum=1)
YB_CHARPOLY_MAX_DIM = _int_env("YB_CHARPOLY_MAX_DIM", 6, minimum=1)
YB_DIRECT_EXPANSION_MAX_DIM = _int_env("YB_DIRECT_EXPANSION_MAX_DIM", 4, minimum=1)
YB_LOG_LEVEL = (os.getenv("YB_LOG_LEVEL") or "WARNING").strip().upper()
YB_NO_TIMESTAMP = _flag_env("YB_NO_TIMESTAMP")
