import os
from functools import lru_cache

from dotenv import load_dotenv

load_dotenv()


def _int_env(key: str, default: int) -> int:
    raw = os.getenv(key)
    return int(raw) if raw not in (None, "") else default


class Settings:
    ledger_cap: int = _int_env("LIARLAB_LEDGER_CAP", 250_000)
    qe_node_cap: int = _int_env("LIARLAB_QE_NODE_CAP", 0)  # 0 = unlimited
    bounded_step_cap: int = _int_env("LIARLAB_BOUNDED_STEP_CAP", 2_000_000)
    log_level: str = os.getenv("LIARLAB_LOG_LEVEL", "WARNING").upper()
    golden_dir: str = os.getenv("LIARLAB_GOLDEN_DIR", "tests/golden")


@lru_cache
def get_settings() -> Settings:
    return Settings()
