"""
rank_macwilliams.config
~~~~~~~~~~~~
Runtime settings read from the environment (and a local .env file)
"""

import os
from functools import lru_cache
from typing import Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field

load_dotenv()

ENV_PREFIX = "RANKMAC_"


class Settings(BaseModel):
    """
    Toolkit-wide defaults. Command-line flags override these per job.

    Attributes:
        enumeration_guard: Largest codebook size enumerated by brute force
        hadamard_guard: Largest ambient space size summed by the Hadamard oracle
        workers: Number of processes used for codeword enumeration
        log_level: Root logging level
        log_file: Optional path of a log file
        debug_shifts: Flag q-product evaluations that reach negative m
    """

    enumeration_guard: int = Field(default=2**24, ge=1)
    hadamard_guard: int = Field(default=2**20, ge=1)
    workers: int = Field(default=1, ge=1)
    log_level: str = "INFO"
    log_file: Optional[str] = None
    debug_shifts: bool = False


def _read_env() -> dict:
    values = {}
    for name in Settings.model_fields:
        raw = os.getenv(f"{ENV_PREFIX}{name.upper()}")
        if raw is not None and raw != "":
            values[name] = raw
    return values


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Return the process-wide settings, parsed once."""
    return Settings(**_read_env())
