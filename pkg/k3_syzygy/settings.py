"""
Run configuration

Defaults can be overridden from the environment (or a .env file) and then from
command-line flags.
"""

import os
import random
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from dotenv import load_dotenv

from k3_syzygy.errors import InputError

load_dotenv()  # Load environment variables from .env file

# 2^31 - 1: products of two residues fit in int64, so numpy elimination stays vectorised
DEFAULT_PRIME = 2147483647
DEFAULT_SEED = 0
DEFAULT_WORKERS = 4
DEFAULT_LOG_LEVEL = "WARNING"


def _env_int(name: str, default: Optional[int]) -> Optional[int]:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"environment variable {name} must be an integer", value=raw)


@dataclass(frozen=True)
class RunConfig:
    """Everything that influences a computation. The seed fixes every random choice."""

    command: str
    input_paths: List[str] = field(default_factory=list)
    prime: int = DEFAULT_PRIME
    exact_mode: bool = False
    max_degree: Optional[int] = None
    seed: int = DEFAULT_SEED
    formal: bool = False
    workers: int = DEFAULT_WORKERS
    log_level: str = DEFAULT_LOG_LEVEL
    timings: bool = True
    options: Dict[str, Any] = field(default_factory=dict)

    def rng(self, salt: str = "") -> random.Random:
        """A generator derived only from the seed (and a per-use salt)."""
        return random.Random(f"{self.seed}:{salt}")


def load_run_config(
    command: str,
    input_paths: Optional[List[str]] = None,
    prime: Optional[int] = None,
    exact_mode: bool = False,
    max_degree: Optional[int] = None,
    seed: Optional[int] = None,
    formal: bool = False,
    workers: Optional[int] = None,
    log_level: Optional[str] = None,
    timings: bool = True,
    options: Optional[Dict[str, Any]] = None,
) -> RunConfig:
    """Resolve flag > environment > default for each setting."""
    return RunConfig(
        command=command,
        input_paths=list(input_paths or []),
        prime=prime if prime is not None else _env_int("K3SYZ_PRIME", DEFAULT_PRIME),
        exact_mode=exact_mode,
        max_degree=(
            max_degree if max_degree is not None else _env_int("K3SYZ_MAX_DEGREE", None)
        ),
        seed=seed if seed is not None else _env_int("K3SYZ_SEED", DEFAULT_SEED),
        formal=formal,
        workers=workers if workers is not None else _env_int("K3SYZ_WORKERS", DEFAULT_WORKERS),
        log_level=log_level or os.environ.get("K3SYZ_LOG_LEVEL", DEFAULT_LOG_LEVEL),
        timings=timings,
        options=dict(options or {}),
    )
