"""Run-wide configuration shared by the compute modules and the CLI."""

from __future__ import annotations

import os
from dataclasses import dataclass, replace

DEFAULT_PRECISION_BITS = 128
DEFAULT_BUDGET = 1 << 26
CACHE_ENV_VAR = "BCONVLAB_CACHE_DIR"


@dataclass(frozen=True)
class RunConfig:
    """Knobs every long computation respects.

    seed 0 and threads 1 make default runs fully deterministic; any other
    thread count must produce byte-identical payloads (enumeration shards by
    digit prefix and merges order-independently).
    """

    precision_bits: int = DEFAULT_PRECISION_BITS
    budget: int = DEFAULT_BUDGET
    cache_dir: str | None = None
    seed: int = 0
    threads: int = 1
    output_format: str = "table"

    def __post_init__(self):
        if self.precision_bits < 64:
            raise ValueError("precision_bits must be at least 64")
        if self.budget < 1 << 10:
            raise ValueError("budget must be at least 2^10")
        if self.output_format not in ("table", "json", "csv"):
            raise ValueError(f"unknown output format {self.output_format!r}")
        if self.threads < 1:
            raise ValueError("threads must be positive")

    def with_(self, **kw) -> "RunConfig":
        return replace(self, **kw)


def default_config() -> RunConfig:
    """Config with the cache dir taken from the environment when set."""
    return RunConfig(cache_dir=os.environ.get(CACHE_ENV_VAR))
