"""Defaults and validation for SchurBound command options.

SchurBound reads no configuration files or environment variables; every
behavior is selected by command-line flags and checked here.
"""

from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional

from schurbound.core.partition import Partition
from schurbound.exceptions import ConfigurationError

DEFAULT_CHAIN_LIMIT = 10**6
DEFAULT_FORMAT = "text"
DEFAULT_WORKERS = 1
OUTPUT_FORMATS = ("text", "json", "dot")
VERIFY_MODES = ("weight-bound", "dominance", "cover-steps", "pieri", "products")

# Formats each subcommand can render.
COMMAND_FORMATS = {
    "hasse": ("text", "json", "dot"),
    "chains": ("text", "json", "dot"),
    "bound": ("text", "json"),
    "expand": ("text", "json"),
    "pieri": ("text", "json"),
    "verify": ("text", "json"),
}

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_LIMIT = 3
EXIT_NOT_COMPARABLE = 4


@dataclass
class CommandConfig:
    """Parsed options for one subcommand invocation."""

    command: str
    partitions: List[Partition] = field(default_factory=list)
    n: Optional[int] = None
    k: Optional[int] = None
    rank: Optional[int] = None
    output_format: str = DEFAULT_FORMAT
    limit: Optional[int] = DEFAULT_CHAIN_LIMIT
    out: Optional[Path] = None
    workers: int = DEFAULT_WORKERS


def resolve_rank(rank: Optional[int], size: Optional[int]) -> int:
    """Rank defaults to the size (n or k) when not given."""
    if rank is not None:
        return rank
    if size is None:
        raise ConfigurationError("Either --rank or a size (--n/--k) is required")
    return size


def validate_config(config: CommandConfig) -> CommandConfig:
    """Reject option combinations no command can honor."""
    allowed = COMMAND_FORMATS.get(config.command)
    if allowed is None:
        raise ConfigurationError(f"Unknown command '{config.command}'")
    if config.output_format not in allowed:
        raise ConfigurationError(
            f"Format '{config.output_format}' is not available for '{config.command}'. "
            f"Valid: {', '.join(allowed)}"
        )
    for name in ("n", "k", "rank"):
        value = getattr(config, name)
        if value is not None and value < 1:
            raise ConfigurationError(f"--{name} must be a positive integer, got {value}")
    if config.limit is not None and config.limit < 1:
        raise ConfigurationError(f"--limit must be a positive integer, got {config.limit}")
    if config.workers < 1:
        raise ConfigurationError(f"--workers must be a positive integer, got {config.workers}")
    return config
