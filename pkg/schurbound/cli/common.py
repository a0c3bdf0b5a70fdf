"""Helpers shared by the SchurBound subcommands."""

from contextlib import contextmanager
from pathlib import Path
from typing import Iterator, Optional

import typer

from schurbound.config import (
    EXIT_LIMIT,
    EXIT_NOT_COMPARABLE,
    EXIT_USAGE,
)
from schurbound.core.partition import Partition, parse_partition
from schurbound.exceptions import (
    LimitExceeded,
    NotComparable,
    SchurBoundError,
)
from schurbound.ui import components


def partition_argument(value: Optional[str]) -> Optional[Partition]:
    """Typer callback turning ``4,1,1,1`` or ``4111`` into a Partition."""
    if value is None:
        return None
    try:
        return parse_partition(value)
    except SchurBoundError as e:
        raise typer.BadParameter(str(e))


def emit(payload: str, out: Optional[Path]) -> None:
    """Write the rendered payload to ``out`` or to stdout."""
    if out is None:
        typer.echo(payload.rstrip("\n"))
        return
    out.write_text(payload if payload.endswith("\n") else payload + "\n", encoding="utf-8")
    components.show_success(f"Wrote {out}")


@contextmanager
def handle_errors() -> Iterator[None]:
    """Map library errors onto the documented exit codes."""
    try:
        yield
    except NotComparable as e:
        components.show_error(str(e))
        raise typer.Exit(code=EXIT_NOT_COMPARABLE)
    except LimitExceeded as e:
        components.show_error(f"{e} (stopped after {e.found})")
        raise typer.Exit(code=EXIT_LIMIT)
    except SchurBoundError as e:
        components.show_error(str(e))
        raise typer.Exit(code=EXIT_USAGE)
