"""CLI command for verification sweeps."""

from pathlib import Path
from typing import Optional

import typer

from schurbound.cli.common import emit, handle_errors
from schurbound.config import (
    EXIT_OK,
    EXIT_VERIFICATION_FAILED,
    CommandConfig,
    resolve_rank,
    validate_config,
)
from schurbound.exceptions import ConfigurationError
from schurbound.features import verify
from schurbound.ui import components, render


def verify_command_cli(
    mode: str,
    n: Optional[int] = None,
    k: Optional[int] = None,
    k2: Optional[int] = None,
    rank: Optional[int] = None,
    workers: int = 1,
    timing: bool = True,
    output_format: str = "text",
    out: Optional[Path] = None,
) -> None:
    """
    Run one sweep and exit 0 iff every record passes.

    Args:
        mode: weight-bound, cover-steps or pieri (sized by n); dominance or
            products (sized by k, and k2 for the second factor of products)
        n: Size of the partitions for n-sized sweeps
        k: Degree for k-sized sweeps
        k2: Degree of the second factor for products (defaults to k)
        rank: Rank r; defaults to n or k
        workers: Worker processes for the sweep
        timing: Include elapsed time in the output
    """
    with handle_errors():
        config = validate_config(
            CommandConfig(
                command="verify",
                n=n,
                k=k,
                rank=rank,
                output_format=output_format,
                out=out,
                workers=workers,
            )
        )
        if mode in ("weight-bound", "cover-steps", "pieri"):
            if config.n is None:
                raise ConfigurationError(f"verify {mode} needs --n")
            rank = resolve_rank(config.rank, config.n)
            sweep = {
                "weight-bound": verify.verify_weight_bound,
                "cover-steps": verify.verify_cover_steps,
                "pieri": verify.verify_pieri_bound,
            }[mode]
            report = sweep(config.n, rank, workers=config.workers)
        elif mode == "dominance":
            if config.k is None:
                raise ConfigurationError("verify dominance needs --k")
            rank = resolve_rank(config.rank, config.k)
            report = verify.verify_reverse_dominance_sweep(config.k, rank, workers=config.workers)
        elif mode == "products":
            if config.k is None:
                raise ConfigurationError("verify products needs --k")
            second = k2 if k2 is not None else config.k
            if second < 1:
                raise ConfigurationError(f"--k2 must be a positive integer, got {second}")
            rank = resolve_rank(config.rank, config.k + second)
            report = verify.verify_product_closure(config.k, second, rank, workers=config.workers)
        else:
            raise ConfigurationError(f"Unknown verification mode '{mode}'")

        if config.output_format == "json":
            payload = render.to_json(render.report_to_dict(report, timing=timing))
        else:
            payload = components.render_text(components.draw_report(report, timing=timing))
        emit(payload, config.out)

    if not report.all_pass:
        components.show_warning(
            f"{len(report.failures)} of {len(report.records)} records failed in '{mode}'"
        )
    raise typer.Exit(code=EXIT_OK if report.all_pass else EXIT_VERIFICATION_FAILED)
