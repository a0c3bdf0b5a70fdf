"""Poset exploration commands: Hasse diagrams and chains."""

from pathlib import Path
from typing import Optional

from schurbound.cli.common import emit, handle_errors
from schurbound.config import CommandConfig, resolve_rank, validate_config
from schurbound.core.partition import Partition, max_element, min_element
from schurbound.core.poset import build_interval, longest_chains_in, maximal_chains
from schurbound.ui import components, render


def hasse_command_cli(
    n: int,
    rank: Optional[int] = None,
    output_format: str = "text",
    out: Optional[Path] = None,
) -> None:
    """Render the full Hasse diagram of Gamma(n, r), from its maximum to (1^n)."""
    with handle_errors():
        config = validate_config(
            CommandConfig(command="hasse", n=n, rank=rank, output_format=output_format, out=out)
        )
        rank = resolve_rank(config.rank, config.n)
        interval = build_interval(max_element(n, rank), min_element(n), rank)

        if config.output_format == "json":
            payload = render.to_json(render.interval_to_dict(interval))
        elif config.output_format == "dot":
            payload = render.render_dot(interval, name=f"Gamma({n},{rank})")
        else:
            payload = components.render_text(components.draw_interval(interval))
        emit(payload, config.out)


def chains_command_cli(
    start: Partition,
    end: Partition,
    rank: Optional[int] = None,
    longest_only: bool = False,
    limit: Optional[int] = None,
    output_format: str = "text",
    out: Optional[Path] = None,
) -> None:
    """List the saturated chains between two comparable partitions."""
    with handle_errors():
        config = CommandConfig(
            command="chains",
            partitions=[start, end],
            rank=rank,
            output_format=output_format,
            out=out,
        )
        if limit is not None:
            config.limit = limit
        validate_config(config)
        rank = resolve_rank(config.rank, start.size)
        interval = build_interval(start, end, rank)
        if longest_only:
            chains = longest_chains_in(interval, config.limit)
        else:
            chains = maximal_chains(start, end, rank, config.limit)

        if config.output_format == "json":
            payload = render.to_json(
                render.chains_to_dict(start, end, rank, chains, longest_only, interval.length)
            )
        elif config.output_format == "dot":
            payload = render.render_dot(interval, edges=render.chain_edges(chains))
        else:
            payload = components.render_text(components.draw_chains(chains, interval.length))
        emit(payload, config.out)
