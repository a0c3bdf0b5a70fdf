"""Certificate and expansion commands."""

from pathlib import Path
from typing import Optional

from schurbound.cli.common import emit, handle_errors
from schurbound.config import CommandConfig, resolve_rank, validate_config
from schurbound.core.partition import Partition
from schurbound.core.polynomial import chern_class, monomial
from schurbound.core.schur import expand_to_schur, jacobi_trudi, pieri, weight
from schurbound.features.bounds import chain_bounds, compute_bound
from schurbound.ui import components, render


def bound_command_cli(
    partition: Partition,
    all_chains: bool = False,
    limit: Optional[int] = None,
    output_format: str = "text",
    out: Optional[Path] = None,
) -> None:
    """Print B(lambda), its floor 2^(l-1), the best chain and per-step contributions."""
    with handle_errors():
        config = CommandConfig(
            command="bound", partitions=[partition], output_format=output_format, out=out
        )
        if limit is not None:
            config.limit = limit
        validate_config(config)
        certificate = compute_bound(partition)
        per_chain = chain_bounds(partition, config.limit) if all_chains else None

        if config.output_format == "json":
            payload = render.to_json(render.certificate_to_dict(certificate, per_chain))
        else:
            payload = render.render_certificate_text(certificate, per_chain)
        emit(payload, config.out)


def expand_command_cli(
    partition: Partition,
    rank: Optional[int] = None,
    schur: bool = False,
    output_format: str = "text",
    out: Optional[Path] = None,
) -> None:
    """Expand c_lambda (or S_lambda with ``schur``) in the Schur basis and report W."""
    with handle_errors():
        config = validate_config(
            CommandConfig(
                command="expand",
                partitions=[partition],
                rank=rank,
                output_format=output_format,
                out=out,
            )
        )
        rank = resolve_rank(config.rank, max(partition.size, 1))
        if schur:
            poly = jacobi_trudi(partition, rank)
            label = f"S_({partition})"
        else:
            poly = monomial(partition, rank)
            label = f"c_({partition})"
        expansion = expand_to_schur(poly)
        total = weight(expansion)

        if config.output_format == "json":
            payload = render.to_json(render.expand_result_to_dict(label, poly, expansion))
        else:
            payload = components.render_text(components.draw_expansion(label, expansion, total))
        emit(payload, config.out)


def pieri_command_cli(
    index: int,
    partition: Partition,
    rank: Optional[int] = None,
    output_format: str = "text",
    out: Optional[Path] = None,
) -> None:
    """Expand c_i * S_lambda by the Pieri rule."""
    with handle_errors():
        config = validate_config(
            CommandConfig(
                command="pieri",
                partitions=[partition],
                rank=rank,
                output_format=output_format,
                out=out,
            )
        )
        rank = resolve_rank(config.rank, partition.size + index)
        expansion = pieri(index, partition, rank)
        label = f"c_{index} * S_({partition})"

        if config.output_format == "json":
            poly = chern_class(index, rank) * jacobi_trudi(partition, rank)
            payload = render.to_json(render.expand_result_to_dict(label, poly, expansion))
        else:
            payload = components.render_text(
                components.draw_expansion(label, expansion, weight(expansion))
            )
        emit(payload, config.out)
