"""Command-line interface for SchurBound."""

from pathlib import Path
from typing import Optional

import typer

from schurbound.cli.bound import bound_command_cli, expand_command_cli, pieri_command_cli
from schurbound.cli.common import partition_argument
from schurbound.cli.explore import chains_command_cli, hasse_command_cli
from schurbound.cli.verify import verify_command_cli
from schurbound.config import EXIT_USAGE, VERIFY_MODES
from schurbound.ui import components

# Create the main app
app = typer.Typer(
    name="schurbound",
    help="""
    SchurBound - dominance posets, Schur expansions and Chern number bounds

    Features:
    • Hasse diagrams and chains of the dominance order
    • Schur expansions of Chern monomials and their weights
    • Lower-bound certificates B(lambda)
    • Exhaustive verification sweeps

    Partitions are written 4,1,1,1 or, when every part is at most 9, 4111.
    """,
    add_completion=False,
)

FORMAT_HELP = "Output format: text, json or dot"


@app.callback()
def main_callback(
    verbose: int = typer.Option(
        0, "--verbose", "-v", count=True, help="Log progress (-v) or debug details (-vv)"
    ),
) -> None:
    components.setup_logging(verbose)


@app.command(name="hasse")
def hasse_cli_entrypoint(
    n: int = typer.Option(..., "--n", help="Size of the partitions"),
    rank: Optional[int] = typer.Option(None, "--rank", "-r", help="Largest allowed part (default: n)"),
    output_format: str = typer.Option("text", "--format", help=FORMAT_HELP),
    out: Optional[Path] = typer.Option(None, "--out", help="Write output to this file"),
) -> None:
    """Show the Hasse diagram of Gamma(n, r) under dominance."""
    hasse_command_cli(n=n, rank=rank, output_format=output_format, out=out)


@app.command(name="chains")
def chains_cli_entrypoint(
    start: str = typer.Option(..., "--from", callback=partition_argument, help="Upper partition"),
    end: str = typer.Option(..., "--to", callback=partition_argument, help="Lower partition"),
    rank: Optional[int] = typer.Option(None, "--rank", "-r", help="Largest allowed part (default: n)"),
    longest_only: bool = typer.Option(False, "--longest-only", help="Only list longest chains"),
    limit: Optional[int] = typer.Option(None, "--limit", help="Fail if more chains than this exist"),
    output_format: str = typer.Option("text", "--format", help=FORMAT_HELP),
    out: Optional[Path] = typer.Option(None, "--out", help="Write output to this file"),
) -> None:
    """List saturated chains between two comparable partitions."""
    chains_command_cli(
        start=start,
        end=end,
        rank=rank,
        longest_only=longest_only,
        limit=limit,
        output_format=output_format,
        out=out,
    )


@app.command(name="bound")
def bound_cli_entrypoint(
    partition: str = typer.Argument(..., callback=partition_argument, help="Partition lambda"),
    all_chains: bool = typer.Option(
        False, "--all-chains", help="Also list B(C) for every longest chain"
    ),
    limit: Optional[int] = typer.Option(None, "--limit", help="Fail if more chains than this exist"),
    output_format: str = typer.Option("text", "--format", help="Output format: text or json"),
    out: Optional[Path] = typer.Option(None, "--out", help="Write output to this file"),
) -> None:
    """Compute the lower bound B(lambda) with its certificate."""
    bound_command_cli(
        partition=partition,
        all_chains=all_chains,
        limit=limit,
        output_format=output_format,
        out=out,
    )


@app.command(name="expand")
def expand_cli_entrypoint(
    partition: str = typer.Argument(..., callback=partition_argument, help="Partition lambda"),
    rank: Optional[int] = typer.Option(None, "--rank", "-r", help="Rank r (default: |lambda|)"),
    schur: bool = typer.Option(
        False, "--schur", help="Expand the Schur polynomial S_lambda instead of c_lambda"
    ),
    output_format: str = typer.Option("text", "--format", help="Output format: text or json"),
    out: Optional[Path] = typer.Option(None, "--out", help="Write output to this file"),
) -> None:
    """Expand the Chern monomial c_lambda in Schur polynomials and print its weight."""
    expand_command_cli(
        partition=partition, rank=rank, schur=schur, output_format=output_format, out=out
    )


@app.command(name="pieri")
def pieri_cli_entrypoint(
    index: int = typer.Argument(..., help="Index i of the factor c_i"),
    partition: str = typer.Argument(..., callback=partition_argument, help="Partition lambda"),
    rank: Optional[int] = typer.Option(None, "--rank", "-r", help="Rank r (default: |lambda| + i)"),
    output_format: str = typer.Option("text", "--format", help="Output format: text or json"),
    out: Optional[Path] = typer.Option(None, "--out", help="Write output to this file"),
) -> None:
    """Expand c_i * S_lambda with the Pieri rule."""
    pieri_command_cli(
        index=index, partition=partition, rank=rank, output_format=output_format, out=out
    )


@app.command(name="verify")
def verify_cli_entrypoint(
    mode: str = typer.Argument(..., help=f"One of: {', '.join(VERIFY_MODES)}"),
    n: Optional[int] = typer.Option(None, "--n", help="Partition size (weight-bound, cover-steps, pieri)"),
    k: Optional[int] = typer.Option(None, "--k", help="Degree (dominance, products)"),
    k2: Optional[int] = typer.Option(None, "--k2", help="Second degree for products (default: k)"),
    rank: Optional[int] = typer.Option(None, "--rank", "-r", help="Rank r (default: n or k)"),
    workers: int = typer.Option(1, "--workers", help="Worker processes for the sweep"),
    timing: bool = typer.Option(True, "--timing/--no-timing", help="Report elapsed time"),
    output_format: str = typer.Option("text", "--format", help="Output format: text or json"),
    out: Optional[Path] = typer.Option(None, "--out", help="Write output to this file"),
) -> None:
    """Run a verification sweep; exits 0 iff every check passes."""
    if mode not in VERIFY_MODES:
        components.show_error(f"Unknown mode '{mode}'. Valid: {', '.join(VERIFY_MODES)}")
        raise typer.Exit(code=EXIT_USAGE)
    verify_command_cli(
        mode=mode,
        n=n,
        k=k,
        k2=k2,
        rank=rank,
        workers=workers,
        timing=timing,
        output_format=output_format,
        out=out,
    )


def main() -> None:
    """Main entry point for the application."""
    app()


if __name__ == "__main__":
    main()
