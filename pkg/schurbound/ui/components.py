"""Console output for SchurBound."""

import io
import logging
from typing import Callable, Sequence

from rich.box import ROUNDED
from rich.console import Console
from rich.logging import RichHandler
from rich.markup import escape
from rich.table import Table

from schurbound.core.poset import Chain, HasseInterval
from schurbound.core.schur import SchurExpansion
from schurbound.features.models import VerificationReport

console = Console(stderr=True)

TEXT_WIDTH = 120


def setup_logging(verbosity: int) -> None:
    """WARNING by default, INFO with -v, DEBUG with -vv; logs go to stderr."""
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity > 1:
        level = logging.DEBUG
    logging.basicConfig(
        level=level,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=console, show_path=False)],
        force=True,
    )


def render_text(draw: Callable[[Console], None]) -> str:
    """Run ``draw`` against an off-screen console and return the plain text."""
    target = Console(file=io.StringIO(), width=TEXT_WIDTH, record=True, color_system=None)
    draw(target)
    return target.export_text()


def show_error(message: str) -> None:
    """Show a simple error message."""
    console.print(f"[bold red]Error:[/bold red] {escape(message)}", highlight=False)


def show_success(message: str) -> None:
    """Show a simple success message."""
    console.print(f"[bold green]✓[/bold green] {escape(message)}", highlight=False)


def show_warning(message: str) -> None:
    console.print(f"[bold yellow]![/bold yellow] {escape(message)}", highlight=False)


def draw_interval(interval: HasseInterval) -> Callable[[Console], None]:
    def draw(out: Console) -> None:
        out.print(
            f"Interval {escape(f'[{interval.bottom}, {interval.top}]')} at rank {interval.rank}: "
            f"{len(interval.nodes)} nodes, {len(interval.edges)} covers, "
            f"longest chain {interval.length}",
            highlight=False,
        )
        table = Table(show_header=True, header_style="bold", box=ROUNDED)
        table.add_column("Depth", justify="right")
        table.add_column("Partition")
        table.add_column("Covers")
        for node in interval.nodes:
            table.add_row(
                str(interval.longest_from_top[node]),
                str(node),
                "  ".join(str(child) for child in interval.children(node)),
            )
        out.print(table)

    return draw


def draw_chains(chains: Sequence[Chain], longest_length: int) -> Callable[[Console], None]:
    def draw(out: Console) -> None:
        out.print(
            f"{len(chains)} chain(s); longest chain length {longest_length}", highlight=False
        )
        for number, chain in enumerate(chains, 1):
            out.print(f"{number}. (length {chain.length}) {chain}", highlight=False, soft_wrap=True)

    return draw


def draw_expansion(label: str, expansion: SchurExpansion, total: int) -> Callable[[Console], None]:
    def draw(out: Console) -> None:
        out.print(f"{label} = {expansion}", highlight=False, soft_wrap=True)
        table = Table(show_header=True, header_style="bold", box=ROUNDED)
        table.add_column("Shape")
        table.add_column("Coefficient", justify="right")
        for key, coeff in expansion.sorted_terms():
            table.add_row(str(key) or "()", str(coeff))
        out.print(table)
        out.print(f"W = {total}", highlight=False)

    return draw


def draw_report(report: VerificationReport, timing: bool = True) -> Callable[[Console], None]:
    def draw(out: Console) -> None:
        scope = ", ".join(f"{key}={value}" for key, value in report.scope.items())
        out.print(f"Verification '{report.mode}' ({scope})", highlight=False)
        value_names = []
        for record in report.records:
            for name in record.values:
                if name not in value_names:
                    value_names.append(name)
        table = Table(show_header=True, header_style="bold", box=ROUNDED)
        table.add_column("Partitions")
        for name in value_names:
            table.add_column(name, justify="right")
        table.add_column("Pass", justify="center")
        for record in report.records:
            table.add_row(
                " / ".join(str(p) for p in record.partitions),
                *(str(record.values.get(name, "")) for name in value_names),
                "yes" if record.passed else "NO",
            )
        out.print(table)
        summary = f"{len(report.records) - len(report.failures)}/{len(report.records)} passed"
        if timing and report.elapsed_ms is not None:
            summary += f" in {report.elapsed_ms:.1f} ms"
        out.print(("ALL PASS: " if report.all_pass else "FAILURES: ") + summary, highlight=False)

    return draw
