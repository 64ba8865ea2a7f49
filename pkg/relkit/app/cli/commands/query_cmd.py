"""
Query and explain commands.
"""
from pathlib import Path
from typing import Optional

import typer

from relkit.app.cli.commands.helper import report_error
from relkit.app.cli.session import explain_query, open_session, run_query
from relkit.core.errors import RelkitError
from relkit.core.models.kind_models import OutputFormat


def query(
    schema: Path = typer.Option(..., "--schema", "-s", help="YAML schema file"),
    data: Path = typer.Option(..., "--data", "-d", help="Directory with one CSV per relation"),
    rule: str = typer.Option(..., "--expr", "-e", help="Rule, e.g. 'answer(x, z) :- pc(x, y), pc(y, z).'"),
    output_format: Optional[OutputFormat] = typer.Option(None, "--format", "-f", help="table, csv or tsv"),
) -> None:
    """Evaluate one rule and print its answer."""
    try:
        session = open_session(schema, data, output_format)
        typer.echo(run_query(session, rule))
    except RelkitError as e:
        raise typer.Exit(report_error(e))


def explain(
    schema: Path = typer.Option(..., "--schema", "-s", help="YAML schema file"),
    data: Path = typer.Option(..., "--data", "-d", help="Directory with one CSV per relation"),
    rule: str = typer.Option(..., "--expr", "-e", help="Rule to explain"),
) -> None:
    """Show the compiled expression and the join order chosen for a rule."""
    try:
        session = open_session(schema, data)
        typer.echo(explain_query(session, rule))
    except RelkitError as e:
        raise typer.Exit(report_error(e))
