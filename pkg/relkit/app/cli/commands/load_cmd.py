"""
Load command: read a schema and its data directory.
"""
from pathlib import Path

import typer

from relkit.app.cli.commands.helper import report_error
from relkit.app.cli.session import describe_relations, open_session
from relkit.core.errors import RelkitError


def load(
    schema: Path = typer.Option(..., "--schema", "-s", help="YAML schema file"),
    data: Path = typer.Option(..., "--data", "-d", help="Directory with one CSV per relation"),
    check: bool = typer.Option(False, "--check", help="Only validate; print nothing on success"),
) -> None:
    """Load and validate a database, then list its relations."""
    try:
        session = open_session(schema, data)
    except RelkitError as e:
        raise typer.Exit(report_error(e))
    if not check:
        typer.echo(describe_relations(session))
