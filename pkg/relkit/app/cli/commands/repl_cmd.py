"""
Interactive shell.

Rules are evaluated exactly as the query command evaluates them; dot commands
manage the session.
"""
import shlex
import sys
from pathlib import Path
from typing import Callable, Iterable, Iterator, Optional

import logfire
import typer
from prompt_toolkit import PromptSession
from prompt_toolkit.history import InMemoryHistory

from relkit.app.cli.commands.helper import report_error
from relkit.app.cli.session import (
    Session,
    describe_relations,
    describe_schema,
    explain_query,
    load,
    run_query,
)
from relkit.core.errors import InputError, RelkitError
from relkit.core.models.kind_models import OutputFormat

PROMPT = "relkit> "

HELP = """\
.load SCHEMA DATADIR   load a database, replacing the current one
.relations             list stored and builtin relations
.schema NAME           show the attributes, domains and key of a relation
.format table|csv|tsv  change the output format
.explain RULE          show the plan for a rule
.help                  this text
.quit                  leave
Any other line is a rule, e.g. answer(x, z) :- pc(x, y), pc(y, z)."""


class QuitRepl(Exception):
    """Raised by .quit."""


def _cmd_load(session: Session, arg: str) -> Optional[str]:
    parts = shlex.split(arg)
    if len(parts) != 2:
        raise InputError("usage: .load SCHEMA DATADIR")
    load(session, parts[0], parts[1])
    return describe_relations(session)


def _cmd_format(session: Session, arg: str) -> Optional[str]:
    try:
        session.output_format = OutputFormat(arg.strip())
    except ValueError:
        raise InputError(f"Unknown format {arg.strip()!r}; use table, csv or tsv")
    return None


def _cmd_quit(session: Session, arg: str) -> Optional[str]:
    raise QuitRepl()


DOT_COMMANDS: dict[str, Callable[[Session, str], Optional[str]]] = {
    ".load": _cmd_load,
    ".relations": lambda session, arg: describe_relations(session),
    ".schema": lambda session, arg: describe_schema(session, arg.strip()),
    ".format": _cmd_format,
    ".explain": lambda session, arg: explain_query(session, arg),
    ".help": lambda session, arg: HELP,
    ".quit": _cmd_quit,
    ".exit": _cmd_quit,
}


def handle_line(session: Session, line: str) -> Optional[str]:
    """Run one REPL line and return the text to print, if any.

    Raises:
        QuitRepl: on .quit.
        RelkitError: for any failing command or rule.
    """
    line = line.strip()
    if not line or line.startswith("%"):
        return None
    if line.startswith("."):
        name, _, arg = line.partition(" ")
        if name not in DOT_COMMANDS:
            raise InputError(f"Unknown command {name}; try .help")
        return DOT_COMMANDS[name](session, arg)
    return run_query(session, line)


def _interactive_lines() -> Iterator[str]:
    prompt = PromptSession(history=InMemoryHistory())
    while True:
        try:
            yield prompt.prompt(PROMPT)
        except KeyboardInterrupt:
            continue
        except EOFError:
            return


def run_loop(session: Session, lines: Iterable[str]) -> None:
    """Evaluate lines until .quit or end of input; errors are reported and the loop goes on."""
    for line in lines:
        try:
            output = handle_line(session, line)
        except QuitRepl:
            break
        except RelkitError as e:
            report_error(e)
            continue
        if output is not None:
            typer.echo(output)
    logfire.info("REPL finished")


def repl(
    schema: Optional[Path] = typer.Option(None, "--schema", "-s", help="YAML schema file"),
    data: Optional[Path] = typer.Option(None, "--data", "-d", help="Directory with one CSV per relation"),
    output_format: Optional[OutputFormat] = typer.Option(None, "--format", "-f", help="table, csv or tsv"),
) -> None:
    """Start an interactive shell, optionally with a database loaded."""
    session = Session() if output_format is None else Session(output_format=output_format)
    if (schema is None) != (data is None):
        raise typer.Exit(report_error(InputError("--schema and --data go together")))
    if schema is not None:
        try:
            load(session, schema, data)
        except RelkitError as e:
            raise typer.Exit(report_error(e))
    lines = _interactive_lines() if sys.stdin.isatty() else sys.stdin
    run_loop(session, lines)
