"""
Main command-line application entry point.
"""
import sys

import logfire
import typer

from relkit.app.cli.cli import register_commands
from relkit.app.cli.commands.helper import report_error
from relkit.core.config.general_config import settings, settings_error


def configure_logging(verbose: bool = typer.Option(
        False, "--verbose", "-v", help="Log to stderr")) -> None:
    """Configure logfire and refuse to run on unparsable settings; stdout is reserved for results."""
    console = False
    if verbose or settings.LOG_CONSOLE:
        console = logfire.ConsoleOptions(
            min_log_level="debug" if verbose else settings.LOG_LEVEL, output=sys.stderr)
    logfire.configure(
        token=settings.LOGFIRE_TOKEN,
        send_to_logfire="if-token-present",
        service_name=settings.PROJECT_NAME,
        service_version=settings.VERSION,
        console=console,
    )
    if settings_error is not None:
        raise typer.Exit(report_error(settings_error))


def create_application() -> typer.Typer:
    """Create and configure the typer application."""
    app = typer.Typer(
        name=settings.PROJECT_NAME,
        help=settings.DESCRIPTION,
        no_args_is_help=True,
        add_completion=False,
    )
    app.callback()(configure_logging)
    return register_commands(app)


app = create_application()


def run() -> None:
    app()


if __name__ == "__main__":
    run()
