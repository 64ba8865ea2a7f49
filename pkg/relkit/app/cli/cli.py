"""
Command registry: attaches every command to the application.
"""
import typer

from relkit.app.cli.commands import info_cmd, load_cmd, query_cmd, repl_cmd


def register_commands(app: typer.Typer) -> typer.Typer:
    app.command("load")(load_cmd.load)
    app.command("query")(query_cmd.query)
    app.command("explain")(query_cmd.explain)
    app.command("repl")(repl_cmd.repl)
    app.command("info")(info_cmd.info)
    return app
