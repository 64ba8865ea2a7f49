"""
Info command: version, effective limits and builtin relations.
"""
import typer

from relkit.core.config import settings
from relkit.core.service.engine.builtin_service import builtin_relations


def info() -> None:
    """Print the version and effective configuration."""
    limits = settings.limits
    lines = [
        f"{settings.PROJECT_NAME} {settings.VERSION}",
        f"output format: {settings.OUTPUT_FORMAT}",
        "limits:",
    ]
    lines += [f"  {name}: {value}" for name, value in limits.model_dump().items()]
    lines.append("builtin relations:")
    lines += [f"  {name}/{b.arity}: {b.description}" for name, b in sorted(builtin_relations().items())]
    typer.echo("\n".join(lines))
