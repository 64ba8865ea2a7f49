"""Output formatting and error reporting shared by the commands."""
import csv
import io
from typing import Iterable

import logfire
from rich.console import Console
from rich.markup import escape

from relkit.core.errors import InputError, RelkitError
from relkit.core.models.engine_models import Scheme
from relkit.core.models.kind_models import OutputFormat
from relkit.core.models.relation_models import Relation
from relkit.core.models.tuple_models import Index

EXIT_OK = 0
EXIT_QUERY_ERROR = 1
EXIT_INPUT_ERROR = 2

err_console = Console(stderr=True, highlight=False)


def _cell(value) -> str:
    payload = getattr(value, "payload", None)
    return str(value) if payload is None else str(payload)


def format_relation(relation: Relation, columns: Iterable[str], output_format: OutputFormat) -> str:
    """Rows in canonical tuple order, columns in the given order."""
    columns = list(columns)
    rows = [[_cell(t[Index(c)]) for c in columns] for t in relation.sorted()]
    if not columns:
        # a head without variables asks whether the body is satisfiable
        return "true" if rows else "false"

    if output_format == OutputFormat.TABLE:
        widths = [max([len(c)] + [len(r[i]) for r in rows]) for i, c in enumerate(columns)]
        lines = ["  ".join(c.rjust(w) for c, w in zip(columns, widths)),
                 "  ".join("-" * w for w in widths)]
        lines += ["  ".join(v.rjust(w) for v, w in zip(r, widths)) for r in rows]
        return "\n".join(lines)

    buffer = io.StringIO()
    delimiter = "," if output_format == OutputFormat.CSV else "\t"
    writer = csv.writer(buffer, delimiter=delimiter, lineterminator="\n")
    writer.writerow(columns)
    writer.writerows(rows)
    return buffer.getvalue().rstrip("\n")


def format_scheme_relation(scheme: Scheme, name: str) -> str:
    schema = scheme.schema(name)
    columns = ", ".join(f"{idx}: {schema.signature[idx].name}" for idx in schema.order)
    lines = [f"{name}({columns})"]
    if schema.key is not None:
        lines.append(f"key ({', '.join(str(k) for k in sorted(schema.key))})")
    for domain in dict.fromkeys(schema.signature[idx] for idx in schema.order):
        lines.append(f"  {domain.describe()}")
    return "\n".join(lines)


def exit_code_for(error: RelkitError) -> int:
    return EXIT_INPUT_ERROR if isinstance(error, InputError) else EXIT_QUERY_ERROR


def report_error(error: RelkitError) -> int:
    """Print the error to stderr and return the exit code it maps to."""
    code = exit_code_for(error)
    logfire.error(f"{type(error).__name__}: {error}", extra={"exit_code": code})
    err_console.print(f"[bold red]error:[/bold red] {escape(str(error))}", soft_wrap=True)
    return code
