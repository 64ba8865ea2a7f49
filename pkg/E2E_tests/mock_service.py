"""Fixture databases for the end-to-end tests."""
import csv
import shutil
import tempfile
from abc import ABC, abstractmethod
from pathlib import Path

FIXTURES = Path(__file__).parent / "fixtures"


class AbstractFixtureDatabase(ABC):
    """
    Abstract base class for fixture databases: a schema file plus a data directory
    with one CSV per relation, as the CLI expects them.
    """

    @abstractmethod
    def __init__(self):
        self.schema_path: Path
        self.data_dir: Path

    def args(self) -> list[str]:
        """The -s/-d options pointing at this database."""
        return ["-s", str(self.schema_path), "-d", str(self.data_dir)]

    def cleanup(self) -> None:
        pass


class CitiesPartsDatabase(AbstractFixtureDatabase):
    """Suppliers, parts and projects."""

    def __init__(self):
        self.schema_path = FIXTURES / "cities_parts" / "schema.yaml"
        self.data_dir = FIXTURES / "cities_parts" / "data"


class ParentChildDatabase(AbstractFixtureDatabase):
    """The positional parent/child relation pc."""

    def __init__(self):
        self.schema_path = FIXTURES / "parent_child" / "schema.yaml"
        self.data_dir = FIXTURES / "parent_child" / "data"


class TemporaryCopyDatabase(AbstractFixtureDatabase):
    """
    A writable copy of another fixture database in a temporary directory.
    Subclasses rewrite files through `rewrite`.
    """
    source = CitiesPartsDatabase

    def __init__(self):
        original = self.source()
        self.root = Path(tempfile.mkdtemp(prefix="relkit-e2e-"))
        self.schema_path = self.root / "schema.yaml"
        self.data_dir = self.root / "data"
        shutil.copy(original.schema_path, self.schema_path)
        shutil.copytree(original.data_dir, self.data_dir)
        self.rewrite()

    def rewrite(self) -> None:
        pass

    def cleanup(self) -> None:
        shutil.rmtree(self.root, ignore_errors=True)


class PermutedCitiesPartsDatabase(TemporaryCopyDatabase):
    """Every CSV with its columns reversed."""

    def rewrite(self) -> None:
        for path in self.data_dir.glob("*.csv"):
            with path.open(newline="", encoding="utf-8") as f:
                rows = list(csv.reader(f))
            with path.open("w", newline="", encoding="utf-8") as f:
                csv.writer(f).writerows(row[::-1] for row in rows)


class BadQuantityDatabase(TemporaryCopyDatabase):
    """parts.csv with a non-numeric quantity on its third line."""

    def rewrite(self) -> None:
        path = self.data_dir / "parts.csv"
        path.write_text("pid,pname,sid,pqty\n213,hose,322,13\n214,tube,321,six\n", encoding="utf-8")


class BadEncodingDatabase(TemporaryCopyDatabase):
    """parts.csv with a byte that is not UTF-8 on its second line."""

    def rewrite(self) -> None:
        path = self.data_dir / "parts.csv"
        path.write_bytes(b"pid,pname,sid,pqty\n213,ho\xffse,322,13\n")
