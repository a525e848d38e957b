"""Catalog entry manifests.

A manifest is a ``key: value`` text file; ``#`` starts a comment line. The
``notes`` key may repeat and its lines are joined. File paths are relative
to the manifest's directory. Unknown keys are an error.
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from pathlib import Path

from ..cosetgraph import Shape

TIERS = ("1", "2", "out-of-scope")
SHAPE_KINDS = ("complete", "complete_bipartite", "other")


class ManifestError(ValueError):
    pass


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    tier: str
    group_file: str | None = None
    h_file: str | None = None
    k_file: str | None = None
    expected_group_order: int | None = None
    expected_h_order: int | None = None
    expected_k_order: int | None = None
    expected_vertex_count: int | None = None
    expected_valency_d: int | None = None
    expected_edge_count: int | None = None
    expected_s: int | None = None
    expected_s_min: int = 2
    expected_shape: str | None = None
    expected_bipartite: bool | None = None
    expected_edge_stab_soluble: bool = True
    notes: str = ""
    source: str | None = None

    @property
    def runnable(self) -> bool:
        return self.tier != "out-of-scope"

    @property
    def valency_at_least_six(self) -> bool:
        """Valency at least 6, as the classification assumes."""
        return self.expected_valency_d is not None and self.expected_valency_d >= 6

    def path(self, which: str) -> Path:
        name = getattr(self, f"{which}_file")
        if name is None:
            raise ManifestError(f"{self.id}: no {which}_file")
        base = Path(self.source).parent if self.source else Path.cwd()
        return base / name


_INT_KEYS = {f.name for f in fields(CatalogEntry) if f.name.startswith("expected_")} - {
    "expected_shape", "expected_bipartite", "expected_edge_stab_soluble"}
_BOOL_KEYS = {"expected_bipartite", "expected_edge_stab_soluble"}
_KEYS = {f.name for f in fields(CatalogEntry)} - {"source"}


def _parse_bool(key, text):
    low = text.strip().lower()
    if low in ("true", "yes"):
        return True
    if low in ("false", "no"):
        return False
    raise ManifestError(f"{key}: expected true or false, got {text!r}")


def parse_manifest(text: str, source: str | None = None) -> CatalogEntry:
    values: dict = {}
    notes = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, val = line.partition(":")
        key, val = key.strip(), val.strip()
        if not sep:
            raise ManifestError(f"line {lineno}: expected 'key: value'")
        if key not in _KEYS:
            raise ManifestError(f"line {lineno}: unknown key {key!r}")
        if key == "notes":
            notes.append(val)
            continue
        if key in values:
            raise ManifestError(f"line {lineno}: duplicate key {key!r}")
        if key in _INT_KEYS:
            try:
                values[key] = int(val.replace("_", ""))
            except ValueError:
                raise ManifestError(f"line {lineno}: {key} must be an integer") from None
        elif key in _BOOL_KEYS:
            values[key] = _parse_bool(key, val)
        else:
            values[key] = val
    for key in ("id", "tier"):
        if key not in values:
            raise ManifestError(f"missing required key {key!r}")
    if values["tier"] not in TIERS:
        raise ManifestError(f"tier must be one of {', '.join(TIERS)}")
    if "expected_shape" in values:
        shape = Shape.parse(values["expected_shape"])
        if shape.kind not in SHAPE_KINDS:
            raise ManifestError(f"unknown shape {values['expected_shape']!r}")
    entry = CatalogEntry(notes=" ".join(notes), source=source, **values)
    if entry.runnable:
        for key in ("group_file", "h_file", "k_file"):
            if getattr(entry, key) is None:
                raise ManifestError(f"{entry.id}: runnable entries need {key}")
        if entry.tier == "1" and (entry.expected_edge_count or 0) > 5 * 10**5:
            raise ManifestError(f"{entry.id}: tier 1 allows at most 5e5 edges")
    return entry


def read_manifest(path) -> CatalogEntry:
    path = Path(path)
    return parse_manifest(path.read_text(), str(path))


DATA_DIR = Path(__file__).parent / "data"


def load_catalog(directory=None) -> list[CatalogEntry]:
    """Every manifest (``*.txt``) in the directory, sorted by file name."""
    directory = DATA_DIR if directory is None else Path(directory)
    return [read_manifest(p) for p in sorted(directory.glob("*.txt"))]


def find_entry(entry_id: str, directory=None) -> CatalogEntry:
    for e in load_catalog(directory):
        if e.id == entry_id:
            return e
    raise KeyError(entry_id)
