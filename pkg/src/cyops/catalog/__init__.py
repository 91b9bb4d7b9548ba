"""Built-in operator catalog backed by ``.cyop`` fixtures in ``data/``."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path

from .. import cyop
from ..theta import ThetaOperator, check_yy
from . import tables, transcription

DATA_DIR = Path(__file__).with_name("data")

# listed as the order-4 equation satisfied by the transformed period; not YY
NON_YY = frozenset({"7-A-order4"})
MANIFEST = DATA_DIR / "MANIFEST.sha256"


class UnknownEntry(KeyError):
    pass


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    group: str
    operator: ThetaOperator
    provenance: str
    expected: dict = field(default_factory=dict)
    yy: bool = True

    @property
    def order(self) -> int:
        return self.operator.order


_GROUPS = (
    ("order3-list", transcription.ORDER3, "order-3 YY list, operator D_{id}"),
    ("order3-construction", transcription.DEGREE7, "degree-7 order-3 construction, variant {id}"),
    ("order5", transcription.ORDER5, "order-5 YY operator {id}"),
    ("hypergeometric", {"hyp5-(1/2,1/2)": transcription.HYP5}, "hypergeometric order-5 operator"),
    ("order7", transcription.ORDER7, "order-7 case {id}"),
    ("order7-transform", transcription.TRANSFORMED_A, "transformed case A, {id}"),
)


def _expected(eid: str, group: str) -> dict:
    out: dict = {"yy": (eid not in NON_YY, "operator class")}
    if group == "order3-list":
        out["level"] = (int(eid[:-1]), "label")
    row = next((r for r in tables.ELL_TABLE if r.catalog_id == eid), None)
    if row is not None:
        out["ell"] = (row.ell, "reference ell-number table")
        if row.excluded:
            out["ell_excluded"] = (row.excluded, "table consistency")
    if eid == "hyp5-(1/2,1/2)":
        out["ell"] = ((16, 80, -160), "hypergeometric closed form")
    if eid == "7-A-order4":
        out["annihilates"] = ("transformed case A period", "transformed case A")
    if eid in tables.INSTANTONS:
        out["instantons"] = (tables.INSTANTONS[eid], "reference instanton numbers")
    return out


def slug(eid: str) -> str:
    """File-system safe name for an entry id."""
    table = str.maketrans({"*": "x", "'": "p", "/": "-", "(": "", ")": "", ",": "_"})
    return eid.translate(table)


def _transcribed() -> list[CatalogEntry]:
    out = []
    for group, ops, prov in _GROUPS:
        for eid, op in ops.items():
            out.append(CatalogEntry(eid, group, op, prov.format(id=eid), _expected(eid, group),
                                    check_yy(op)))
    # stable order: by operator order, then listing order
    out.sort(key=lambda e: e.order)
    return out


def fixture_path(eid: str) -> Path:
    return DATA_DIR / f"{slug(eid)}.cyop"


def write_fixtures(directory: Path = DATA_DIR) -> None:
    """Regenerate ``.cyop`` files and the checksum manifest from the transcription."""
    directory.mkdir(parents=True, exist_ok=True)
    lines = []
    for e in _transcribed():
        name = f"{slug(e.id)}.cyop"
        text = cyop.dumps(e.operator, f"{e.id}: {e.provenance}")
        (directory / name).write_text(text, encoding="utf-8")
        lines.append(f"{hashlib.sha256(text.encode()).hexdigest()}  {name}")
    (directory / "MANIFEST.sha256").write_text("\n".join(lines) + "\n", encoding="utf-8")


def manifest_mismatches() -> list[str]:
    """Fixture files whose checksum differs from the manifest."""
    bad = []
    for line in MANIFEST.read_text(encoding="utf-8").splitlines():
        digest, name = line.split()
        data = (DATA_DIR / name).read_bytes()
        if hashlib.sha256(data).hexdigest() != digest:
            bad.append(name)
    return bad


@lru_cache(maxsize=1)
def _entries() -> tuple:
    out = []
    for e in _transcribed():
        op = cyop.load(fixture_path(e.id))
        out.append(CatalogEntry(e.id, e.group, op, e.provenance, e.expected, check_yy(op)))
    return tuple(out)


def list_entries(order: int | None = None, group: str | None = None) -> list[CatalogEntry]:
    return [e for e in _entries()
            if (order is None or e.order == order) and (group is None or e.group == group)]


def get_entry(eid: str) -> CatalogEntry:
    for e in _entries():
        if e.id == eid:
            return e
    raise UnknownEntry(f"no catalog entry {eid!r}")


def ids() -> list[str]:
    return [e.id for e in _entries()]


__all__ = [
    "CatalogEntry",
    "NON_YY",
    "UnknownEntry",
    "fixture_path",
    "get_entry",
    "ids",
    "list_entries",
    "manifest_mismatches",
    "slug",
    "write_fixtures",
]
