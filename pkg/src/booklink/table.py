"""The bundled knot table, witness diagrams, and spectrum table regeneration.

Rows are settled by one of three rules:

* ``2-bridge``: bridge index 2 forces ``{n,1,0}``.
* ``BB``: equal bridge and braid indices force ``{d,...,1,0}``.
* ``witness``: bridge index 3 with ``b_2 = 1``.  Strict decrease gives
  ``2 <= b_1``, and a verified (1,2)-representative gives ``b_1 <= 2``.
"""

from __future__ import annotations

import csv
import io
import os
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

from .errors import (
    Ambiguous,
    CountMismatch,
    IdentityMismatch,
    IndexMismatch,
    InvalidSpectrum,
    InvariantViolation,
    MissingWitness,
    NoMatch,
    NotA12Representative,
    RowMismatch,
    SchemaError,
    _knot_sort_key,
)
from .identify import identify
from .polynomial import LaurentPolynomial, parse_pairs
from .spectrum import Spectrum, bb_spectrum, parse_spectrum, two_bridge_spectrum
from .word import BooklinkWord, braid_count, bridge_index, check, parse_word

__all__ = [
    "KNOT_COLUMNS",
    "EXPECTED_ROWS",
    "DERIVATIONS",
    "KnotRecord",
    "WitnessEntry",
    "WitnessReport",
    "TableRow",
    "TableDocument",
    "data_dir",
    "load_knot_data",
    "load_witnesses",
    "verify_witness",
    "derive_row",
    "regenerate_table",
    "emit",
    "parse_emitted",
]

KNOT_COLUMNS = ("name", "crossings", "bridge", "braid", "dt", "jones", "spectrum", "derivation")
EMIT_COLUMNS = ("name", "bridge", "braid", "spectrum", "derivation")
EXPECTED_ROWS = 85
DERIVATIONS = ("2-bridge", "BB", "witness")


def data_dir() -> Path:
    """``$BOOKLINK_DATA`` if set, otherwise the data bundled with the package."""
    override = os.environ.get("BOOKLINK_DATA")
    if override:
        return Path(override)
    return Path(str(resources.files("booklink") / "data"))


@dataclass(frozen=True)
class KnotRecord:
    name: str
    crossing_number: int
    bridge_index: int
    braid_index: int
    dt_code: tuple[int, ...]
    jones: LaurentPolynomial
    expected_spectrum: Spectrum
    derivation: str


def _record(row: dict[str, str]) -> KnotRecord:
    name = row["name"]
    try:
        rec = KnotRecord(
            name=name,
            crossing_number=int(row["crossings"]),
            bridge_index=int(row["bridge"]),
            braid_index=int(row["braid"]),
            dt_code=tuple(int(x) for x in row["dt"].split()),
            jones=parse_pairs(row["jones"]),
            expected_spectrum=parse_spectrum(row["spectrum"]),
            derivation=row["derivation"],
        )
    except InvalidSpectrum as exc:
        raise InvariantViolation(f"{name}: spectrum {row['spectrum']}: {exc}") from exc
    except ValueError as exc:
        raise SchemaError(f"{name}: {exc}") from exc
    _check_record(rec)
    return rec


def _check_record(r: KnotRecord) -> None:
    def fail(msg):
        raise InvariantViolation(f"{r.name}: {msg}")

    s = r.expected_spectrum
    if s.bridge_index != r.bridge_index or s.braid_index != r.braid_index:
        fail(f"spectrum {s} disagrees with bridge {r.bridge_index}, braid {r.braid_index}")
    if r.derivation not in DERIVATIONS:
        fail(f"unknown derivation {r.derivation!r}")
    if r.derivation == "witness" and (r.bridge_index != 3 or s.values != (r.braid_index, 2, 1, 0)):
        fail("witness rows need bridge index 3 and spectrum {n,2,1,0}")
    if len(r.dt_code) != r.crossing_number or any(x % 2 for x in r.dt_code):
        fail(f"DT code {' '.join(map(str, r.dt_code))} is not {r.crossing_number} even entries")


def load_knot_data(path: str | Path | None = None, *,
                   expected_rows: int | None = EXPECTED_ROWS) -> list[KnotRecord]:
    """Read and check ``knots.csv``.

    ``expected_rows=None`` skips the row-count check, which is handy for
    partial tables.
    """
    path = Path(path) if path is not None else data_dir() / "knots.csv"
    with path.open(newline="") as fh:
        reader = csv.DictReader(fh)
        if tuple(reader.fieldnames or ()) != KNOT_COLUMNS:
            raise SchemaError(f"{path}: header must be {','.join(KNOT_COLUMNS)}")
        records = [_record(row) for row in reader]
    names = [r.name for r in records]
    if len(set(names)) != len(names):
        raise SchemaError(f"{path}: duplicate knot names")
    if expected_rows is not None and len(records) != expected_rows:
        raise CountMismatch(f"{path}: expected {expected_rows} rows, found {len(records)}")
    return records


# -- witnesses ---------------------------------------------------------------

@dataclass(frozen=True)
class WitnessEntry:
    knot: str
    path: Path
    word: BooklinkWord


def load_witnesses(directory: str | Path | None = None,
                   records: Sequence[KnotRecord] | None = None) -> list[WitnessEntry]:
    """Load ``<knot>.blw`` for every witness row of ``records``.

    Each file must hold a word with one critical pair and braid count 2.
    """
    directory = Path(directory) if directory is not None else data_dir() / "witnesses"
    if records is None:
        records = load_knot_data()
    wanted = [r.name for r in records if r.derivation == "witness"]
    missing = [n for n in wanted if not (directory / f"{n}.blw").is_file()]
    if missing:
        raise MissingWitness(missing)
    entries = []
    for name in wanted:
        path = directory / f"{name}.blw"
        word = parse_word(path.read_text())
        check(word)
        d, n = bridge_index(word), braid_count(word)
        if (d, n) != (1, 2):
            raise NotA12Representative(f"{name}: word has d={d}, n={n}")
        entries.append(WitnessEntry(name, path, word))
    return entries


@dataclass(frozen=True)
class WitnessReport:
    knot: str
    bridge: int
    braid: int
    candidates: tuple[str, ...]

    @property
    def unique(self) -> bool:
        return self.candidates == (self.knot,)


def verify_witness(e: WitnessEntry, table: Sequence[KnotRecord], *,
                   strict: bool = False) -> WitnessReport:
    """Confirm that ``e`` is a (1,2)-representative of its named knot.

    The Jones match may be shared with other knots; that is reported in the
    result, or raised as :class:`Ambiguous` when ``strict`` is set.
    """
    d, n = bridge_index(e.word), braid_count(e.word)
    if (d, n) != (1, 2):
        raise IndexMismatch(f"{e.knot}: expected d=1 n=2, got d={d} n={n}")
    try:
        found = identify(e.word, table).candidates
    except NoMatch as exc:
        raise IdentityMismatch(f"{e.knot}: Jones polynomial matches no table entry") from exc
    if e.knot not in found:
        raise IdentityMismatch(f"{e.knot}: Jones polynomial matches {', '.join(found)}")
    report = WitnessReport(e.knot, d, n, found)
    if strict and not report.unique:
        raise Ambiguous(f"{e.knot}: Jones polynomial shared with {', '.join(found)}")
    return report


# -- regeneration -----------------------------------------------------------

@dataclass(frozen=True)
class TableRow:
    name: str
    bridge: int
    braid: int
    spectrum: Spectrum
    derivation: str


@dataclass(frozen=True)
class TableDocument:
    rows: tuple[TableRow, ...]
    reports: tuple[WitnessReport, ...] = ()

    def __len__(self):
        return len(self.rows)


def derive_row(r: KnotRecord, witness: WitnessReport | None = None) -> TableRow:
    """Spectrum of one knot from its indices, plus a witness when needed."""
    d, n = r.bridge_index, r.braid_index
    if d == 2:
        return TableRow(r.name, d, n, two_bridge_spectrum(n), "2-bridge")
    if d == n:
        return TableRow(r.name, d, n, bb_spectrum(d), "BB")
    if witness is None:
        raise MissingWitness([r.name])
    if d != 3:
        raise RowMismatch(f"{r.name}: a (1,2) witness settles only bridge index 3, got {d}")
    # b_2 = 1 and strict decrease give b_1 >= 2; the witness gives b_1 <= 2
    return TableRow(r.name, d, n, Spectrum((n, 2, 1, 0)), "witness")


def regenerate_table(records: Sequence[KnotRecord],
                     witnesses: Iterable[WitnessEntry]) -> TableDocument:
    """Recompute every row and compare it with the stored spectrum and rule."""
    by_name = {e.knot: e for e in witnesses}
    records = sorted(records, key=lambda r: _knot_sort_key(r.name))
    need = [r.name for r in records
            if r.bridge_index not in (2, r.braid_index) and r.name not in by_name]
    if need:
        raise MissingWitness(need)
    rows, reports, bad = [], [], []
    for r in records:
        report = None
        if r.name in by_name and r.bridge_index not in (2, r.braid_index):
            report = verify_witness(by_name[r.name], records)
            reports.append(report)
        row = derive_row(r, report)
        if row.spectrum != r.expected_spectrum or row.derivation != r.derivation:
            bad.append(f"{r.name} (got {row.spectrum} {row.derivation}, "
                       f"expected {r.expected_spectrum} {r.derivation})")
        rows.append(row)
    if bad:
        raise RowMismatch("rows differ: " + "; ".join(bad))
    return TableDocument(tuple(rows), tuple(reports))


def emit(doc: TableDocument, format: str = "markdown") -> str:
    if format == "csv":
        buf = io.StringIO()
        out = csv.writer(buf, lineterminator="\n")
        out.writerow(EMIT_COLUMNS)
        for row in doc.rows:
            out.writerow([row.name, row.bridge, row.braid, str(row.spectrum), row.derivation])
        return buf.getvalue()
    if format != "markdown":
        raise ValueError(f"unknown format {format!r}")
    lines = ["| knot | bridge | braid | spectrum | derivation |",
             "|---|---|---|---|---|"]
    lines += [f"| {r.name} | {r.bridge} | {r.braid} | {r.spectrum} | {r.derivation} |"
              for r in doc.rows]
    return "\n".join(lines) + "\n"


def parse_emitted(text: str) -> TableDocument:
    """Read back the csv form written by :func:`emit`."""
    reader = csv.DictReader(io.StringIO(text))
    if tuple(reader.fieldnames or ()) != EMIT_COLUMNS:
        raise SchemaError(f"header must be {','.join(EMIT_COLUMNS)}")
    return TableDocument(tuple(
        TableRow(row["name"], int(row["bridge"]), int(row["braid"]),
                 parse_spectrum(row["spectrum"]), row["derivation"])
        for row in reader))
