#!/usr/bin/env python3
"""Build src/booklink/data/knots.csv from KnotInfo plus a LaTeX spectrum table.

    python scripts/ingest_knotinfo.py KNOTINFO_CSV SPECTRA_TEX [--out PATH]

KNOTINFO_CSV is ``knotinfo_data_complete.csv`` from the ``database_knotinfo``
package (pipe-delimited, two header rows).  SPECTRA_TEX is any LaTeX file
containing tabular rows of the form

    $8_{15}$ & 3 & 4 & $\\{4,2,1,0\\}$ & <reference> \\\\

possibly two per line.  A reference of ``BB`` or ``2-bridge`` is kept as is;
anything else means the row is settled by a witness diagram.

Bridge and braid indices from both sources are cross-checked.
"""

from __future__ import annotations

import argparse
import csv
import re
import sys
from pathlib import Path

from booklink.polynomial import format_pairs, parse_polynomial

ROW = re.compile(
    r"\$(\d+)_\{?(\d+)\}?\$\s*&\s*(\d+)\s*&\s*(\d+)\s*&\s*\$\\\{([\d,]+)\\\}\$\s*&\s*([^&\\]+?(?:\\ref\{[^}]*\})?)\s*(?=&|\\\\|$)"
)


def read_spectra(path: Path) -> dict[str, tuple[int, int, str, str]]:
    out = {}
    for line in path.read_text().splitlines():
        for m in ROW.finditer(line):
            name = f"{m.group(1)}_{m.group(2)}"
            ref = m.group(6).strip()
            derivation = ref if ref in ("BB", "2-bridge") else "witness"
            out[name] = (int(m.group(3)), int(m.group(4)), "{" + m.group(5) + "}", derivation)
    return out


def read_knotinfo(path: Path, max_crossings: int = 9):
    with path.open(newline="") as fh:
        rows = list(csv.reader(fh, delimiter="|"))
    header = rows[0]
    col = {k: header.index(k) for k in
           ("name", "crossing_number", "bridge_index", "braid_index", "dt_notation",
            "jones_polynomial")}
    for r in rows[2:]:
        if int(r[col["crossing_number"]]) > max_crossings:
            continue
        yield {k: r[i] for k, i in col.items()}


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("knotinfo", type=Path)
    ap.add_argument("spectra", type=Path)
    ap.add_argument("--out", type=Path,
                    default=Path(__file__).resolve().parents[1] / "src/booklink/data/knots.csv")
    args = ap.parse_args(argv)

    spectra = read_spectra(args.spectra)
    records = []
    for k in read_knotinfo(args.knotinfo):
        name = k["name"]
        if name not in spectra:
            print(f"{name}: no spectrum row", file=sys.stderr)
            return 1
        bridge, braid, spec, derivation = spectra.pop(name)
        if (bridge, braid) != (int(k["bridge_index"]), int(k["braid_index"])):
            print(f"{name}: indices disagree with KnotInfo", file=sys.stderr)
            return 1
        dt = " ".join(re.findall(r"-?\d+", k["dt_notation"]))
        jones = format_pairs(parse_polynomial(k["jones_polynomial"], unit=4))
        records.append([name, k["crossing_number"], bridge, braid, dt, jones, spec, derivation])
    if spectra:
        print(f"unmatched spectrum rows: {sorted(spectra)}", file=sys.stderr)
        return 1

    with args.out.open("w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["name", "crossings", "bridge", "braid", "dt", "jones", "spectrum", "derivation"])
        w.writerows(records)
    print(f"wrote {len(records)} rows to {args.out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
