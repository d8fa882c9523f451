#!/usr/bin/env python3
"""Transcribe xygraph knot drawings into booklink word files.

    python scripts/xygraph_to_blw.py SOURCE.tex OUTDIR

Each ``\\xygraph{...}`` block followed by ``\\caption*{$K$}`` becomes
``OUTDIR/K.blw``.  The drawings are built from four macros on a unit grid:

    \\xcapv@(0)   a vertical strand in the current column, one row down
    \\vtwist      crossing of columns x, x+1 over one row   -> x<i>+
    \\vcross      the other crossing                        -> x<i>-
    \\vcap        arc whose feet sit on the current row; new strands start
                 there (read downward this is a cup)
    \\vcap-       arc joining columns x, x+1 one row down (a cap)

Strands and crossings move the cursor one row down; arcs leave it in place.
``[l] [r] [u] [d]`` step the cursor.  Each row band is emitted as
crossings, then caps, then cups; positions are column ranks at that moment
(leftmost column is position 1).  The drawing closes from bottom to top in
column order.
"""

from __future__ import annotations

import argparse
import re
import sys
from collections import defaultdict
from pathlib import Path

from booklink.word import BooklinkWord, cap, check, cup, neg, pos, serialize_word

BLOCK = re.compile(r"\\xygraph\{(.*?)\}\\\]\s*\\caption\*\{\$(\d+)_\{?(\d+)\}?\$\}", re.S)
TOKEN = re.compile(r"\[([lrud]+)\]|!\{\\(xcapv@\(0\)|vtwist|vcross|vcap-|vcap)\}|!\{/[^}]*\}")
STEP = {"l": (-1, 0), "r": (1, 0), "u": (0, -1), "d": (0, 1)}


class Band:
    def __init__(self):
        self.verticals: set[int] = set()
        self.crossings: dict[int, str] = {}
        self.caps: set[int] = set()
        self.cups: set[int] = set()

    def top(self) -> set[int]:
        cols = set(self.verticals) | self.caps
        for c in self.crossings:
            cols |= {c, c + 1}
        for c in self.caps:
            cols.add(c + 1)
        return cols

    def bottom(self) -> set[int]:
        cols = set(self.verticals)
        for c in self.crossings:
            cols |= {c, c + 1}
        for c in self.cups:
            cols |= {c, c + 1}
        return cols


def transcribe(body: str) -> BooklinkWord:
    bands: dict[int, Band] = defaultdict(Band)
    x = y = 0
    for m in TOKEN.finditer(body):
        if m.group(1):
            for ch in m.group(1):
                dx, dy = STEP[ch]
                x, y = x + dx, y + dy
            continue
        macro = m.group(2)
        if macro is None:
            continue
        if macro == "xcapv@(0)":
            bands[y].verticals.add(x)
            y += 1
        elif macro in ("vtwist", "vcross"):
            bands[y].crossings[x] = macro
            y += 1
        elif macro == "vcap":
            bands[y - 1].cups.add(x)
        else:
            bands[y].caps.add(x)

    rows = sorted(bands)
    if rows != list(range(rows[0], rows[-1] + 1)):
        raise ValueError("gap between rows")
    for a, b in zip(rows, rows[1:]):
        if bands[a].bottom() != bands[b].top():
            raise ValueError(f"rows {a}/{b} disagree: {sorted(bands[a].bottom())} vs {sorted(bands[b].top())}")
    first, last = bands[rows[0]].top(), bands[rows[-1]].bottom()
    if len(first) != len(last):
        raise ValueError("top and bottom strand counts differ")

    gens = []
    for r in rows:
        band = bands[r]
        cols = sorted(band.top())
        for c, macro in sorted(band.crossings.items()):
            i = cols.index(c) + 1
            gens.append(pos(i) if macro == "vtwist" else neg(i))
        for c in sorted(band.caps, reverse=True):
            gens.append(cap(cols.index(c) + 1))
            cols.remove(c)
            cols.remove(c + 1)
        for c in sorted(band.cups):
            i = sum(1 for k in cols if k < c) + 1
            gens.append(cup(i))
            cols = sorted(cols + [c, c + 1])
    w = BooklinkWord(len(first), tuple(gens))
    check(w)
    return w


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("source", type=Path)
    ap.add_argument("outdir", type=Path)
    args = ap.parse_args(argv)
    args.outdir.mkdir(parents=True, exist_ok=True)
    blocks = BLOCK.findall(args.source.read_text())
    for body, c, k in blocks:
        name = f"{c}_{k}"
        w = transcribe(body)
        w = BooklinkWord(w.seam_strands, w.generators,
                         f"{name}: (1,2)-representative")
        (args.outdir / f"{name}.blw").write_text(serialize_word(w))
    print(f"wrote {len(blocks)} word files to {args.outdir}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
