"""Booklink words.

A booklink is cut open along the page at angle 0 (the *seam*) and read as a
sequence of generators acting on the strands met by each page.  Strand
positions are 1-based and counted outward from the binding axis.

    x<i>+   strand i passes over strand i+1 and they swap
    x<i>-   strand i+1 passes over strand i and they swap
    cap<i>  strands i and i+1 end in a local maximum of the angle
    cup<i>  two strands start at positions i, i+1 from a local minimum

Closing the word identifies strand k after the last generator with strand k at
the seam.  With both strands running in the direction of increasing angle, a
``+`` crossing is a positive crossing, so ``x1+ x1+ x1+`` on two strands is
the closure of the positive braid sigma_1^3.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    ClosureError,
    InvalidWord,
    MultiComponent,
    NoSuchSite,
    ParityError,
    PositionError,
    WordSyntaxError,
)

__all__ = [
    "Kind",
    "Generator",
    "BooklinkWord",
    "SliceProfile",
    "Violation",
    "Validation",
    "Trace",
    "Passage",
    "parse_word",
    "serialize_word",
    "validate",
    "check",
    "bridge_index",
    "braid_count",
    "trace_components",
    "mirror",
    "rotate",
    "align_min_to_seam",
    "split_union",
    "connected_sum",
    "pos",
    "neg",
    "cap",
    "cup",
]


class Kind(enum.Enum):
    POS = "pos"
    NEG = "neg"
    CAP = "cap"
    CUP = "cup"

    @property
    def is_crossing(self) -> bool:
        return self in (Kind.POS, Kind.NEG)


@dataclass(frozen=True, order=True)
class Generator:
    kind: Kind
    position: int

    @property
    def is_crossing(self) -> bool:
        return self.kind.is_crossing

    @property
    def token(self) -> str:
        if self.kind is Kind.POS:
            return f"x{self.position}+"
        if self.kind is Kind.NEG:
            return f"x{self.position}-"
        return f"{self.kind.value}{self.position}"

    def shifted(self, k: int) -> Generator:
        return Generator(self.kind, self.position + k)

    def delta(self) -> int:
        """Change in strand count."""
        return {Kind.CAP: -2, Kind.CUP: 2}.get(self.kind, 0)

    def fits(self, m: int) -> bool:
        """Whether the position precondition holds with ``m`` strands present."""
        i = self.position
        if i < 1:
            return False
        if self.kind is Kind.CUP:
            return i <= m + 1
        return m >= i + 1

    def __str__(self):
        return self.token


def pos(i: int) -> Generator:
    return Generator(Kind.POS, i)


def neg(i: int) -> Generator:
    return Generator(Kind.NEG, i)


def cap(i: int) -> Generator:
    return Generator(Kind.CAP, i)


def cup(i: int) -> Generator:
    return Generator(Kind.CUP, i)


@dataclass(frozen=True)
class SliceProfile:
    """Strand count per slice; slice 0 is the seam, slice t follows generator t."""

    counts: tuple[int, ...]

    @property
    def minimum(self) -> int:
        return min(self.counts)

    def __len__(self):
        return len(self.counts)

    def __getitem__(self, t):
        return self.counts[t]


@dataclass(frozen=True)
class Violation:
    kind: str  # "PositionError" | "ClosureError" | "ParityError"
    index: int | None
    message: str

    def __str__(self):
        where = "" if self.index is None else f" at generator {self.index}"
        return f"{self.kind}{where}: {self.message}"

    def exception(self) -> InvalidWord:
        cls = {"PositionError": PositionError, "ClosureError": ClosureError,
               "ParityError": ParityError}.get(self.kind, InvalidWord)
        return cls(str(self), self.index)


@dataclass(frozen=True)
class Validation:
    profile: SliceProfile | None
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


@dataclass(frozen=True)
class BooklinkWord:
    seam_strands: int
    generators: tuple[Generator, ...] = ()
    comment: str = field(default="", compare=False)

    def __post_init__(self):
        if not isinstance(self.generators, tuple):
            object.__setattr__(self, "generators", tuple(self.generators))
        if self.seam_strands < 0:
            raise InvalidWord("seam strand count must be non-negative")

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __str__(self):
        return serialize_word(self)

    @cached_property
    def validation(self) -> Validation:
        return _validate(self)

    @property
    def profile(self) -> SliceProfile:
        return check(self)

    @property
    def crossing_count(self) -> int:
        return sum(1 for g in self.generators if g.is_crossing)

    def with_generators(self, generators: Iterable[Generator], seam_strands: int | None = None):
        return BooklinkWord(self.seam_strands if seam_strands is None else seam_strands,
                            tuple(generators), self.comment)


# -- text format -------------------------------------------------------------

_HEADER = re.compile(r"strands:(\d+)")
_TOKEN = re.compile(r"(?:x(\d+)([+-])|(cap|cup)(\d+))")


def parse_word(text: str) -> BooklinkWord:
    """Parse the word file format and validate the result.

    Full-line comments that appear before the first generator token are kept
    as the word's header comment so that files round-trip.
    """
    lines = text.split("\n")
    first = lines[0].split("#", 1)[0].strip()
    m = _HEADER.fullmatch(first)
    if not m:
        raise WordSyntaxError(f"line 1 must be 'strands:<k>', got {lines[0]!r}")
    seam = int(m.group(1))
    header: list[str] = []
    gens: list[Generator] = []
    for lineno, line in enumerate(lines[1:], start=2):
        body, hash_, rest = line.partition("#")
        if hash_ and not body.strip() and not gens:
            header.append(rest[1:] if rest.startswith(" ") else rest)
        for tok in body.split():
            t = _TOKEN.fullmatch(tok)
            if not t:
                raise WordSyntaxError(f"bad token {tok!r} on line {lineno}")
            if t.group(1):
                idx = int(t.group(1))
                kind = Kind.POS if t.group(2) == "+" else Kind.NEG
            else:
                idx = int(t.group(4))
                kind = Kind.CAP if t.group(3) == "cap" else Kind.CUP
            if idx < 1:
                raise WordSyntaxError(f"position must be >= 1 in {tok!r}")
            gens.append(Generator(kind, idx))
    w = BooklinkWord(seam, tuple(gens), "\n".join(header))
    check(w)
    return w


def serialize_word(w: BooklinkWord) -> str:
    out = [f"strands:{w.seam_strands}\n"]
    if w.comment:
        out.extend(f"# {line}\n" if line else "#\n" for line in w.comment.split("\n"))
    if w.generators:
        out.append(" ".join(g.token for g in w.generators) + "\n")
    return "".join(out)


# -- validity ----------------------------------------------------------------

def _validate(w: BooklinkWord) -> Validation:
    violations: list[Violation] = []
    counts = [w.seam_strands]
    m = w.seam_strands
    broken = False
    for j, g in enumerate(w.generators):
        if not g.fits(m):
            violations.append(Violation(
                "PositionError", j, f"{g.token} needs {_need(g)} strands, slice has {m}"))
            broken = True
            break
        m += g.delta()
        counts.append(m)
    if not broken and m != w.seam_strands:
        violations.append(Violation(
            "ClosureError", None, f"final count {m} != seam count {w.seam_strands}"))
    caps = sum(1 for g in w.generators if g.kind is Kind.CAP)
    cups = sum(1 for g in w.generators if g.kind is Kind.CUP)
    if caps != cups:
        violations.append(Violation("ParityError", None, f"{caps} caps vs {cups} cups"))
    profile = None if violations else SliceProfile(tuple(counts))
    return Validation(profile, tuple(violations))


def _need(g: Generator) -> str:
    if g.kind is Kind.CUP:
        return f">= {g.position - 1}"
    return f">= {g.position + 1}"


def validate(w: BooklinkWord) -> Validation:
    """Check every invariant; problems are reported, never raised."""
    return w.validation


def check(w: BooklinkWord) -> SliceProfile:
    """Return the slice profile or raise the first violation."""
    v = w.validation
    if v.violations:
        raise v.violations[0].exception()
    return v.profile


def bridge_index(w: BooklinkWord) -> int:
    check(w)
    return sum(1 for g in w.generators if g.kind is Kind.CAP)


def braid_count(w: BooklinkWord) -> int:
    return check(w).minimum


# -- component tracing -------------------------------------------------------

@dataclass(frozen=True)
class Passage:
    """One pass of a traversal through a crossing generator."""

    generator: int
    step: int             # index in the walk of the segment the pass leaves
    over: bool
    top_position: int     # position of the passing strand above the crossing
    bottom_position: int  # ... and below it
    direction: int        # +1 when travelling toward increasing angle


@dataclass(frozen=True)
class Trace:
    """Result of following every strand segment around the closed word.

    A segment ``(t, p)`` is the piece of strand at position ``p`` in slice
    ``t`` (between generator ``t-1`` and generator ``t``).  ``walks`` lists,
    per component, the segments in traversal order with their direction
    (+1 = increasing angle).  Components are oriented so that their first
    segment in (slice, position) order runs forward.
    """

    walks: tuple[tuple[tuple[int, int, int], ...], ...]
    passages: tuple[tuple[Passage, ...], ...]
    free_loops: int

    @property
    def components(self) -> int:
        return len(self.walks)

    @cached_property
    def direction(self) -> dict[tuple[int, int], int]:
        return {(t, p): d for walk in self.walks for (t, p, d) in walk}

    @cached_property
    def component_of(self) -> dict[tuple[int, int], int]:
        return {(t, p): c for c, walk in enumerate(self.walks) for (t, p, _) in walk}


def _links(w: BooklinkWord, counts: Sequence[int]):
    """Adjacency between segment ends through each generator.

    Ends are ``(t, p, 0)`` for the top end of segment (t, p) and ``(t, p, 1)``
    for its bottom end.  Returns ``end -> (other end, generator index)``.
    """
    L = len(w.generators)
    link: dict[tuple[int, int, int], tuple[tuple[int, int, int], int | None]] = {}

    def join(a, b, j):
        link[a] = (b, j)
        link[b] = (a, j)

    for j, g in enumerate(w.generators):
        t0, t1 = j, (j + 1) % L
        m = counts[j]
        i = g.position
        if g.is_crossing:
            for p in range(1, m + 1):
                q = i + 1 if p == i else i if p == i + 1 else p
                join((t0, p, 1), (t1, q, 0), j)
        elif g.kind is Kind.CAP:
            join((t0, i, 1), (t0, i + 1, 1), j)
            for p in range(1, m + 1):
                if p < i:
                    join((t0, p, 1), (t1, p, 0), j)
                elif p > i + 1:
                    join((t0, p, 1), (t1, p - 2, 0), j)
        else:
            join((t1, i, 0), (t1, i + 1, 0), j)
            for p in range(1, m + 1):
                q = p if p < i else p + 2
                join((t0, p, 1), (t1, q, 0), j)
    return link


def trace_components(w: BooklinkWord) -> Trace:
    counts = check(w).counts
    L = len(w.generators)
    if L == 0:
        walks = tuple(((0, p, 1),) for p in range(1, w.seam_strands + 1))
        return Trace(walks, tuple(() for _ in walks), len(walks))
    link = _links(w, counts)
    seen: set[tuple[int, int]] = set()
    walks = []
    passages = []
    for t in range(L):
        for p in range(1, counts[t] + 1):
            if (t, p) in seen:
                continue
            walk = []
            crossings = []
            seg, d = (t, p), 1
            while True:
                seen.add(seg)
                walk.append((seg[0], seg[1], d))
                exit_end = (seg[0], seg[1], 1 if d == 1 else 0)
                (nt, np_, nside), j = link[exit_end]
                g = w.generators[j]
                if g.is_crossing and seg[1] in (g.position, g.position + 1):
                    if d == 1:
                        top, bottom = seg[1], np_
                    else:
                        top, bottom = np_, seg[1]
                    over_top = g.position if g.kind is Kind.POS else g.position + 1
                    crossings.append(Passage(j, len(walk) - 1, top == over_top, top, bottom, d))
                # entering at a top end means we now travel forward
                d = 1 if nside == 0 else -1
                seg = (nt, np_)
                if seg == (t, p) and d == 1:
                    break
            walks.append(tuple(walk))
            passages.append(tuple(crossings))
    free = sum(1 for cs in passages if not cs)
    return Trace(tuple(walks), tuple(passages), free)


# -- structural operations ---------------------------------------------------

def mirror(w: BooklinkWord) -> BooklinkWord:
    flip = {Kind.POS: Kind.NEG, Kind.NEG: Kind.POS}
    return w.with_generators(Generator(flip.get(g.kind, g.kind), g.position)
                             for g in w.generators)


def rotate(w: BooklinkWord, k: int) -> BooklinkWord:
    """Move the seam forward by ``k`` generators."""
    counts = check(w).counts
    L = len(w.generators)
    if L == 0:
        return w
    k %= L
    return w.with_generators(w.generators[k:] + w.generators[:k], counts[k])


def align_min_to_seam(w: BooklinkWord) -> BooklinkWord:
    counts = check(w).counts
    if counts[0] == min(counts):
        return w
    return rotate(w, counts.index(min(counts)))


def split_union(w1: BooklinkWord, w2: BooklinkWord) -> BooklinkWord:
    """Side-by-side union: ``w1`` acts first while ``w2``'s strands wait outside it."""
    w1 = align_min_to_seam(w1)
    w2 = align_min_to_seam(w2)
    s1 = w1.seam_strands
    gens = w1.generators + tuple(g.shifted(s1) for g in w2.generators)
    return BooklinkWord(s1 + w2.seam_strands, gens)


def connected_sum(w1: BooklinkWord, w2: BooklinkWord, site1: int, site2: int) -> BooklinkWord:
    """Join the ``site1``-th cap of ``w1`` to the ``site2``-th cup of ``w2`` by a band.

    The cap's two strands are carried outward, passing over every strand in
    the way, until they meet the cup's two strands in ``w2``'s block, and the
    cap/cup pair is deleted.  One pair of critical points disappears.
    """
    for w in (w1, w2):
        if trace_components(w).components != 1:
            raise MultiComponent("connected_sum needs single-component words")
    site1 = _nth(w1, Kind.CAP, site1, "first")
    site2 = _nth(w2, Kind.CUP, site2, "second")
    r1 = rotate(w1, site1 + 1)
    r2 = rotate(w2, site2)
    m1, m2 = r1.seam_strands, r2.seam_strands
    k = r1.generators[-1].position
    j = r2.generators[0].position
    gens = list(r1.generators[:-1])
    for step in range(m1 + j - k):
        p = k + step
        gens += [pos(p + 1), pos(p)]
    gens += [g.shifted(m1) for g in r2.generators[1:]]
    return BooklinkWord(m1 + m2, tuple(gens))


def _nth(w: BooklinkWord, kind: Kind, k: int, which: str) -> int:
    found = [j for j, g in enumerate(w.generators) if g.kind is kind]
    if not 0 <= k < len(found):
        raise NoSuchSite(f"the {which} word has {len(found)} {kind.value}s, no index {k}")
    return found[k]
