"""Planar diagrams, DT codes, Kauffman bracket, Jones polynomial, identification.

Two independent routes compute the bracket:

* ``"transfer"`` sweeps the word generator by generator, carrying a sum over
  planar matchings of the boundary points (Temperley-Lieb style).  Cost grows
  with the width of the word rather than with the number of crossings.
* ``"state-sum"`` expands all ``2**c`` smoothings of the planar diagram
  and counts loops with a union-find.  It is exponential but shares no code
  with the transfer route, so each checks the other.

Picture convention: positions run right to left (``x = -position``) and the
angle increases downward.  A ``+`` crossing then has its over strand
running from top position ``i`` to bottom position ``i+1``; its A-smoothing is
the vertical one.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from .errors import MultiComponent, NoMatch, TooManyCrossings
from .polynomial import DELTA, ONE, LaurentPolynomial, bracket_to_jones
from .word import BooklinkWord, Kind, check, trace_components

__all__ = [
    "Crossing",
    "PlanarDiagram",
    "DTCode",
    "Identification",
    "DEFAULT_MAX_CROSSINGS",
    "to_planar_diagram",
    "writhe",
    "dt_code",
    "kauffman_bracket",
    "jones",
    "identify",
]

DEFAULT_MAX_CROSSINGS = 24

A = LaurentPolynomial.monomial(1)
A_INV = LaurentPolynomial.monomial(-1)


# -- planar diagram ----------------------------------------------------------

@dataclass(frozen=True)
class Crossing:
    """A crossing in PD form.

    ``edges`` lists the four incident edge labels counterclockwise, starting
    with the incoming under-strand.
    """

    id: int
    sign: int
    edges: tuple[int, int, int, int]


@dataclass(frozen=True)
class PlanarDiagram:
    crossings: tuple[Crossing, ...]
    edge_count: int
    free_loops: int
    components: int

    @property
    def writhe(self) -> int:
        return sum(c.sign for c in self.crossings)

    def __len__(self):
        return len(self.crossings)


def _vector(top: int, bottom: int, direction: int) -> tuple[int, int]:
    # x = -position, y decreases with the angle
    return (-(bottom - top) * direction, -direction)


def to_planar_diagram(w: BooklinkWord) -> PlanarDiagram:
    trace = trace_components(w)
    corners: dict[int, dict[str, int]] = {}
    under: dict[int, tuple[str, tuple[int, int]]] = {}
    over: dict[int, tuple[int, int]] = {}
    label = 0
    for walk, passes in zip(trace.walks, trace.passages):
        k = len(passes)
        if not k:
            continue
        base = label
        for n, ps in enumerate(passes):
            e_in = base + n
            e_out = base + (n + 1) % k
            i = w.generators[ps.generator].position
            top = "TR" if ps.top_position == i else "TL"
            bottom = "BR" if ps.bottom_position == i else "BL"
            if ps.direction == 1:
                entry, exit_ = top, bottom
            else:
                entry, exit_ = bottom, top
            slot = corners.setdefault(ps.generator, {})
            slot[entry] = e_in + 1
            slot[exit_] = e_out + 1
            vec = _vector(ps.top_position, ps.bottom_position, ps.direction)
            if ps.over:
                over[ps.generator] = vec
            else:
                under[ps.generator] = (entry, vec)
        label += k
    ccw = ("BR", "TR", "TL", "BL")
    crossings = []
    for cid, j in enumerate(sorted(corners)):
        entry, u = under[j]
        o = over[j]
        start = ccw.index(entry)
        order = tuple(corners[j][ccw[(start + r) % 4]] for r in range(4))
        sign = 1 if o[0] * u[1] - o[1] * u[0] > 0 else -1
        crossings.append(Crossing(cid, sign, order))
    return PlanarDiagram(tuple(crossings), label, trace.free_loops, trace.components)


def writhe(w: BooklinkWord) -> int:
    return to_planar_diagram(w).writhe


# -- DT code -----------------------------------------------------------------

@dataclass(frozen=True)
class DTCode:
    pairs: tuple[int, ...]

    def __str__(self):
        return " ".join(str(x) for x in self.pairs)

    def __len__(self):
        return len(self.pairs)

    @classmethod
    def parse(cls, text: str) -> DTCode:
        return cls(tuple(int(x) for x in text.replace(",", " ").strip("[] ").split()))


def _dt_from_sequence(seq: Sequence[tuple[int, bool]]) -> tuple[int, ...]:
    labels: dict[int, list[tuple[int, bool]]] = {}
    for n, (gen, is_over) in enumerate(seq, start=1):
        labels.setdefault(gen, []).append((n, is_over))
    partner: dict[int, int] = {}
    for visits in labels.values():
        (a, a_over), (b, _) = visits
        odd, even = (a, b) if a % 2 else (b, a)
        odd_over = a_over if a % 2 else not a_over
        partner[odd] = -even if not odd_over else even
    return tuple(partner[k] for k in range(1, len(seq), 2))


def dt_code(w: BooklinkWord) -> DTCode:
    """Canonical DT code.

    Minimum over every start and both directions, comparing absolute values
    first and, among ties, preferring positive entries.
    """
    trace = trace_components(w)
    if trace.components != 1:
        raise MultiComponent(f"DT code needs a knot, word has {trace.components} components")
    seq = [(p.generator, p.over) for p in trace.passages[0]]
    if not seq:
        return DTCode(())
    best = None
    for s in (seq, seq[::-1]):
        for k in range(len(s)):
            code = _dt_from_sequence(s[k:] + s[:k])
            key = (tuple(abs(x) for x in code), tuple(x < 0 for x in code))
            if best is None or key < best[0]:
                best = (key, code)
    return DTCode(best[1])


# -- bracket: transfer route -------------------------------------------------

def _close_pair(match: list[int], a: int, b: int) -> bool:
    """Join the far ends of points a and b; True if they formed a loop."""
    pa, pb = match[a], match[b]
    if pa == b:
        return True
    match[pa] = pb
    match[pb] = pa
    return False


def _remove(match: list[int], a: int, b: int) -> tuple[int, ...]:
    """Drop points a < b and renumber."""
    def f(x):
        return x - (x > a) - (x > b)
    return tuple(f(match[x]) for x in range(len(match)) if x not in (a, b))


def _turnback(match: tuple[int, ...], a: int) -> tuple[tuple[int, ...], bool]:
    m = list(match)
    loop = _close_pair(m, a, a + 1)
    m[a], m[a + 1] = a + 1, a
    return tuple(m), loop


def _cap(match: tuple[int, ...], a: int) -> tuple[tuple[int, ...], bool]:
    m = list(match)
    loop = _close_pair(m, a, a + 1)
    if loop:
        m[a], m[a + 1] = a + 1, a
    return _remove(m, a, a + 1), loop


def _cup(match: tuple[int, ...], a: int) -> tuple[int, ...]:
    def f(x):
        return x + 2 if x >= a else x
    m = [f(x) for x in match]
    m[a:a] = [a + 1, a]
    return tuple(m)


def _bracket_transfer(w: BooklinkWord) -> LaurentPolynomial:
    s = w.seam_strands
    caps = sum(1 for g in w.generators if g.kind is Kind.CAP)
    c = w.crossing_count
    # Each state's coefficient is a Laurent polynomial in A packed into one
    # integer as its value at A = 2**K, offset so every exponent is positive.
    # Multiplying by A or by the loop value is then a shift, and sums are
    # plain integer additions.  K leaves room for the largest coefficient.
    loops_max = c + caps + s + 1
    K = c + 2 * loops_max + 16
    off = c + 2 * loops_max + 1

    def delta(v: int) -> int:
        return -(v << 2 * K) - (v >> 2 * K)

    # points 0..s-1 are the seam's upper ends, s.. the current slice
    start = tuple(list(range(s, 2 * s)) + list(range(s)))
    # key: (matching, whether a loop has already closed); the first loop is free
    states: dict[tuple[tuple[int, ...], bool], int] = {(start, False): 1 << (K * off)}

    def add(out, match, flag, loop, v):
        if loop:
            if flag:
                v = delta(v)
            flag = True
        key = (match, flag)
        out[key] = out.get(key, 0) + v

    for g in w.generators:
        a = s + g.position - 1
        out: dict = {}
        for (match, flag), v in states.items():
            if g.is_crossing:
                tb, loop = _turnback(match, a)
                up, down = v << K, v >> K
                if g.kind is Kind.POS:
                    add(out, match, flag, False, up)
                    add(out, tb, flag, loop, down)
                else:
                    add(out, tb, flag, loop, up)
                    add(out, match, flag, False, down)
            elif g.kind is Kind.CAP:
                m, loop = _cap(match, a)
                add(out, m, flag, loop, v)
            else:
                add(out, _cup(match, a), flag, False, v)
        states = {k: v for k, v in out.items() if v}
    total = 0
    for (match, flag), v in states.items():
        m = list(match)
        loops = int(flag)
        for k in range(s):
            # glue current point k to seam point k
            loops += _close_pair(m, k, s + k)
        if loops == 0:
            raise ValueError("the empty diagram has no bracket")
        for _ in range(loops - 1):
            v = delta(v)
        total += v
    return _unpack(total, K, off)


def _unpack(value: int, K: int, off: int) -> LaurentPolynomial:
    base = 1 << K
    half = base >> 1
    terms = {}
    e = -off
    while value:
        r = value & (base - 1)
        if r >= half:
            r -= base
        if r:
            terms[e] = r
        value = (value - r) >> K
        e += 1
    return LaurentPolynomial(terms)


# -- bracket: state-sum route ------------------------------------------------

def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def _bracket_state_sum(pd: PlanarDiagram) -> LaurentPolynomial:
    c = len(pd.crossings)
    n = pd.edge_count
    counts: dict[tuple[int, int], int] = {}
    for state in product((0, 1), repeat=c):
        parent = list(range(n + 1))

        def union(x, y):
            rx, ry = _find(parent, x), _find(parent, y)
            if rx != ry:
                parent[rx] = ry

        for bit, cr in zip(state, pd.crossings):
            i, j, k, l = cr.edges
            if bit == 0:  # A-smoothing joins the regions either side of the under strand
                union(i, j)
                union(k, l)
            else:
                union(i, l)
                union(j, k)
        loops = len({_find(parent, e) for e in range(1, n + 1)}) + pd.free_loops
        a = state.count(0)
        key = (a - (c - a), loops)
        counts[key] = counts.get(key, 0) + 1
    total = LaurentPolynomial()
    for (exp, loops), mult in counts.items():
        if loops == 0:
            raise ValueError("the empty diagram has no bracket")
        total = total + mult * (DELTA ** (loops - 1)).shift(exp)
    return total


def kauffman_bracket(
    w: BooklinkWord,
    *,
    method: str = "transfer",
    max_crossings: int | None = DEFAULT_MAX_CROSSINGS,
) -> LaurentPolynomial:
    """Kauffman bracket in ``A``, normalized so a single loop has bracket 1."""
    check(w)
    c = w.crossing_count
    if max_crossings is not None and c > max_crossings:
        raise TooManyCrossings(f"{c} crossings exceeds the cap of {max_crossings}")
    if method == "transfer":
        return _bracket_transfer(w)
    if method == "state-sum":
        return _bracket_state_sum(to_planar_diagram(w))
    raise ValueError(f"unknown bracket method {method!r}")


def jones(
    w: BooklinkWord,
    *,
    method: str = "transfer",
    max_crossings: int | None = DEFAULT_MAX_CROSSINGS,
) -> LaurentPolynomial:
    """Jones polynomial; stored exponents are quarter powers of ``t``."""
    bracket = kauffman_bracket(w, method=method, max_crossings=max_crossings)
    return bracket_to_jones(bracket, writhe(w))


# -- identification ----------------------------------------------------------

@dataclass(frozen=True)
class Identification:
    candidates: tuple[str, ...]
    jones: LaurentPolynomial

    @property
    def exact(self) -> bool:
        return len(self.candidates) == 1

    @property
    def name(self) -> str:
        return self.candidates[0]


def identify(
    w: BooklinkWord,
    table: Iterable | None = None,
    *,
    max_crossings: int | None = DEFAULT_MAX_CROSSINGS,
) -> Identification:
    """Match the word's Jones polynomial, up to ``t -> 1/t``, against a table.

    ``table`` is an iterable of records with ``name``, ``crossing_number``
    and ``jones`` attributes; the bundled table is used when omitted.
    """
    trace = trace_components(w)
    if trace.components != 1:
        raise MultiComponent(f"cannot identify a {trace.components}-component link")
    if table is None:
        from .table import load_knot_data
        table = load_knot_data()
    v = jones(w, max_crossings=max_crossings)
    targets = {v, v.invert_variable()}
    hits = sorted((r for r in table if r.jones in targets),
                  key=lambda r: (r.crossing_number, _index(r.name)))
    if not hits:
        raise NoMatch("no knot in the table has this Jones polynomial")
    return Identification(tuple(r.name for r in hits), v)


def _index(name: str) -> int:
    try:
        return int(name.partition("_")[2])
    except ValueError:
        return 0
