"""Rewrites on booklink words.

Every move here is an isotopy of the underlying link, so the Jones polynomial
is unchanged; what changes is the pair ``(d, n)`` of bridge and braid counts:

    add_critical_pair         (d+1, n)
    stabilize                 (d, n+1)
    destabilize               (d, n-1)
    exchange_move             (d, n)
    plat_free_strand_resolve  (d-1, 0 -> 1)
    push_strand_through_binding  (d+1, n-1 when the pushed slice was minimal)
    resolve_bridge            (d-1, n usually grows; it can drop when the
                               backward arc runs through a minimal slice)

Two facts make the wrapping moves work.  Both the innermost and the
outermost side of every page touch the binding, so a strand that stays
innermost (or outermost) may be swung across the binding.  And an arc that
passes over (or under) everything it meets can be rerouted anywhere, as long
as the new route also passes over (or under) everything.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import count
from typing import Iterator, Sequence

from .errors import (
    BudgetExceeded,
    InvalidChoice,
    InvalidWord,
    NoBackwardArc,
    NoFreeStrand,
    NotABraid,
    NotAPlat,
    NotDestabilizable,
    PatternMismatch,
    PositionError,
)
from .word import (
    BooklinkWord,
    Generator,
    Kind,
    align_min_to_seam,
    braid_count,
    bridge_index,
    cap,
    check,
    cup,
    neg,
    pos,
    rotate,
    trace_components,
)

__all__ = [
    "add_critical_pair",
    "cancel_critical_pair",
    "stabilize",
    "destabilize",
    "exchange_move",
    "plat_free_strand_resolve",
    "push_strand_through_binding",
    "Arc",
    "backward_arcs",
    "resolve_bridge",
    "simplify_braid",
    "to_braid",
    "INNER",
    "OUTER",
]

INNER = "inner"
OUTER = "outer"


def _crossing(kind_sign: int, i: int) -> Generator:
    return pos(i) if kind_sign > 0 else neg(i)


def _sign(g: Generator) -> int:
    return 1 if g.kind is Kind.POS else -1


# -- local moves ------------------------------------------------------------

def add_critical_pair(w: BooklinkWord, t: int, i: int) -> BooklinkWord:
    """Put a zigzag on the strand at position ``i`` of slice ``t``.

    Emits ``cup<i+1> cap<i>``: the strand rises to a new maximum, returns to
    a new minimum and carries on from position ``i``.
    """
    counts = check(w).counts
    L = len(w)
    if not 0 <= t <= L:
        raise PositionError(f"slice {t} out of range 0..{L}", t)
    m = counts[t]
    if not 1 <= i <= m:
        raise PositionError(f"slice {t} has {m} strands, no strand at position {i}", t)
    gens = list(w.generators)
    gens[t:t] = [cup(i + 1), cap(i)]
    return w.with_generators(gens)


def cancel_critical_pair(w: BooklinkWord, t: int) -> BooklinkWord:
    """Undo a zigzag ``cup<i+1> cap<i>`` or ``cup<i> cap<i+1>`` starting at generator ``t``."""
    check(w)
    g = w.generators
    if t + 1 >= len(g) or t < 0:
        raise PatternMismatch(f"no generator pair at {t}")
    a, b = g[t], g[t + 1]
    if a.kind is Kind.CUP and b.kind is Kind.CAP and abs(a.position - b.position) == 1:
        return w.with_generators(g[:t] + g[t + 2:])
    raise PatternMismatch(f"{a} {b} is not a zigzag")


def _touches_top(g: Generator, m: int) -> bool:
    """Whether ``g`` acts on the outermost strand of a slice with ``m`` strands."""
    if g.kind is Kind.CUP:
        return g.position == m + 1
    return g.position + 1 == m


def stabilize(w: BooklinkWord, slice: int | None = None, sign: int = 1) -> BooklinkWord:
    """Add an outermost strand that wraps the axis once and crosses its neighbour once.

    The crossing goes in at ``slice`` (default: the seam, or the first slice
    with a strand when the seam is empty).
    """
    counts = check(w).counts
    if slice is None:
        slice = next((t for t, m in enumerate(counts) if m >= 1), None)
        if slice is None:
            raise InvalidWord("cannot stabilize an empty word")
    m = counts[slice]
    if m < 1:
        raise PositionError(f"slice {slice} has no strand to cross", slice)
    gens = list(w.generators)
    gens.insert(slice, _crossing(sign, m))
    return w.with_generators(gens, w.seam_strands + 1)


def destabilize(w: BooklinkWord) -> BooklinkWord:
    """Remove an outermost strand that meets exactly one crossing and nothing else."""
    counts = check(w).counts
    touching = [j for j, g in enumerate(w.generators) if _touches_top(g, counts[j])]
    if len(touching) != 1 or not w.generators[touching[0]].is_crossing or min(counts) < 1:
        raise NotDestabilizable(
            f"outermost track meets {len(touching)} generators; need exactly one crossing")
    j = touching[0]
    return w.with_generators(w.generators[:j] + w.generators[j + 1:], w.seam_strands - 1)


def exchange_move(w: BooklinkWord, site: int) -> BooklinkWord:
    """Exchange the signs of the two crossings on the outermost track.

    Pattern: ``x<m-1>^e u x<m-1>^-e v`` where ``u`` and ``v`` never touch the
    outermost strand.  The move sends it to ``x<m-1>^-e u x<m-1>^e v``.
    """
    counts = check(w).counts
    if not 0 <= site < len(w):
        raise PatternMismatch(f"no generator at {site}")
    g = w.generators[site]
    if not g.is_crossing or not _touches_top(g, counts[site]):
        raise PatternMismatch(f"generator {site} is not an outermost crossing")
    touching = [j for j, h in enumerate(w.generators) if _touches_top(h, counts[j])]
    if len(touching) != 2:
        raise PatternMismatch(f"outermost track meets {len(touching)} generators, not 2")
    other = touching[1] if touching[0] == site else touching[0]
    h = w.generators[other]
    if not h.is_crossing or _sign(h) == _sign(g):
        raise PatternMismatch("the outermost crossings must have opposite signs")
    gens = list(w.generators)
    gens[site] = _crossing(-_sign(g), g.position)
    gens[other] = _crossing(-_sign(h), h.position)
    return w.with_generators(gens)


# -- plats ------------------------------------------------------------------

def _follow(gens: Sequence[Generator], start_slice: int, p: int) -> tuple[int, list[int]]:
    """Follow the strand at (start_slice, p) forward to the cap that ends it.

    Returns the cap's index in the unrolled word (it exceeds ``len(gens)``
    when the strand wraps through the seam) and the strand's position in
    each slice passed, starting with ``start_slice``.
    """
    L = len(gens)
    path = [p]
    t = start_slice
    for _ in range(L * (max(p, 1) + 2 * L + 1)):
        g = gens[t % L]
        i = g.position
        if g.kind is Kind.CAP:
            if p in (i, i + 1):
                return t, path
            if p > i + 1:
                p -= 2
        elif g.kind is Kind.CUP:
            if p >= i:
                p += 2
        elif p == i:
            p += 1
        elif p == i + 1:
            p -= 1
        t += 1
        path.append(p)
    raise NoBackwardArc("strand never reaches a cap")


def _crossing_free(w, start, path) -> bool:
    L = len(w)
    for k, p in enumerate(path[:-1]):
        g = w.generators[(start + k) % L]
        if g.is_crossing and p in (g.position, g.position + 1):
            return False
    return True


def plat_free_strand_resolve(w: BooklinkWord) -> BooklinkWord:
    """Swing a crossing-free innermost or outermost plat arc across the binding.

    The arc from a cup to a cap is replaced by the complementary arc around
    the axis, so the word loses a critical pair and gains a strand at the
    seam.
    """
    if braid_count(w) != 0:
        raise NotAPlat(f"braid count is {braid_count(w)}, not 0")
    w = align_min_to_seam(w)
    counts = w.profile.counts
    L = len(w)
    for j, g in enumerate(w.generators):
        if g.kind is not Kind.CUP:
            continue
        for p in (g.position, g.position + 1):
            c, path = _follow(w.generators, j + 1, p)
            if c >= L or not _crossing_free(w, j + 1, path):
                continue
            slices = range(j + 1, c + 1)
            if all(q == 1 for q in path):
                return _drop_arc(w, j, c, slices, inner=True)
            if all(q == counts[t] for q, t in zip(path, slices)):
                return _drop_arc(w, j, c, slices, inner=False)
    raise NoFreeStrand("no crossing-free arc runs innermost or outermost")


def _drop_arc(w, j, c, slices, inner: bool) -> BooklinkWord:
    gens = []
    for t, g in enumerate(w.generators):
        if t in (j, c):
            continue
        if inner:
            # the arc vacates position 1 inside, the new strand takes it outside
            g = g.shifted(-1 if j < t < c else 1)
        gens.append(g)
    return w.with_generators(gens, w.seam_strands + 1)


def push_strand_through_binding(w: BooklinkWord, start: int, end: int) -> BooklinkWord:
    """Trade the outermost strand over slices ``end..start`` for a critical pair.

    Inverse of the outermost case of :func:`plat_free_strand_resolve`.  The
    outermost track must be untouched by every generator from slice ``end``
    round to slice ``start``; that stretch is pushed across the binding and
    the rest of the strand becomes a free arc from a new cup at slice
    ``start`` to a new cap at slice ``end``.
    """
    counts = check(w).counts
    L = len(w)
    if not (0 <= start < L and 0 < end <= L and start < end):
        raise PatternMismatch("need slices 0 <= start < end <= len(w)")
    outside = list(range(end, L)) + list(range(0, start))
    for t in outside:
        if _touches_top(w.generators[t], counts[t]):
            raise PatternMismatch(f"generator {t} touches the outermost strand")
    if any(counts[t] < 1 for t in list(range(end, L + 1)) + list(range(0, start + 1))):
        raise PatternMismatch("no outermost strand to push")
    gens = list(w.generators)
    m_end = counts[end]
    gens.insert(end, cap(m_end))
    gens.insert(start, cup(counts[start]))
    return w.with_generators(gens, w.seam_strands - 1)


# -- Alexander resolution ---------------------------------------------------

@dataclass(frozen=True)
class Arc:
    """A maximal arc travelled against the angle, from a cap back to a cup."""

    cup: int        # generator index of the cup
    cap: int        # generator index of the cap
    position: int   # the arc's position just after the cup


def backward_arcs(w: BooklinkWord) -> list[Arc]:
    """Backward arcs ordered by the index of their cap."""
    counts = check(w).counts
    if not w.generators:
        return []
    trace = trace_components(w)
    L = len(w)
    arcs = []
    for j, g in enumerate(w.generators):
        if g.kind is not Kind.CUP:
            continue
        t = (j + 1) % L
        i = g.position
        s = i if trace.direction[(t, i)] == -1 else i + 1
        c, _ = _follow(w.generators, j + 1, s)
        arcs.append(Arc(j, c % L, s))
    arcs.sort(key=lambda a: a.cap)
    return arcs


def _sweep(gens: list[Generator], seam: int, s1: int, inner: bool, marker: int):
    """One sweep of the backward arc leaving the cup ``gens[0]`` at position ``s1``.

    The arc is followed in the unrolled word, so it may wind several times
    round the axis.  Returns (new generators, new seam count, the arc's new
    position after the cup, whether the arc is gone, new index of the
    generator at ``marker``).
    """
    L = len(gens)
    counts = [seam]
    for g in gens:
        counts.append(counts[-1] + g.delta())
    # walk the arc: position at unrolled slice t, and its crossings
    at = {1: s1}
    crossings = []  # (unrolled generator index, arc passes over)
    p, t = s1, 1
    while True:
        g = gens[t % L]
        i = g.position
        if g.kind is Kind.CAP and p in (i, i + 1):
            c = t
            break
        if g.is_crossing and p in (i, i + 1):
            over_top = i if g.kind is Kind.POS else i + 1
            crossings.append((t, p == over_top))
            p = i + 1 if p == i else i
        elif g.kind is Kind.CAP and p > i + 1:
            p -= 2
        elif g.kind is Kind.CUP and p >= i:
            p += 2
        t += 1
        at[t] = p

    run = crossings[::-1]
    over = run[0][1] if run else True
    k = next((n for n, (_, flag) in enumerate(run) if flag != over), None)
    full = k is None
    cut = 1 if full else run[k - 1][0]

    # the lifted piece occupies unrolled slices cut..c
    lifted: dict[int, list[int]] = {}
    for u in range(cut, c + 1):
        lifted.setdefault(u % L, []).append(at[u])

    def below(tau: int, q: int) -> int:
        return sum(1 for x in lifted.get(tau, ()) if x < q)

    # the new strand lives from just after the cap round to the cut
    present = [False] * L
    tau = (c + 1) % L
    while True:
        present[tau] = True
        if tau == cut % L:
            break
        tau = (tau + 1) % L

    def up(j):  # new strand moves from j to j+1
        return pos(j) if over else neg(j)

    def down(j):  # new strand moves from j+1 to j
        return neg(j) if over else pos(j)

    shift = 1 if inner else 0
    out: list[Generator] = []
    new_marker = 0
    for tau, g in enumerate(gens):
        if tau == marker:
            new_marker = len(out)
        if tau == cut % L:
            if full:
                i0 = gens[0].position
                u = i0 if s1 == i0 + 1 else i0 + 1
                u -= below(1, u)
                if inner:
                    out += [up(j) for j in range(1, u)]
                else:
                    top = counts[1] - len(lifted.get(1, ()))
                    out += [down(j) for j in range(top - 1, u - 1, -1)]
            else:
                sp = at[cut]
                spr = sp - below(tau, sp)
                if inner:
                    out += [up(j) for j in range(1, spr)]
                else:
                    m = counts[tau] - len(lifted[tau]) + 1
                    out += [down(j) for j in range(m, spr, -1)]
                out.append(cap(spr))
        if tau == 0 and full:
            continue
        if tau == c % L:
            kk = g.position
            other = at[c] ^ kk ^ (kk + 1)  # the strand that carries on
            tr = other - below(tau, other)
            if inner:
                out += [down(j) for j in range(tr - 1, 0, -1)]
            else:
                top = counts[tau] - len(lifted[tau])
                out += [up(j) for j in range(tr, top)]
            continue
        i = g.position
        mine = lifted.get(tau, ())
        if g.is_crossing and (i in mine or i + 1 in mine):
            continue
        moved = -below(tau, i)
        if inner and present[tau] and tau != cut % L:
            moved += 1
        out.append(g.shifted(moved))
    if marker >= L:
        new_marker = len(out)
    s1_new = s1 - below(1, s1) + (shift if present[1] else 0)
    return out, seam - len(lifted.get(0, ())) + (1 if present[0] else 0), s1_new, full, new_marker


def resolve_bridge(w: BooklinkWord, arc: int = 0, routing: str = INNER) -> BooklinkWord:
    """Replace a backward arc by strands that wrap forward around the axis.

    The arc's crossings are taken in runs of constant over/under type, from
    the cap end.  Each run is swung across the binding on the ``routing``
    side (``"inner"`` or ``"outer"``) as a strand that passes over (or
    under) everything; a partial run leaves a new cap where the next run
    begins.  The final run removes the cup, so ``d`` drops by one.  ``n``
    grows by at most the number of runs, but it can fall when the removed
    arc ran through the minimal slices.
    """
    if routing not in (INNER, OUTER):
        raise InvalidChoice(f"routing must be {INNER!r} or {OUTER!r}")
    arcs = backward_arcs(w)
    if not arcs:
        raise NoBackwardArc("word has no critical points")
    if not 0 <= arc < len(arcs):
        raise InvalidChoice(f"arc {arc} out of range 0..{len(arcs) - 1}")
    a = arcs[arc]
    L = len(w)
    r = rotate(w, a.cup)
    gens, seam, s1 = list(r.generators), r.seam_strands, a.position
    marker = (L - a.cup) % L
    done = False
    while not done:
        gens, seam, s1, done, marker = _sweep(gens, seam, s1, routing == INNER, marker)
    out = BooklinkWord(seam, tuple(gens), w.comment)
    return rotate(out, marker)


def simplify_braid(w: BooklinkWord) -> BooklinkWord:
    """Shrink a braid word without changing its closure.

    Repeats until nothing applies: cancel a generator against its inverse
    when everything between them (read cyclically) commutes with it, and
    drop a strand at either edge that meets a single crossing.
    """
    if any(not g.is_crossing for g in w.generators):
        raise NotABraid("simplify_braid needs a word without caps or cups")
    n, gens = w.seam_strands, list(w.generators)
    changed = True
    while changed:
        changed = False
        L = len(gens)
        for i in range(L):
            g = gens[i]
            for step in range(1, L):
                j = (i + step) % L
                h = gens[j]
                if h.position == g.position and h.kind is not g.kind:
                    del gens[max(i, j)], gens[min(i, j)]
                    changed = True
                    break
                if abs(h.position - g.position) < 2:
                    break
            if changed:
                break
        if changed or n < 2:
            continue
        top = [j for j, g in enumerate(gens) if g.position == n - 1]
        bottom = [j for j, g in enumerate(gens) if g.position == 1]
        if len(top) == 1:
            del gens[top[0]]
        elif len(bottom) == 1:
            del gens[bottom[0]]
            gens = [g.shifted(-1) for g in gens]
        else:
            continue
        n -= 1
        changed = True
    return w.with_generators(tuple(gens), n)


def _choices(w: BooklinkWord) -> Iterator[tuple[int, str]]:
    for k in range(len(backward_arcs(w))):
        yield k, INNER
        yield k, OUTER


def to_braid(w: BooklinkWord, strategy: str = "greedy", budget: int = 10_000,
             simplify: bool = True) -> BooklinkWord:
    """Resolve every critical pair, returning a braid word for the same link.

    ``greedy`` takes, at each step, the choice with the smallest resulting
    braid count (ties: lowest arc index, then inner before outer).
    ``exhaustive`` explores all choices, with at most ``budget`` calls to
    :func:`resolve_bridge`, and returns the smallest final strand count seen;
    it only fails when not one resolution finished within the budget.
    With ``simplify`` the result is passed through :func:`simplify_braid`.
    """
    check(w)
    if strategy == "greedy":
        while bridge_index(w) > 0:
            best = None
            for k, routing in _choices(w):
                cand = resolve_bridge(w, k, routing)
                key = braid_count(cand)
                if best is None or key < best[0]:
                    best = (key, cand)
            w = best[1]
        return simplify_braid(w) if simplify else w
    if strategy != "exhaustive":
        raise InvalidChoice(f"unknown strategy {strategy!r}")
    calls = count()
    best: list = [None]

    def search(v: BooklinkWord):
        if bridge_index(v) == 0:
            if simplify:
                v = simplify_braid(v)
            key = (braid_count(v), len(v), v.generators)
            if best[0] is None or key < best[0][0]:
                best[0] = (key, v)
            return
        for k, routing in _choices(v):
            if next(calls) >= budget:
                return
            search(resolve_bridge(v, k, routing))

    search(w)
    if best[0] is None:
        raise BudgetExceeded(f"no complete resolution within {budget} steps")
    return best[0][1]
