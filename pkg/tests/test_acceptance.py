"""End-to-end acceptance checks, one test per criterion.

Each test prints a single ``criterion N PASS|FAIL: ...`` line to the
terminal (even without ``-s``) before asserting.
"""

import csv
import random
import time
from pathlib import Path

import pytest

from booklink.cli import main
from booklink.identify import jones, kauffman_bracket, writhe
from booklink.moves import (
    INNER,
    OUTER,
    add_critical_pair,
    backward_arcs,
    destabilize,
    exchange_move,
    plat_free_strand_resolve,
    resolve_bridge,
    stabilize,
    to_braid,
)
from booklink.polynomial import LaurentPolynomial
from booklink.spectrum import Spectrum, composite_combine, is_concave, split_combine
from booklink.table import parse_emitted, verify_witness
from booklink.word import (
    BooklinkWord,
    Kind,
    braid_count,
    bridge_index,
    cap,
    connected_sum,
    cup,
    neg,
    pos,
    rotate,
    trace_components,
)
from wordgen import FIGURE8_PLAT, random_knot, random_plat

EXPECTED = Path(__file__).parent / "data" / "expected_rows.csv"

# greedy to_braid strand counts, frozen as a regression baseline
GREEDY_WIDTHS = {
    "4_1": 5, "8_15": 6, "9_22": 5, "9_24": 5, "9_25": 7, "9_28": 5, "9_29": 7,
    "9_30": 9, "9_32": 5, "9_33": 7, "9_34": 9, "9_35": 7, "9_36": 7, "9_37": 7,
    "9_38": 6, "9_39": 7, "9_40": 7, "9_41": 6, "9_42": 9, "9_43": 4, "9_44": 4,
    "9_45": 5, "9_46": 7, "9_47": 6, "9_48": 6, "9_49": 6,
}


@pytest.fixture
def report(capsys):
    def emit(n, ok, detail):
        with capsys.disabled():
            print(f"\ncriterion {n} {'PASS' if ok else 'FAIL'}: {detail}")
        return ok
    return emit


def dn(w):
    return bridge_index(w), braid_count(w)


def test_criterion_1_table_reproduction(report, tmp_path, capsys):
    start = time.perf_counter()
    out = tmp_path / "table.csv"
    code = main(["table", "regenerate", "--out", str(out), "--format", "csv"])
    capsys.readouterr()
    elapsed = time.perf_counter() - start
    with EXPECTED.open(newline="") as fh:
        expected = [tuple(r) for r in csv.reader(fh)][1:]
    got = [(r.name, str(r.bridge), str(r.braid), str(r.spectrum), r.derivation)
           for r in parse_emitted(out.read_text()).rows] if code == 0 else []
    matches = sum(a == b for a, b in zip(got, expected))
    ok = code == 0 and len(got) == len(expected) == 85 and matches == 85 and elapsed < 60
    assert report(1, ok, f"{matches}/85 rows match, exit {code}, {elapsed:.1f}s")


def test_criterion_2_witness_verification(report, witnesses, knots):
    start = time.perf_counter()
    reports = [verify_witness(e, knots) for e in witnesses]
    elapsed = time.perf_counter() - start
    shared = [r.knot for r in reports if not r.unique]
    ok = (len(reports) == 25 and all(r.knot in r.candidates for r in reports)
          and all((r.bridge, r.braid) == (1, 2) for r in reports) and elapsed < 30)
    detail = f"{len(reports)}/25 verified as (1,2), {25 - len(shared)} unique Jones matches"
    if shared:
        detail += f" (shared: {', '.join(shared)})"
    assert report(2, ok, f"{detail}, {elapsed:.1f}s")


def test_criterion_3_split_example(report):
    got = split_combine(Spectrum((3, 1, 0)), Spectrum((3, 1, 0)))
    assert report(3, str(got) == "{6,4,2,1,0}", f"split {{3,1,0}} {{3,1,0}} = {got}")


def _random_spectrum(rng):
    d = rng.randint(1, 6)
    values = [0, 1]
    for _ in range(d - 1):
        values.append(values[-1] + rng.randint(1, 4))
    return Spectrum(tuple(reversed(values)))


def test_criterion_4_spectrum_formulas(report, rng):
    a = composite_combine(Spectrum((2, 1, 0)), Spectrum((2, 1, 0)))
    b = composite_combine(Spectrum((3, 1, 0)), Spectrum((2, 1, 0)))
    fixed = str(a) == "{3,2,1,0}" and str(b) == "{4,2,1,0}"
    good = 0
    for _ in range(1000):
        s1, s2 = _random_spectrum(rng), _random_spectrum(rng)
        sp, co = split_combine(s1, s2), composite_combine(s1, s2)
        good += (sp.braid_index == s1.braid_index + s2.braid_index
                 and sp.bridge_index == s1.bridge_index + s2.bridge_index
                 and co.braid_index == s1.braid_index + s2.braid_index - 1
                 and co.bridge_index == s1.bridge_index + s2.bridge_index - 1)
    ok = fixed and good == 1000
    assert report(4, ok, f"composite examples {a} {b}; endpoints hold on {good}/1000 pairs")


def _slots(w):
    counts = w.profile.counts
    return [(t, i) for t in range(len(counts)) for i in range(1, counts[t] + 1)]


def _exchange_word(rng):
    m, e = rng.randint(3, 5), rng.choice((1, -1))

    def band():
        return [rng.choice((pos, neg))(rng.randint(1, m - 2)) for _ in range(rng.randint(0, 4))]

    top = (lambda s: pos(m - 1) if s > 0 else neg(m - 1))
    return BooklinkWord(m, tuple([top(e)] + band() + [top(-e)] + band()))


def _moves_ok(rng, words=100):
    """(a): each move keeps Jones and shifts (d, n) as declared."""
    tally = {}

    def record(name, ok):
        tally.setdefault(name, [0, 0])
        tally[name][0] += ok
        tally[name][1] += 1

    for _ in range(words):
        w = random_knot(rng)
        v0 = jones(w)
        d, n = dn(w)
        slots = _slots(w)
        if slots:
            t, i = rng.choice(slots)
            v = add_critical_pair(w, t, i)
            record("add_critical_pair", dn(v) == (d + 1, n) and jones(v) == v0)
        s = stabilize(w)
        record("stabilize", dn(s) == (d, n + 1) and jones(s) == v0)
        back = destabilize(s)
        record("destabilize", dn(back) == (d, n) and jones(back) == v0)
        x = _exchange_word(rng)
        y = exchange_move(x, 0)
        record("exchange_move", dn(y) == dn(x) and jones(y) == jones(x))
        if d:
            k, routing = rng.randrange(len(backward_arcs(w))), rng.choice((INNER, OUTER))
            r = resolve_bridge(w, k, routing)
            record("resolve_bridge", bridge_index(r) == d - 1
                   and jones(r, max_crossings=None) == v0)
    made = 0
    while made < words:
        p = random_plat(rng, pairs=rng.randint(2, 3), crossings=rng.randint(0, 6), free_top=True)
        if trace_components(p).components != 1:
            continue
        made += 1
        q = plat_free_strand_resolve(p)
        record("plat_free_strand_resolve",
               dn(q) == (bridge_index(p) - 1, 1) and jones(q) == jones(p))
    return tally


def _skein_kink_ok(rng, trials=100):
    """(b): bracket skein relation and the kink factor."""
    A, A_INV = LaurentPolynomial.monomial(1), LaurentPolynomial.monomial(-1)
    good = 0
    for _ in range(trials):
        w = random_knot(rng)
        sites = [j for j, g in enumerate(w.generators) if g.is_crossing] or None
        skein = True
        if sites:
            j = rng.choice(sites)
            g = w.generators[j]
            ident = w.generators[:j] + w.generators[j + 1:]
            turn = w.generators[:j] + (cap(g.position), cup(g.position)) + w.generators[j + 1:]
            a, b = (ident, turn) if g.kind is Kind.POS else (turn, ident)
            skein = kauffman_bracket(w, method="state-sum") == (
                A * kauffman_bracket(w.with_generators(a))
                + A_INV * kauffman_bracket(w.with_generators(b)))
        t, i = rng.choice(_slots(w) or [(0, 1)])
        if not _slots(w):
            w = BooklinkWord(1)
        kinked = w.with_generators(
            w.generators[:t] + (cup(i + 1), rng.choice((pos, neg))(i), cap(i)) + w.generators[t:])
        dw = writhe(kinked) - writhe(w)
        kink = kauffman_bracket(kinked) == LaurentPolynomial.monomial(3 * dw, -1) * kauffman_bracket(w)
        good += skein and kink
    lone = BooklinkWord(0, (cup(1), neg(1), cap(1)))
    positive = writhe(lone) == 1 and kauffman_bracket(lone) == LaurentPolynomial.monomial(3, -1)
    return good, positive


def _multiplicative_ok(rng, pairs=12):
    """(c): Jones multiplies under connected sum."""
    good = 0
    for _ in range(pairs):
        a, b = [next(w for w in iter(lambda: random_knot(rng, length=6, max_crossings=4), None)
                     if bridge_index(w) >= 1) for _ in range(2)]
        s = connected_sum(a, b, rng.randrange(bridge_index(a)), rng.randrange(bridge_index(b)))
        good += (jones(s, max_crossings=None) == jones(a) * jones(b)
                 and bridge_index(s) == bridge_index(a) + bridge_index(b) - 1)
    return good


def _naive_split(s1, s2):
    D = s1.bridge_index + s2.bridge_index
    out = []
    for d in range(D + 1):
        best = None
        for d1 in range(D + 1):
            for d2 in range(D + 1):
                if d1 + d2 == d:
                    v = s1.at(d1) + s2.at(d2)
                    best = v if best is None else min(best, v)
        out.append(best)
    return tuple(out)


def test_criterion_5_invariant_suites(report, rng, witnesses):
    start = time.perf_counter()
    tally = _moves_ok(rng)
    moves_ok = all(g == n and n >= 100 for g, n in
                   (tally[m] for m in tally if m != "resolve_bridge"))
    moves_ok &= tally["resolve_bridge"][0] == tally["resolve_bridge"][1] > 0
    skein, positive = _skein_kink_ok(rng)
    mult = _multiplicative_ok(rng)
    rotations = all(braid_count(rotate(e.word, k)) == braid_count(e.word)
                    for e in witnesses for k in range(len(e.word) + 1))
    oracle = all(split_combine(a, b).values == _naive_split(a, b)
                 for a, b in ((_random_spectrum(rng), _random_spectrum(rng)) for _ in range(500)))
    elapsed = time.perf_counter() - start
    ok = (moves_ok and skein == 100 and positive and mult == 12 and rotations and oracle
          and elapsed < 60)
    counts = ", ".join(f"{m} {g}/{n}" for m, (g, n) in sorted(tally.items()))
    assert report(5, ok, f"(a) {counts}; (b) skein+kink {skein}/100; (c) {mult}/12 sums; "
                         f"(d) rotations {'ok' if rotations else 'broken'}; "
                         f"(e) naive oracle {'ok' if oracle else 'differs'}; {elapsed:.1f}s")


def test_criterion_6_to_braid(report, witnesses, knots_by_name):
    start = time.perf_counter()
    cases = [("4_1", FIGURE8_PLAT)] + [(e.knot, e.word) for e in witnesses]
    bad = []
    widths = {}
    for name, w in cases:
        b = to_braid(w)
        widths[name] = braid_count(b)
        if not (bridge_index(b) == 0 and jones(b, max_crossings=None) == jones(w)
                and braid_count(b) >= knots_by_name[name].braid_index):
            bad.append(name)
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 60
    detail = (f"{len(cases) - len(bad)}/{len(cases)} braids keep Jones and have >= n strands "
              f"(widths {min(widths.values())}..{max(widths.values())}), {elapsed:.1f}s")
    assert report(6, ok, detail + (f"; failing: {', '.join(bad)}" if bad else ""))
    assert widths == GREEDY_WIDTHS


def test_criterion_7_concavity(report, knots):
    failing = [r.name for r in knots if not is_concave(r.expected_spectrum).concave]
    assert report(7, not failing and len(knots) == 85,
                  f"{85 - len(failing)}/85 expected spectra concave"
                  + (f"; not concave: {', '.join(failing)}" if failing else ""))


def test_random_source_is_seeded(seed):
    assert random.Random(seed).random() == random.Random(seed).random()
