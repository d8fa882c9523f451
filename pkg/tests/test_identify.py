from collections import Counter
from dataclasses import replace

import pytest

from booklink.errors import MultiComponent, NoMatch, TooManyCrossings
from booklink.identify import (
    DTCode,
    dt_code,
    identify,
    jones,
    kauffman_bracket,
    to_planar_diagram,
    writhe,
)
from booklink.polynomial import DELTA, ONE, LaurentPolynomial, parse_polynomial
from booklink.word import BooklinkWord, mirror, parse_word, rotate
from wordgen import FIGURE8_BRAID, FIGURE8_PLAT, TREFOIL, UNKNOT, random_knot

T = lambda s: parse_polynomial(s, unit=4)  # noqa: E731


class TestPlanarDiagram:
    def test_trefoil(self):
        pd = to_planar_diagram(TREFOIL)
        assert len(pd) == 3 and pd.writhe == 3

    def test_single_loop(self):
        pd = to_planar_diagram(UNKNOT)
        assert len(pd) == 0 and pd.free_loops == 1

    def test_edges_meet_twice(self, witnesses):
        for e in witnesses:
            pd = to_planar_diagram(e.word)
            assert len(pd) == e.word.crossing_count
            uses = Counter(x for c in pd.crossings for x in c.edges)
            assert set(uses.values()) == {2}
            assert sorted(uses) == list(range(1, pd.edge_count + 1))

    def test_writhe_flips_under_mirror(self, witnesses):
        for e in witnesses:
            assert writhe(mirror(e.word)) == -writhe(e.word)


class TestDT:
    def test_unknot(self):
        assert dt_code(UNKNOT) == DTCode(())

    def test_trefoil(self):
        assert tuple(abs(x) for x in dt_code(TREFOIL).pairs) == (4, 6, 2)

    def test_figure8(self):
        assert tuple(abs(x) for x in dt_code(FIGURE8_BRAID).pairs) == (4, 6, 8, 2)
        assert tuple(abs(x) for x in dt_code(FIGURE8_PLAT).pairs) == (4, 6, 8, 2)

    def test_is_permutation_of_evens(self, witnesses):
        for e in witnesses:
            code = dt_code(e.word).pairs
            assert sorted(abs(x) for x in code) == list(range(2, 2 * len(code) + 1, 2))

    def test_rotation_invariant(self, witnesses):
        for e in witnesses[:8]:
            base = dt_code(e.word)
            assert all(dt_code(rotate(e.word, k)) == base for k in range(len(e.word)))

    def test_needs_a_knot(self):
        with pytest.raises(MultiComponent):
            dt_code(BooklinkWord(2))

    def test_parse(self):
        assert DTCode.parse("4 6 2") == DTCode((4, 6, 2))
        assert str(DTCode.parse("[4, -6, 2]")) == "4 -6 2"


class TestBracket:
    def test_one_loop(self):
        assert kauffman_bracket(UNKNOT) == ONE

    def test_two_loops(self):
        assert kauffman_bracket(BooklinkWord(2)) == DELTA

    def test_kinks(self):
        assert kauffman_bracket(parse_word("strands:0\ncup1 x1- cap1")) == LaurentPolynomial({3: -1})
        assert kauffman_bracket(parse_word("strands:0\ncup1 x1+ cap1")) == LaurentPolynomial({-3: -1})

    def test_routes_agree(self, rng):
        for _ in range(40):
            w = random_knot(rng)
            assert kauffman_bracket(w) == kauffman_bracket(w, method="state-sum")

    def test_crossing_cap(self):
        big = parse_word("strands:2\n" + "x1+ " * 25)
        with pytest.raises(TooManyCrossings):
            kauffman_bracket(big)
        assert kauffman_bracket(big, max_crossings=None) == kauffman_bracket(
            big, max_crossings=30)

    def test_unknown_method(self):
        with pytest.raises(ValueError):
            kauffman_bracket(TREFOIL, method="guess")


class TestJones:
    def test_unknot(self):
        assert jones(UNKNOT) == ONE

    def test_trefoil(self):
        assert jones(TREFOIL) == T("t+ t^3-t^4")

    def test_figure8(self):
        v = T("t^(-2)-t^(-1)+ 1-t+ t^2")
        assert jones(FIGURE8_BRAID) == v
        assert jones(FIGURE8_PLAT) == v

    def test_mirror(self, rng):
        for _ in range(20):
            w = random_knot(rng)
            assert jones(mirror(w)) == jones(w).invert_variable()


class TestIdentify:
    def test_trefoil(self, knots):
        r = identify(TREFOIL, knots)
        assert r.candidates == ("3_1",) and r.exact

    def test_unknot(self, knots):
        assert identify(UNKNOT, knots).candidates == ("0_1",)

    def test_bundled_default(self):
        assert identify(FIGURE8_PLAT).name == "4_1"

    def test_witness_8_15(self, witnesses, knots):
        w = next(e.word for e in witnesses if e.knot == "8_15")
        assert identify(w, knots).candidates == ("8_15",)

    def test_mirror_insensitive(self, witnesses, knots):
        for e in witnesses:
            assert identify(mirror(e.word), knots).candidates == identify(e.word, knots).candidates

    def test_shared_jones_gives_every_candidate(self, knots):
        trefoil = next(r for r in knots if r.name == "3_1")
        twin = replace(trefoil, name="9_99", crossing_number=9)
        r = identify(TREFOIL, [twin, trefoil])
        assert r.candidates == ("3_1", "9_99") and not r.exact

    def test_no_match(self, knots):
        with pytest.raises(NoMatch):
            identify(TREFOIL, [r for r in knots if r.name != "3_1"])

    def test_multi_component(self, knots):
        with pytest.raises(MultiComponent):
            identify(BooklinkWord(2), knots)
