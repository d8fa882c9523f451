import pytest

from booklink.errors import BadIndex, InvalidSpectrum
from booklink.spectrum import (
    Spectrum,
    bb_spectrum,
    composite_combine,
    is_concave,
    parse_spectrum,
    spectrum_violations,
    split_combine,
    two_bridge_spectrum,
    validate_spectrum,
)


def S(*v):
    return Spectrum(tuple(v))


class TestValidate:
    def test_figure8(self):
        s = validate_spectrum([3, 1, 0])
        assert s == S(3, 1, 0) and s.bridge_index == 2 and s.braid_index == 3

    def test_not_decreasing(self):
        with pytest.raises(InvalidSpectrum) as info:
            validate_spectrum([3, 3, 1, 0])
        assert info.value.code == "NotDecreasing"
        assert str(info.value.violations[0]) == "NotDecreasing at d=1"

    def test_missing_penultimate_one(self):
        with pytest.raises(InvalidSpectrum) as info:
            validate_spectrum([4, 2, 0])
        assert info.value.code == "MissingPenultimateOne"

    def test_no_terminal_zero(self):
        assert [v.code for v in spectrum_violations([3, 2, 1])] == ["NoTerminalZero"]

    def test_trailing_zeros_dropped(self):
        assert validate_spectrum([2, 1, 0, 0, 0]) == S(2, 1, 0)

    def test_nonzero_after_zero(self):
        assert spectrum_violations([2, 1, 0, 1])[0].code == "NotDecreasing"

    def test_parse_and_str(self):
        s = parse_spectrum("{4,2,1,0}")
        assert str(s) == "{4,2,1,0}" and s.at(7) == 0
        with pytest.raises(ValueError):
            parse_spectrum("four")


class TestClosedForms:
    @pytest.mark.parametrize("n,expected", [(3, S(3, 1, 0)), (2, S(2, 1, 0)), (5, S(5, 1, 0))])
    def test_two_bridge(self, n, expected):
        assert two_bridge_spectrum(n) == expected

    def test_two_bridge_bad(self):
        with pytest.raises(BadIndex):
            two_bridge_spectrum(1)

    def test_bb(self):
        assert bb_spectrum(3) == S(3, 2, 1, 0)
        assert bb_spectrum(1) == S(1, 0)
        with pytest.raises(BadIndex):
            bb_spectrum(0)


class TestCombine:
    def test_split_example(self):
        assert split_combine(S(3, 1, 0), S(3, 1, 0)) == S(6, 4, 2, 1, 0)

    def test_split_unlink(self):
        assert split_combine(S(1, 0), S(1, 0)) == S(2, 1, 0)

    def test_split_with_unknot(self):
        assert split_combine(S(2, 1, 0), S(1, 0)) == S(3, 2, 1, 0)

    def test_composite_trefoils(self):
        assert composite_combine(S(2, 1, 0), S(2, 1, 0)) == S(3, 2, 1, 0)

    def test_composite_figure8_trefoil(self):
        assert composite_combine(S(3, 1, 0), S(2, 1, 0)) == S(4, 2, 1, 0)

    def test_unknot_is_composite_identity(self):
        for s in (S(3, 1, 0), S(4, 2, 1, 0), S(6, 4, 2, 1, 0)):
            assert composite_combine(s, S(1, 0)) == s
            assert composite_combine(S(1, 0), s) == s

    def test_raw_inputs_are_validated(self):
        with pytest.raises(InvalidSpectrum):
            split_combine([3, 3, 0], [1, 0])


class TestConcavity:
    def test_example(self):
        assert is_concave(S(6, 4, 2, 1, 0)).concave

    def test_witness_row(self):
        assert is_concave(S(5, 2, 1, 0)) == (True, None)

    def test_counterexample(self):
        assert is_concave(S(4, 3, 1, 0)) == (False, 1)
