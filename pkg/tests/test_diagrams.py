"""Frozen-value tests for the diagram data model.

Expected values were derived by hand (direct scans of the dot patterns and
coordinate sums) before the module was written, so they act as independent
oracles for the implementation.
"""

import pytest

from kacres.diagrams import (
    WeightDiagram,
    atypicality,
    diagram_from_dominant,
    dominant_from_diagram,
    format_diagram,
    is_isolated,
    is_left_isolated,
    leq,
    normal_form,
    odd_run_count,
    parse_diagram,
    parse_runs,
    relative_length,
    relative_length_at,
    render_ascii,
    runs,
    shift,
)
from kacres.errors import DiagramError


D = WeightDiagram.of


class TestConversions:
    def test_four_dot_conversion(self):
        assert diagram_from_dominant((2, 2, 1, -4)) == D(-4, 2, 4, 5)

    def test_rank_one(self):
        assert diagram_from_dominant((0,)) == D(0)

    def test_rank_two_zero_weight(self):
        assert diagram_from_dominant((0, 0)) == D(0, 1)

    def test_inverse_four_dot(self):
        assert dominant_from_diagram(D(-4, 2, 4, 5)) == (2, 2, 1, -4)

    def test_inverse_rank_one(self):
        assert dominant_from_diagram(D(0)) == (0,)

    def test_inverse_rank_two(self):
        assert dominant_from_diagram(D(0, 1)) == (0, 0)

    def test_round_trip_small(self):
        for coeffs in [(3, 1, 1, 0), (0, -2), (5,), (2, 2, 2, 2, 2)]:
            assert dominant_from_diagram(diagram_from_dominant(coeffs)) == coeffs

    def test_rejects_increasing_coeffs(self):
        with pytest.raises(DiagramError):
            diagram_from_dominant((0, 1))

    def test_rejects_empty(self):
        with pytest.raises(DiagramError):
            diagram_from_dominant(())


class TestDiagramValidation:
    def test_rejects_unsorted_dots(self):
        with pytest.raises(DiagramError):
            WeightDiagram((1, 0))

    def test_rejects_duplicate_dots(self):
        with pytest.raises(DiagramError):
            WeightDiagram((0, 0))

    def test_rejects_empty_dots(self):
        with pytest.raises(DiagramError):
            WeightDiagram(())

    def test_n_property(self):
        assert D(-4, 2, 4, 5).n == 4

    def test_has_dot(self):
        d = D(-4, 2, 4, 5)
        assert d.has_dot(-4) and d.has_dot(4)
        assert not d.has_dot(0)


class TestRuns:
    def test_four_dot_runs(self):
        # blocks are {-4}, {2}, {4,5}; sizes listed right to left
        assert runs(D(-4, 2, 4, 5)) == (2, 1, 1)

    def test_no_adjacencies(self):
        assert runs(D(0, 2, 4)) == (1, 1, 1)

    def test_two_blocks_of_four(self):
        assert runs(D(0, 1, 2, 3, 8, 9, 10, 11)) == (4, 4)

    def test_single_dot(self):
        assert runs(D(7)) == (1,)

    def test_atypicality(self):
        assert atypicality(D(0, 2, 4)) == 0
        assert atypicality(D(-4, 2, 4, 5)) == 1
        assert atypicality(D(0, 1, 2)) == 2

    def test_odd_run_count(self):
        assert odd_run_count(D(-4, 2, 4, 5)) == 2
        assert odd_run_count(D(0, 1)) == 0
        assert odd_run_count(D(0, 1, 2)) == 1


class TestIsolation:
    def test_isolated_dots(self):
        d = D(-4, 2, 4, 5)
        assert is_isolated(d, -4)
        assert is_isolated(d, 2)
        assert not is_isolated(d, 4)
        assert not is_isolated(d, 5)

    def test_left_isolated_dots(self):
        d = D(-4, 2, 4, 5)
        assert is_left_isolated(d, -4)
        assert is_left_isolated(d, 2)
        assert is_left_isolated(d, 4)
        assert not is_left_isolated(d, 5)

    def test_not_a_dot_is_an_error(self):
        with pytest.raises(DiagramError):
            is_isolated(D(0, 1), 2)
        with pytest.raises(DiagramError):
            is_left_isolated(D(0, 1), -1)


class TestRelativeLength:
    def test_pointwise_count(self):
        assert relative_length_at(D(-1, 0), D(0, 1), -1) == 1

    def test_pointwise_self_is_zero(self):
        d = D(0, 2, 5)
        for t in range(-2, 8):
            assert relative_length_at(d, d, t) == 0

    def test_pointwise_five_dots(self):
        assert relative_length_at(D(0, 1, 3, 5, 6), D(3, 4, 5, 7, 8), 2) == 2

    def test_five_dot_example(self):
        assert relative_length(D(0, 1, 3, 5, 6), D(3, 4, 5, 7, 8)) == 12

    def test_eight_dot_example(self):
        lam = D(-4, -3, 0, 1, 4, 5, 8, 9)
        mu = D(0, 1, 2, 3, 8, 9, 10, 11)
        assert relative_length(lam, mu) == 24

    def test_self_is_zero(self):
        d = D(-4, 2, 4, 5)
        assert relative_length(d, d) == 0

    def test_size_mismatch(self):
        with pytest.raises(DiagramError):
            relative_length(D(0), D(0, 1))
        with pytest.raises(DiagramError):
            relative_length_at(D(0), D(0, 1), 0)


class TestPartialOrder:
    def test_left_of(self):
        assert leq(D(0, 1), D(-1, 0))

    def test_reflexive(self):
        d = D(0, 2, 4)
        assert leq(d, d)

    def test_not_leq(self):
        assert not leq(D(0, 1), D(0, 2))

    def test_size_mismatch(self):
        with pytest.raises(DiagramError):
            leq(D(0), D(0, 1))


class TestShift:
    def test_shift_left(self):
        assert shift(D(0, 1), -1) == D(-1, 0)

    def test_shift_right(self):
        assert shift(D(-4, 2, 4, 5), 4) == D(0, 6, 8, 9)

    def test_shift_round_trip(self):
        d = D(-4, 2, 4, 5)
        assert shift(shift(d, 17), -17) == d

    def test_normal_form(self):
        nf, offset = normal_form(D(-4, 2, 4, 5))
        assert nf == D(0, 6, 8, 9)
        assert offset == -4
        assert shift(nf, offset) == D(-4, 2, 4, 5)
        assert normal_form(D(0, 3))[0] == D(0, 3)


class TestTextFormats:
    def test_format(self):
        assert format_diagram(D(-4, 2, 4, 5)) == "[-4,2,4,5]"

    def test_parse(self):
        assert parse_diagram("[-4,2,4,5]") == D(-4, 2, 4, 5)
        assert parse_diagram("[0, 1]") == D(0, 1)
        assert parse_diagram(" [3,4,5,7,8] ") == D(3, 4, 5, 7, 8)

    def test_parse_format_round_trip(self):
        for d in [D(0), D(-3, -2), D(0, 2, 4, 5)]:
            assert parse_diagram(format_diagram(d)) == d

    def test_parse_rejects_garbage(self):
        for bad in ["", "[]", "[1,1]", "[2,1]", "0,1", "[a,b]", "[1;2]"]:
            with pytest.raises(DiagramError):
                parse_diagram(bad)

    def test_ascii_render(self):
        out = render_ascii(D(-1, 1))
        lines = out.splitlines()
        assert len(lines) == 2
        ruler, row = lines
        assert "-2" in ruler and "2" in ruler
        # window [-2, 2]: tick, dot, tick, dot, tick
        assert row.split() == [".", "o", ".", "o", "."]

    def test_parse_runs(self):
        assert parse_runs("2") == (2,)
        assert parse_runs("4,4") == (4, 4)
        assert parse_runs("2, 1, 1") == (2, 1, 1)
        for bad in ["", "0", "-1", "1,", "x"]:
            with pytest.raises(DiagramError):
                parse_runs(bad)
