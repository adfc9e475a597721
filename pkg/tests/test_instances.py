from fractions import Fraction as F

import pytest

from octcover.instances import (
    FormatError,
    format_coloring,
    format_cover,
    format_points,
    generate,
    parse_coloring,
    parse_cover,
    parse_points,
    parse_triangles,
)
from octcover.verify import Coloring


class TestPointFiles:
    def test_round_trip(self):
        pts = generate("random", 9, seed=4)
        assert parse_points(format_points(pts)) == pts

    def test_rationals_round_trip(self):
        text = "1/3 -2/7 5\n# comment\n0.5 1 2\n"
        pts = parse_points(text)
        assert pts[0].x == F(1, 3) and pts[1].x == F(1, 2)
        assert parse_points(format_points(pts)) == pts

    def test_bad_line_reports_number(self):
        with pytest.raises(FormatError, match="line 2"):
            parse_points("1 2 3\n1 2\n")

    def test_bad_rational(self):
        with pytest.raises(FormatError, match="line 1"):
            parse_points("a b c\n")

    def test_empty(self):
        with pytest.raises(FormatError):
            parse_points("# nothing\n")


class TestColoringFiles:
    def test_round_trip(self):
        col = Coloring({0: 1, 2: 3, 1: 2})
        assert parse_coloring(format_coloring(col)) == col

    def test_bad_line(self):
        with pytest.raises(FormatError, match="line 1"):
            parse_coloring("0 one\n")


class TestCoverFiles:
    def test_round_trip(self):
        text = "[octants]\n1 2 3\n-1/2 0 4\n[targets]\n0 0 0\n"
        cover = parse_cover(text)
        assert parse_cover(format_cover(cover)) == cover

    def test_missing_section(self):
        with pytest.raises(FormatError):
            parse_cover("[octants]\n1 2 3\n")

    def test_unknown_section(self):
        with pytest.raises(FormatError, match="line 1"):
            parse_cover("[stuff]\n")


class TestTriangleFiles:
    def test_parse(self):
        homothets, targets = parse_triangles(
            "[triangles]\n0 0 1\n2 3 1/2\n[targets2d]\n-1/4 -1/4\n"
        )
        assert len(homothets) == 2 and homothets[1].scale == F(1, 2)
        assert targets == [(F(-1, 4), F(-1, 4))]

    def test_nonpositive_scale(self):
        with pytest.raises(FormatError, match="line 2"):
            parse_triangles("[triangles]\n0 0 0\n[targets2d]\n0 0\n")


class TestGenerate:
    def test_chain(self):
        pts = generate("chain", 3)
        assert [(p.x, p.y, p.z) for p in pts] == [(1, 1, 1), (2, 2, 2), (3, 3, 3)]

    def test_antichain(self):
        pts = generate("antichain", 3)
        assert [(p.x, p.y, p.z) for p in pts] == [(1, 3, 1), (2, 2, 2), (3, 1, 3)]

    def test_random_deterministic(self):
        assert generate("random", 5, seed=7) == generate("random", 5, seed=7)

    def test_grid_ids_contiguous(self):
        pts = generate("grid", 7)
        assert [p.id for p in pts] == list(range(7))

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            generate("spiral", 3)

    def test_bad_n(self):
        with pytest.raises(ValueError):
            generate("chain", 0)
