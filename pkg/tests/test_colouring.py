import pytest

from oatgraph import (
    Colouring,
    ColouringError,
    Graph,
    Palette,
    PaletteError,
    colouring_from_json,
    colouring_to_json,
)


class TestPalette:
    def test_default_is_one_through_k(self):
        assert Palette.default(3).colours == (1, 2, 3)

    def test_rejects_empty(self):
        with pytest.raises(PaletteError):
            Palette(())

    def test_rejects_duplicates(self):
        with pytest.raises(PaletteError):
            Palette((1, 1, 2))

    def test_prefix_and_without(self):
        s = Palette((1, 2, 3))
        assert s.prefix(2).colours == (1, 2)
        assert s.without(2).colours == (1, 3)
        assert 2 in s and 5 not in s
        assert len(s) == 3
        assert list(s) == [1, 2, 3]
        assert s[0] == 1


class TestColouring:
    def test_rejects_off_palette_colour(self):
        with pytest.raises(ColouringError):
            Colouring((1, 4), Palette((1, 2)))

    def test_rejects_empty_assignment(self):
        with pytest.raises(ColouringError):
            Colouring((), Palette((1,)))

    def test_used_colours_in_palette_order(self):
        c = Colouring((3, 1, 3), Palette((1, 2, 3)))
        assert c.used_colours() == (1, 3)

    def test_colour_classes(self):
        c = Colouring((2, 1, 2), Palette((1, 2)))
        assert c.colour_classes() == {1: (1,), 2: (0, 2)}

    def test_recolour_returns_new_object(self):
        c = Colouring((1, 2), Palette((1, 2)))
        d = c.recolour(0, 2)
        assert d.assignment == (2, 2)
        assert c.assignment == (1, 2)

    def test_is_proper(self):
        g = Graph(2, [(0, 1)])
        assert Colouring((1, 2), Palette((1, 2))).is_proper(g)
        assert not Colouring((1, 1), Palette((1, 2))).is_proper(g)

    def test_getitem(self):
        assert Colouring((5, 7), Palette((5, 7)))[1] == 7


class TestJson:
    def test_round_trip(self):
        c = Colouring((2, 1), Palette((1, 2, 3)))
        doc = colouring_to_json(c)
        assert doc == {"palette": [1, 2, 3], "assignment": [2, 1]}
        assert colouring_from_json(doc) == c

    def test_rejects_missing_key(self):
        with pytest.raises(ColouringError):
            colouring_from_json({"palette": [1]})

    def test_rejects_extra_key(self):
        with pytest.raises(ColouringError):
            colouring_from_json({"palette": [1], "assignment": [1], "x": 0})

    def test_rejects_non_integer_entries(self):
        with pytest.raises(ColouringError):
            colouring_from_json({"palette": [1, True], "assignment": [1]})
        with pytest.raises(ColouringError):
            colouring_from_json({"palette": [1], "assignment": ["1"]})
