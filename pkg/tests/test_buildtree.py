import json

import pytest
from hypothesis import given, settings, strategies as st

from oatgraph import (
    CliqueAttach,
    Comparable,
    Graph,
    Join,
    Leaf,
    MalformedTreeError,
    Palette,
    PaletteError,
    Union,
    brute_chi,
    brute_omega,
    canonical_assignment,
    canonical_colouring,
    chi_omega,
    random_oat,
    replay,
    tree_from_json,
    tree_to_json,
    validate,
    walk_postorder,
)

P3_TREE = Join(Union(Leaf(0), Leaf(2)), Leaf(1))


class TestNodeValidation:
    def test_union_rejects_overlap(self):
        with pytest.raises(MalformedTreeError):
            Union(Leaf(0), Leaf(0))

    def test_comparable_rejects_new_vertex_in_child(self):
        with pytest.raises(MalformedTreeError):
            Comparable(Leaf(0), 0, 0, ())

    def test_comparable_rejects_anchor_outside_child(self):
        with pytest.raises(MalformedTreeError):
            Comparable(Leaf(0), 1, 2, ())

    def test_comparable_rejects_anchor_in_neighbourhood(self):
        with pytest.raises(MalformedTreeError):
            Comparable(Leaf(0), 1, 0, (0,))

    def test_comparable_sorts_neighbourhood(self):
        t = Comparable(Join(Leaf(0), Leaf(1)), 2, 0, (1,))
        assert t.X == (1,)

    def test_clique_rejects_anchor_outside_child(self):
        with pytest.raises(MalformedTreeError):
            CliqueAttach(Leaf(0), 1, (2,))

    def test_clique_rejects_reused_vertex(self):
        with pytest.raises(MalformedTreeError):
            CliqueAttach(Leaf(0), 0, (0,))

    def test_clique_rejects_empty(self):
        with pytest.raises(MalformedTreeError):
            CliqueAttach(Leaf(0), 0, ())

    def test_clique_keeps_stored_order(self):
        t = CliqueAttach(Leaf(0), 0, (2, 1))
        assert t.Q == (2, 1)


class TestReplay:
    def test_join_makes_all_cross_edges(self):
        g = replay(Join(Union(Leaf(0), Leaf(1)), Leaf(2)))
        assert g.edges() == [(0, 2), (1, 2)]

    def test_comparable_adds_only_listed_edges(self):
        t = Comparable(Join(Leaf(0), Leaf(1)), 2, 0, (1,))
        assert replay(t).edges() == [(0, 1), (1, 2)]

    def test_comparable_rejects_edge_outside_anchor_neighbourhood(self):
        t = Comparable(Union(Leaf(0), Leaf(1)), 2, 0, (1,))
        with pytest.raises(MalformedTreeError):
            replay(t)

    def test_clique_attach_edges(self):
        g = replay(CliqueAttach(Leaf(0), 0, (1, 2)))
        assert g.edges() == [(0, 1), (0, 2), (1, 2)]

    def test_rejects_label_gap(self):
        with pytest.raises(MalformedTreeError):
            replay(Union(Leaf(0), Leaf(2)))

    def test_validate(self):
        assert validate(P3_TREE, Graph(3, [(0, 1), (1, 2)]))
        assert not validate(P3_TREE, Graph(3, [(0, 1)]))
        assert not validate(Union(Leaf(0), Leaf(2)), Graph(2))

    def test_walk_postorder_children_first(self):
        seen = list(walk_postorder(P3_TREE))
        assert seen[-1] is P3_TREE
        assert isinstance(seen[0], Leaf)


class TestChiOmega:
    def test_rules(self):
        assert chi_omega(Leaf(0)) == (1, 1)
        assert chi_omega(Union(Leaf(0), Leaf(1))) == (1, 1)
        assert chi_omega(Join(Leaf(0), Leaf(1))) == (2, 2)
        assert chi_omega(P3_TREE) == (2, 2)
        t = Comparable(P3_TREE, 3, 1, (0,))
        assert chi_omega(t) == (2, 2)
        assert chi_omega(CliqueAttach(Leaf(0), 0, (1, 2))) == (3, 3)
        # attached clique smaller than the child's clique number
        base = Join(Join(Leaf(0), Leaf(1)), Leaf(2))
        assert chi_omega(CliqueAttach(base, 0, (3,))) == (3, 3)

    @given(st.integers(1, 10), st.integers(0, 200))
    @settings(max_examples=80, deadline=None)
    def test_matches_brute_force_on_replay(self, n, seed):
        t = random_oat(n, seed)
        g = replay(t)
        chi, omega = chi_omega(t)
        assert chi == omega
        assert chi == brute_chi(g)
        assert omega == brute_omega(g)


class TestCanonical:
    def test_join_splits_palette(self):
        assert canonical_colouring(Join(Leaf(0), Leaf(1)), Palette((1, 2))).assignment == (1, 2)

    def test_union_reuses_prefix(self):
        assert canonical_colouring(P3_TREE, Palette((1, 2))).assignment == (1, 2, 1)

    def test_comparable_copies_anchor(self):
        t = Comparable(P3_TREE, 3, 1, (0,))
        assert canonical_colouring(t, Palette((1, 2))).assignment == (1, 2, 1, 2)

    def test_clique_takes_first_free_colours_in_stored_order(self):
        t = CliqueAttach(Leaf(0), 0, (1, 2))
        assert canonical_colouring(t, Palette((1, 2, 3))).assignment == (1, 2, 3)
        t = CliqueAttach(Leaf(0), 0, (2, 1))
        assert canonical_colouring(t, Palette((1, 2, 3))).assignment == (1, 3, 2)

    def test_respects_palette_order_not_value(self):
        assert canonical_colouring(Join(Leaf(0), Leaf(1)), Palette((7, 3))).assignment == (7, 3)

    def test_needs_exactly_chi_colours(self):
        with pytest.raises(PaletteError):
            canonical_colouring(Join(Leaf(0), Leaf(1)), Palette((1,)))
        with pytest.raises(PaletteError):
            canonical_colouring(Join(Leaf(0), Leaf(1)), Palette((1, 2, 3)))

    def test_assignment_allows_wider_palette_prefix(self):
        got = canonical_assignment(P3_TREE, (5, 9, 1))
        assert got == {0: 5, 2: 5, 1: 9}

    @given(st.integers(1, 10), st.integers(0, 200))
    @settings(max_examples=80, deadline=None)
    def test_canonical_colouring_is_proper_and_uses_chi_colours(self, n, seed):
        t = random_oat(n, seed)
        g = replay(t)
        chi, _ = chi_omega(t)
        col = canonical_colouring(t, Palette.default(chi))
        assert col.is_proper(g)
        assert len(col.used_colours()) == chi


class TestJson:
    def test_shape(self):
        t = Comparable(CliqueAttach(Leaf(0), 0, (2, 1)), 3, 0, (1, 2))
        doc = tree_to_json(t)
        assert doc == {
            "op": "comparable",
            "child": {"op": "clique", "child": {"op": "leaf", "v": 0}, "z": 0, "Q": [2, 1]},
            "u": 3,
            "v": 0,
            "X": [1, 2],
        }

    @given(st.integers(1, 12), st.integers(0, 300))
    @settings(max_examples=80, deadline=None)
    def test_round_trip(self, n, seed):
        t = random_oat(n, seed)
        assert tree_from_json(tree_to_json(t)) == t
        assert tree_from_json(json.loads(json.dumps(tree_to_json(t)))) == t

    def test_rejects_unknown_op(self):
        with pytest.raises(MalformedTreeError):
            tree_from_json({"op": "frob", "v": 0})

    def test_rejects_missing_field(self):
        with pytest.raises(MalformedTreeError):
            tree_from_json({"op": "leaf"})

    def test_rejects_extra_field(self):
        with pytest.raises(MalformedTreeError):
            tree_from_json({"op": "leaf", "v": 0, "w": 1})

    def test_rejects_boolean_vertex(self):
        with pytest.raises(MalformedTreeError):
            tree_from_json({"op": "leaf", "v": True})

    def test_rejects_non_object(self):
        with pytest.raises(MalformedTreeError):
            tree_from_json([1, 2])
