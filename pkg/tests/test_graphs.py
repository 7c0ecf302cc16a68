"""Graph representation, automorphisms, canonical forms, classification."""

from itertools import permutations

import pytest

from flagcert import builtin
from flagcert.graphs import (
    Color,
    ColoredGraph,
    alternating_cycle,
    automorphism_count,
    canonical_form,
    classify,
    complete_graph,
    encode,
    enumerate_template_colorings,
    underlying_automorphisms,
)


def naive_color_automorphism_count(g: ColoredGraph) -> int:
    """Independent oracle: filter all n! permutations directly."""
    count = 0
    for perm in permutations(range(g.n)):
        ok = True
        for u in range(g.n):
            for v in range(u + 1, g.n):
                if g.edge_color(u, v) != g.edge_color(perm[u], perm[v]):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            count += 1
    return count


# The colour-swap involution on class indices, computed once from the shipped
# table and frozen here; note it is not l <-> 27 - l.
SWAP_INVOLUTION = {
    1: 26, 2: 25, 3: 22, 4: 12, 5: 24, 6: 20, 7: 14, 8: 21, 9: 11, 10: 17,
    11: 9, 12: 4, 13: 18, 14: 7, 15: 23, 16: 19, 17: 10, 18: 13, 19: 16,
    20: 6, 21: 8, 22: 3, 23: 15, 24: 5, 25: 2, 26: 1,
}


class TestColor:
    def test_two_values(self):
        assert len(Color) == 2

    def test_swap_is_involution(self):
        for c in Color:
            assert c.swapped != c
            assert c.swapped.swapped == c


class TestColoredGraph:
    def test_rejects_loop(self):
        with pytest.raises(ValueError):
            ColoredGraph(3, [(1, 1, Color.RED)])

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            ColoredGraph(3, [(0, 3, Color.RED)])

    def test_rejects_duplicate_pair(self):
        with pytest.raises(ValueError):
            ColoredGraph(3, [(0, 1, Color.RED), (1, 0, Color.BLUE)])

    def test_edge_lookup_symmetric(self):
        g = ColoredGraph(3, [(0, 2, Color.BLUE)])
        assert g.edge_color(0, 2) is Color.BLUE
        assert g.edge_color(2, 0) is Color.BLUE
        assert g.edge_color(0, 1) is None

    def test_relabel_roundtrip(self):
        g = alternating_cycle(6)
        perm = (3, 5, 0, 1, 4, 2)
        inverse = [0] * 6
        for i, p in enumerate(perm):
            inverse[p] = i
        assert g.relabel(perm).relabel(inverse) == g

    def test_alternating_cycle_degrees(self):
        g = alternating_cycle(6)
        for v in range(6):
            colors = [g.edge_color(v, w) for w in range(6) if g.edge_color(v, w)]
            assert sorted(c.value for c in colors) == ["B", "R"]


class TestUnderlyingAutomorphisms:
    def test_template_group_order(self):
        # 2 * 3! * 3! side-and-part symmetries
        assert len(underlying_automorphisms(builtin.template())) == 72

    def test_complete_graph(self):
        assert len(underlying_automorphisms(complete_graph(6, Color.RED))) == 720

    def test_single_edge(self):
        g = ColoredGraph(2, [(0, 1, Color.RED)])
        assert len(underlying_automorphisms(g)) == 2

    def test_guard_rejects_large(self):
        with pytest.raises(ValueError):
            underlying_automorphisms(complete_graph(9, Color.RED))


class TestAutomorphismCount:
    def test_monochromatic_extremes(self):
        reps = builtin.class_representatives()
        assert automorphism_count(reps[0]) == 72
        assert automorphism_count(reps[25]) == 72

    def test_blue_perfect_matching(self):
        # stabilizer of a perfect matching inside the template group
        assert automorphism_count(builtin.class_table().representative(4)) == 12

    def test_matches_naive_oracle_on_all_representatives(self):
        for rep in builtin.class_representatives():
            assert automorphism_count(rep) == naive_color_automorphism_count(rep)

    def test_swap_preserves_count(self):
        for rep in builtin.class_representatives():
            assert automorphism_count(rep) == automorphism_count(rep.swap_colors())


class TestCanonicalForm:
    def test_identity_group_reproduces_plain_encoding(self):
        g = alternating_cycle(6)
        assert canonical_form(g, [tuple(range(6))]) == encode(g)

    def test_encoding_order_and_bits(self):
        g = ColoredGraph(3, [(1, 2, Color.BLUE), (0, 1, Color.RED)])
        assert encode(g) == (((0, 1), 0), ((1, 2), 1))

    def test_constant_on_relabellings(self):
        group = builtin.template_group()
        rep = builtin.class_table().representative(7)
        base = canonical_form(rep, group)
        for perm in list(group)[::7]:
            assert canonical_form(rep.relabel(perm), group) == base

    def test_separates_different_red_counts(self):
        group = builtin.template_group()
        table = builtin.class_table()
        assert canonical_form(table.representative(2), group) != canonical_form(
            table.representative(25), group
        )

    def test_512_colorings_give_26_codes(self):
        group = builtin.template_group()
        codes = {
            canonical_form(g, group)
            for g in enumerate_template_colorings(builtin.template())
        }
        assert len(codes) == 26

    def test_constant_on_orbits_and_separating(self):
        # exhaustively: equal codes exactly when some group element links them
        group = builtin.template_group()
        colorings = enumerate_template_colorings(builtin.template())
        by_code = {}
        for g in colorings:
            by_code.setdefault(canonical_form(g, group), []).append(g)
        for members in by_code.values():
            rep = members[0]
            images = {rep.relabel(perm) for perm in group}
            assert set(members) == images


class TestEnumeration:
    def test_template_has_512(self):
        assert len(enumerate_template_colorings(builtin.template())) == 512

    def test_single_edge(self):
        g = ColoredGraph(2, [(0, 1, Color.RED)])
        assert len(enumerate_template_colorings(g)) == 2

    def test_empty_graph(self):
        assert len(enumerate_template_colorings(ColoredGraph(3))) == 1

    def test_edge_guard(self):
        with pytest.raises(ValueError):
            enumerate_template_colorings(complete_graph(7, Color.RED))

    def test_deterministic_order(self):
        colorings = enumerate_template_colorings(builtin.template())
        assert colorings[0] == complete_graph(6, Color.RED).relabel(range(6)) or all(
            c is Color.RED for _, _, c in colorings[0].edges
        )
        assert all(c is Color.BLUE for _, _, c in colorings[-1].edges)


class TestClassification:
    def test_class_count_and_multiplicities(self):
        table = builtin.class_table()
        assert len(table) == 26
        assert sum(e.multiplicity for e in table.classes) == 512
        for e in table.classes:
            assert e.multiplicity * e.aut_count == 72

    def test_all_red_class_is_singleton(self):
        table = builtin.class_table()
        assert table.multiplicity(1) == 1

    def test_class_of_relabelling(self):
        table = builtin.class_table()
        group = builtin.template_group()
        for index in (3, 11, 19):
            rep = table.representative(index)
            assert table.class_of(rep.relabel(group[17])) == index

    def test_swap_involution_is_recorded_permutation(self):
        computed = builtin.class_table().swap_involution()
        assert computed == SWAP_INVOLUTION
        assert all(computed[computed[k]] == k for k in computed)

    def test_involution_is_not_index_reversal(self):
        assert SWAP_INVOLUTION[3] != 24  # the figure ordering is not palindromic

    def test_classify_rejects_wrong_reference(self):
        group = builtin.template_group()
        colorings = enumerate_template_colorings(builtin.template())
        with pytest.raises(ValueError):
            classify(colorings, group, builtin.class_representatives()[:-1])
