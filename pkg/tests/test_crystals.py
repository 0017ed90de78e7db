import itertools
import json

import pytest

from helpers import decomposes_into_demazure
from krcrystals.cartan import build_cartan, vec_add
from krcrystals.crystals import (CrystalGraph, TensorProduct, components,
                                 demazure_filter, demazure_subset, explore,
                                 explore_tensor, graphs_equal, ground_state,
                                 highest_weight_node, hw_census, hw_crystal,
                                 iso_check, similarity_check, tensor_e,
                                 tensor_f, trivial_crystal, two_factor_e,
                                 two_factor_f, verify_isomorphism,
                                 weight_multiset, weyl_action)
from krcrystals.errors import (AmbiguousAnchorError, NonReducedWordError,
                               ResourceLimitError)
from krcrystals.kr import (fixture_C2, fundamentals, kr_C_onebox, kr_typeA)
from krcrystals.weyl import build_weyl_group

A2 = build_cartan("A", 2)
C2 = build_cartan("C", 2)


def c2_tensor():
    box = kr_C_onebox(2)
    return TensorProduct([box, box])


# ---------------------------------------------------------------------------
# signature rule


def test_tensor_f_figure_edges():
    t = c2_tensor()
    assert tensor_f(t, (1, 1), 1) == (1, 2)
    assert tensor_f(t, (1, 2), 1) == (2, 2)


def test_tensor_f_none_on_empty_signature():
    t = c2_tensor()
    assert tensor_f(t, (2, 1), 1) is None      # '+-' cancels
    assert tensor_e(t, (-1, 1), 1) is None     # same cancellation for e


def test_tensor_stats_match_string_walks():
    # eps/phi from the reduced signature against chain walking on the
    # explored graph
    t = TensorProduct([kr_typeA(2, 1, 1), kr_typeA(2, 1, 1)])
    graph = explore_tensor(A2, [kr_typeA(2, 1, 1), kr_typeA(2, 1, 1)])
    for b in t.all_elements():
        i = graph.index[b]
        for c in t.colors:
            assert t.eps(b, c) == graph.eps(i, c)
            assert t.phi(b, c) == graph.phi(i, c)


@pytest.mark.parametrize("factors", [
    lambda: [kr_C_onebox(2), kr_C_onebox(2)],
    lambda: [kr_typeA(2, 1, 1), kr_typeA(2, 2, 1)],
])
def test_two_factor_closed_form_agrees_with_signature(factors):
    g2, g1 = factors()
    t = TensorProduct([g2, g1])
    for b in t.all_elements():
        for c in t.colors:
            assert tensor_f(t, b, c) == two_factor_f(g2, g1, b, c)
            assert tensor_e(t, b, c) == two_factor_e(g2, g1, b, c)


def test_tensor_associativity_all_triples():
    pool = {"11": kr_typeA(2, 1, 1), "21": kr_typeA(2, 2, 1)}
    for names in itertools.product(pool, repeat=3):
        g3, g2, g1 = (pool[k] for k in names)
        flat = TensorProduct([g3, g2, g1])
        left = TensorProduct([explore_tensor(A2, [g3, g2]), g1])
        right = TensorProduct([g3, explore_tensor(A2, [g2, g1])])

        def from_left(b):
            return None if b is None else (b[0][0], b[0][1], b[1])

        def from_right(b):
            return None if b is None else (b[0], b[1][0], b[1][1])

        for b in flat.all_elements():
            bl = ((b[0], b[1]), b[2])
            br = (b[0], (b[1], b[2]))
            for c in flat.colors:
                want_f = flat.f(b, c)
                assert from_left(left.f(bl, c)) == want_f
                assert from_right(right.f(br, c)) == want_f
                want_e = flat.e(b, c)
                assert from_left(left.e(bl, c)) == want_e
                assert from_right(right.e(br, c)) == want_e


# ---------------------------------------------------------------------------
# exploration


def test_explore_trivial():
    g = trivial_crystal(A2, A2.index_set)
    assert len(g) == 1 and g.edge_count == 0


def test_explore_c2_tensor_size():
    graph = explore_tensor(C2, [kr_C_onebox(2), kr_C_onebox(2)])
    assert len(graph) == 16


def test_explore_single_seed_closure():
    # the full affine tensor is the closure of 1 (x) 1 alone
    graph = explore(C2, c2_tensor(), [(1, 1)])
    assert len(graph) == 16
    # restricting the generator set to the classical colors stays inside
    # the top classical component
    classical = explore(C2, c2_tensor(), [(1, 1)], colors=(1, 2))
    assert len(classical) == 10


def test_explore_numbering_is_bfs_colors_ascending():
    from krcrystals.kr import TypeAKR
    graph = explore(A2, TypeAKR(2, 1, 1), [((1,),)], affine_complete=True)
    # from [[1]]: color 0 gives e_0 -> [[3]] first, then color 1 f_1 -> [[2]]
    assert [graph.reprs[i] for i in range(3)] == ["[[1]]", "[[3]]", "[[2]]"]


def test_explore_a2_mixed_tensor_size():
    graph = explore_tensor(A2, [kr_typeA(2, 1, 1), kr_typeA(2, 2, 1)])
    assert len(graph) == 9


def test_explore_node_cap():
    box = kr_C_onebox(2)
    with pytest.raises(ResourceLimitError):
        explore(C2, TensorProduct([box, box]), [(1, 1)], node_cap=5)


def test_seminormality_of_constructed_crystals():
    graphs = [kr_C_onebox(2), kr_typeA(2, 1, 1), kr_typeA(2, 2, 1),
              kr_typeA(2, 1, 2), kr_typeA(2, 2, 2), kr_typeA(3, 2, 2),
              explore_tensor(C2, [kr_C_onebox(2), kr_C_onebox(2)]),
              explore_tensor(A2, [kr_typeA(2, 1, 1), kr_typeA(2, 2, 1)]),
              fixture_C2("tensor11"), fixture_C2("B12")]
    for g in graphs:
        assert g.seminormal() == []


# ---------------------------------------------------------------------------
# Demazure filtrations and components


def test_filter_removes_all_zero_edges_at_high_level():
    graph = explore_tensor(C2, [kr_C_onebox(2), kr_C_onebox(2)])
    for mode in ("head", "tail"):
        assert demazure_filter(graph, 5, mode).edges_of_color(0) == []


def test_filter_c2_head_single_zero_edge():
    graph = explore_tensor(C2, [kr_C_onebox(2), kr_C_onebox(2)])
    filtered = demazure_filter(graph, 1, "head")
    zero = filtered.edges_of_color(0)
    assert len(zero) == 1
    src, dst = zero[0]
    assert filtered.nodes[src] == (-1, 1) and filtered.nodes[dst] == (1, 1)
    assert graphs_equal(filtered, fixture_C2("tensor11"))


def test_filter_preserves_nodes():
    graph = explore_tensor(A2, [kr_typeA(2, 1, 1), kr_typeA(2, 1, 1)])
    filtered = demazure_filter(graph, 1, "tail")
    assert filtered.nodes == graph.nodes
    assert filtered.weights == graph.weights


def test_components_connected_graph():
    g = kr_C_onebox(2)
    comps = components(g)
    assert len(comps) == 1 and len(comps[0]) == len(g)


def test_components_of_filtered_c2():
    graph = explore_tensor(C2, [kr_C_onebox(2), kr_C_onebox(2)])
    comps = components(demazure_filter(graph, 1, "head"))
    assert [len(c) for c in comps] == [5, 11]


def test_fixture_b12_single_component():
    comps = components(fixture_C2("B12"))
    assert [len(c) for c in comps] == [11]


# ---------------------------------------------------------------------------
# isomorphism checking


def test_iso_identity():
    g = fixture_C2("B12")
    mapping = iso_check(g, g, "min")
    assert mapping == {i: i for i in range(len(g))}


def test_iso_example_from_figure():
    graph = explore_tensor(C2, [kr_C_onebox(2), kr_C_onebox(2)])
    comps = components(demazure_filter(graph, 1, "head"))
    big = comps[1]
    mapping = iso_check(big, fixture_C2("B12"), "min")
    assert mapping is not None
    assert verify_isomorphism(big, fixture_C2("B12"), mapping)
    # the empty tableau corresponds to -1 (x) 1
    fb = fixture_C2("B12")
    inv = {v: k for k, v in mapping.items()}
    assert big.nodes[inv[fb.index[()]]] == (-1, 1)


def test_iso_rejects_weight_mismatch():
    graph = explore_tensor(C2, [kr_C_onebox(2), kr_C_onebox(2)])
    comps = components(demazure_filter(graph, 1, "head"))
    assert iso_check(comps[0], comps[1], "min") is None


def test_iso_ambiguous_anchor_error():
    bad = CrystalGraph(A2, (1, 2), ["a", "b"], {(0, 1): 1},
                       [(1, 0), (0, 1)], ["a", "b"])
    with pytest.raises(AmbiguousAnchorError):
        iso_check(bad, bad, "max")


# ---------------------------------------------------------------------------
# Demazure subsets


def test_demazure_subset_extremes():
    funds = fundamentals(A2)
    graph = hw_crystal(A2, (1, 0), funds)
    group = build_weyl_group(A2)
    assert demazure_subset(graph, ()) == [highest_weight_node(graph)]
    assert len(demazure_subset(graph, group.reduced_word(group.w0))) == \
        len(graph)
    assert len(demazure_subset(graph, (1,))) == 2


def test_demazure_subset_rejects_nonreduced():
    graph = hw_crystal(A2, (1, 0), fundamentals(A2))
    with pytest.raises(NonReducedWordError):
        demazure_subset(graph, (1, 1))


@pytest.mark.parametrize("family,rank,lam", [("A", 2, (1, 1)),
                                             ("C", 2, (1, 1))])
def test_demazure_subset_word_independence(family, rank, lam):
    ct = build_cartan(family, rank)
    graph = hw_crystal(ct, lam, fundamentals(ct))
    group = build_weyl_group(ct)
    for w in group.elements:
        results = {tuple(demazure_subset(graph, word))
                   for word in group.all_reduced_words(w)}
        assert len(results) == 1


@pytest.mark.parametrize("family,rank,lam", [("A", 2, (1, 1)),
                                             ("C", 2, (1, 1))])
def test_bruhat_order_matches_demazure_containment(family, rank, lam):
    ct = build_cartan(family, rank)
    graph = hw_crystal(ct, lam, fundamentals(ct))
    group = build_weyl_group(ct)
    subsets = {group.id_of(w): set(demazure_subset(graph,
                                                   group.reduced_word(w)))
               for w in group.elements}
    for v in group.elements:
        for w in group.elements:
            contained = subsets[group.id_of(v)] <= subsets[group.id_of(w)]
            assert contained == group.bruhat_leq(v, w)


def test_excellent_filtration_a2():
    funds = fundamentals(A2)
    group = build_weyl_group(A2)
    small = [(1, 0), (0, 1), (1, 1)]
    for mu in small:
        for lam in small:
            for w in group.elements:
                assert decomposes_into_demazure(
                    A2, funds, group, mu, lam, group.reduced_word(w))


def test_excellent_filtration_c2():
    funds = fundamentals(C2)
    group = build_weyl_group(C2)
    small = [(1, 0), (0, 1)]
    for mu in small:
        for lam in small:
            for w in group.elements:
                assert decomposes_into_demazure(
                    C2, funds, group, mu, lam, group.reduced_word(w))


# ---------------------------------------------------------------------------
# Weyl action, similarity, census


def test_weyl_action_fixed_point():
    g = kr_typeA(2, 2, 1)
    top = g.node_of_weight((0, 1))     # color-1 pairing is 0
    assert weyl_action(g, top, 1) == top


def test_weyl_action_a1_highest():
    ga1 = kr_typeA(1, 1, 1)
    top = ga1.node_of_weight((1,))
    assert weyl_action(ga1, top, 1) == ga1.f(top, 1)


def test_weyl_action_involutive_on_fixture():
    g = fixture_C2("B12")
    for b in range(len(g)):
        for c in g.colors:
            assert weyl_action(g, weyl_action(g, b, c), c) == b


def test_weyl_action_matches_pairing_on_classical_colors():
    g = explore_tensor(A2, [kr_typeA(2, 1, 1), kr_typeA(2, 2, 1)])
    for b in range(len(g)):
        for c in (1, 2):
            k = g.weights[b][c - 1]
            img = weyl_action(g, b, c)
            assert g.phi(b, c) - g.eps(b, c) == k
            assert g.weights[img][c - 1] == -k


def test_similarity_identity_and_weight_breaking():
    g = kr_typeA(2, 1, 1)
    assert similarity_check(lambda b: b, 1, g, g)
    rotate = {g.nodes[i]: g.nodes[(i + 1) % len(g)] for i in range(len(g))}
    assert not similarity_check(lambda b: rotate[b], 1, g, g)


def test_census_examples():
    tensor = explore_tensor(A2, [kr_typeA(2, 1, 1), kr_typeA(2, 1, 1)])
    assert hw_census(tensor, (1, 2)) == sorted([(2, 0), (0, 1)])
    # a fully 0-string-closed crystal has no affine highest weights
    assert hw_census(kr_typeA(2, 1, 1), (0, 1, 2)) == []
    assert hw_census(fixture_C2("B12"), (1, 2)) == sorted([(2, 0), (0, 0)])


def test_ground_state_diagnostic():
    g = kr_typeA(2, 1, 1)
    assert ground_state([g, g]) == (((2,),), ((1,),))
    # the C2 one-box factor is not perfect; no unique ground state
    box = kr_C_onebox(2)
    assert ground_state([box, box]) is None


def test_weight_multiset_is_character():
    counts = weight_multiset(kr_typeA(2, 1, 2))
    assert sum(counts.values()) == 6
    assert counts[(2, 0)] == 1


# ---------------------------------------------------------------------------
# serialization


def test_json_schema_and_stability():
    g = kr_typeA(2, 1, 1)
    text = g.to_json()
    assert text == g.to_json()
    data = json.loads(text)
    assert set(data) == {"nodes", "edges", "anchors"}
    assert data["nodes"][0].keys() == {"id", "repr", "wt"}
    assert all(e.keys() == {"src", "dst", "color"} for e in data["edges"])
    assert data["anchors"]["max"] == g.extremal("max")


def test_dot_styling():
    g = fixture_C2("B12")
    dot = g.to_dot()
    assert dot == g.to_dot()
    assert "color=black" in dot    # the level-1 Demazure 0-edge
    assert "color=blue" in dot and "color=red" in dot
    assert 'label="0"' in dot


def test_graphs_equal_detects_edge_change():
    from krcrystals.kr import TypeAKR
    g = kr_typeA(2, 1, 1)
    h = demazure_filter(g, 1, "head")
    assert not graphs_equal(g, h)
    rebuilt = explore(A2, TypeAKR(2, 1, 1), [((1,),), ((2,),), ((3,),)],
                      affine_complete=True)
    assert graphs_equal(g, rebuilt)
