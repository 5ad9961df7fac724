import itertools
import random

import pytest

from evenpairs.decomposition import (build_block, check_nobsp_2join_shape,
                                     find_2join, find_balanced_skew_partition,
                                     find_complement_2join, find_star_cutset,
                                     is_balanced_partition, is_fragment,
                                     iter_2joins, join_parity, split_for)
from evenpairs.detect import is_berge, is_even_pair
from evenpairs.errors import InputError, NonBergeError
from evenpairs.families import cycle
from evenpairs.trigraph import (complement, full_realization, in_class_F,
                                is_anticonnected, is_connected, make_trigraph,
                                switchable_components)

from conftest import random_graph


# -- star cutsets ------------------------------------------------------------

def test_star_cutset_p4(p4):
    wit = find_star_cutset(p4)
    assert wit.a == frozenset({0, 3}) and wit.b == frozenset({1, 2})
    assert wit.star in (1, 2)
    assert not is_connected(p4, wit.a)
    assert not is_anticonnected(p4, wit.b)


def test_star_cutset_absent(c6, k4):
    assert find_star_cutset(c6) is None
    assert find_star_cutset(k4) is None


def test_star_cutset_implies_bsp_for_berge():
    # star cutset forces a balanced skew-partition on Berge trigraphs:
    # exhaustive over all graphs up to six vertices plus the planted
    # trigraph corpus, then a random top-up at seven
    from evenpairs.corpus import graphs_upto, planted_class_f_trigraphs

    rng = random.Random(31)
    pool = list(graphs_upto(6)) + list(planted_class_f_trigraphs(5))
    pool += [random_graph(rng, 7) for _ in range(120)]
    hits = 0
    for g in pool:
        if not is_berge(g)[0]:
            continue
        if find_star_cutset(g) is None:
            continue
        hits += 1
        assert find_balanced_skew_partition(g) is not None
    assert hits > 100


# -- balanced skew-partitions -------------------------------------------------

def test_bsp_p4(p4):
    wit = find_balanced_skew_partition(p4)
    assert wit.balanced
    assert wit.a == frozenset({0, 3}) and wit.b == frozenset({1, 2})
    a1, a2, b1, b2 = wit.split
    assert a1 and a2 and b1 and b2
    # split sides behave as promised
    assert all(p4.value(u, v) == -1 for u in a1 for v in a2)
    assert all(p4.value(u, v) == 1 for u in b1 for v in b2)


def test_bsp_absent_on_c6_and_c8(c6, c8):
    assert find_balanced_skew_partition(c6) is None
    assert find_balanced_skew_partition(c8) is None


def test_bsp_total_on_non_berge(c5):
    # operation stays total off the Berge world
    find_balanced_skew_partition(c5)


def test_balance_checker_direct(c6):
    # ends {0, 3} in B with interior {1, 2} in A: one odd path, unbalanced
    assert not is_balanced_partition(c6, frozenset({1, 2, 4, 5}), frozenset({0, 3}))


# -- 2-joins -------------------------------------------------------------------

def test_c8_two_join(c8):
    s = find_2join(c8)
    assert (s.a1, s.b1, s.c1) == (frozenset({0}), frozenset({3}), frozenset({1, 2}))
    assert (s.a2, s.b2, s.c2) == (frozenset({7}), frozenset({4}), frozenset({5, 6}))
    assert s.parity == "odd" and s.proper


def test_c6_has_no_two_join(c6):
    assert find_2join(c6) is None


def test_c10_even_join():
    c10 = cycle(10)
    s = split_for(c10, {0, 1, 2, 3, 4})
    assert s is not None and s.parity == "even" and s.proper
    assert s.a1 == frozenset({0}) and s.b1 == frozenset({4})


def test_two_join_roundtrip_validation(c8):
    # every returned split re-validates against the definition bullets
    for s in itertools.islice(iter_2joins(c8), 10):
        x1, x2 = s.x1, s.x2
        assert x1 | x2 == set(range(8)) and not (x1 & x2)
        assert s.a1 and s.a2 and s.b1 and s.b2
        assert len(x1) >= 3 and len(x2) >= 3
        for u in s.a1:
            assert all(c8.value(u, v) == 1 for v in s.a2)
        for u in s.b1:
            assert all(c8.value(u, v) == 1 for v in s.b2)
        for u in s.c1 | s.a1 | s.b1:
            for v in s.c2 | s.a2 | s.b2:
                inside_bundles = (u in s.a1 and v in s.a2) or (u in s.b1 and v in s.b2)
                if not inside_bundles:
                    assert c8.value(u, v) == -1


def test_join_parity(c8):
    s = find_2join(c8)
    assert join_parity(c8, s) == "odd"
    c10 = cycle(10)
    assert join_parity(c10, split_for(c10, {0, 1, 2, 3, 4})) == "even"


def test_join_parity_rejects_non_berge(c5):
    fake = split_for(cycle(8), {0, 1, 2, 3})
    with pytest.raises(NonBergeError):
        join_parity(c5, fake)


def test_complement_two_join(c8, c6, k4):
    s = find_complement_2join(complement(c8))
    assert s is not None and s.x1 == frozenset({0, 1, 2, 3})
    assert find_complement_2join(c6) is None
    assert find_complement_2join(k4) is None


def test_is_fragment(c8, c6):
    assert is_fragment(c8, {0, 1, 2, 3})
    assert not is_fragment(c8, {0, 1})
    assert not any(is_fragment(c6, set(c))
                   for k in range(1, 6)
                   for c in itertools.combinations(range(6), k))


# -- blocks --------------------------------------------------------------------

def test_block_of_c8_is_six_hole_with_switch(c8):
    s = find_2join(c8)
    block = build_block(c8, s, 1)
    assert block.kind == "small" and block.markers == (4, 5)
    assert block.trigraph.value(4, 5) == 0
    fr = full_realization(block.trigraph)
    assert sorted(m.bit_count() for m in fr.adj) == [2] * 6
    assert is_berge(block.trigraph)[0]
    assert in_class_F(block.trigraph).ok
    assert switchable_components(block.trigraph) == [frozenset({4, 5})]


def test_block_of_c8_reserializes_to_explicit_construction(c8):
    # the block equals the trigraph built from explicit entries: the path
    # 0-1-2-3 plus marker 4 on the A end, marker 5 on the B end, and the
    # switchable marker pair
    block = build_block(c8, find_2join(c8), 1)
    expected = make_trigraph(6, [(0, 1, 1), (1, 2, 1), (2, 3, 1),
                                 (0, 4, 1), (3, 5, 1), (4, 5, 0)])
    assert block.trigraph == expected


def test_block_of_c10_light(c8):
    c10 = cycle(10)
    s = split_for(c10, {0, 1, 2, 3, 4})
    block = build_block(c10, s, 1)
    assert block.kind == "light" and block.markers == (5, 6, 7)
    fr = full_realization(block.trigraph)
    # full realization closes into an 8-cycle
    assert sorted(m.bit_count() for m in fr.adj) == [2] * 8
    assert switchable_components(block.trigraph) == [frozenset({5, 6, 7})]
    assert block.trigraph.value(5, 7) == -1


def test_block_side_two_symmetric(c8):
    s = find_2join(c8)
    block = build_block(c8, s, 2)
    assert sorted(v for v in block.parent_map if v is not None) == [4, 5, 6, 7]
    assert block.kind == "small"


def test_block_requires_known_parity(c8):
    s = find_2join(c8)
    broken = type(s)(s.a1, s.b1, s.c1, s.a2, s.b2, s.c2, None, True)
    with pytest.raises(InputError):
        build_block(c8, broken, 1)
    improper = type(s)(s.a1, s.b1, s.c1, s.a2, s.b2, s.c2, "odd", False)
    with pytest.raises(InputError):
        build_block(c8, improper, 1)


def test_block_even_pair_lifts_to_parent(c8):
    s = find_2join(c8)
    block = build_block(c8, s, 1)
    t = block.trigraph
    markers = set(block.markers)
    for u, v in itertools.combinations(range(t.n), 2):
        if {u, v} & markers or t.value(u, v) != -1:
            continue
        if is_even_pair(t, u, v).is_even_pair:
            pu, pv = block.parent_map[u], block.parent_map[v]
            assert is_even_pair(c8, pu, pv).is_even_pair


# -- shape report ---------------------------------------------------------------

def test_shape_report_clean(c8):
    assert check_nobsp_2join_shape(c8, find_2join(c8)).ok


def test_shape_report_negative_control():
    # a small-side 2-join on a skew-partition-having graph gets named violations
    edges = [(0, 1), (0, 2), (1, 2), (2, 3),
             (4, 5), (4, 6), (5, 6), (6, 7),
             (0, 4), (0, 5), (1, 4), (1, 5), (3, 7)]
    from evenpairs.trigraph import graph_from_edges

    g = graph_from_edges(8, edges)
    s = find_2join(g)
    report = check_nobsp_2join_shape(g, s)
    assert not report.ok
    assert any("|X1| < 4" in v for v in report.violations)
    # its C1 is empty, so the parity comes from the direct A-B edges
    assert s.c1 == frozenset() and s.parity == "odd"
