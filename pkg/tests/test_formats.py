import random

import networkx as nx
import pytest

from evenpairs.errors import InputError
from evenpairs.formats import (from_graph6, from_text, load, loads, to_graph6,
                               to_text)
from evenpairs.trigraph import make_trigraph

from conftest import random_graph, random_trigraph


def test_text_roundtrip_random():
    rng = random.Random(61)
    for _ in range(80):
        t = random_trigraph(rng, rng.randint(0, 8))
        assert from_text(to_text(t)) == t
        # canonical serialization is a fixed point
        assert to_text(from_text(to_text(t))) == to_text(t)


def test_text_format_shape():
    t = make_trigraph(3, [(0, 1, 1), (1, 2, 0)])
    assert to_text(t) == "trigraph 3\n0 1 E\n1 2 S\n"


def test_text_comments_and_blank_lines():
    t = from_text("# leading comment\n\ntrigraph 2\n# inner\n0 1 S\n")
    assert t.value(0, 1) == 0


@pytest.mark.parametrize("payload, message", [
    ("trigraph 3\n0 1 E\n0 1 S\n", "duplicate pair"),
    ("trigraph 2\n0 3 E\n", "out of range"),
    ("trigraph 2\n0 1 X\n", "must be E or S"),
    ("trigraph 2\n0 1\n", "expected"),
    ("0 1 E\n", "header"),
    ("", "missing"),
    ("trigraph two\n", "bad vertex count"),
])
def test_text_errors_carry_line_numbers(payload, message):
    with pytest.raises(InputError, match=message):
        from_text(payload)


def test_graph6_roundtrip_and_networkx_agreement():
    rng = random.Random(62)
    for _ in range(80):
        g = random_graph(rng, rng.randint(1, 12))
        s = to_graph6(g)
        assert from_graph6(s) == g
        gnx = nx.from_graph6_bytes(s.encode())
        assert sorted(gnx.edges()) == sorted(tuple(e) for e in g.strong_edges())
        # and the reverse: encode with networkx, decode with ours
        ours = from_graph6(nx.to_graph6_bytes(gnx, header=False).decode().strip())
        assert ours == g


def test_graph6_header_tolerated():
    g = random_graph(random.Random(63), 6)
    assert from_graph6(">>graph6<<" + to_graph6(g)) == g


def test_graph6_rejects_trigraphs_and_garbage():
    with pytest.raises(InputError):
        to_graph6(make_trigraph(2, [(0, 1, 0)]))
    with pytest.raises(InputError, match="length mismatch"):
        from_graph6("E")
    with pytest.raises(InputError):
        from_graph6("")


def test_loads_sniffing():
    t = make_trigraph(2, [(0, 1, 0)])
    assert loads(to_text(t)) == t
    g = random_graph(random.Random(64), 5)
    assert loads(to_graph6(g)) == g
    assert loads(to_graph6(g), fmt="graph6") == g
    with pytest.raises(InputError):
        loads("stuff", fmt="nope")


def test_load_from_file(tmp_path):
    g = random_graph(random.Random(65), 6)
    path = tmp_path / "g.g6"
    path.write_text(to_graph6(g) + "\n")
    assert load(str(path)) == g


# -- property round trips ----------------------------------------------------

import itertools

from hypothesis import given, settings
from hypothesis import strategies as st

from evenpairs.trigraph import graph_from_edges


@st.composite
def any_trigraphs(draw, max_n=7):
    n = draw(st.integers(min_value=0, max_value=max_n))
    entries = []
    for u, v in itertools.combinations(range(n), 2):
        code = draw(st.sampled_from([-1, -1, 0, 1, 1]))
        if code != -1:
            entries.append((u, v, code))
    return make_trigraph(n, entries)


@given(any_trigraphs())
@settings(max_examples=60, deadline=None)
def test_text_roundtrip_property(t):
    assert from_text(to_text(t)) == t


@st.composite
def any_graphs(draw, max_n=10):
    n = draw(st.integers(min_value=0, max_value=max_n))
    edges = [(u, v) for u, v in itertools.combinations(range(n), 2)
             if draw(st.booleans())]
    return graph_from_edges(n, edges)


@given(any_graphs())
@settings(max_examples=60, deadline=None)
def test_graph6_roundtrip_property(g):
    assert from_graph6(to_graph6(g)) == g
