"""Instance corpora for the exhaustive harness and the test suite.

Graphs are enumerated up to isomorphism by augmentation: every graph on n
vertices arises from one on n-1 vertices by attaching a new vertex with an
arbitrary neighborhood, so extending the level-(n-1) representatives with
all 2^(n-1) neighborhoods and deduplicating by canonical form yields exactly
one representative per isomorphism class.

Trigraph instances come from planting a legal switchable component into a
graph: either one pair turned semiadjacent ("small") or a fresh degree-two
vertex attached by two switchable pairs ("light").
"""

from __future__ import annotations

import itertools
import random
from functools import lru_cache

import numpy as np

from .canonical import canonical_form
from .trigraph import (ANTI, STRONG, SWITCHABLE, Trigraph, graph_from_edges,
                       in_class_F, make_trigraph)


@lru_cache(maxsize=None)
def graphs_of_order(n: int) -> tuple[Trigraph, ...]:
    """All graphs on exactly n vertices, one per isomorphism class."""
    if n == 0:
        return (make_trigraph(0),)
    if n == 1:
        return (make_trigraph(1),)
    out: dict[bytes, Trigraph] = {}
    for base in graphs_of_order(n - 1):
        for nbhd in range(1 << (n - 1)):
            theta = np.full((n, n), ANTI, dtype=np.int8)
            theta[: n - 1, : n - 1] = base.theta
            np.fill_diagonal(theta, 0)
            for v in range(n - 1):
                if nbhd >> v & 1:
                    theta[n - 1, v] = STRONG
                    theta[v, n - 1] = STRONG
            G = Trigraph(theta)
            out.setdefault(canonical_form(G), G)
    return tuple(out.values())


def graphs_upto(n_max: int) -> list[Trigraph]:
    """All graphs with 1..n_max vertices, up to isomorphism."""
    out: list[Trigraph] = []
    for n in range(1, n_max + 1):
        out.extend(graphs_of_order(n))
    return out


def random_canonical_graphs(n: int, count: int, seed: int = 0) -> list[Trigraph]:
    """``count`` distinct (up to isomorphism) random graphs on n vertices.

    Sampling draws uniform labeled graphs and keeps new isomorphism classes,
    so the classes are whatever the labeled distribution hits first.
    """
    rng = random.Random(seed)
    pairs = list(itertools.combinations(range(n), 2))
    seen: dict[bytes, Trigraph] = {}
    attempts = 0
    limit = 400 * count
    while len(seen) < count:
        attempts += 1
        if attempts > limit:
            raise RuntimeError(
                f"could not collect {count} distinct graphs on {n} vertices")
        edges = [(u, v) for u, v in pairs if rng.random() < 0.5]
        G = graph_from_edges(n, edges)
        seen.setdefault(canonical_form(G), G)
    return list(seen.values())


def plant_small(G: Trigraph, u: int, v: int) -> Trigraph:
    """Copy of G with the pair {u, v} made switchable."""
    theta = np.array(G.theta)
    theta[u, v] = SWITCHABLE
    theta[v, u] = SWITCHABLE
    return Trigraph(theta)


def plant_light(G: Trigraph, x: int, y: int) -> Trigraph:
    """G plus a fresh vertex attached to x and y by switchable pairs only."""
    n = G.n
    theta = np.full((n + 1, n + 1), ANTI, dtype=np.int8)
    theta[:n, :n] = G.theta
    np.fill_diagonal(theta, 0)
    for w in (x, y):
        theta[n, w] = SWITCHABLE
        theta[w, n] = SWITCHABLE
    return Trigraph(theta)


@lru_cache(maxsize=None)
def planted_class_f_trigraphs(max_base_n: int) -> tuple[Trigraph, ...]:
    """Class-F members with a nonempty switchable component, one per
    isomorphism class, planted into every graph on <= max_base_n vertices."""
    out: dict[bytes, Trigraph] = {}
    for G in graphs_upto(max_base_n):
        for u, v in itertools.combinations(range(G.n), 2):
            T = plant_small(G, u, v)
            if in_class_F(T).ok:
                out.setdefault(canonical_form(T), T)
        for u, v in itertools.combinations(range(G.n), 2):
            if G.value(u, v) != ANTI or (G.adj[u] & G.adj[v]):
                continue
            T = plant_light(G, u, v)
            if in_class_F(T).ok:
                out.setdefault(canonical_form(T), T)
    return tuple(out.values())


def random_bipartite_graph(rng: random.Random, max_edges: int = 12) -> Trigraph:
    """A random bipartite graph with at most ``max_edges`` edges.

    Used as raw material for line-graph roots; callers filter for the
    structural conditions they need.
    """
    a = rng.randint(1, 5)
    b = rng.randint(1, 5)
    cross = [(i, a + j) for i in range(a) for j in range(b)]
    rng.shuffle(cross)
    want = rng.randint(1, min(max_edges, len(cross)))
    edges = sorted(cross[:want])
    used = sorted({w for e in edges for w in e})
    index = {w: i for i, w in enumerate(used)}
    return graph_from_edges(len(used), [(index[u], index[v]) for u, v in edges])
