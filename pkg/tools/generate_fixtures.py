#!/usr/bin/env python3
"""Generate the small bundled test fixtures (developer tool).

Writes, under tests/fixtures/:
  all_n_le_7.g6        every graph on 1..7 vertices up to isomorphism (1252)
  connected_n_le_7.g6  the connected ones (996)
  trees_n_le_9.g6      every tree on 1..9 vertices (95)

Sources: the networkx graph atlas and nonisomorphic tree generator.
"""

from __future__ import annotations

import os
import sys

import networkx as nx

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from konigtype.graphs import Graph, emit_graph6, is_connected  # noqa: E402

FIXTURES = os.path.join(os.path.dirname(__file__), "..", "tests", "fixtures")


def convert(nxg: nx.Graph) -> Graph:
    nodes = sorted(nxg.nodes())
    label = {v: i + 1 for i, v in enumerate(nodes)}
    return Graph.from_edges(
        len(nodes), [(label[u], label[v]) for u, v in nxg.edges()]
    )


def main():
    os.makedirs(FIXTURES, exist_ok=True)
    atlas = [g for g in nx.graph_atlas_g() if g.number_of_nodes() >= 1]
    assert len(atlas) == 1252, len(atlas)
    all_graphs = [convert(g) for g in atlas]
    connected = [g for g in all_graphs if is_connected(g)]
    assert len(connected) == 996, len(connected)

    trees = []
    for n in range(1, 10):
        if n <= 2:
            trees.append(convert(nx.path_graph(n)))
        else:
            trees.extend(convert(t) for t in nx.nonisomorphic_trees(n))
    assert len(trees) == 95, len(trees)

    for name, graphs in [
        ("all_n_le_7.g6", all_graphs),
        ("connected_n_le_7.g6", connected),
        ("trees_n_le_9.g6", trees),
    ]:
        lines = sorted((emit_graph6(g) for g in graphs), key=lambda s: (len(s), s))
        with open(os.path.join(FIXTURES, name), "w", encoding="ascii") as fh:
            fh.write("\n".join(lines) + "\n")
        print(f"{name}: {len(lines)} graphs")


if __name__ == "__main__":
    main()
