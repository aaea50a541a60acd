#!/usr/bin/env python3
"""Regenerate the small-graph fixture corpora under tests/fixtures/.

Graphs come from the networkx atlas (exhaustive, isomorphism-deduplicated),
so the corpus is independent of the C++ code it is used to test.
"""

import pathlib

import networkx as nx
from networkx.generators.atlas import graph_atlas_g

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "tests" / "fixtures"


def g6(g: nx.Graph) -> str:
    return nx.to_graph6_bytes(g, header=False).decode().strip()


def main() -> None:
    FIXTURES.mkdir(parents=True, exist_ok=True)

    atlas = graph_atlas_g()
    connected = [
        g
        for g in atlas
        if 1 <= g.number_of_nodes() <= 6 and nx.is_connected(g)
    ]

    by_n = {}
    for g in connected:
        by_n.setdefault(g.number_of_nodes(), []).append(g)
    counts = {n: len(gs) for n, gs in sorted(by_n.items())}
    assert counts == {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112}, counts

    path = FIXTURES / "connected_upto6.g6"
    with path.open("w") as f:
        f.write("# all connected graphs on 1..6 vertices (networkx atlas)\n")
        f.write("# counts per order: 1,1,2,6,21,112 (143 total)\n")
        for n in sorted(by_n):
            for g in by_n[n]:
                f.write(g6(g) + "\n")
    print(f"wrote {path} ({len(connected)} graphs)")

    small = FIXTURES / "connected_upto4.g6"
    with small.open("w") as f:
        f.write("# all connected graphs on 1..4 vertices (networkx atlas)\n")
        for n in sorted(by_n):
            if n > 4:
                continue
            for g in by_n[n]:
                f.write(g6(g) + "\n")
    print(f"wrote {small}")


if __name__ == "__main__":
    main()
