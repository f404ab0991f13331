#!/usr/bin/env python3
"""Export the small social graphs that ship with networkx as edge lists."""

import pathlib
import sys

import networkx as nx

GRAPHS = {
    "zachary": nx.karate_club_graph,
    "lesmis": nx.les_miserables_graph,
}


def export(name, graph, out_dir):
    index = {node: i for i, node in enumerate(graph.nodes())}
    path = out_dir / f"{name}.txt"
    with path.open("w") as f:
        f.write(f"# {name}: {graph.number_of_nodes()} vertices, {graph.number_of_edges()} edges\n")
        f.write(f"# vertices: {graph.number_of_nodes()}\n")
        for u, v in sorted(tuple(sorted((index[a], index[b]))) for a, b in graph.edges()):
            f.write(f"{u} {v}\n")
    print(path)


def main():
    out_dir = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "data")
    out_dir.mkdir(parents=True, exist_ok=True)
    for name, make in GRAPHS.items():
        export(name, make(), out_dir)


if __name__ == "__main__":
    main()
