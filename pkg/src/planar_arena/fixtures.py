"""Named graph fixtures, shipped as JSON files next to this module.

k5, k33, octahedron, pentagonal_prism are the four forbidden minors of
the partial 3-tree class; planar6_apollonian / planar6_octahedron are
the two planar triangulations on 6 vertices.
"""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources

from .graphs import Graph


@lru_cache(maxsize=None)
def load(name: str) -> Graph:
    text = resources.files("planar_arena").joinpath(f"fixtures/{name}.json").read_text()
    data = json.loads(text)
    return Graph.from_edges(data["n"], data["edges"])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])
