"""Exact desk-scale graph verifiers.

Everything here is a pure function over immutable :class:`Graph` values,
safe to call from concurrent match workers.  Sizes are guarded by explicit
budgets that raise :class:`BudgetError` instead of silently truncating.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from math import inf

import networkx as nx

from . import kernels

HAMILTONICITY_BUDGET = 24
SUBGRAPH_PATTERN_BUDGET = 10
MINOR_HOST_BUDGET = 30


class BudgetError(ValueError):
    """Input exceeds the verifier's declared size budget."""


class InvalidParameter(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1 with adjacency sets."""

    n: int
    edges: frozenset[frozenset[int]] = field(default_factory=frozenset)

    @staticmethod
    def from_edges(n: int, edges) -> "Graph":
        es = set()
        for u, v in edges:
            if u == v:
                raise InvalidParameter(f"loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidParameter(f"edge ({u},{v}) out of range")
            es.add(frozenset((u, v)))
        return Graph(n, frozenset(es))

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for e in self.edges:
            u, v = tuple(e)
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def masks(self) -> list[int]:
        m = [0] * self.n
        for e in self.edges:
            u, v = tuple(e)
            m[u] |= 1 << v
            m[v] |= 1 << u
        return m

    def edge_list(self) -> list[tuple[int, int]]:
        return sorted(tuple(sorted(e)) for e in self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return frozenset((u, v)) in self.edges

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def with_edge(self, u: int, v: int) -> "Graph":
        return Graph(self.n, self.edges | {frozenset((u, v))})

    def subgraph(self, vertices) -> "Graph":
        """Induced subgraph, relabelled to 0..k-1 in sorted vertex order."""
        vs = sorted(vertices)
        idx = {v: i for i, v in enumerate(vs)}
        es = [
            (idx[u], idx[v])
            for e in self.edges
            for u, v in [tuple(e)]
            if u in idx and v in idx
        ]
        return Graph.from_edges(len(vs), es)

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "edges": self.edge_list()})

    @staticmethod
    def from_json(text: str) -> "Graph":
        data = json.loads(text)
        return Graph.from_edges(data["n"], data["edges"])

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edge_list())
        return g


@dataclass(frozen=True)
class OuterTriple:
    """The ordered outer-face 3-cycle of a plane component."""

    u1: int
    u2: int
    u3: int

    def vertices(self) -> tuple[int, int, int]:
        return (self.u1, self.u2, self.u3)


def connected_components(g: Graph) -> list[set[int]]:
    adj = g.adjacency()
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = {s}
        seen[s] = True
        stack = [s]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.add(w)
                    stack.append(w)
        comps.append(comp)
    return comps


def is_hamiltonian(g: Graph) -> bool:
    if g.n > HAMILTONICITY_BUDGET:
        raise BudgetError(f"|V|={g.n} exceeds Hamiltonicity budget {HAMILTONICITY_BUDGET}")
    return kernels.hamiltonian_cycle(g.masks())


def hamiltonian_path(g: Graph, s: int, t: int, excluded: int | None = None) -> bool:
    if g.n > HAMILTONICITY_BUDGET:
        raise BudgetError(f"|V|={g.n} exceeds Hamiltonicity budget {HAMILTONICITY_BUDGET}")
    if s == t:
        raise InvalidParameter("endpoints coincide")
    if excluded is not None:
        if excluded in (s, t):
            raise InvalidParameter("excluded vertex is an endpoint")
        keep = [v for v in range(g.n) if v != excluded]
        idx = {v: i for i, v in enumerate(keep)}
        return kernels.hamiltonian_path(g.subgraph(keep).masks(), idx[s], idx[t])
    return kernels.hamiltonian_path(g.masks(), s, t)


def is_strongly_hamiltonian(g: Graph, outer: OuterTriple) -> bool:
    """All three outer-pair Hamiltonian paths plus all three near-Hamiltonian ones."""
    a, b, c = outer.vertices()
    for u, v in ((a, b), (b, c), (a, c)):
        if not g.has_edge(u, v):
            raise InvalidParameter("outer triple is not a 3-cycle of the graph")
    triples = ((a, b, c), (b, c, a), (a, c, b))
    return all(hamiltonian_path(g, s, t) for s, t, _ in triples) and all(
        hamiltonian_path(g, s, t, excluded=k) for s, t, k in triples
    )


def _is_3tree(g: Graph) -> bool:
    if g.n < 3:
        return False
    if len(g.edges) != 3 * g.n - 6:
        return False
    adj = [set(s) for s in g.adjacency()]
    alive = set(range(g.n))
    # greedy simplicial elimination; any order is safe for k-trees
    changed = True
    while len(alive) > 3 and changed:
        changed = False
        for v in sorted(alive):
            nb = adj[v]
            if len(nb) == 3:
                x, y, z = sorted(nb)
                if y in adj[x] and z in adj[x] and z in adj[y]:
                    for w in nb:
                        adj[w].discard(v)
                    adj[v] = set()
                    alive.discard(v)
                    changed = True
                    break
    if len(alive) != 3:
        return False
    x, y, z = sorted(alive)
    return y in adj[x] and z in adj[x] and z in adj[y]


def is_apollonian(g: Graph) -> bool:
    """K3, or reducible to K3 by deleting degree-3 vertices with triangle neighborhoods.

    The reduction recognizes 3-trees; the planarity check rules out
    non-planar ones (three or more vertices stacked on one triangle).
    """
    if not _is_3tree(g):
        return False
    ok, _ = nx.check_planarity(g.to_networkx())
    return ok


def _reduce_for_minor(masks: list[int]) -> list[int]:
    """Suppress degree-<=2 vertices; safe when the pattern has min degree >= 3."""
    adj = [set() for _ in range(len(masks))]
    for v, m in enumerate(masks):
        w = m
        while w:
            u = (w & -w).bit_length() - 1
            w &= w - 1
            adj[v].add(u)
    alive = set(range(len(masks)))
    changed = True
    while changed:
        changed = False
        for v in list(alive):
            d = len(adj[v])
            if d == 0 or d == 1:
                for u in adj[v]:
                    adj[u].discard(v)
                adj[v] = set()
                alive.discard(v)
                changed = True
            elif d == 2:
                a, b = tuple(adj[v])
                adj[a].discard(v)
                adj[b].discard(v)
                adj[a].add(b)
                adj[b].add(a)
                adj[v] = set()
                alive.discard(v)
                changed = True
    keep = sorted(alive)
    idx = {v: i for i, v in enumerate(keep)}
    out = [0] * len(keep)
    for v in keep:
        for u in adj[v]:
            out[idx[v]] |= 1 << idx[u]
    return out


_FORBIDDEN_MINOR_NAMES = ("k5", "k33", "octahedron", "pentagonal_prism")


def _components_of_masks(masks: list[int], removed: int) -> list[int]:
    n = len(masks)
    seen = removed
    comps = []
    for s in range(n):
        if seen >> s & 1:
            continue
        comp = 1 << s
        stack = [s]
        seen |= 1 << s
        while stack:
            v = stack.pop()
            cand = masks[v] & ~seen
            while cand:
                u = (cand & -cand).bit_length() - 1
                cand &= cand - 1
                seen |= 1 << u
                comp |= 1 << u
                stack.append(u)
        comps.append(comp)
    return comps


def _mask_subgraph(masks: list[int], keep: int) -> list[int]:
    verts = [v for v in range(len(masks)) if keep >> v & 1]
    idx = {v: i for i, v in enumerate(verts)}
    out = [0] * len(verts)
    for v in verts:
        m = masks[v] & keep
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            out[idx[v]] |= 1 << idx[u]
    return out


def _clique_separators(masks: list[int], max_size: int):
    """Smallest clique separator (as a mask) of size <= max_size, or None."""
    n = len(masks)
    if n == 0:
        return None
    comps = _components_of_masks(masks, 0)
    if len(comps) > 1:
        return 0
    for v in range(n):
        if len(_components_of_masks(masks, 1 << v)) > 1:
            return 1 << v
    if max_size >= 2:
        for a in range(n):
            m = masks[a]
            while m:
                b = (m & -m).bit_length() - 1
                m &= m - 1
                if b <= a:
                    continue
                sep = (1 << a) | (1 << b)
                if len(_components_of_masks(masks, sep)) > 1:
                    return sep
    if max_size >= 3:
        for a in range(n):
            ma = masks[a]
            while ma:
                b = (ma & -ma).bit_length() - 1
                ma &= ma - 1
                if b <= a:
                    continue
                common = masks[a] & masks[b]
                while common:
                    c = (common & -common).bit_length() - 1
                    common &= common - 1
                    if c <= b:
                        continue
                    sep = (1 << a) | (1 << b) | (1 << c)
                    if len(_components_of_masks(masks, sep)) > 1:
                        return sep
    return None


def _minor_decomposed(masks: list[int], pm: list[int], max_sep: int, memo: dict) -> bool:
    masks = _reduce_for_minor(masks)
    if len(masks) < len(pm):
        return False
    key = (len(masks), tuple(masks))
    if key in memo:
        return memo[key]
    sep = _clique_separators(masks, max_sep)
    if sep is None:
        res = kernels.minor_contains(masks, pm)
    else:
        res = False
        for comp in _components_of_masks(masks, sep):
            torso = _mask_subgraph(masks, comp | sep)
            if _minor_decomposed(torso, pm, max_sep, memo):
                res = True
                break
    memo[key] = res
    return res


def has_minor(host: Graph, pattern: Graph) -> bool:
    """Minor containment for small fixed patterns with minimum degree >= 3.

    Degree-<=2 vertices are suppressed, then the host is split along
    clique separators (size <= 2 always; size 3 too when the pattern is
    4-connected, since a straddling model would yield a 3-cut of the
    pattern); the branch-set search runs on the indecomposable pieces.
    """
    if host.n > MINOR_HOST_BUDGET:
        raise BudgetError(f"|V|={host.n} exceeds minor-test host budget {MINOR_HOST_BUDGET}")
    pm = pattern.masks()
    if min((m.bit_count() for m in pm), default=0) < 3:
        raise InvalidParameter("minor test requires pattern minimum degree >= 3")
    kappa = nx.node_connectivity(pattern.to_networkx())
    max_sep = 3 if kappa >= 4 else 2
    return _minor_decomposed(host.masks(), pm, max_sep, {})


def _width3_elimination(g: Graph) -> bool:
    """One-sided certificate: a greedy elimination ordering of width <= 3
    (delete a degree-<=3 vertex, complete its neighborhood) proves
    treewidth <= 3, hence the absence of all four forbidden minors.
    Getting stuck proves nothing."""
    adj = [set(s) for s in g.adjacency()]
    alive = set(range(g.n))
    import heapq

    heap = [(len(adj[v]), v) for v in alive]
    heapq.heapify(heap)
    while heap:
        d, v = heapq.heappop(heap)
        if v not in alive or len(adj[v]) != d:
            continue
        if d > 3:
            return False
        nb = list(adj[v])
        for i in range(len(nb)):
            for j in range(i + 1, len(nb)):
                a, b = nb[i], nb[j]
                if b not in adj[a]:
                    adj[a].add(b)
                    adj[b].add(a)
        for u in nb:
            adj[u].discard(v)
        adj[v] = set()
        alive.discard(v)
        for u in nb:
            heapq.heappush(heap, (len(adj[u]), u))
    return not alive


def is_partial_3tree(g: Graph) -> bool:
    """No minor among K5, K3,3, the octahedron, the pentagonal prism.

    Fast paths: a non-planar graph is never a partial 3-tree; a width-3
    elimination ordering certifies one immediately; planar graphs never
    carry K5 or K3,3 minors, so only the two planar patterns need the
    direct minor search."""
    from . import fixtures

    planar, _ = nx.check_planarity(g.to_networkx())
    if not planar:
        return False
    if _width3_elimination(g):
        return True
    for name in ("octahedron", "pentagonal_prism"):
        if has_minor(g, fixtures.load(name)):
            return False
    return True


def diameter(g: Graph) -> int | float:
    """All-pairs BFS; math.inf when disconnected."""
    if g.n == 0:
        return 0
    adj = g.adjacency()
    best = 0
    for s in range(g.n):
        dist = [-1] * g.n
        dist[s] = 0
        frontier = [s]
        while frontier:
            nxt = []
            for v in frontier:
                for w in adj[v]:
                    if dist[w] < 0:
                        dist[w] = dist[v] + 1
                        nxt.append(w)
            frontier = nxt
        if min(dist) < 0:
            return inf
        best = max(best, max(dist))
    return best


def contains_subgraph(host: Graph, pattern: Graph) -> bool:
    if pattern.n > SUBGRAPH_PATTERN_BUDGET:
        raise BudgetError(
            f"|V(pattern)|={pattern.n} exceeds subgraph budget {SUBGRAPH_PATTERN_BUDGET}"
        )
    return kernels.subgraph_isomorphism(host.masks(), pattern.masks())


def separator_witness_nonhamiltonian(g: Graph, s) -> bool:
    """True iff deleting s leaves more components than |s| (kills any Hamilton cycle)."""
    s = set(s)
    rest = [v for v in range(g.n) if v not in s]
    sub = g.subgraph(rest)
    return len(connected_components(sub)) > len(s)


def brute_force_hamiltonian(g: Graph) -> bool:
    """Permutation brute force; independent oracle for small graphs."""
    if g.n > 9:
        raise BudgetError("brute force limited to 9 vertices")
    if g.n < 3:
        return False
    import itertools

    verts = list(range(1, g.n))
    adj = g.adjacency()
    for perm in itertools.permutations(verts):
        cyc = (0,) + perm
        if all(cyc[(i + 1) % g.n] in adj[cyc[i]] for i in range(g.n)):
            return True
    return False


def octahedron_free_4subsets(host: Graph, k4: Graph) -> bool:
    """Brute-force K4-in-host check over all 4-subsets (test oracle)."""
    for quad in combinations(range(host.n), 4):
        sub = host.subgraph(quad)
        if len(sub.edges) == 6:
            return True
    return False
