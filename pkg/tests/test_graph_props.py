"""Verifier tests.  Expected values come from independent oracles
(permutation brute force, exhaustive subset search) computed here, or
from closed forms checked in-line."""

import itertools

import pytest

from planar_arena import fixtures
from planar_arena.graphs import (
    BudgetError,
    Graph,
    InvalidParameter,
    OuterTriple,
    brute_force_hamiltonian,
    connected_components,
    contains_subgraph,
    diameter,
    has_minor,
    hamiltonian_path,
    is_apollonian,
    is_hamiltonian,
    is_partial_3tree,
    is_strongly_hamiltonian,
    separator_witness_nonhamiltonian,
)


def k4():
    return fixtures.complete_graph(4)


def octahedron():
    return fixtures.load("octahedron")


class TestHamiltonicity:
    def test_k4(self):
        assert is_hamiltonian(k4())

    def test_octahedron_matches_brute_force(self):
        g = octahedron()
        assert brute_force_hamiltonian(g)
        assert is_hamiltonian(g)

    def test_star_not_hamiltonian(self):
        assert not is_hamiltonian(fixtures.star_graph(3))

    def test_agreement_on_random_small_graphs(self):
        import random

        rng = random.Random(7)
        for trial in range(60):
            n = rng.randint(3, 7)
            edges = [
                (i, j)
                for i in range(n)
                for j in range(i + 1, n)
                if rng.random() < 0.5
            ]
            g = Graph.from_edges(n, edges)
            assert is_hamiltonian(g) == brute_force_hamiltonian(g), g.edge_list()

    def test_budget(self):
        with pytest.raises(BudgetError):
            is_hamiltonian(Graph(25))


class TestHamiltonianPath:
    def test_path_graph(self):
        g = fixtures.path_graph(3)
        assert hamiltonian_path(g, 0, 2)
        assert not hamiltonian_path(g, 0, 1)

    def test_k3_with_exclusion(self):
        g = fixtures.complete_graph(3)
        assert hamiltonian_path(g, 0, 1, excluded=2)

    def test_disconnected(self):
        g = Graph.from_edges(4, [(0, 1), (2, 3)])
        assert not hamiltonian_path(g, 0, 3)

    def test_bad_params(self):
        g = fixtures.complete_graph(3)
        with pytest.raises(InvalidParameter):
            hamiltonian_path(g, 1, 1)
        with pytest.raises(InvalidParameter):
            hamiltonian_path(g, 0, 1, excluded=0)


class TestStronglyHamiltonian:
    def test_k3(self):
        assert is_strongly_hamiltonian(fixtures.complete_graph(3), OuterTriple(0, 1, 2))

    def test_k4_brute_force_agreement(self):
        g = k4()
        outer = OuterTriple(0, 1, 2)
        # oracle: check all six paths by permutation enumeration
        def path_exists(vertices, s, t):
            inner = [v for v in vertices if v not in (s, t)]
            for perm in itertools.permutations(inner):
                seq = (s, *perm, t)
                if all(g.has_edge(seq[i], seq[i + 1]) for i in range(len(seq) - 1)):
                    return True
            return False

        expected = all(
            path_exists(range(4), s, t) and path_exists([v for v in range(4) if v != k], s, t)
            for s, t, k in ((0, 1, 2), (1, 2, 0), (0, 2, 1))
        )
        assert expected is True
        assert is_strongly_hamiltonian(g, outer) is True

    def test_pendant_inside_blocks(self):
        # triangle 0,1,2 with vertex 3 attached only to 0: removing 1 or 2
        # strands 3, so near-Hamiltonian paths fail
        g = Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (0, 3)])
        assert not is_strongly_hamiltonian(g, OuterTriple(0, 1, 2))

    def test_outer_must_be_triangle(self):
        g = fixtures.path_graph(3)
        with pytest.raises(InvalidParameter):
            is_strongly_hamiltonian(g, OuterTriple(0, 1, 2))


class TestApollonian:
    def test_k3(self):
        assert is_apollonian(fixtures.complete_graph(3))

    def test_k4(self):
        assert is_apollonian(k4())

    def test_six_vertex_fixture_with_k4(self):
        g = fixtures.load("planar6_apollonian")
        assert contains_subgraph(g, k4())
        assert is_apollonian(g)

    def test_octahedron_rejected(self):
        assert not is_apollonian(octahedron())

    def test_nonplanar_3tree_rejected(self):
        # triangle plus three vertices each stacked on it: a 3-tree, but K3,3-minor
        edges = [(0, 1), (1, 2), (0, 2)]
        for v in (3, 4, 5):
            edges += [(v, 0), (v, 1), (v, 2)]
        g = Graph.from_edges(6, edges)
        assert not is_apollonian(g)

    def test_random_stackings_accepted(self):
        import random

        rng = random.Random(3)
        for trial in range(20):
            edges = [(0, 1), (1, 2), (0, 2)]
            faces = [(0, 1, 2)]
            n = 3
            for _ in range(rng.randint(1, 7)):
                f = rng.choice(faces)
                v = n
                n += 1
                edges += [(v, f[0]), (v, f[1]), (v, f[2])]
                faces.remove(f)
                faces += [(f[0], f[1], v), (f[1], f[2], v), (f[0], f[2], v)]
            g = Graph.from_edges(n, edges)
            assert is_apollonian(g)
            assert is_partial_3tree(g)


def brute_force_minor(host: Graph, pattern: Graph) -> bool:
    """Oracle: enumerate all assignments of host vertices to pattern branches."""
    hn, pn = host.n, pattern.n
    if pn > hn:
        return False
    adj = host.adjacency()

    def connected(part):
        if not part:
            return False
        seen = {part[0]}
        stack = [part[0]]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y in part and y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == len(part)

    for assignment in itertools.product(range(pn + 1), repeat=hn):
        parts = [[v for v in range(hn) if assignment[v] == b] for b in range(pn)]
        if any(not connected(p) for p in parts):
            continue
        ok = True
        for e in pattern.edges:
            a, b = tuple(e)
            if not any(y in adj[x] for x in parts[a] for y in parts[b]):
                ok = False
                break
        if ok:
            return True
    return False


class TestPartial3Tree:
    def test_k4_exhaustive_agreement(self):
        g = k4()
        for name in ("k5", "k33", "octahedron", "pentagonal_prism"):
            pat = fixtures.load(name)
            assert brute_force_minor(g, pat) is False
        assert is_partial_3tree(g)

    def test_forbidden_minors_reject_themselves(self):
        for name in ("k5", "k33", "octahedron", "pentagonal_prism"):
            g = fixtures.load(name)
            assert has_minor(g, fixtures.load(name))
            assert not is_partial_3tree(g)

    def test_minor_oracle_agreement_small(self):
        import random

        rng = random.Random(11)
        k33 = fixtures.load("k33")
        for trial in range(10):
            n = rng.randint(4, 6)
            edges = [
                (i, j)
                for i in range(n)
                for j in range(i + 1, n)
                if rng.random() < 0.6
            ]
            g = Graph.from_edges(n, edges)
            for pat in (fixtures.complete_graph(5), k33):
                assert has_minor(g, pat) == brute_force_minor(g, pat), (
                    g.edge_list(),
                    pat.n,
                )

    def test_budget(self):
        with pytest.raises(BudgetError):
            has_minor(Graph(31), fixtures.complete_graph(5))


class TestDiameter:
    def test_k4(self):
        assert diameter(k4()) == 1

    def test_path5(self):
        assert diameter(fixtures.path_graph(5)) == 4

    def test_disconnected(self):
        assert diameter(Graph.from_edges(4, [(0, 1), (2, 3)])) == float("inf")


class TestContainsSubgraph:
    def test_k3_in_k4(self):
        assert contains_subgraph(k4(), fixtures.complete_graph(3))

    def test_no_k4_in_octahedron(self):
        host = octahedron()
        # oracle: brute-force over all 4-subsets
        expected = any(
            len(host.subgraph(q).edges) == 6
            for q in itertools.combinations(range(6), 4)
        )
        assert expected is False
        assert not contains_subgraph(host, k4())

    def test_prism_in_itself(self):
        g = fixtures.load("pentagonal_prism")
        assert contains_subgraph(g, g)

    def test_budget(self):
        with pytest.raises(BudgetError):
            contains_subgraph(Graph(12), Graph(11))


class TestSeparator:
    def test_star(self):
        assert separator_witness_nonhamiltonian(fixtures.star_graph(3), {0})

    def test_c5(self):
        g = fixtures.cycle_graph(5)
        for v in range(5):
            assert not separator_witness_nonhamiltonian(g, {v})

    def test_witness_implies_not_hamiltonian(self):
        import random

        rng = random.Random(5)
        for trial in range(40):
            n = rng.randint(4, 8)
            edges = [
                (i, j)
                for i in range(n)
                for j in range(i + 1, n)
                if rng.random() < 0.45
            ]
            g = Graph.from_edges(n, edges)
            s = set(rng.sample(range(n), rng.randint(1, n - 2)))
            if separator_witness_nonhamiltonian(g, s):
                assert not is_hamiltonian(g)


class TestGraphBasics:
    def test_json_round_trip(self):
        g = octahedron()
        assert Graph.from_json(g.to_json()).edge_list() == g.edge_list()

    def test_components(self):
        g = Graph.from_edges(5, [(0, 1), (2, 3)])
        assert sorted(map(sorted, connected_components(g))) == [[0, 1], [2, 3], [4]]
