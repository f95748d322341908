"""Packing geometry tests.  Derived expectations are recomputed in-line by
independent oracles: closed-form Descartes evaluation, binary search for
placeable radii, greedy chain construction for gap widths."""

import math
import random

import pytest

from planar_arena import fixtures, packing as pk
from planar_arena.graphs import InvalidParameter, Graph, contains_subgraph
from planar_arena.packing import (
    Circle,
    Packing,
    chain_is_valid,
    circle_fits_region,
    contact_graph,
    gamma_blocker,
    gap,
    gap_points,
    greedy_chain_count,
    layout_packing,
    max_radius_at,
    parabola_bounds_hold,
    soddy_circles,
    surrounds,
    tangency_residual,
    tangent_circle_to_pair,
    validate_packing,
    width,
    width_params,
)


def three_units():
    return (
        Circle(0.0, 0.0, 1.0),
        Circle(2.0, 0.0, 1.0),
        Circle(1.0, math.sqrt(3.0), 1.0),
    )


def pack_of(*circles, tol=1e-9, owner="test"):
    p = Packing(tol)
    for c in circles:
        p.add(c, owner)
    return p


class TestValidity:
    def test_tangent_pair_ok(self):
        p = pack_of(Circle(0, 0, 1), Circle(2, 0, 1))
        assert validate_packing(p) is None

    def test_overlap_reported(self):
        p = pack_of(Circle(0, 0, 1), Circle(1.5, 0, 1))
        v = validate_packing(p)
        assert v is not None
        assert v.depth == pytest.approx(0.5)
        assert (v.i, v.j) == (0, 1)

    def test_soddy_configuration_from_figure(self):
        # three mutually tangent equal circles at the corners of a unit
        # triangle of directions, inner circle, plus two reflected ones
        import cmath

        dirs = [cmath.exp(1j * math.radians(a)) for a in (90, 210, 330)]
        r = abs(dirs[0] - dirs[1]) / 2
        corners = [Circle(d.real, d.imag, r) for d in dirs]
        center = Circle(0.0, 0.0, 1 - r)

        def reflect(p, a, b):
            ab = b - a
            t = (p - a) / ab
            return a + t.conjugate() * ab

        P = reflect(0j, dirs[0], dirs[1])
        Q = reflect(0j, dirs[0], dirs[2])
        others = [Circle(P.real, P.imag, 1 - r), Circle(Q.real, Q.imag, 1 - r)]
        p = pack_of(*corners, center, *others, tol=1e-9)
        assert validate_packing(p) is None
        g = contact_graph(p)
        # center touches all three corners; each reflected circle touches two
        assert g.degree(3) == 3
        assert contains_subgraph(g, g)


class TestContactGraph:
    def test_single(self):
        g = contact_graph(pack_of(Circle(0, 0, 1)))
        assert g.n == 1 and not g.edges

    def test_chain_of_three(self):
        p = pack_of(Circle(0, 0, 1), Circle(2, 0, 1), Circle(4, 0, 1))
        g = contact_graph(p)
        assert g.edge_list() == [(0, 1), (1, 2)]

    def test_soddy_completes_k4(self):
        c1, c2, c3 = three_units()
        inner = soddy_circles(c1, c2, c3).inner
        p = pack_of(c1, c2, c3, inner)
        g = contact_graph(p)
        assert len(g.edges) == 6


class TestSoddy:
    def test_unit_triple_inner_radius_closed_form(self):
        c1, c2, c3 = three_units()
        res = soddy_circles(c1, c2, c3)
        assert res.inner.r == pytest.approx(1 / (3 + 2 * math.sqrt(3)), abs=1e-12)
        # inequality for a circle strictly inside the interstice
        assert 1 / res.inner.r > 3

    def test_outer_solution_enclosing(self):
        c1, c2, c3 = three_units()
        res = soddy_circles(c1, c2, c3)
        assert res.second is not None and res.second_enclosing

    def test_tangency_residuals_random_triples(self):
        rng = random.Random(12)
        worst = 0.0
        for _ in range(300):
            r1 = rng.uniform(0.2, 3.0)
            r2 = rng.uniform(0.2, 3.0)
            r3 = rng.uniform(0.2, 3.0)
            c1 = Circle(0.0, 0.0, r1)
            c2 = Circle(r1 + r2, 0.0, r2)
            c3 = tangent_circle_to_pair(c1, c2, r3)[0]
            res = soddy_circles(c1, c2, c3)
            for c in (c1, c2, c3):
                worst = max(worst, abs(gap(res.inner, c)) / max(res.inner.r, c.r))
        assert worst <= 1e-9

    def test_degenerate_rejected(self):
        c = Circle(0, 0, 1)
        with pytest.raises(InvalidParameter):
            soddy_circles(c, c, Circle(2, 0, 1))


class TestWidth:
    def test_scale_of_bound(self):
        w = width(1.0, 1.0, 3)
        assert w == pytest.approx(1 / (32 * 9 * 2), rel=1e-12)

    def test_monotone_in_d(self):
        for d in range(1, 8):
            assert width(1.0, 1.0, d + 1) <= width(1.0, 1.0, d)

    def test_parabola_envelope_valid(self):
        for r1, r2 in ((1.0, 1.0), (0.5, 2.0), (2.0, 0.5)):
            params = width_params(r1, r2, 4)
            assert parabola_bounds_hold(params, r1, r2, params.eps)

    @pytest.mark.parametrize("d", [2, 3, 5, 8])
    @pytest.mark.parametrize("r1,r2", [(0.5, 0.5), (1.0, 1.0), (2.0, 1.0)])
    def test_chain_oracle(self, d, r1, r2):
        params = width_params(r1, r2, d)
        eps = width(r1, r2, d)
        count = greedy_chain_count(r1, r2, eps, params.x0)
        assert count >= d


class TestSurrounds:
    def test_minimal_three_chain(self):
        c1, c2, c3 = three_units()
        inner = soddy_circles(c1, c2, c3).inner
        p = pack_of(c1, c2, c3, inner)
        chain = surrounds(p, 3)
        assert chain is not None and sorted(chain) == [0, 1, 2]

    def test_two_circles_no_chain(self):
        p = pack_of(Circle(0, 0, 1), Circle(2, 0, 1))
        assert surrounds(p, 0) is None

    def test_hex_ring(self):
        ring = [
            Circle(2 * math.cos(k * math.pi / 3), 2 * math.sin(k * math.pi / 3), 1.0)
            for k in range(6)
        ]
        p = pack_of(Circle(0, 0, 1), *ring)
        chain = surrounds(p, 0)
        assert chain is not None and len(chain) == 6

    def test_open_ring_is_not_surround(self):
        ring = [
            Circle(2 * math.cos(k * math.pi / 3), 2 * math.sin(k * math.pi / 3), 1.0)
            for k in range(5)
        ]
        p = pack_of(Circle(0, 0, 1), *ring)
        assert surrounds(p, 0) is None


class TestGapPoints:
    def test_lonely_circle_full_boundary(self):
        p = pack_of(Circle(0, 0, 1))
        ga = gap_points(p, 0)
        assert ga.total_angle() == pytest.approx(2 * math.pi)

    def test_tangent_pair_covers_minor_arc(self):
        c1, c2, c3 = three_units()
        p = pack_of(c1, c2, c3)
        ga = gap_points(p, 0)
        # the minor arc between the two tangency points is covered
        assert ga.total_angle() < 2 * math.pi
        assert ga.contains(math.pi)  # opposite side stays uncovered
        # tangency points remain gap points
        assert ga.contains(0.0)

    def test_surrounded_circle_has_no_gap_arcs(self):
        c1, c2, c3 = three_units()
        inner = soddy_circles(c1, c2, c3).inner
        p = pack_of(c1, c2, c3, inner)
        ga = gap_points(p, 3)
        assert ga.arcs == []


class TestMaxRadius:
    def test_unbounded_when_alone(self):
        p = pack_of(Circle(0, 0, 1))
        assert math.isinf(max_radius_at(p, 0, 1.0))

    def test_matches_binary_search(self):
        p = pack_of(Circle(0, 0, 1), Circle(2, 0, 1))
        target = p.placed[0].circle

        def fits(theta, rr):
            cx = target.x + (target.r + rr) * math.cos(theta)
            cy = target.y + (target.r + rr) * math.sin(theta)
            return gap(Circle(cx, cy, rr), p.placed[1].circle) >= 0

        # growth straight away from the obstacle never binds
        assert math.isinf(max_radius_at(p, 0, math.pi))
        assert fits(math.pi, 1e9)

        # off-axis the obstacle caps the radius; compare with binary search
        for theta in (0.4, 0.7, 1.0):
            bound = max_radius_at(p, 0, theta)
            assert math.isfinite(bound)
            lo, hi = 0.0, 1e9
            for _ in range(200):
                mid = (lo + hi) / 2
                if fits(theta, mid):
                    lo = mid
                else:
                    hi = mid
            assert bound == pytest.approx(lo, rel=1e-6)

    def test_zero_at_existing_tangency(self):
        p = pack_of(Circle(0, 0, 1), Circle(2, 0, 1))
        assert max_radius_at(p, 0, 0.0) == pytest.approx(0.0, abs=1e-9)


class TestGammaBlocker:
    def test_lonely_target_unbounded_branch(self):
        p = pack_of(Circle(0, 0, 1))
        d = 5
        c = gamma_blocker(p, 0, d)
        assert c.r == pytest.approx(1.0)
        clearance = gap(c, p.placed[0].circle)
        assert 0 < clearance <= width(1.0, 1.0, d) / 2 + 1e-12
        p.add(c, "test")
        assert validate_packing(p) is None

    def test_bounded_branch_identity(self):
        # eta = r*^2/(r* + r) makes (1/(r*-eta) - 1/r)^(-1) == r*
        r_star, r_om = 0.8, 1.0
        eta = r_star**2 / (r_star + r_om)
        assert 1 / (1 / (r_star - eta) - 1 / r_om) == pytest.approx(r_star)

    def test_bounded_branch_geometry(self):
        # corridor of obstacles caps the placeable radius below r_omega
        target = Circle(0, 0, 1)
        obstacles = [
            Circle(2.4 * math.cos(t), 2.4 * math.sin(t), 1.0)
            for t in (0.0, 1.3, 2.6, 3.9, 5.2)
        ]
        p = pack_of(target, *obstacles)
        assert validate_packing(p) is None
        c = gamma_blocker(p, 0, 4)
        p.add(c, "test")
        assert validate_packing(p) is None
        clearance = gap(c, target)
        assert clearance > 0

    def test_surrounded_target_rejected(self):
        c1, c2, c3 = three_units()
        inner = soddy_circles(c1, c2, c3).inner
        p = pack_of(c1, c2, c3, inner)
        with pytest.raises(InvalidParameter):
            gamma_blocker(p, 3, 3)


class TestLayout:
    def test_k3(self):
        res = layout_packing(fixtures.complete_graph(3))
        assert len(res.packing) == 3
        assert validate_packing(res.packing) is None
        assert len(contact_graph(res.packing).edges) == 3

    def test_k4_matches_soddy_up_to_similarity(self):
        res = layout_packing(fixtures.complete_graph(4))
        assert res.aux_count == 0
        radii = sorted(c.r for c in res.packing.circles())
        # boundary 1,1,1 and the inner Soddy radius of three unit circles
        assert radii[0] == pytest.approx(1 / (3 + 2 * math.sqrt(3)), rel=1e-9)
        assert radii[1:] == pytest.approx([1.0, 1.0, 1.0])
        assert tangency_residual(res, fixtures.complete_graph(4)) <= 1e-7

    def test_octahedron(self):
        g = fixtures.load("octahedron")
        res = layout_packing(g)
        assert validate_packing(res.packing) is None
        assert res.angle_error <= 1e-8
        cg = contact_graph(res.packing)
        for u, v in g.edge_list():
            assert cg.has_edge(res.vertex_index[u], res.vertex_index[v])

    def test_pentagonal_prism_with_star_vertices(self):
        g = fixtures.load("pentagonal_prism")
        res = layout_packing(g)
        assert res.aux_count >= 1
        assert validate_packing(res.packing) is None
        assert tangency_residual(res, g) <= 1e-7
        cg = contact_graph(res.packing)
        for u, v in g.edge_list():
            assert cg.has_edge(res.vertex_index[u], res.vertex_index[v])

    def test_nonplanar_rejected(self):
        with pytest.raises(pk.LayoutError):
            layout_packing(fixtures.complete_graph(5))


class TestInterstice:
    def test_incenter_fits(self):
        c1, c2, c3 = three_units()
        inner = soddy_circles(c1, c2, c3).inner
        p = pack_of(c1, c2, c3)
        tiny = Circle(inner.x, inner.y, inner.r / 2)
        assert circle_fits_region(p, tiny, (c1, c2, c3))

    def test_overlapping_rejected(self):
        c1, c2, c3 = three_units()
        p = pack_of(c1, c2, c3)
        inner = soddy_circles(c1, c2, c3).inner
        fat = Circle(inner.x, inner.y, inner.r * 3)
        assert not circle_fits_region(p, fat, (c1, c2, c3))

    def test_outside_rejected(self):
        c1, c2, c3 = three_units()
        p = pack_of(c1, c2, c3)
        assert not circle_fits_region(p, Circle(10, 10, 0.1), (c1, c2, c3))


class TestChainOracleValidity:
    def test_chain_circles_stay_valid(self):
        r1 = r2 = 1.0
        d = 4
        eps = width(r1, r2, d)
        omega1 = Circle(0.0, -r1, r1)
        omega2 = Circle(0.0, r2 + eps, r2)
        chain = [Circle(0.0, eps / 2, eps / 2)]
        for _ in range(d + 2):
            sols = [
                c for c in pk.apollonius_external(omega1, omega2, chain[-1])
                if c.x > chain[-1].x + 1e-15
            ]
            if not sols:
                break
            chain.append(min(sols, key=lambda c: c.x))
        assert chain_is_valid(r1, r2, eps, chain)
