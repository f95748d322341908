"""Numerical realization of planar graphs as circle packings.

Triangulates a planar embedding of the input (star vertices inside big
faces, so repeated-vertex face walks never bite), runs the classic
radius relaxation (adjust each interior radius so its angle sum hits
2*pi, boundary radii pinned), then lays out centers face by face.
The returned packing's contact graph contains the input graph on the
identified vertices; star vertices ride along as extras.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import networkx as nx

from ..graphs import Graph, InvalidParameter
from .core import Circle, Packing

MAX_SWEEPS = 200_000
ANGLE_TOL = 1e-12
LAYOUT_OWNER = "layout"


class LayoutError(ValueError):
    pass


@dataclass
class LayoutResult:
    packing: Packing
    vertex_index: dict[int, int]  # input vertex -> circle index
    aux_count: int
    radii: list[float]
    angle_error: float

    def circle_of(self, v: int) -> Circle:
        return self.packing.placed[self.vertex_index[v]].circle


def _triangulated_embedding(g: Graph):
    """Planar embedding of g, made connected and then fully triangulated by
    a star vertex inside every face of length > 3.  Returns (embedding,
    number of vertices including auxiliaries)."""
    if g.n == 0:
        raise InvalidParameter("empty graph")
    nxg = g.to_networkx()
    comps = list(nx.connected_components(nxg))
    for a, b in zip(comps, comps[1:]):
        nxg.add_edge(min(a), min(b))
    if nxg.number_of_nodes() < 3:
        for v in range(3):
            if v not in nxg:
                nxg.add_node(v)
        nxg.add_edges_from([(0, 1), (1, 2), (0, 2)])
    if nxg.number_of_edges() == 0:
        nxg.add_edge(0, 1)
    ok, emb = nx.check_planarity(nxg)
    if not ok:
        raise LayoutError("input graph is not planar")
    n_total = max(nxg.nodes) + 1

    def faces(embedding):
        seen = set()
        out = []
        for v in embedding:
            for w in embedding[v]:
                if (v, w) in seen:
                    continue
                face = embedding.traverse_face(v, w, mark_half_edges=seen)
                out.append(face)
        return out

    # keep stacking star vertices until every face is a triangle of
    # distinct vertices
    for _ in range(4 * (g.n + 10)):
        todo = None
        for face in faces(emb):
            if len(face) != 3 or len(set(face)) != 3:
                todo = face
                break
        if todo is None:
            break
        c = n_total
        n_total += 1
        distinct = sorted(set(todo))
        gg = emb.to_undirected()
        gg.add_edges_from((c, v) for v in distinct)
        ok, emb2 = nx.check_planarity(gg)
        if not ok:
            raise LayoutError("triangulation step broke planarity")
        emb = emb2
    else:
        raise LayoutError("triangulation did not terminate")
    return emb, n_total


def _face_list(emb) -> list[tuple[int, int, int]]:
    seen = set()
    out = []
    for v in emb:
        for w in emb[v]:
            if (v, w) in seen:
                continue
            face = emb.traverse_face(v, w, mark_half_edges=seen)
            out.append(tuple(face))
    return out


def _tri_angle(r: float, r1: float, r2: float) -> float:
    """Angle at the r-circle's center in the tangent triple (r, r1, r2)."""
    a, b, c = r + r1, r + r2, r1 + r2
    cosv = (a * a + b * b - c * c) / (2 * a * b)
    return math.acos(min(1.0, max(-1.0, cosv)))


def _angle_sum(v: int, radii: dict[int, float], fan: list[tuple[int, int]]) -> float:
    return sum(_tri_angle(radii[v], radii[a], radii[b]) for a, b in fan)


def layout_packing(g: Graph, vertex_budget: int = 200) -> LayoutResult:
    """Circle packing whose contact graph contains g on the identified vertices."""
    if g.n > vertex_budget:
        raise InvalidParameter(f"|V|={g.n} exceeds layout budget {vertex_budget}")
    if g.n == 1:
        p = Packing()
        p.add(Circle(0.0, 0.0, 1.0), LAYOUT_OWNER)
        return LayoutResult(p, {0: 0}, 0, [1.0], 0.0)
    if g.n == 2 and len(g.edges) == 1:
        p = Packing()
        p.add(Circle(0.0, 0.0, 1.0), LAYOUT_OWNER)
        p.add(Circle(2.0, 0.0, 1.0), LAYOUT_OWNER)
        return LayoutResult(p, {0: 0, 1: 1}, 0, [1.0, 1.0], 0.0)

    emb, n_total = _triangulated_embedding(g)
    all_faces = _face_list(emb)
    # one orientation class only (each face appears once per traversal set)
    outer = min(all_faces, key=lambda f: tuple(sorted(f)))
    boundary = set(outer)

    # fans: for each interior vertex the incident (prev, next) radius pairs
    fans: dict[int, list[tuple[int, int]]] = {v: [] for v in emb}
    for face in all_faces:
        a, b, c = face
        fans[a].append((b, c))
        fans[b].append((c, a))
        fans[c].append((a, b))
    interior = [v for v in emb if v not in boundary]
    radii = {v: 1.0 for v in emb}

    err = 0.0
    for sweep in range(MAX_SWEEPS):
        err = 0.0
        for v in interior:
            fan = fans[v]
            k = len(fan)
            theta = _angle_sum(v, radii, fan)
            err = max(err, abs(theta - 2 * math.pi))
            # uniform-neighbor surrogate, then solve for the 2*pi radius
            beta = math.sin(theta / (2 * k))
            s = radii[v] * beta / (1 - beta)
            delta = math.sin(math.pi / k)
            radii[v] = s * (1 - delta) / delta
        if err < ANGLE_TOL:
            break
    final_err = max(
        (abs(_angle_sum(v, radii, fans[v]) - 2 * math.pi) for v in interior),
        default=0.0,
    )

    # ---- centers: seed the outer face, then walk faces breadth-first ----
    # inner faces put their third corner on the +1 side of their directed
    # edges; the outer triangle's interior is the opposite side, so seed -1
    pos: dict[int, tuple[float, float]] = {}
    a, b, c = outer
    ra, rb, rc = radii[a], radii[b], radii[c]
    pos[a] = (0.0, 0.0)
    pos[b] = (ra + rb, 0.0)
    pos[c] = _third_point(pos[a], pos[b], ra + rc, rb + rc, -1.0)

    placed_faces = set()
    frontier = [tuple(outer)]
    face_set = {tuple(f) for f in all_faces}
    # adjacency from ordered faces: edge (u,v) -> face containing it
    by_edge: dict[tuple[int, int], list[tuple[int, int, int]]] = {}
    for f in face_set:
        fa, fb, fc = f
        for e in ((fa, fb), (fb, fc), (fc, fa)):
            by_edge.setdefault(e, []).append(f)
            by_edge.setdefault((e[1], e[0]), []).append(f)

    queue = [tuple(outer)]
    placed_faces.add(tuple(outer))
    while queue:
        f = queue.pop()
        fa, fb, fc = f
        for (x, y, z) in ((fa, fb, fc), (fb, fc, fa), (fc, fa, fb)):
            if z not in pos and x in pos and y in pos:
                pos[z] = _third_point(
                    pos[x], pos[y], radii[x] + radii[z], radii[y] + radii[z],
                    _face_orientation(f, x, y),
                )
        for e in ((fa, fb), (fb, fc), (fc, fa)):
            for g2 in by_edge.get(e, ()) + by_edge.get((e[1], e[0]), ()):
                if g2 not in placed_faces:
                    placed_faces.add(g2)
                    queue.append(g2)

    if len(pos) != n_total:
        raise LayoutError("layout failed to reach every vertex")

    packing = Packing(tol=1e-6)
    vertex_index = {}
    order = sorted(emb, key=lambda v: (v >= g.n, v))
    for v in order:
        idx = packing.add(Circle(pos[v][0], pos[v][1], radii[v]), LAYOUT_OWNER)
        if v < g.n:
            vertex_index[v] = idx
    return LayoutResult(
        packing, vertex_index, n_total - g.n, [radii[v] for v in order], final_err
    )


def _face_orientation(face, x, y) -> float:
    """+1 if (x, y) appears in the face's cyclic order, else -1."""
    fa, fb, fc = face
    return 1.0 if (fa, fb) == (x, y) or (fb, fc) == (x, y) or (fc, fa) == (x, y) else -1.0


def _third_point(p1, p2, d1, d2, side: float) -> tuple[float, float]:
    """Point at distance d1 from p1 and d2 from p2, on the given side of p1->p2."""
    dx, dy = p2[0] - p1[0], p2[1] - p1[1]
    d = math.hypot(dx, dy)
    if d == 0:
        raise LayoutError("coincident centers during layout")
    t = (d * d + d1 * d1 - d2 * d2) / (2 * d)
    h2 = d1 * d1 - t * t
    h = math.sqrt(max(h2, 0.0))
    ux, uy = dx / d, dy / d
    return (p1[0] + t * ux - side * h * uy, p1[1] + t * uy + side * h * ux)


def tangency_residual(result: LayoutResult, g: Graph) -> float:
    """Worst |gap| over the required edges, relative to the mean radius."""
    circles = result.packing.circles()
    mean_r = sum(c.r for c in circles) / len(circles)
    worst = 0.0
    for u, v in g.edge_list():
        cu = result.circle_of(u)
        cv = result.circle_of(v)
        gp = math.hypot(cu.x - cv.x, cu.y - cv.y) - cu.r - cv.r
        worst = max(worst, abs(gp))
    return worst / mean_r
