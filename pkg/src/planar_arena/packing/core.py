"""Circle packings: validity, tangency, contact graphs, Descartes/Soddy
and Apollonius constructions.

All tangencies are external.  Exactness is numeric: two circles touch
when |gap| <= tol * max(r_i, r_j), where gap is center distance minus the
radius sum.  Strategy code constructs tangencies analytically, so the
residuals sit at rounding scale, far below the default tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from ..graphs import Graph, InvalidParameter

DEFAULT_TOL = 1e-9
_GRID_CELL = 4.0


@dataclass(frozen=True)
class Circle:
    x: float
    y: float
    r: float

    def __post_init__(self):
        if not (self.r > 0 and math.isfinite(self.r)):
            raise InvalidParameter(f"radius must be positive and finite, got {self.r}")
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise InvalidParameter("circle center must be finite")

    def center(self) -> tuple[float, float]:
        return (self.x, self.y)

    def to_json(self) -> dict:
        return {"x": self.x, "y": self.y, "r": self.r}

    @staticmethod
    def from_json(d: dict) -> "Circle":
        return Circle(d["x"], d["y"], d["r"])


def center_distance(a: Circle, b: Circle) -> float:
    return math.hypot(a.x - b.x, a.y - b.y)


def gap(a: Circle, b: Circle) -> float:
    """Signed clearance: center distance minus radius sum (negative = overlap)."""
    return center_distance(a, b) - a.r - b.r


def tangent(a: Circle, b: Circle, tol: float = DEFAULT_TOL) -> bool:
    return abs(gap(a, b)) <= tol * max(a.r, b.r)


@dataclass(frozen=True)
class Violation:
    i: int
    j: int
    depth: float


@dataclass
class PlacedCircle:
    circle: Circle
    owner: str
    move_index: int


class Packing:
    """Ordered list of placed circles with a uniform tangency tolerance.

    A sparse cell grid answers "who could touch this candidate" queries so
    that incremental validity and contact graphs stay near-linear even for
    packings with tens of thousands of circles.
    """

    def __init__(self, tol: float = DEFAULT_TOL):
        self.tol = tol
        self.placed: list[PlacedCircle] = []
        self._grid: dict[tuple[int, int], list[int]] = {}
        self._bbox: tuple[float, float, float, float] | None = None

    def __len__(self) -> int:
        return len(self.placed)

    def circles(self) -> list[Circle]:
        return [p.circle for p in self.placed]

    def _cells(self, c: Circle):
        x0 = math.floor((c.x - c.r) / _GRID_CELL)
        x1 = math.floor((c.x + c.r) / _GRID_CELL)
        y0 = math.floor((c.y - c.r) / _GRID_CELL)
        y1 = math.floor((c.y + c.r) / _GRID_CELL)
        for ix in range(x0, x1 + 1):
            for iy in range(y0, y1 + 1):
                yield (ix, iy)

    def add(self, c: Circle, owner: str, move_index: int | None = None) -> int:
        idx = len(self.placed)
        self.placed.append(
            PlacedCircle(c, owner, move_index if move_index is not None else idx)
        )
        for cell in self._cells(c):
            self._grid.setdefault(cell, []).append(idx)
        if self._bbox is None:
            self._bbox = (c.x - c.r, c.y - c.r, c.x + c.r, c.y + c.r)
        else:
            x0, y0, x1, y1 = self._bbox
            self._bbox = (
                min(x0, c.x - c.r), min(y0, c.y - c.r),
                max(x1, c.x + c.r), max(y1, c.y + c.r),
            )
        return idx

    def neighbors_of(self, c: Circle) -> list[int]:
        seen: set[int] = set()
        for cell in self._cells(c):
            seen.update(self._grid.get(cell, ()))
        return sorted(seen)

    def conflicts(self, c: Circle, skip: int | None = None) -> Violation | None:
        """Worst overlap of a candidate against the packing, or None."""
        worst = None
        for j in self.neighbors_of(c):
            if j == skip:
                continue
            other = self.placed[j].circle
            g = gap(c, other)
            if g < -self.tol * max(c.r, other.r):
                if worst is None or g < worst[1]:
                    worst = (j, g)
        if worst is None:
            return None
        return Violation(skip if skip is not None else -1, worst[0], -worst[1])

    def fits(self, c: Circle) -> bool:
        return self.conflicts(c) is None

    def tangent_indices(self, c: Circle, skip: int | None = None) -> list[int]:
        out = []
        for j in self.neighbors_of(c):
            if j == skip:
                continue
            if tangent(c, self.placed[j].circle, self.tol):
                out.append(j)
        return out

    def clone(self) -> "Packing":
        p = Packing(self.tol)
        for pc in self.placed:
            p.add(pc.circle, pc.owner, pc.move_index)
        return p

    def to_json(self) -> dict:
        return {
            "tol": self.tol,
            "circles": [
                {
                    "x": pc.circle.x,
                    "y": pc.circle.y,
                    "r": pc.circle.r,
                    "owner": pc.owner,
                    "move_index": pc.move_index,
                }
                for pc in self.placed
            ],
        }

    @staticmethod
    def from_json(data: dict) -> "Packing":
        p = Packing(data.get("tol", DEFAULT_TOL))
        for c in data["circles"]:
            p.add(Circle(c["x"], c["y"], c["r"]), c["owner"], c["move_index"])
        return p

    def bounding_box(self) -> tuple[float, float, float, float]:
        if self._bbox is None:
            return (0.0, 0.0, 0.0, 0.0)
        return self._bbox


def validate_packing(p: Packing) -> Violation | None:
    """None when pairwise interior-disjoint; else the deepest violation."""
    worst: Violation | None = None
    for i, pc in enumerate(p.placed):
        c = pc.circle
        for j in p.neighbors_of(c):
            if j >= i:
                continue
            other = p.placed[j].circle
            g = gap(c, other)
            if g < -p.tol * max(c.r, other.r):
                depth = -g
                if worst is None or depth > worst.depth:
                    worst = Violation(j, i, depth)
    return worst


def contact_graph(p: Packing) -> Graph:
    """Tangency graph on circle indices, in placement order."""
    edges = []
    for i, pc in enumerate(p.placed):
        for j in p.tangent_indices(pc.circle):
            if j < i:
                edges.append((j, i))
    return Graph.from_edges(len(p.placed), edges)


@dataclass(frozen=True)
class SoddyResult:
    inner: Circle
    second: Circle | None
    second_enclosing: bool


def _descartes_center(k: list[float], z: list[complex], k4: float) -> Circle:
    inner = k[0] * k[1] * z[0] * z[1] + k[1] * k[2] * z[1] * z[2] + k[2] * k[0] * z[2] * z[0]
    root = 2 * complex(inner) ** 0.5
    base = k[0] * z[0] + k[1] * z[1] + k[2] * z[2]
    best = None
    for sgn in (1, -1):
        z4 = (base + sgn * root) / k4
        c = Circle(z4.real, z4.imag, abs(1 / k4))
        resid = 0.0
        for zi, ki in zip(z, k):
            want = 1 / ki + (1 / k4 if k4 > 0 else -abs(1 / k4))
            resid = max(resid, abs(abs(z4 - zi) - abs(want)))
        if best is None or resid < best[0]:
            best = (resid, c)
    return best[1]


def soddy_circles(c1: Circle, c2: Circle, c3: Circle, tol: float = DEFAULT_TOL) -> SoddyResult:
    """Both Descartes solutions for three mutually tangent circles.

    The inner solution is externally tangent to all three; the second is
    either the far-side tangent circle or, with negative curvature, the
    circle enclosing all three (flagged, never played as a move).
    """
    for a, b in ((c1, c2), (c1, c3), (c2, c3)):
        if not tangent(a, b, max(tol, 1e-7)):
            raise InvalidParameter(
                f"inputs must be mutually tangent; gap {gap(a, b):.3g} between {a} and {b}"
            )
    k = [1 / c.r for c in (c1, c2, c3)]
    z = [complex(c.x, c.y) for c in (c1, c2, c3)]
    s = k[0] + k[1] + k[2]
    cross = k[0] * k[1] + k[1] * k[2] + k[2] * k[0]
    root = 2 * math.sqrt(max(cross, 0.0))
    k4_inner = s + root
    k4_second = s - root
    inner = _descartes_center(k, z, k4_inner)
    if abs(k4_second) < 1e-12 * s:
        return SoddyResult(inner, None, False)
    second = _descartes_center(k, z, k4_second)
    return SoddyResult(inner, second, k4_second < 0)


def apollonius_external(c1: Circle, c2: Circle, c3: Circle) -> list[Circle]:
    """Circles externally tangent to all three inputs (CCC Apollonius).

    Unlike soddy_circles the inputs need not touch each other.  Subtracting
    tangency constraints pairwise leaves two linear equations in
    (x, y, rho) whose solution line is intersected with one quadratic
    constraint; collinear input centers are fine.
    """
    o = [(c.x, c.y, c.r) for c in (c1, c2, c3)]

    def row(i, j):
        xi, yi, ri = o[i]
        xj, yj, rj = o[j]
        # |C - Oi|^2 - (rho + ri)^2  ==  |C - Oj|^2 - (rho + rj)^2
        return (
            2 * (xj - xi),
            2 * (yj - yi),
            2 * (rj - ri),
            (xj * xj + yj * yj - xi * xi - yi * yi) + (ri * ri - rj * rj),
        )

    r1 = row(0, 1)
    r2 = row(0, 2)
    # direction of the solution line = cross product of the two row normals
    dirv = (
        r1[1] * r2[2] - r1[2] * r2[1],
        r1[2] * r2[0] - r1[0] * r2[2],
        r1[0] * r2[1] - r1[1] * r2[0],
    )
    scale = max(abs(t) for t in (*r1[:3], *r2[:3])) or 1.0
    if max(map(abs, dirv)) < 1e-13 * scale * scale:
        raise InvalidParameter("degenerate configuration (dependent constraints)")
    # particular solution: zero out the variable where dirv is largest and
    # solve the remaining well-conditioned 2x2 block
    drop = max(range(3), key=lambda k: abs(dirv[k]))
    keep = [k for k in range(3) if k != drop]
    m11, m12 = r1[keep[0]], r1[keep[1]]
    m21, m22 = r2[keep[0]], r2[keep[1]]
    det = m11 * m22 - m12 * m21
    s1 = (r1[3] * m22 - r2[3] * m12) / det
    s2 = (m11 * r2[3] - m21 * r1[3]) / det
    p0 = [0.0, 0.0, 0.0]
    p0[keep[0]], p0[keep[1]] = s1, s2
    x0, y0, rr0 = o[0]
    # (p0 + t dir): plug into |C - O0|^2 = (rho + r0)^2
    dx, dy, dr = p0[0] - x0, p0[1] - y0, p0[2] + rr0
    qx, qy, qr = dirv
    A = qx * qx + qy * qy - qr * qr
    B = 2 * (dx * qx + dy * qy - dr * qr)
    C = dx * dx + dy * dy - dr * dr
    ts: list[float] = []
    if abs(A) < 1e-16 * (qx * qx + qy * qy + qr * qr):
        if B != 0:
            ts = [-C / B]
    else:
        disc = B * B - 4 * A * C
        if disc >= 0:
            rt = math.sqrt(disc)
            ts = [(-B - rt) / (2 * A), (-B + rt) / (2 * A)]
    out = []
    for t in ts:
        rho = p0[2] + t * qr
        if rho > 1e-12 and math.isfinite(rho):
            out.append(Circle(p0[0] + t * qx, p0[1] + t * qy, rho))
    return out


def tangent_circle_to_pair(a: Circle, b: Circle, rho: float) -> list[Circle]:
    """Circles of radius rho externally tangent to both a and b (0, 1 or 2)."""
    d = center_distance(a, b)
    ra, rb = a.r + rho, b.r + rho
    if d > ra + rb or d < abs(ra - rb) or d == 0:
        return []
    t = (d * d + ra * ra - rb * rb) / (2 * d)
    h2 = ra * ra - t * t
    h = math.sqrt(max(h2, 0.0))
    ux, uy = (b.x - a.x) / d, (b.y - a.y) / d
    base = (a.x + t * ux, a.y + t * uy)
    if h < 1e-15:
        return [Circle(base[0], base[1], rho)]
    return [
        Circle(base[0] - h * uy, base[1] + h * ux, rho),
        Circle(base[0] + h * uy, base[1] - h * ux, rho),
    ]


def interstice_contains(point: tuple[float, float], walls: tuple[Circle, Circle, Circle]) -> bool:
    """Is the point inside the curvilinear triangle between three mutually
    tangent circles?  (Inside the center triangle, outside all three disks.)"""
    (px, py) = point
    a, b, c = walls
    for w in walls:
        if math.hypot(px - w.x, py - w.y) < w.r:
            return False

    def cross(ox, oy, ax, ay, bx, by):
        return (ax - ox) * (by - oy) - (ay - oy) * (bx - ox)

    d1 = cross(a.x, a.y, b.x, b.y, px, py)
    d2 = cross(b.x, b.y, c.x, c.y, px, py)
    d3 = cross(c.x, c.y, a.x, a.y, px, py)
    has_neg = (d1 < 0) or (d2 < 0) or (d3 < 0)
    has_pos = (d1 > 0) or (d2 > 0) or (d3 > 0)
    return not (has_neg and has_pos)


def circle_fits_region(
    p: Packing, candidate: Circle, walls: tuple[Circle, Circle, Circle]
) -> bool:
    """Candidate is interior-disjoint from the packing and centered in the
    interstice bounded by the three wall circles."""
    if not interstice_contains(candidate.center(), walls):
        return False
    return p.fits(candidate)


def scale_translate(c: Circle, scale: float, dx: float, dy: float) -> Circle:
    return Circle(c.x * scale + dx, c.y * scale + dy, c.r * scale)


def enclosing_circle(circles: list[Circle]) -> Circle:
    """Cheap enclosing circle: centroid of centers, max reach."""
    cx = sum(c.x for c in circles) / len(circles)
    cy = sum(c.y for c in circles) / len(circles)
    rad = max(math.hypot(c.x - cx, c.y - cy) + c.r for c in circles)
    return Circle(cx, cy, rad)
