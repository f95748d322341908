"""Gap-point analysis of a circle's uncovered boundary, the per-point
placeable-radius function, surrounding chains, and the degree-forcing
blocker circle built from them."""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..graphs import InvalidParameter
from . import width as width_mod
from .core import Circle, Packing, Violation, gap, tangent

TWO_PI = 2 * math.pi
ARC_SAMPLES = 512
GOLDEN = (math.sqrt(5) - 1) / 2


def _norm(theta: float) -> float:
    return theta % TWO_PI


@dataclass
class GapAnalysis:
    """Arcs of the target circle not covered by any tangent-pair minor arc,
    plus isolated tangency points; argmax data for the placeable radius."""

    arcs: list[tuple[float, float]]  # closed [lo, hi], hi may exceed 2*pi (wrap)
    points: list[float]
    best_angle: float | None = None
    best_radius: float = 0.0

    def total_angle(self) -> float:
        return sum(hi - lo for lo, hi in self.arcs)

    def contains(self, theta: float) -> bool:
        t = _norm(theta)
        for lo, hi in self.arcs:
            if lo - 1e-12 <= t <= hi + 1e-12 or lo - 1e-12 <= t + TWO_PI <= hi + 1e-12:
                return True
        return any(abs(_norm(p - t)) < 1e-9 or abs(_norm(t - p)) < 1e-9 for p in self.points)


def _subtract_open_arcs(covered: list[tuple[float, float]]) -> list[tuple[float, float]]:
    """Complement of a union of open arcs on the circle, as closed arcs."""
    if not covered:
        return [(0.0, TWO_PI)]
    # normalize and unwrap into [0, 4*pi) segments
    segs = []
    for lo, hi in covered:
        lo = _norm(lo)
        hi = _norm(hi)
        if hi < lo:
            hi += TWO_PI
        segs.append((lo, hi))
    segs.sort()
    merged = [list(segs[0])]
    for lo, hi in segs[1:]:
        if lo <= merged[-1][1] + 1e-15:
            merged[-1][1] = max(merged[-1][1], hi)
        else:
            merged.append([lo, hi])
    # wrap-around merge
    if len(merged) > 1 and merged[0][0] + TWO_PI <= merged[-1][1] + 1e-15:
        merged[0][0] = merged[-1][0] - TWO_PI
        merged[0][1] = max(merged[0][1], merged[-1][1] - TWO_PI)
        merged.pop()
    total = sum(hi - lo for lo, hi in merged)
    if total >= TWO_PI - 1e-12:
        return []
    out = []
    for i, (lo, hi) in enumerate(merged):
        nxt_lo = merged[(i + 1) % len(merged)][0]
        if i + 1 == len(merged):
            nxt_lo += TWO_PI
        out.append((_norm(hi), _norm(hi) + (nxt_lo - hi)))
    return [(lo, hi) for lo, hi in out if hi - lo > 1e-12]


def tangency_angle(target: Circle, other: Circle) -> float:
    return _norm(math.atan2(other.y - target.y, other.x - target.x))


def gap_points(p: Packing, target_index: int) -> GapAnalysis:
    """Uncovered arcs of the target circle's boundary.

    A boundary point is covered when it lies strictly inside the minor arc
    between the tangency points of two circles that touch each other and
    both touch the target; tangency points themselves always remain gap
    points."""
    target = p.placed[target_index].circle
    nbrs = p.tangent_indices(target, skip=target_index)
    angles = {i: tangency_angle(target, p.placed[i].circle) for i in nbrs}
    covered = []
    for ii, i in enumerate(nbrs):
        for j in nbrs[ii + 1:]:
            if not tangent(p.placed[i].circle, p.placed[j].circle, p.tol):
                continue
            a, b = angles[i], angles[j]
            span = _norm(b - a)
            if span <= math.pi:
                covered.append((a, a + span))
            else:
                covered.append((b, b + (TWO_PI - span)))
    arcs = _subtract_open_arcs(covered)
    pts = sorted(set(_norm(t) for t in angles.values()))
    return GapAnalysis(arcs=arcs, points=pts)


def max_radius_at(p: Packing, target_index: int, theta: float) -> float:
    """Largest radius placeable externally tangent to the target at angle
    theta (math.inf when nothing binds).  Closed form per obstacle."""
    target = p.placed[target_index].circle
    ux, uy = math.cos(theta), math.sin(theta)
    px, py = target.x + target.r * ux, target.y + target.r * uy
    best = math.inf
    for j, pc in enumerate(p.placed):
        if j == target_index:
            continue
        ob = pc.circle
        vx, vy = px - ob.x, py - ob.y
        A = vx * vx + vy * vy - ob.r * ob.r
        B = ob.r - (vx * ux + vy * uy)
        if A <= 1e-18:
            return 0.0  # theta is an existing tangency point
        if B > 0:
            best = min(best, A / (2 * B))
    return max(best, 0.0)


def surrounds(p: Packing, target_index: int) -> list[int] | None:
    """A surrounding chain of the target: an induced cycle in the contact
    graph, every member tangent to the target, enclosing it (winding 2*pi).
    Returns member indices in cyclic order, or None."""
    target = p.placed[target_index].circle
    nbrs = p.tangent_indices(target, skip=target_index)
    if len(nbrs) < 3:
        return None
    angles = {i: tangency_angle(target, p.placed[i].circle) for i in nbrs}
    adj = {
        i: [
            j for j in nbrs
            if j != i and tangent(p.placed[i].circle, p.placed[j].circle, p.tol)
        ]
        for i in nbrs
    }

    def induced_cycle_ok(cycle: list[int]) -> bool:
        k = len(cycle)
        members = set(cycle)
        for a_pos, a in enumerate(cycle):
            for b in adj[a]:
                if b in members:
                    b_pos = cycle.index(b)
                    if abs(a_pos - b_pos) not in (1, k - 1):
                        return False
        return True

    for start in sorted(nbrs):
        stack = [(start, [start], 0.0)]
        while stack:
            cur, path, winding = stack.pop()
            for nxt in sorted(adj[cur]):
                step = _norm(angles[nxt] - angles[cur])
                if not (1e-12 < step < math.pi - 1e-12):
                    continue
                if nxt == start:
                    total = winding + step
                    if abs(total - TWO_PI) < 1e-6 and len(path) >= 3:
                        if induced_cycle_ok(path):
                            return path
                    continue
                if nxt in path or winding + step >= TWO_PI - 1e-9:
                    continue
                stack.append((nxt, path + [nxt], winding + step))
    return None


def gamma_blocker(p: Packing, target_index: int, d: int) -> Circle:
    """A circle forcing any future surround of the target (or of itself)
    to use at least d circles.

    Unbounded branch: somewhere on the uncovered boundary a circle larger
    than the target fits, so park an equal-radius circle there at clearance
    below width(r, r, d).  Bounded branch: take the best uncovered point T,
    r* = max placeable radius, eta = r*^2 / (r* + r), and place radius
    r* - eta at clearance min(eta, width(r, r*-eta, d)); the result sits
    strictly inside the radius-r* witness, so the packing stays valid."""
    if target_index >= len(p.placed):
        raise InvalidParameter("target not in packing")
    if surrounds(p, target_index) is not None:
        raise InvalidParameter("target is already an inner circle")
    target = p.placed[target_index].circle
    analysis = gap_points(p, target_index)
    if not analysis.arcs:
        raise InvalidParameter("no uncovered arcs on target")

    def refine(lo: float, hi: float) -> tuple[float, float]:
        a, b = lo, hi
        fa = max_radius_at(p, target_index, a)
        for _ in range(200):
            if b - a < 1e-10:
                break
            m1 = b - GOLDEN * (b - a)
            m2 = a + GOLDEN * (b - a)
            f1 = max_radius_at(p, target_index, m1)
            f2 = max_radius_at(p, target_index, m2)
            if math.isinf(f1) or math.isinf(f2):
                return (m1 if math.isinf(f1) else m2, math.inf)
            if f1 < f2:
                a = m1
            else:
                b = m2
        mid = (a + b) / 2
        return mid, max_radius_at(p, target_index, mid)

    best_theta, best_r = None, -1.0
    for lo, hi in analysis.arcs:
        n = ARC_SAMPLES
        step = (hi - lo) / n
        local_best, local_theta = -1.0, lo
        for i in range(n + 1):
            t = lo + i * step
            rr = max_radius_at(p, target_index, t)
            if rr > local_best:
                local_best, local_theta = rr, t
        # golden-section polish around the best sample
        rlo = max(lo, local_theta - step)
        rhi = min(hi, local_theta + step)
        t_ref, r_ref = refine(rlo, rhi)
        if r_ref > local_best:
            local_best, local_theta = r_ref, t_ref
        if local_best > best_r:
            best_r, best_theta = local_best, local_theta
    analysis.best_angle, analysis.best_radius = best_theta, best_r

    r_om = target.r
    if math.isinf(best_r) or best_r > r_om:
        w = width_mod.width(r_om, r_om, d)
        slack = math.inf if math.isinf(best_r) else (best_r - r_om)
        eps = min(w / 2, slack / 2)
        candidate = _circle_at(target, best_theta, r_om, eps)
    else:
        r_star = best_r
        if r_star <= 0:
            raise InvalidParameter("no placeable radius on any gap point")
        eta = r_star * r_star / (r_star + r_om)
        r_gamma = r_star - eta
        eps = min(eta, width_mod.width(r_om, r_gamma, d))
        candidate = _circle_at(target, best_theta, r_gamma, eps)
    for _ in range(60):
        if p.fits(candidate):
            return candidate
        eps /= 2
        candidate = _circle_at(target, best_theta, candidate.r, eps)
    raise InvalidParameter("failed to fit blocker (numerically degenerate input)")


def _circle_at(target: Circle, theta: float, radius: float, clearance: float) -> Circle:
    d = target.r + clearance + radius
    return Circle(
        target.x + d * math.cos(theta),
        target.y + d * math.sin(theta),
        radius,
    )
