"""Builder's unbiased strategy growing an Apollonian network of circles.

Opening: answer the first circle with an equal twin across a thin gap
whose constants satisfy 14*delta*x0 < 1/2 and 7*eps/x0 < 1/2, so no legal
Spoiler circle can poke through both flanks of the corridor.  Then play
the middle corridor circle on whichever side Spoiler left alone - a
winning position with two Soddy threats.  Spoiler blocks at most one of
them each turn, so a K4 of tangent circles appears two moves later, and
from there every turn stacks a circle into an empty face of the tracked
network until it has the target size.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..packing import (
    Circle,
    Packing,
    apollonius_external,
    gap,
    interstice_contains,
    soddy_circles,
)
from .pack_common import PackingStrategy, detached_spot

X0_FACTOR = 29  # x0 = r/29 and eps = x0/15 satisfy both strict inequalities


@dataclass(frozen=True)
class WinningPositionWitness:
    omega1: Circle
    omega2: Circle
    omega: Circle
    delta: float
    x0: float
    eps: float


def corridor_constants(radius: float) -> tuple[float, float, float]:
    """(delta, x0, eps) scaled to the opening radius."""
    delta = 1.0 / radius
    x0 = radius / X0_FACTOR
    eps = x0 / 15.0
    return delta, x0, eps


def corridor_criterion(delta: float, x0: float, eps: float) -> bool:
    return 14 * delta * x0 < 0.5 and 7 * eps / x0 < 0.5


def gap_family(omega1: Circle, omega2: Circle, x0: float, side: float) -> list[Circle]:
    """The three corridor circles tangent to both big circles on one side,
    marching outward from the center line to the |x| = x0 wall."""
    mid_y = (omega1.y + omega1.r + (omega2.y - omega2.r)) / 2
    eps_gap = (omega2.y - omega2.r) - (omega1.y + omega1.r)

    def circle_at(t: float) -> Circle:
        rho = math.hypot(t - omega1.x, mid_y - omega1.y) - omega1.r
        return Circle(t, mid_y, rho)

    def tangent_to_line(target_x: float) -> Circle:
        lo, hi = (omega1.x, target_x) if side > 0 else (target_x, omega1.x)
        for _ in range(200):
            mid = (lo + hi) / 2
            c = circle_at(mid)
            reach = c.x + side * c.r
            if (reach < target_x) == (side > 0):
                lo, hi = (mid, hi) if side > 0 else (lo, mid)
            else:
                lo, hi = (lo, mid) if side > 0 else (mid, lo)
        return circle_at((lo + hi) / 2)

    wall = omega1.x + side * x0
    omega0 = tangent_to_line(wall)
    family = [omega0]
    for _ in range(2):
        prev = family[-1]
        cands = [
            c for c in apollonius_external(omega1, omega2, prev)
            if side * (c.x - prev.x) < 0
        ]
        if not cands:
            break
        family.append(max(cands, key=lambda c: side * c.x))
    return family


def is_winning_position(p: Packing, witness: WinningPositionWitness,
                        tol: float = 1e-7) -> bool:
    """Conservative certificate for the two-threat position.

    Checks: the witness circles are in the packing, the middle circle
    touches both big ones, both Soddy threats drop in legally, the four
    pockets they would close are empty, and the recorded corridor
    constants satisfy both strict inequalities (which is what rules out a
    Spoiler circle overlapping both threats)."""

    def member(c: Circle) -> bool:
        return any(
            abs(pc.circle.x - c.x) <= 1e-9 + tol * max(1.0, c.r)
            and abs(pc.circle.y - c.y) <= 1e-9 + tol * max(1.0, c.r)
            and abs(pc.circle.r - c.r) <= 1e-9 + tol * max(1.0, c.r)
            for pc in p.placed
        )

    w = witness
    if not (member(w.omega1) and member(w.omega2) and member(w.omega)):
        return False
    if abs(gap(w.omega, w.omega1)) > tol or abs(gap(w.omega, w.omega2)) > tol:
        return False
    threats = apollonius_external(w.omega1, w.omega2, w.omega)
    if len(threats) < 2:
        return False
    for t in threats:
        others = [
            pc.circle for pc in p.placed
            if (pc.circle.x, pc.circle.y, pc.circle.r)
            not in {(w.omega1.x, w.omega1.y, w.omega1.r),
                    (w.omega2.x, w.omega2.y, w.omega2.r),
                    (w.omega.x, w.omega.y, w.omega.r)}
        ]
        for o in others:
            if gap(t, o) < -tol * max(t.r, o.r):
                return False
        for big in (w.omega1, w.omega2):
            walls = (t, big, w.omega)
            for o in others:
                if interstice_contains(o.center(), walls):
                    return False
    return corridor_criterion(w.delta, w.x0, w.eps)


class BuilderApollonian(PackingStrategy):
    name = "builder-apollonian"
    plays = "builder"

    def __init__(self, seed: int = 0, target_n: int = 8, **opts):
        super().__init__(seed, **opts)
        self.target_n = target_n
        self.phase = "open"
        self.omega1: Circle | None = None
        self.omega2: Circle | None = None
        self.omega: Circle | None = None
        self.witness: WinningPositionWitness | None = None
        self.families: tuple[list[Circle], list[Circle]] | None = None
        self.threats: list[Circle] = []
        self.network: list[Circle] = []
        self.faces: list[tuple[Circle, Circle, Circle]] = []
        self.constants: tuple[float, float, float] | None = None

    def report(self) -> dict:
        out = super().report()
        delta, x0, eps = self.constants or (0.0, 0.0, 0.0)
        out["constants"] = {"delta": delta, "x0": x0, "eps": eps}
        out["network"] = [c.to_json() for c in self.network]
        out["network_size"] = len(self.network)
        return out

    # helpers -------------------------------------------------------------

    def _in_packing(self, p: Packing, c: Circle) -> bool:
        return any(
            abs(pc.circle.x - c.x) < 1e-9 and abs(pc.circle.y - c.y) < 1e-9
            and abs(pc.circle.r - c.r) < 1e-9
            for pc in p.placed
        )

    def _face_empty(self, p: Packing, walls) -> bool:
        for pc in p.placed:
            if any(pc.circle is w or (pc.circle.x, pc.circle.y, pc.circle.r)
                   == (w.x, w.y, w.r) for w in walls):
                continue
            if interstice_contains(pc.circle.center(), walls):
                return False
        return True

    # phases ----------------------------------------------------------------

    def move(self, packing, history):
        mv = self._move_inner(packing, history)
        return mv

    def _move_inner(self, packing, history):
        if self.phase == "open":
            if len(packing) == 0:
                self.omega1 = Circle(0.0, 0.0, 1.0)
                self.phase = "omega2"
                return self.omega1
            self.omega1 = packing.placed[0].circle
            self.phase = "omega2"
        if self.phase == "omega2":
            mv = self._place_omega2(packing)
            if mv is not None:
                self.phase = "omega"
                return mv
            return detached_spot(packing)
        if self.phase == "omega":
            mv = self._place_omega(packing)
            if mv is not None:
                self.phase = "threat"
                return mv
            self.note("no corridor side available; restarting opening")
            self.phase = "omega2"
            return detached_spot(packing)
        if self.phase == "threat":
            for t in self.threats:
                if packing.fits(t):
                    self.played_threat = t
                    self.phase = "k4"
                    return t
            self.note("both threats blocked")
            self.phase = "omega2"
            return detached_spot(packing)
        if self.phase == "k4":
            # the two K3 pockets; Spoiler can have blocked at most one
            t = self.played_threat
            for big in (self.omega1, self.omega2):
                walls = (t, self.omega, big)
                if not self._face_empty(packing, walls):
                    continue
                try:
                    inner = soddy_circles(*walls, tol=packing.tol).inner
                except Exception:
                    continue
                if packing.fits(inner):
                    self.network = [t, self.omega, big, inner]
                    a, b, c = walls
                    self.faces = [(a, b, inner), (b, c, inner), (a, c, inner)]
                    self.phase = "grow"
                    return inner
            self.note("both K4 pockets blocked")
            return detached_spot(packing)
        if self.phase == "grow":
            return self._grow(packing)
        return detached_spot(packing)

    def _place_omega2(self, packing) -> Circle | None:
        r0 = self.omega1.r
        self.constants = corridor_constants(r0)
        delta, x0, eps = self.constants
        for dx, dy in ((0, 1), (0, -1), (1, 0), (-1, 0)):
            cx = self.omega1.x + dx * (2 * r0 + eps)
            cy = self.omega1.y + dy * (2 * r0 + eps)
            cand = Circle(cx, cy, r0)
            if not packing.fits(cand):
                continue
            fams = self._families_for(cand, x0, dx, dy)
            if fams is None:
                continue
            ok_side = any(
                all(packing.fits(c) for c in fam) and len(fam) == 3
                for fam in fams
            )
            if ok_side:
                self.omega2 = cand
                self.families = fams
                return cand
        # restart somewhere clean
        far = detached_spot(packing)
        self.omega1 = far
        return None

    def _families_for(self, cand: Circle, x0: float, dx: int, dy: int):
        o1, o2 = self.omega1, cand
        if dy == 0:
            # rotate the frame: corridor runs vertically, treat x as y
            swap = True
            a = Circle(o1.y, o1.x, o1.r)
            b = Circle(o2.y, o2.x, o2.r)
        else:
            swap = False
            a, b = o1, o2
        lo, hi = (a, b) if a.y < b.y else (b, a)
        try:
            fam_left = gap_family(lo, hi, x0, -1.0)
            fam_right = gap_family(lo, hi, x0, +1.0)
        except Exception:
            return None
        if swap:
            fam_left = [Circle(c.y, c.x, c.r) for c in fam_left]
            fam_right = [Circle(c.y, c.x, c.r) for c in fam_right]
        if len(fam_left) < 3 or len(fam_right) < 3:
            return None
        return (fam_left, fam_right)

    def _place_omega(self, packing) -> Circle | None:
        delta, x0, eps = self.constants
        for fam in self.families:
            if all(packing.fits(c) for c in fam):
                center = fam[1]
                self.omega = center
                self.witness = WinningPositionWitness(
                    self.omega1, self.omega2, center, delta, x0, eps
                )
                self.threats = apollonius_external(self.omega1, self.omega2, center)
                if len(self.threats) < 2:
                    continue
                self.threats.sort(key=lambda c: (c.y, c.x))
                return center
        return None

    def _grow(self, packing) -> Circle:
        if len(self.network) >= self.target_n:
            return detached_spot(packing)
        for i, walls in enumerate(self.faces):
            if not self._face_empty(packing, walls):
                continue
            try:
                inner = soddy_circles(*walls, tol=packing.tol).inner
            except Exception:
                continue
            if packing.fits(inner):
                a, b, c = walls
                self.faces.pop(i)
                self.faces += [(a, b, inner), (b, c, inner), (a, c, inner)]
                self.network.append(inner)
                return inner
        self.note("all faces blocked this turn")
        return detached_spot(packing)
