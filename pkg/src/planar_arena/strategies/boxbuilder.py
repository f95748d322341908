"""Builder's (1+eps):1 strategy: manufacture m curvilinear-triangle
pockets, then play the box game on them with a scaled circle-packing
layout of the target graph as the cell set of each box.

Phase 1 zig-zags a strip of unit circles (each new circle tangent to the
previous two, so every move past the second opens one fresh pocket).
Phase 2 fills the deepest live pocket cell by cell; a Spoiler circle
whose center lands in a pocket kills that box (a legal circle cannot
reach a pocket's interior without its center, since the entries are
zero-width cusps)."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from ..graphs import Graph
from ..packing import (
    Circle,
    Packing,
    interstice_contains,
    scale_translate,
    soddy_circles,
    tangent_circle_to_pair,
)
from ..packing.layout import layout_packing
from .boxgame import required_boxes
from .pack_common import PackingStrategy, detached_spot

SQ3 = math.sqrt(3.0)


@dataclass
class Box:
    walls: tuple[Circle, Circle, Circle]
    incircle: Circle
    dead: bool = False
    cells: list[Circle] = field(default_factory=list)  # remaining to place
    placed: int = 0


class BuilderBox(PackingStrategy):
    name = "builder-box"
    plays = "builder"

    def __init__(self, seed: int = 0, target: Graph | None = None,
                 epsilon: float = 1.0, **opts):
        super().__init__(seed, **opts)
        if target is None:
            from .. import fixtures

            target = fixtures.complete_graph(4)
        self.target = target
        self.epsilon = epsilon
        self.q = int(1 / epsilon)
        self.cells_per_box = target.n
        self.m = required_boxes(target.n, epsilon)
        self.boxes: list[Box] = []
        self.strip: list[Circle] = []
        self.seen_history = 0
        self._cell_grid: dict[tuple[int, int], list[int]] = {}
        self._layout = None
        self.won_box: int | None = None
        self.moves_made = 0

    def report(self) -> dict:
        out = super().report()
        out["boxes"] = self.m
        out["builder_moves"] = self.moves_made
        out["won_box"] = self.won_box
        if self.won_box is not None:
            box = self.boxes[self.won_box]
            out["witness_cells"] = [c.to_json() for c in box.all_cells]
        return out

    # -- breaker attribution ----------------------------------------------------

    def _register_box(self, walls):
        inner = soddy_circles(*walls, tol=1e-9).inner
        box = Box(walls, inner)
        idx = len(self.boxes)
        self.boxes.append(box)
        key = (math.floor(inner.x / 4.0), math.floor(inner.y / 4.0))
        self._cell_grid.setdefault(key, []).append(idx)

    def _boxes_near(self, c: Circle):
        kx, ky = math.floor(c.x / 4.0), math.floor(c.y / 4.0)
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                for idx in self._cell_grid.get((kx + dx, ky + dy), ()):
                    yield idx

    def _absorb_history(self, packing: Packing, history: list):
        while self.seen_history < len(packing.placed):
            pc = packing.placed[self.seen_history]
            self.seen_history += 1
            if pc.owner == "builder":
                continue
            for idx in self._boxes_near(pc.circle):
                box = self.boxes[idx]
                if not box.dead and interstice_contains(
                    pc.circle.center(), box.walls
                ):
                    box.dead = True

    # -- turn ----------------------------------------------------------------------

    def move(self, packing, history):
        self._absorb_history(packing, history)
        self.moves_made += 1
        if len(self.boxes) < self.m:
            return self._phase1(packing)
        return self._phase2(packing)

    def _phase1(self, packing) -> Circle:
        if len(self.strip) < 2:
            base = detached_spot(packing) if len(packing) else Circle(0.0, 0.0, 1.0)
            if not self.strip:
                cand = base if packing.fits(base) else detached_spot(packing)
                self.strip.append(cand)
                return cand
            cand = Circle(self.strip[0].x + 2.0, self.strip[0].y, 1.0)
            if not packing.fits(cand):
                self.strip = []
                far = detached_spot(packing)
                self.strip.append(far)
                return far
            self.strip.append(cand)
            return cand
        a, b = self.strip[-2], self.strip[-1]
        for cand in tangent_circle_to_pair(a, b, 1.0):
            if packing.fits(cand) and self._pocket_clean(packing, (a, b, cand)):
                self.strip.append(cand)
                self._register_box((a, b, cand))
                return cand
        # blocked on both sides: restart the strip in clean space
        far = detached_spot(packing)
        self.strip = [far]
        return far

    def _pocket_clean(self, packing, walls) -> bool:
        probe = soddy_circles(*walls, tol=1e-9).inner
        for j in packing.neighbors_of(probe):
            if interstice_contains(packing.placed[j].circle.center(), walls):
                return False
        return True

    def _phase2(self, packing) -> Circle:
        live = [i for i, b in enumerate(self.boxes) if not b.dead]
        live.sort(key=lambda i: (-self.boxes[i].placed, i))
        for idx in live:
            box = self.boxes[idx]
            if not box.cells and box.placed == 0:
                box.cells = self._cells_for(box)
                box.all_cells = []
            if not box.cells:
                continue
            cand = box.cells[0]
            if packing.fits(cand):
                box.cells.pop(0)
                box.placed += 1
                box.all_cells.append(cand)
                if box.placed == self.cells_per_box:
                    self.won_box = idx
                return cand
            box.dead = True
        self.note("no live box playable")
        return detached_spot(packing)

    def _cells_for(self, box: Box) -> list[Circle]:
        if self._layout is None:
            self._layout = layout_packing(self.target)
        res = self._layout
        ordered = [res.circle_of(v) for v in range(self.target.n)]
        cx = sum(c.x for c in ordered) / len(ordered)
        cy = sum(c.y for c in ordered) / len(ordered)
        reach = max(math.hypot(c.x - cx, c.y - cy) + c.r for c in res.packing.circles())
        scale = box.incircle.r * 0.92 / reach
        dx = box.incircle.x - cx * scale
        dy = box.incircle.y - cy * scale
        return [scale_translate(c, scale, dx, dy) for c in ordered]
