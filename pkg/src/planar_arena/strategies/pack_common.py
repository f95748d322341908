"""Packing strategy protocol and baseline adversaries."""

from __future__ import annotations

import math
import random

from ..packing import Circle, Packing, gap, tangent_circle_to_pair, width
from ..packing.gaps import gap_points, tangency_angle


class PackingStrategy:
    name = "abstract"
    plays = "builder"

    def __init__(self, seed: int = 0, **opts):
        self.seed = seed
        self.rng = random.Random(seed)
        self.events: list[str] = []
        self.opts = opts

    def move(self, packing: Packing, history: list) -> Circle:
        raise NotImplementedError

    def report(self) -> dict:
        return {"events": list(self.events)}

    def note(self, msg: str):
        self.events.append(msg)


def detached_spot(packing: Packing, radius: float = 1.0) -> Circle:
    """A circle far to the right of everything, tangent to nothing."""
    if not len(packing):
        return Circle(0.0, 0.0, radius)
    x0, y0, x1, y1 = packing.bounding_box()
    diameter = max(x1 - x0, y1 - y0, 1.0)
    return Circle(x1 + 10 * diameter + radius, (y0 + y1) / 2, radius)


class RandomCircle(PackingStrategy):
    """Seeded random radius and position near the packing; rejection
    sampling with a deterministic far-away fallback."""

    name = "random-circle"

    def move(self, packing, history):
        if not len(packing):
            r = math.exp(self.rng.uniform(math.log(0.4), math.log(1.4)))
            return Circle(0.0, 0.0, r)
        x0, y0, x1, y1 = packing.bounding_box()
        pad = 2.0
        for _ in range(40):
            r = math.exp(self.rng.uniform(math.log(0.3), math.log(1.4)))
            c = Circle(
                self.rng.uniform(x0 - pad, x1 + pad),
                self.rng.uniform(y0 - pad, y1 + pad),
                r,
            )
            if packing.fits(c):
                return c
        return detached_spot(packing, 1.0)


class GreedyCircleBlocker(PackingStrategy):
    """Crowds the biggest circle: parks a same-size circle at its widest
    uncovered gap, at clearance below the chain-forcing width."""

    name = "greedy-circle-blocker"

    def move(self, packing, history):
        if not len(packing):
            return Circle(0.0, 0.0, 1.0)
        order = sorted(
            range(len(packing)),
            key=lambda i: (-packing.placed[i].circle.r, i),
        )
        for idx in order[:4]:
            target = packing.placed[idx].circle
            try:
                analysis = gap_points(packing, idx)
            except Exception:
                continue
            if not analysis.arcs:
                continue
            lo, hi = max(analysis.arcs, key=lambda a: a[1] - a[0])
            theta = (lo + hi) / 2
            rr = target.r
            eps = width(target.r, target.r, 4) / 2
            for _ in range(8):
                d = target.r + eps + rr
                cand = Circle(
                    target.x + d * math.cos(theta),
                    target.y + d * math.sin(theta),
                    rr,
                )
                if packing.fits(cand):
                    return cand
                rr *= 0.55
            continue
        return detached_spot(packing, 1.0)
