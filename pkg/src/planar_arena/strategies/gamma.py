"""Spoiler's degree-forcing blocker for the circle packing game.

Every Builder circle that is not already walled in gets a blocker placed
so that any future surround of either circle needs more than the target
graph's maximum degree; Builder circles played inside finished pockets
get a throwaway detached reply.
"""

from __future__ import annotations

from ..graphs import InvalidParameter
from ..packing import Circle, Packing
from ..packing.gaps import gamma_blocker, surrounds
from .pack_common import PackingStrategy, detached_spot

DEFAULT_DEGREE_DEMAND = 5  # Delta + 1 for targets up to maximum degree 4


class SpoilerGamma(PackingStrategy):
    name = "spoiler-gamma"
    plays = "spoiler"

    def __init__(self, seed: int = 0, target_max_degree: int | None = None, **opts):
        super().__init__(seed, **opts)
        self.demand = (
            target_max_degree + 1 if target_max_degree is not None
            else DEFAULT_DEGREE_DEMAND
        )

    def move(self, packing, history):
        last_builder = None
        for i in range(len(packing) - 1, -1, -1):
            if packing.placed[i].owner == "builder":
                last_builder = i
                break
        if last_builder is None:
            return detached_spot(packing)
        if surrounds(packing, last_builder) is not None:
            return detached_spot(packing)
        try:
            return gamma_blocker(packing, last_builder, self.demand)
        except InvalidParameter as exc:
            self.note(f"blocker failed: {exc}")
            return detached_spot(packing)
