"""Baseline edge-game adversaries: seeded random play, a trap-seeking
greedy blocker, and a scripted Builder that chases an octahedron."""

from __future__ import annotations

from .. import fixtures
from ..plane import DrawMove, IllegalMove, PlaneState, legal_edge_slots, slot_move
from .common import EdgeStrategy, first_legal_move, owed_moves


class RandomEdge(EdgeStrategy):
    """Uniform random slot; resident partitions scattered uniformly."""

    name = "random"

    def moves(self, state, history):
        out = []
        cur = state
        for _ in range(owed_moves(state)):
            slots = legal_edge_slots(cur)
            if not slots:
                break
            slot = self.rng.choice(slots)
            mv = slot_move(cur, slot)
            if mv.partition is not None:
                residents = list(mv.partition["uv"]) + list(mv.partition["vu"])
                uv, vu = [], []
                for c in residents:
                    (uv if self.rng.random() < 0.5 else vu).append(c)
                u, v, region, cu, cv = slot
                if self.rng.random() < 0.5:
                    u, v, cu, cv = v, u, cv, cu
                mv = DrawMove(u, v, region, cu, cv,
                              {"uv": tuple(uv), "vu": tuple(vu)})
            cur = cur.apply_move(mv, cur.player_to_move())
            out.append(mv)
        return out


class GreedyBlocker(EdgeStrategy):
    """Maximizes the number of isolated vertices trapped inside bounded
    faces by its move; canonical tie-break.

    Scoring needs no simulation: only a chord on a component's outer walk
    seals off that region's isolated residents (wrapping them all onto
    the enclosed side); every other move leaves trap counts unchanged.
    """

    name = "greedy-blocker"

    def _best_move(self, state: PlaneState) -> DrawMove | None:
        slots = legal_edge_slots(state)
        if not slots:
            return None
        best: tuple[tuple[int, int], tuple] | None = None
        region_iso: dict = {}
        for rank, slot in enumerate(slots):
            u, v, region, cu, cv = slot
            comp_u = state.component_of(u)
            split = (
                comp_u == state.component_of(v)
                and not state.is_isolated(u)
                and not state.is_isolated(v)
            )
            score = 0
            if split:
                rk = repr(region)
                if rk not in region_iso:
                    region_iso[rk] = sum(
                        1 for c in state.residents_of(region) if state.is_isolated(c)
                    )
                outer_chord = (
                    region == "outer" or region[1] != comp_u
                )
                if outer_chord:
                    score = region_iso[rk]
            key = (-score, rank)
            if best is None or key < best[0]:
                best = (key, slot)
        u, v, region, cu, cv = best[1]
        comp_u = state.component_of(u)
        split = (
            comp_u == state.component_of(v)
            and not state.is_isolated(u)
            and not state.is_isolated(v)
        )
        if not split:
            return DrawMove(u, v, region, cu, cv, None)
        residents = tuple(c for c in state.residents_of(region) if c != comp_u)
        return DrawMove(u, v, region, cu, cv, {"uv": residents, "vu": ()})

    def moves(self, state, history):
        out = []
        cur = state
        for _ in range(owed_moves(state)):
            mv = self._best_move(cur)
            if mv is None:
                break
            try:
                cur = cur.apply_move(mv, cur.player_to_move())
            except IllegalMove:
                mv = first_legal_move(cur)
                cur = cur.apply_move(mv, cur.player_to_move())
            out.append(mv)
        return out


class TargetedOctahedron(EdgeStrategy):
    """Builder adversary that tries to draw an octahedron on vertices 0..5."""

    name = "targeted-octahedron"

    def __init__(self, seed=0, strict=False):
        super().__init__(seed, strict)
        self.target = fixtures.load("octahedron").edge_list()

    def moves(self, state, history):
        out = []
        cur = state
        for _ in range(owed_moves(state)):
            mv = self._target_move(cur) or self._filler(cur)
            if mv is None:
                break
            cur = cur.apply_move(mv, cur.player_to_move())
            out.append(mv)
        return out

    def _target_move(self, state: PlaneState) -> DrawMove | None:
        for a, b in self.target:
            if frozenset((a, b)) in state.edge_set:
                continue
            for slot in legal_edge_slots(state):
                if {slot[0], slot[1]} == {a, b}:
                    return slot_move(state, slot)
        return None

    def _filler(self, state: PlaneState) -> DrawMove | None:
        slots = legal_edge_slots(state)
        return slot_move(state, slots[0]) if slots else None
