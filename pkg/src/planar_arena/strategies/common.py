"""Strategy protocol and shared move-search helpers for the edge game.

Strategies are deterministic functions of (state, history, private
ledger).  They owe a burst of moves per turn (the schedule's per-round
count); the runner applies the returned moves in order.  Rather than
deriving corner indices analytically, strategies enumerate candidate
routings and simulate them on a clone until an outcome predicate holds;
tie-breaks everywhere are canonical (lowest ids first).
"""

from __future__ import annotations

import random

from ..plane import (
    BUILDER,
    OUTER_REGION,
    SPOILER,
    DrawMove,
    IllegalMove,
    PlaneState,
    legal_edge_slots,
    slot_move,
)


class StrategyConfused(RuntimeError):
    """Strict-mode signal: the position left the strategy's case analysis."""


class EdgeStrategy:
    name = "abstract"
    plays = BUILDER  # or SPOILER; informational

    def __init__(self, seed: int = 0, strict: bool = False):
        self.seed = seed
        self.strict = strict
        self.rng = random.Random(seed)
        self.events: list[str] = []

    def moves(self, state: PlaneState, history: list[DrawMove]) -> list[DrawMove]:
        raise NotImplementedError

    def report(self) -> dict:
        return {"events": list(self.events)}

    # -- shared helpers -----------------------------------------------------

    def note(self, msg: str):
        self.events.append(msg)

    def confused(self, state: PlaneState, why: str) -> DrawMove:
        if self.strict:
            raise StrategyConfused(f"{self.name}: {why}")
        self.note(f"fallback: {why}")
        return first_legal_move(state)


def owed_moves(state: PlaneState) -> int:
    """Length of the current player's turn burst from this position."""
    total = state.total_moves()
    seq = state.schedule.turn_sequence(total)
    i = state.move_count
    if i >= total:
        return 0
    p = seq[i]
    k = 0
    while i + k < total and seq[i + k] == p:
        k += 1
    return k


def first_legal_move(state: PlaneState) -> DrawMove:
    slots = legal_edge_slots(state)
    if not slots:
        raise IllegalMove("game-over", "no legal slots")
    return slot_move(state, slots[0])


def vertex_attachments(state: PlaneState, x: int) -> dict:
    """region -> corner indices where x can accept a new edge."""
    out: dict = {}
    comp = state.component_of(x)
    if state.is_isolated(x):
        out[state.residency[x]] = [0]
        return out
    faces = state.faces_of(comp)
    outer_idx = state.outer_face_index(comp)
    for idx, walk in enumerate(faces):
        corners = [i for i, d in enumerate(walk) if state.dart_origin(d) == x]
        if not corners:
            continue
        region = state.residency[comp] if idx == outer_idx else ("face", comp, idx)
        out.setdefault(region, []).extend(corners)
    return out


def pair_slots(state: PlaneState, a: int, b: int) -> list[tuple]:
    """Slots joining a and b, computed locally (no global enumeration)."""
    if a == b or frozenset((a, b)) in state.edge_set:
        return []
    att_a = vertex_attachments(state, a)
    att_b = vertex_attachments(state, b)
    u, v = (a, b) if a <= b else (b, a)
    att_u, att_v = (att_a, att_b) if a <= b else (att_b, att_a)
    slots = []
    for region, corners_u in att_u.items():
        if region not in att_v:
            continue
        for cu in corners_u:
            for cv in att_v[region]:
                slots.append((u, v, region, cu, cv))
    slots.sort(key=lambda s: (repr(s[2]), s[3], s[4]))
    return slots


def candidate_moves(state: PlaneState, a: int, b: int, enclose=()):
    """Legal DrawMoves joining a and b.

    For splitting routings, residents whose component id is in `enclose`
    go to the enclosed ("uv") side and everything else stays outside; both
    edge orientations are emitted since they swap which arc is enclosed.
    """
    enclose = set(enclose)
    for u, v, region, cu, cv in pair_slots(state, a, b):
        comp_u = state.component_of(u)
        comp_v = state.component_of(v)
        split = comp_u == comp_v and not state.is_isolated(u) and not state.is_isolated(v)
        if not split:
            yield DrawMove(u, v, region, cu, cv, None)
            continue
        residents = [c for c in state.residents_of(region) if c != comp_u]
        inside = tuple(c for c in residents if c in enclose)
        outside = tuple(c for c in residents if c not in enclose)
        part = {"uv": inside, "vu": outside}
        yield DrawMove(u, v, region, cu, cv, part)
        yield DrawMove(v, u, region, cv, cu, part)


def try_join(state: PlaneState, player: str, a: int, b: int,
             predicate=None, enclose=()):
    """First candidate joining a,b whose successor satisfies the predicate."""
    for mv in candidate_moves(state, a, b, enclose):
        try:
            nxt = state.apply_move(mv, player)
        except IllegalMove:
            continue
        if predicate is None or predicate(nxt):
            return mv, nxt
    return None


def new_face_info(after: PlaneState):
    """The face gaining the just-drawn edge's forward dart: its component,
    boundary vertices (as a list along the walk) and resident components."""
    d_uv = 2 * (len(after.edges) - 1)
    comp = after.component_of(after.dart_origin(d_uv))
    idx = after.face_index_of_dart(comp, d_uv)
    walk = after.faces_of(comp)[idx]
    verts = after.walk_vertices(walk)
    region = ("face", comp, idx)
    residents = [c for c, r in after.residency.items() if r == region]
    is_outer = idx == after.outer_face_index(comp)
    return comp, verts, residents, is_outer


def encloses_exactly(verts: set[int] | None, resident_vertices: set[int] | None):
    """Predicate factory for split moves: the newly bounded face has the
    given boundary vertex set and houses exactly the given vertices."""

    def pred(after: PlaneState) -> bool:
        comp, face_verts, residents, is_outer = new_face_info(after)
        if is_outer:
            return False
        if verts is not None and set(face_verts) != set(verts):
            return False
        if resident_vertices is not None:
            housed: set[int] = set()
            for c in residents:
                housed |= after.component_vertices(c)
            if housed != set(resident_vertices):
                return False
        return True

    return pred


def isolated_vertices(state: PlaneState) -> list[int]:
    return [v for v in range(state.n) if state.is_isolated(v)]


def isolated_in_region(state: PlaneState, region) -> list[int]:
    return [c for c in state.residents_of(region) if state.is_isolated(c)]


def components_by_shape(state: PlaneState):
    """Classify components: isolated ids, single-edge pairs, 2-edge paths
    (cherries), components with a 3-cycle outer face, everything else."""
    comps = state.components()
    isolated, edges2, cherries, triangles, other = [], [], [], [], []
    for cid, verts in sorted(comps.items()):
        k = len(verts)
        ne = sum(1 for a, b in state.edges if a in verts)
        if k == 1:
            isolated.append(cid)
        elif k == 2 and ne == 1:
            edges2.append(cid)
        elif k == 3 and ne == 2:
            cherries.append(cid)
        elif state.outer_triple(cid) is not None:
            triangles.append(cid)
        else:
            other.append(cid)
    return isolated, edges2, cherries, triangles, other


def component_edge_count(state: PlaneState, cid: int) -> int:
    verts = state.component_vertices(cid)
    return sum(1 for a, b in state.edges if a in verts and b in verts)


def internal_slot(state: PlaneState):
    """A slot whose endpoints already share a component (always safe filler)."""
    for s in legal_edge_slots(state):
        if state.component_of(s[0]) == state.component_of(s[1]):
            return s
    return None


def trapped_isolated_count(state: PlaneState) -> int:
    return sum(
        1
        for v in range(state.n)
        if state.is_isolated(v) and state.residency[v] != OUTER_REGION
    )
