"""Builder strategy forcing linear Builder-degree at a nominated vertex
while keeping the final diameter constant.

Phase 1: wall every isolated vertex into a face incident to the
nominated vertex v and spend spare moves on default moves {v, u}; fence
off Spoiler's splits so strays never leave v's sight.  Phase 2 (no
isolated vertices left): hook every remaining component straight onto v
or one of its neighbors, so everything ends within a couple of hops.
"""

from __future__ import annotations

from ..plane import BUILDER, OUTER_REGION, DrawMove, PlaneState
from .common import (
    EdgeStrategy,
    first_legal_move,
    owed_moves,
    try_join,
    vertex_attachments,
)


class BuilderDegree(EdgeStrategy):
    name = "builder-degree"
    plays = BUILDER

    def __init__(self, seed: int = 0, strict: bool = False, nominated: int = 0):
        super().__init__(seed, strict)
        self.nominated = nominated

    def report(self) -> dict:
        out = super().report()
        out["nominated"] = self.nominated
        return out

    # -- bookkeeping -----------------------------------------------------------

    def _v_faces(self, state: PlaneState) -> list[tuple]:
        """Regions whose boundary carries the nominated vertex."""
        v = self.nominated
        out = []
        comp = state.component_of(v)
        if state.is_isolated(v):
            return [state.residency[v]]
        for idx, walk in enumerate(state.faces_of(comp)):
            if any(state.dart_origin(d) == v for d in walk):
                if idx == state.outer_face_index(comp):
                    out.append(state.residency[comp])
                else:
                    out.append(("face", comp, idx))
        return out

    def _sheltered(self, state: PlaneState) -> bool:
        """Every isolated vertex sits in a region v is incident to."""
        shelters = set(map(repr, self._v_faces(state)))
        return all(
            repr(state.residency[x]) in shelters
            for x in range(state.n)
            if state.is_isolated(x) and x != self.nominated
        )

    def _isolated_near_v(self, state: PlaneState) -> list[int]:
        shelters = set(map(repr, self._v_faces(state)))
        return [
            x
            for x in range(state.n)
            if x != self.nominated
            and state.is_isolated(x)
            and repr(state.residency[x]) in shelters
        ]

    # -- turn --------------------------------------------------------------------

    def moves(self, state, history):
        picks: list[DrawMove] = []
        cur = state
        for _ in range(owed_moves(state)):
            mv = self._one_move(cur, history + picks)
            if mv is None:
                break
            cur = cur.apply_move(mv, cur.player_to_move())
            picks.append(mv)
        return picks

    def _one_move(self, cur: PlaneState, history) -> DrawMove | None:
        if cur.is_complete():
            return None
        v = self.nominated
        isolated = [x for x in range(cur.n) if cur.is_isolated(x) and x != v]

        mv = self._seal_grown_blob(cur, history)
        if mv is not None:
            return mv
        if isolated:
            if not self._sheltered(cur):
                mv = self._refence(cur)
                if mv is not None:
                    return mv
            mv = self._pull_in(cur, far_from=4)
            if mv is not None:
                return mv
            mv = self._default_move(cur)
            if mv is not None:
                return mv
            return self.confused(cur, "no default move in phase 1")
        mv = self._pull_in(cur, far_from=4)
        if mv is not None:
            return mv
        return self._phase2(cur)

    def _seal_grown_blob(self, cur: PlaneState, history) -> DrawMove | None:
        """When Spoiler touched a stray blob (grew a pair or merged blobs),
        seal exactly that blob into its own pocket: growth answered move
        for move keeps every blob tiny and shallow."""
        if not history:
            return None
        last = history[-1]
        v = self.nominated
        home = cur.component_of(v)
        c = cur.component_of(last.u)
        if c == home or c != cur.component_of(last.v):
            return None
        if len(cur.component_vertices(c)) < 3:
            return None
        region = cur.residency[c]
        if region != OUTER_REGION and cur.residents_of(region) == [c]:
            return None  # already alone in a pocket
        return self._wall_component(cur, c)

    def _wall_component(self, cur: PlaneState, c: int) -> DrawMove | None:
        region = cur.residency[c]
        boundary: set[int] = set()
        for _, comp, walk in cur.boundary_circuits(region):
            if walk and comp != c:
                boundary.update(cur.walk_vertices(walk))
        cand = sorted(boundary)
        cvs = set(cur.component_vertices(c))

        def pred(after: PlaneState) -> bool:
            cc = after.component_of(min(cvs))
            rr = after.residency[cc]
            if rr == OUTER_REGION:
                return False
            return after.residents_of(rr) == [cc] and self._sheltered(after)

        tried = 0
        for i in range(len(cand)):
            for j in range(i + 1, len(cand)):
                p, q = cand[i], cand[j]
                if frozenset((p, q)) in cur.edge_set:
                    continue
                tried += 1
                if tried > 80:
                    return None
                got = try_join(cur, BUILDER, p, q, pred, enclose=(c,))
                if got:
                    return got[0]
        return None

    def _adjacency(self, cur: PlaneState) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(cur.n)]
        for a, b in cur.edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def _distances(self, cur: PlaneState, adj) -> list[int]:
        dist = [-1] * cur.n
        dist[self.nominated] = 0
        frontier = [self.nominated]
        while frontier:
            nxt = []
            for a in frontier:
                for b in adj[a]:
                    if dist[b] < 0:
                        dist[b] = dist[a] + 1
                        nxt.append(b)
            frontier = nxt
        return dist

    def _region_vertices(self, cur: PlaneState) -> dict:
        """repr(region) -> vertices on any of its boundary circuits."""
        out: dict = {}
        for region in cur.regions():
            verts: set[int] = set()
            for _, comp, walk in cur.boundary_circuits(region):
                if walk:
                    verts.update(cur.walk_vertices(walk))
                else:
                    verts.add(comp)
            out[repr(region)] = verts
        return out

    def _pull_in(self, cur: PlaneState, far_from: int) -> DrawMove | None:
        """Hook a connected vertex drifting away from v back to v or to a
        v-neighbor, so Spoiler's chains never stretch the diameter."""
        adj = self._adjacency(cur)
        dist = self._distances(cur, adj)
        far = sorted(
            (x for x in range(cur.n)
             if dist[x] >= far_from and not cur.is_isolated(x)),
            key=lambda x: (-dist[x], x),
        )
        if not far:
            return None
        v = self.nominated
        region_verts = self._region_vertices(cur)
        for x in far[:8]:
            # hook x to the closest-to-v vertex on any region it touches
            best: tuple[int, int] | None = None
            for region in vertex_attachments(cur, x):
                for p in region_verts.get(repr(region), set()):
                    if p == x or dist[p] < 0 or frozenset((p, x)) in cur.edge_set:
                        continue
                    if dist[p] + 1 < dist[x] and (best is None or dist[p] < best[0]):
                        best = (dist[p], p)
            if best is not None:
                got = try_join(cur, BUILDER, best[1], x)
                if got:
                    return got[0]
        return None

    def _default_move(self, cur: PlaneState) -> DrawMove | None:
        v = self.nominated
        for u in self._isolated_near_v(cur):
            got = try_join(cur, BUILDER, v, u)
            if got:
                return got[0]
        return None

    def _refence(self, cur: PlaneState) -> DrawMove | None:
        """Some isolated vertices fell out of v's sight: draw one edge whose
        successor state shelters everything again (a fence pinching the
        strays into a pocket next to v), maximizing recovered strays."""
        v = self.nominated
        strays = [
            x for x in range(cur.n)
            if cur.is_isolated(x) and x != v
        ]
        stray_regions = {repr(cur.residency[x]) for x in strays} - set(
            map(repr, self._v_faces(cur))
        )
        if not stray_regions:
            return None
        # candidate endpoints: vertices on the boundaries of stray regions
        cand_verts: set[int] = set()
        for region in cur.regions():
            if repr(region) not in stray_regions:
                continue
            for _, comp, walk in cur.boundary_circuits(region):
                if walk:
                    cand_verts.update(cur.walk_vertices(walk))
        best = None
        for p in sorted(cand_verts):
            for q in sorted(cand_verts):
                if p >= q or frozenset((p, q)) in cur.edge_set:
                    continue
                got = try_join(cur, BUILDER, p, q, self._sheltered)
                if got:
                    return got[0]
        # partial recovery: maximize how many strays get sheltered
        for p in sorted(cand_verts):
            for q in sorted(cand_verts):
                if p >= q or frozenset((p, q)) in cur.edge_set:
                    continue
                got = try_join(cur, BUILDER, p, q)
                if got:
                    sheltered = len(self._isolated_near_v(got[1]))
                    if best is None or sheltered > best[0]:
                        best = (sheltered, got[0])
        return best[1] if best else None

    def _phase2(self, cur: PlaneState) -> DrawMove | None:
        v = self.nominated
        my_comp = cur.component_of(v)
        adj = self._adjacency(cur)
        region_verts = self._region_vertices(cur)
        nbrs = adj[v]
        # hook foreign components onto v, else onto a v-neighbor
        for c in sorted(cur.components()):
            if c == my_comp:
                continue
            for x in sorted(cur.component_vertices(c)):
                for region in vertex_attachments(cur, x):
                    verts = region_verts.get(repr(region), set())
                    if v in verts:
                        got = try_join(cur, BUILDER, v, x)
                        if got:
                            return got[0]
                    for p in sorted(nbrs & verts):
                        if frozenset((p, x)) in cur.edge_set:
                            continue
                        got = try_join(cur, BUILDER, p, x)
                        if got:
                            return got[0]
        # connected: fan v wider through its own incident regions
        for region in vertex_attachments(cur, v):
            for x in sorted(region_verts.get(repr(region), set())):
                if x != v and frozenset((v, x)) not in cur.edge_set:
                    got = try_join(cur, BUILDER, v, x)
                    if got:
                        return got[0]
        from ..plane import legal_edge_slots, slot_move

        slots = legal_edge_slots(cur)
        return slot_move(cur, slots[0]) if slots else None
