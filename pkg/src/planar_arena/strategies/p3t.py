"""Spoiler strategy keeping every component a partial 3-tree.

Mirrors isolated-pair moves, surrounds the third outer vertex whenever
Builder extends a component by a vertex or an edge, pinches bridged
components back to a triangular outer face, and forces a K4 on the
six-vertex interface when Builder plays across a merge (the planar
6-vertex triangulation containing a K4 is the stackable one, so the
interface стays inside the class).  In-component moves are mirrored
through a recognizer-screened chord.
"""

from __future__ import annotations

from .. import fixtures
from ..graphs import BudgetError, contains_subgraph, is_partial_3tree
from ..plane import OUTER_REGION, SPOILER, DrawMove, PlaneState
from .common import (
    EdgeStrategy,
    encloses_exactly,
    first_legal_move,
    new_face_info,
    owed_moves,
    try_join,
)
from .ham21 import reduced_outer_cycle, replay_without_last


class SpoilerPartial3Tree(EdgeStrategy):
    name = "spoiler-p3t"
    plays = SPOILER

    def __init__(self, seed: int = 0, strict: bool = False):
        super().__init__(seed, strict)
        self.interfaces: list[tuple[int, ...]] = []

    def moves(self, state, history):
        budget = owed_moves(state)
        picks: list[DrawMove] = []
        cur = state
        while len(picks) < budget and not cur.is_complete():
            mv = self._select(cur, history + picks)
            cur = cur.apply_move(mv, cur.player_to_move())
            picks.append(mv)
        return picks

    def _select(self, cur: PlaneState, history) -> DrawMove:
        """Best candidate under the two-ply screen: the played move must
        keep the touched component in the class AND leave Builder no
        single edge that would take it out."""
        candidates: list[DrawMove] = []
        primary = self._one_move(cur, history)
        if primary is not None:
            candidates.append(primary)
        candidates += self._chord_candidates(cur, limit=30)
        scored: list[tuple[tuple[int, int], DrawMove]] = []
        for mv in candidates:
            try:
                nxt = cur.apply_move(mv, cur.player_to_move())
            except Exception:
                continue
            if not self._touched_ok(nxt):
                continue
            danger = len(self._danger_pairs(nxt, None))
            brittle = self._brittle_count(nxt) if danger == 0 else 999
            if danger == 0 and brittle == 0:
                return mv
            scored.append(((danger, brittle), mv))
        if scored:
            scored.sort(key=lambda t: t[0])
            if scored[0][0][0] > 0:
                self.note("no two-ply-safe move; playing one-ply-safe")
            return scored[0][1]
        self.note("no screened move available")
        return self._safe_fallback(cur)

    def _brittle_count(self, state: PlaneState) -> int:
        """Co-region pairs whose merged graph loses the cheap width-3
        elimination certificate: precursors of real danger, counted with
        no minor search at all."""
        from ..graphs import Graph, _width3_elimination

        count = 0
        seen: set = set()
        for region in state.regions():
            verts: set[int] = set()
            for _, comp, walk in state.boundary_circuits(region):
                if walk:
                    verts.update(state.walk_vertices(walk))
                else:
                    verts.add(comp)
            vs = sorted(verts)
            for i in range(len(vs)):
                for j in range(i + 1, len(vs)):
                    a, b = vs[i], vs[j]
                    if (a, b) in seen or frozenset((a, b)) in state.edge_set:
                        continue
                    seen.add((a, b))
                    ca, cb = state.component_of(a), state.component_of(b)
                    merged = set(state.component_vertices(ca))
                    if cb != ca:
                        merged |= state.component_vertices(cb)
                    if len(merged) < 5:
                        continue
                    vs_sorted = sorted(merged)
                    idx = {v: k for k, v in enumerate(vs_sorted)}
                    es = [
                        (idx[x], idx[y])
                        for x, y in state.edges
                        if x in idx and y in idx
                    ] + [(idx[a], idx[b])]
                    if not _width3_elimination(Graph.from_edges(len(vs_sorted), es)):
                        count += 1
        return count

    def _chord_candidates(self, cur: PlaneState, limit: int) -> list[DrawMove]:
        """Chords attacking the biggest regions first: shrinking face
        boundaries toward triangles is what keeps the drawing stackable
        and starves Builder of long-range pairs."""
        from ..plane import legal_edge_slots, slot_move

        out = []
        pair_mv = self._pair_isolated(cur)
        if pair_mv is not None:
            out.append(pair_mv)
        region_size: dict = {}
        for region in cur.regions():
            verts: set[int] = set()
            for _, comp, walk in cur.boundary_circuits(region):
                if walk:
                    verts.update(cur.walk_vertices(walk))
                else:
                    verts.add(comp)
            region_size[repr(region)] = len(verts)
        same, cross = [], []
        for s in legal_edge_slots(cur):
            (same if cur.component_of(s[0]) == cur.component_of(s[1]) else cross).append(s)
        same.sort(key=lambda s: -region_size.get(repr(s[2]), 0))
        for s in (same + cross)[:limit]:
            out.append(slot_move(cur, s))
        return out

    # -- classification -----------------------------------------------------

    def _one_move(self, cur: PlaneState, history) -> DrawMove | None:
        if not history:
            return self._pair_isolated(cur)
        prev = replay_without_last(cur, history, 1)
        last = history[-1]
        a, b = last.u, last.v
        iso_a, iso_b = prev.is_isolated(a), prev.is_isolated(b)
        pa, pb = prev.component_of(a), prev.component_of(b)

        if iso_a and iso_b:
            return self._pair_isolated(cur)
        if iso_a != iso_b:
            x = a if iso_a else b
            t = b if iso_a else a
            t_comp = pb if iso_a else pa
            if len(prev.component_vertices(t_comp)) == 2:
                # an isolated edge grew into a 2-path: close the triangle
                return self._close_on(cur, x, t, t_comp, prev)
            return self._surround_third(cur, x, t, t_comp, prev)
        if pa != pb:
            verts_a = prev.component_vertices(pa)
            verts_b = prev.component_vertices(pb)
            if len(verts_a) == 2 and len(verts_b) > 2:
                return self._absorb_edge(cur, prev, pa, a, pb, b)
            if len(verts_b) == 2 and len(verts_a) > 2:
                return self._absorb_edge(cur, prev, pb, b, pa, a)
            return self._pinch_bridge(cur, prev, a, pa, b, pb)
        return self._inside_component(cur, prev, a, b, pa)

    # -- responses ------------------------------------------------------------

    def _pair_isolated(self, cur: PlaneState) -> DrawMove | None:
        by_region: dict = {}
        for x in range(cur.n):
            if cur.is_isolated(x):
                by_region.setdefault(repr(cur.residency[x]), []).append(x)
        for _, xs in sorted(by_region.items()):
            if len(xs) >= 2:
                got = try_join(cur, SPOILER, xs[0], xs[1])
                if got:
                    return got[0]
        return None

    def _surround_third(self, cur, x, t, t_comp, prev) -> DrawMove | None:
        """Builder hung x on a component: join x to a second outer vertex,
        walling the third one into the pocket with nothing else."""
        cycle = reduced_outer_cycle(prev, t_comp)
        if len(cycle) != 3 or t not in cycle:
            return None
        others = [w for w in cycle if w != t]
        for v in sorted(others):
            w = next(z for z in others if z != v)
            got = try_join(
                cur, SPOILER, x, v,
                encloses_exactly({x, t, v, w}, set()),
            )
            if got:
                return got[0]
        return None

    def _close_on(self, cur, x, t, t_comp, prev) -> DrawMove | None:
        """Builder attached x to a lone edge {t, y}: close the triangle."""
        y = next(z for z in prev.component_vertices(t_comp) if z != t)
        got = try_join(cur, SPOILER, x, y, encloses_exactly({x, t, y}, set()))
        if got:
            return got[0]
        return None

    def _absorb_edge(self, cur, prev, pa, a, pb, b) -> DrawMove | None:
        """Builder joined a lone edge {a, y} to a bigger component at b:
        complete the empty triangle (b, a, y)."""
        y = next(z for z in prev.component_vertices(pa) if z != a)
        got = try_join(cur, SPOILER, y, b, encloses_exactly({a, b, y}, set()))
        if got:
            return got[0]
        got = try_join(cur, SPOILER, y, b, self._no_residents_pred())
        if got:
            return got[0]
        return None

    def _pinch_bridge(self, cur, prev, a, pa, b, pb) -> DrawMove | None:
        """Builder bridged two components: pinch so the merged outer face is
        a triangle, then start watching the 6-vertex interface."""
        ca = reduced_outer_cycle(prev, pa)
        cb = reduced_outer_cycle(prev, pb)
        pairs = []
        if len(ca) == 3 and len(cb) == 3:
            pairs += [(a, q) for q in sorted(cb) if q != b]
            pairs += [(p, b) for p in sorted(ca) if p != a]
            pairs += [(p, q) for p in sorted(ca) for q in sorted(cb)]
        else:
            va = sorted(prev.component_vertices(pa))
            vb = sorted(prev.component_vertices(pb))
            pairs += [(p, q) for p in va for q in vb]
        for p, q in pairs:
            if frozenset((p, q)) in cur.edge_set:
                continue
            got = try_join(cur, SPOILER, p, q, self._outer_triple_pred(p))
            if got:
                if len(ca) == 3 and len(cb) == 3:
                    self.interfaces.append(tuple(sorted(set(ca) | set(cb))))
                return got[0]
        return None

    def _outer_triple_pred(self, anchor: int):
        def pred(after: PlaneState) -> bool:
            comp, verts, residents, is_outer = new_face_info(after)
            if residents:
                return False
            return after.outer_triple(after.component_of(anchor)) is not None

        return pred

    def _no_residents_pred(self):
        def pred(after: PlaneState) -> bool:
            comp, verts, residents, is_outer = new_face_info(after)
            return is_outer or not residents

        return pred

    def _inside_component(self, cur, prev, a, b, comp) -> DrawMove | None:
        """Builder moved within a component: if it crossed a watched merge
        interface, force the K4 there; otherwise mirror with a screened
        chord in the same component."""
        k4 = fixtures.complete_graph(4)
        for six in self.interfaces:
            if a in six and b in six:
                sub = cur.union_graph().subgraph(six)
                if contains_subgraph(sub, k4):
                    break
                for i in range(6):
                    for j in range(i + 1, 6):
                        p, q = six[i], six[j]
                        if frozenset((p, q)) in cur.edge_set:
                            continue
                        got = try_join(cur, SPOILER, p, q)
                        if got and self._forms_k4(got[1], six, k4):
                            return got[0]
                break
        return self._screened_chord(cur, comp)

    def _forms_k4(self, after: PlaneState, six, k4) -> bool:
        return contains_subgraph(after.union_graph().subgraph(six), k4)

    def _screened_chord(self, cur: PlaneState, comp: int) -> DrawMove | None:
        from ..plane import legal_edge_slots, slot_move

        tried = 0
        for s in legal_edge_slots(cur):
            if cur.component_of(s[0]) != cur.component_of(s[1]):
                continue
            if comp is not None and cur.component_of(s[0]) != comp:
                continue
            mv = slot_move(cur, s)
            tried += 1
            if tried > 12:
                break
            nxt = cur.apply_move(mv, cur.player_to_move())
            if self._touched_ok(nxt):
                return mv
        return None

    def _touched_ok(self, state: PlaneState) -> bool:
        """Recognizer screen on the component the last edge landed in."""
        u, _ = state.edges[-1]
        g, _ = state.component_graph(state.component_of(u))
        return self._p3t(g)

    _P3T_CACHE: dict = {}

    def _p3t(self, g) -> bool:
        if g.n < 4:
            return True
        key = (g.n, g.edges)
        cache = SpoilerPartial3Tree._P3T_CACHE
        if key not in cache:
            try:
                cache[key] = is_partial_3tree(g)
            except BudgetError:
                cache[key] = False
        return cache[key]

    def _danger_pairs(self, state: PlaneState, focus_comp: int | None) -> list:
        """Vertex pairs Builder could join next move whose merged component
        would leave the class.  Pairs share a region (otherwise no legal
        routing exists); restricting to pairs touching focus_comp covers
        everything a move inside that component can influence."""
        from .common import vertex_attachments

        out = []
        seen_pairs: set = set()
        for region in state.regions():
            verts: set[int] = set()
            for _, comp, walk in state.boundary_circuits(region):
                if walk:
                    verts.update(state.walk_vertices(walk))
                else:
                    verts.add(comp)
            vs = sorted(verts)
            for i in range(len(vs)):
                for j in range(i + 1, len(vs)):
                    a, b = vs[i], vs[j]
                    if (a, b) in seen_pairs or frozenset((a, b)) in state.edge_set:
                        continue
                    seen_pairs.add((a, b))
                    ca, cb = state.component_of(a), state.component_of(b)
                    if focus_comp is not None and focus_comp not in (ca, cb):
                        continue
                    merged = set(state.component_vertices(ca))
                    if cb != ca:
                        merged |= state.component_vertices(cb)
                    if len(merged) < 4:
                        continue
                    vs_sorted = sorted(merged)
                    idx = {v: k for k, v in enumerate(vs_sorted)}
                    es = [
                        (idx[x], idx[y])
                        for x, y in state.edges
                        if x in idx and y in idx
                    ] + [(idx[a], idx[b])]
                    from ..graphs import Graph

                    if not self._p3t(Graph.from_edges(len(vs_sorted), es)):
                        out.append((a, b))
        return out

    def _safe_fallback(self, cur: PlaneState) -> DrawMove:
        from ..plane import legal_edge_slots, slot_move

        slots = legal_edge_slots(cur)
        for s in slots[:20]:
            mv = slot_move(cur, s)
            nxt = cur.apply_move(mv, cur.player_to_move())
            if self._touched_ok(nxt):
                return mv
        return first_legal_move(cur)
