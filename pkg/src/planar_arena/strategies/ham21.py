"""Builder strategy for the 2:1 Hamiltonian cycle game.

The plan: keep every component in a certified shape.  A component whose
outer face is a 3-cycle and which was grown only through the certified
join patterns stays "eventually strongly Hamiltonian": any further edge
drawn inside it, or any resident absorbed into it, only shrinks the set
of completions, so certification can never be lost except when distinct
components merge.  Builder therefore answers each Spoiler merge with the
matching two-move repair and spends free turns closing cherries, closing
quad-outer components, absorbing isolated vertices and fusing certified
components pairwise, so the final triangulation is one certified
component, hence Hamiltonian.
"""

from __future__ import annotations

from ..plane import BUILDER, OUTER_REGION, DrawMove, IllegalMove, PlaneState, new_game
from .common import (
    EdgeStrategy,
    candidate_moves,
    components_by_shape,
    encloses_exactly,
    first_legal_move,
    isolated_in_region,
    new_face_info,
    owed_moves,
    try_join,
)


def replay_without_last(state: PlaneState, history: list[DrawMove], k: int) -> PlaneState:
    st = new_game(state.n, state.schedule)
    for mv in history[: len(history) - k]:
        st = st.apply_move(mv, st.player_to_move())
    return st


def reduced_outer_cycle(state: PlaneState, comp: int) -> list[int]:
    """Outer boundary cycle with pendant-tree excursions removed."""
    if comp not in state.outer_dart:
        return []
    darts = list(state.outer_walk(comp))
    changed = True
    while changed and darts:
        changed = False
        m = len(darts)
        for i in range(m):
            j = (i + 1) % m
            if darts[j] == darts[i] ^ 1:
                for k in sorted((i, j), reverse=True):
                    darts.pop(k)
                changed = True
                break
    return [state.dart_origin(d) for d in darts]


class BuilderHam21(EdgeStrategy):
    name = "builder-ham21"
    plays = BUILDER

    def moves(self, state, history):
        picks: list[DrawMove] = []
        cur = state

        def play(mv: DrawMove):
            nonlocal cur
            cur = cur.apply_move(mv, cur.player_to_move())
            picks.append(mv)

        budget = owed_moves(state)
        if cur.move_count == 0 and budget >= 2:
            for mv in self._opening(cur):
                play(mv)
        elif history and budget >= 2:
            for mv in self._respond(cur, history) or ():
                play(mv)

        while len(picks) < budget and not cur.is_complete():
            step = self._initiative(cur, budget - len(picks))
            if not step:
                break
            for mv in step:
                if len(picks) >= budget:
                    break
                play(mv)
        while len(picks) < budget and not cur.is_complete():
            play(first_legal_move(cur))
        return picks

    # -- opening -------------------------------------------------------------

    def _opening(self, cur: PlaneState) -> list[DrawMove]:
        a, b, c = 0, 1, 2
        m1, s1 = try_join(cur, BUILDER, a, b)
        m2, _ = try_join(s1, BUILDER, a, c)
        return [m1, m2]

    # -- response cases --------------------------------------------------------

    def _respond(self, cur: PlaneState, history) -> list[DrawMove] | None:
        prev = replay_without_last(cur, history, 1)
        last = history[-1]
        a, b = last.u, last.v
        pa, pb = prev.component_of(a), prev.component_of(b)
        iso_a, iso_b = prev.is_isolated(a), prev.is_isolated(b)

        if pa == pb:
            return None  # internal chord: certification unaffected
        if iso_a and iso_b:
            return self._case_pair(cur, a, b)
        if iso_a or iso_b:
            x = a if iso_a else b
            t = b if iso_a else a
            t_comp = prev.component_of(t)
            if prev.residency[x] != prev.residency.get(t_comp):
                return None  # attached from inside a face: still certified
            shape = self._shape(prev, t_comp)
            if shape == "solid" and t in (prev.outer_triple(t_comp) or ()):
                return self._case_fan(cur, x, t, prev.outer_triple(t_comp))
            if shape == "cherry":
                return self._case_cherry_attach(cur, prev, x, t, t_comp)
            return None
        shape_a = self._shape(prev, pa)
        shape_b = self._shape(prev, pb)
        if {shape_a, shape_b} == {"solid"}:
            return self._case_bridge_solids(cur, prev, a, pa, b, pb)
        if {shape_a, shape_b} == {"solid", "cherry"}:
            if shape_a == "cherry":
                a, b, pa, pb = b, a, pb, pa
            return self._case_bridge_solid_cherry(cur, prev, a, pa, b, pb)
        if shape_a == shape_b == "cherry":
            return self._case_bridge_cherries(cur, prev, pa, pb)
        return None

    def _shape(self, state: PlaneState, comp: int) -> str:
        verts = state.component_vertices(comp)
        ne = sum(1 for x, y in state.edges if x in verts and y in verts)
        if len(verts) == 3 and ne == 2:
            return "cherry"
        if state.outer_triple(comp) is not None:
            return "solid"
        return "other"

    def _cherry_parts(self, state: PlaneState, comp: int):
        verts = sorted(state.component_vertices(comp))
        center = next(v for v in verts if sum(1 for d in state.rot[v]) == 2)
        ends = [v for v in verts if v != center]
        return center, ends

    def _case_pair(self, cur: PlaneState, a: int, b: int) -> list[DrawMove] | None:
        """Spoiler joined two isolated vertices: close an empty triangle, or
        with no third vertex left, double-bridge the pair into a certified
        component (pinchable back to a triangle next turn)."""
        region = cur.residency[cur.component_of(a)]
        isos = [x for x in isolated_in_region(cur, region) if x not in (a, b)]
        if isos:
            x = isos[0]
            got = try_join(cur, BUILDER, a, x)
            if got:
                m1, s1 = got
                got2 = try_join(s1, BUILDER, b, x, encloses_exactly({a, b, x}, set()))
                if got2:
                    return [m1, got2[0]]
        return self._lasso_pair(cur, a, b)

    def _lasso_pair(self, cur: PlaneState, a: int, b: int) -> list[DrawMove] | None:
        """Bridge both ends of the lone edge {a, b} to two adjacent outer
        vertices of a certified component."""
        region = cur.residency[cur.component_of(a)]
        solids = [
            c for c in cur.residents_of(region)
            if cur.outer_triple(c) is not None
        ]
        for target in solids:
            triple = cur.outer_triple(target)
            for i in range(3):
                p, q = triple[i], triple[(i + 1) % 3]
                got = try_join(cur, BUILDER, a, p)
                if not got:
                    continue
                m1, s1 = got
                got2 = try_join(s1, BUILDER, b, q, self._no_new_residents_pred())
                if got2:
                    return [m1, got2[0]]
        return None

    def _case_fan(self, cur: PlaneState, x: int, w: int, triple) -> list[DrawMove] | None:
        """Spoiler hung x on outer vertex w of a certified component: join x
        to the other two outer vertices, both new faces empty triangles."""
        u, v = [t for t in triple if t != w]
        got = try_join(cur, BUILDER, x, u, encloses_exactly({x, w, u}, set()))
        if not got:
            return None
        m1, s1 = got
        got2 = try_join(s1, BUILDER, x, v, encloses_exactly({x, w, v}, set()))
        if not got2:
            return None
        return [m1, got2[0]]

    def _case_cherry_attach(self, cur, prev, x, t, t_comp) -> list[DrawMove] | None:
        """Spoiler hung x on a 2-edge path: close the path into a triangle,
        then give x a second triangle vertex so the outer face is the
        3-cycle (t, x, partner) with an empty pocket behind it."""
        center, ends = self._cherry_parts(prev, t_comp)
        got = try_join(
            cur, BUILDER, ends[0], ends[1],
            encloses_exactly({ends[0], ends[1], center}, set()),
        )
        if not got:
            return None
        m1, s1 = got
        for partner in sorted({center, *ends} - {t}):
            got2 = try_join(
                s1, BUILDER, x, partner, self._absorbed_pred(t, x, partner)
            )
            if got2:
                return [m1, got2[0]]
        return None

    def _absorbed_pred(self, t: int, x: int, s: int):
        """After the absorb edge: outer face is the 3-cycle (t, x, s) and the
        pocket wrapped behind it took in no residents."""

        def pred(after: PlaneState) -> bool:
            comp, verts, residents, is_outer = new_face_info(after)
            if residents and not is_outer:
                return False
            outer = after.outer_triple(after.component_of(x))
            return outer is not None and set(outer) == {t, x, s}

        return pred

    def _case_bridge_solids(self, cur, prev, a, pa, b, pb) -> list[DrawMove] | None:
        """Spoiler bridged two certified components at {a, b}: fence the
        bridge into an empty quad and pinch the rest so the merged outer
        face is a 3-cycle again."""
        ta = [t for t in prev.outer_triple(pa) if t != a]
        tb = [t for t in prev.outer_triple(pb) if t != b]
        for w in ta:
            for w1 in tb:
                got = try_join(
                    cur, BUILDER, w, w1,
                    encloses_exactly({w, a, b, w1}, set()),
                )
                if not got:
                    continue
                m1, s1 = got
                v1 = next(t for t in tb if t != w1)
                got2 = try_join(s1, BUILDER, w, v1, self._outer_triangle_pred(w, w1, v1))
                if got2:
                    return [m1, got2[0]]
        return None

    def _outer_triangle_pred(self, *want):
        def pred(after: PlaneState) -> bool:
            comp, verts, residents, is_outer = new_face_info(after)
            if residents:
                return False
            outer = after.outer_triple(after.component_of(want[0]))
            return outer is not None and set(outer) == set(want)

        return pred

    def _case_bridge_solid_cherry(self, cur, prev, a, pa, b, pb) -> list[DrawMove] | None:
        """Solid bridged to a cherry: close the cherry, then pinch so the
        merged outer face is a triangle again with empty pockets.

        Bridge into the cherry's center: pinch the bridged solid vertex to
        a cherry end.  Bridge into an end: pinch another solid vertex to
        that end (wrapping everything else into one bounded pocket)."""
        center, ends = self._cherry_parts(prev, pb)
        got = try_join(
            cur, BUILDER, ends[0], ends[1],
            encloses_exactly({ends[0], ends[1], center}, set()),
        )
        if not got:
            return None
        m1, s1 = got
        triple = prev.outer_triple(pa)
        if b == center:
            pairs = [(a, e) for e in sorted(ends)]
        else:
            pairs = [(w, b) for w in sorted(triple) if w != a]
        pairs += [
            (s_v, c_v)
            for s_v in sorted(triple)
            for c_v in sorted((center, *ends))
        ]
        for s_v, c_v in pairs:
            if frozenset((s_v, c_v)) in s1.edge_set:
                continue
            got2 = try_join(
                s1, BUILDER, s_v, c_v, self._outer_triple_exists_pred(s_v)
            )
            if got2:
                return [m1, got2[0]]
        return None

    def _case_bridge_cherries(self, cur, prev, pa, pb) -> list[DrawMove] | None:
        """Two cherries bridged: close both; the next turn's pinch repairs
        the outer face."""
        out = []
        s = cur
        for comp in (pa, pb):
            center, ends = self._cherry_parts(prev, comp)
            got = try_join(
                s, BUILDER, ends[0], ends[1],
                encloses_exactly({ends[0], ends[1], center}, set()),
            )
            if not got:
                return None
            out.append(got[0])
            s = got[1]
        return out

    def _no_new_residents_pred(self):
        def pred(after: PlaneState) -> bool:
            comp, verts, residents, is_outer = new_face_info(after)
            return is_outer or not residents

        return pred

    # -- initiative ------------------------------------------------------------

    def _initiative(self, cur: PlaneState, budget: int) -> list[DrawMove] | None:
        isolated, edges2, cherries, triangles, other = components_by_shape(cur)

        # 1. pinch a non-triangular outer walk back to a 3-cycle
        for comp in other:
            step = self._pinch_outer(cur, comp)
            if step:
                return step
        # 2. close a cherry into an empty triangle
        for comp in cherries:
            center, ends = self._cherry_parts(cur, comp)
            got = try_join(
                cur, BUILDER, ends[0], ends[1],
                encloses_exactly({ends[0], ends[1], center}, set()),
            )
            if got:
                return [got[0]]
        # 3. pair up a lone edge with an isolated vertex, or lasso it
        for comp in edges2:
            region = cur.residency[comp]
            isos = isolated_in_region(cur, region)
            if isos:
                va, vb = sorted(cur.component_vertices(comp))
                got = try_join(cur, BUILDER, va, isos[0])
                if got:
                    return [got[0]]
            elif budget >= 2:
                va, vb = sorted(cur.component_vertices(comp))
                step = self._lasso_pair(cur, va, vb)
                if step:
                    return step
        if budget >= 2:
            # 4. with exactly three isolated vertices left, spend the turn on
            # a fresh 2-edge path so Spoiler never faces a pairable couple
            region_iso: dict = {}
            for x in isolated:
                region_iso.setdefault(cur.residency[x], []).append(x)
            for region, xs in sorted(region_iso.items(), key=lambda kv: repr(kv[0])):
                if len(xs) == 3:
                    got = try_join(cur, BUILDER, xs[0], xs[1])
                    if got:
                        m1, s1 = got
                        got2 = try_join(s1, BUILDER, xs[0], xs[2])
                        if got2:
                            return [m1, got2[0]]
            # 5. absorb an isolated vertex into a surrounding or sibling component
            step = self._absorb_isolated(cur, isolated)
            if step:
                return step
            # 6. merge two certified components residing side by side
            step = self._merge_solids(cur, triangles)
            if step:
                return step
            # 7. endgame: bridge a cherry/leftover into the main component
            step = self._endgame_bridge(cur, triangles, cherries + edges2 + other)
            if step:
                return step
        # 8. safe filler: a chord inside a bounded face
        step = self._bounded_filler(cur)
        if step:
            return step
        # 9. single-move merge opener: bridge two certified components; the
        # next turn's pinch closes the case-4 shape
        step = self._merge_opener(cur, triangles)
        if step:
            return step
        return None

    def _merge_opener(self, cur: PlaneState, triangles: list[int]) -> list[DrawMove] | None:
        by_region: dict = {}
        for c in triangles:
            by_region.setdefault(cur.residency[c], []).append(c)
        for region, comps in sorted(by_region.items(), key=lambda kv: repr(kv[0])):
            if len(comps) < 2:
                continue
            A, B = comps[0], comps[1]
            for w in sorted(cur.outer_triple(A)):
                for w1 in sorted(cur.outer_triple(B)):
                    got = try_join(cur, BUILDER, w, w1)
                    if got:
                        return [got[0]]
        return None

    def _pinch_outer(self, cur: PlaneState, comp: int) -> list[DrawMove] | None:
        """One chord making the component's outer face a 3-cycle, wrapping
        everything else into a bounded pocket with no residents."""
        cycle = reduced_outer_cycle(cur, comp)
        if len(cycle) < 4:
            return None
        verts = sorted(set(cycle))
        for p in verts:
            for q in verts:
                if p >= q or frozenset((p, q)) in cur.edge_set:
                    continue
                got = try_join(cur, BUILDER, p, q, self._outer_triple_exists_pred(p))
                if got:
                    return [got[0]]
        return None

    def _outer_triple_exists_pred(self, anchor: int):
        def pred(after: PlaneState) -> bool:
            comp, verts, residents, is_outer = new_face_info(after)
            if residents:
                return False
            return after.outer_triple(after.component_of(anchor)) is not None

        return pred

    def _absorb_isolated(self, cur: PlaneState, isolated: list[int]) -> list[DrawMove] | None:
        for x in isolated:
            region = cur.residency[x]
            if region != OUTER_REGION and not (
                isinstance(region, tuple) and region[1] == x
            ):
                # housed inside a face: absorbing a resident only shrinks the
                # completion set, so any routing keeping others out is safe
                host = region[1]
                walk_verts = sorted(set(cur.walk_vertices(cur.faces_of(host)[region[2]])))
                pred = lambda p, q: self._no_new_residents_pred()  # noqa: E731
            else:
                # outer-side absorb grows the closure: demand the certified
                # two-contact shape with outer face (p, x, q)
                solids = [
                    c for c in cur.residents_of(region)
                    if c != x and cur.outer_triple(c) is not None
                ]
                if not solids:
                    continue
                target = max(solids, key=lambda c: len(cur.component_vertices(c)))
                walk_verts = sorted(cur.outer_triple(target))
                pred = lambda p, q: self._absorbed_pred(p, x, q)  # noqa: E731
            for p in walk_verts:
                for q in walk_verts:
                    if p == q:
                        continue
                    got = try_join(cur, BUILDER, p, x)
                    if not got:
                        continue
                    m1, s1 = got
                    got2 = try_join(s1, BUILDER, x, q, pred(p, q))
                    if got2:
                        return [m1, got2[0]]
        return None

    def _merge_solids(self, cur: PlaneState, triangles: list[int]) -> list[DrawMove] | None:
        by_region: dict = {}
        for c in triangles:
            by_region.setdefault(cur.residency[c], []).append(c)
        for region, comps in sorted(by_region.items(), key=lambda kv: repr(kv[0])):
            if len(comps) < 2:
                continue
            A, B = comps[0], comps[1]
            ta, tb = cur.outer_triple(A), cur.outer_triple(B)
            for w in sorted(ta):
                for w1 in sorted(tb):
                    got = try_join(cur, BUILDER, w, w1)
                    if not got:
                        continue
                    m1, s1 = got
                    for v1 in sorted(t for t in tb if t != w1):
                        got2 = try_join(
                            s1, BUILDER, w, v1, self._outer_triangle_pred(w, w1, v1)
                        )
                        if got2:
                            return [m1, got2[0]]
        return None

    def _endgame_bridge(self, cur, triangles, leftovers) -> list[DrawMove] | None:
        for comp in leftovers:
            region = cur.residency.get(comp)
            partners = [
                c for c in triangles
                if cur.residency.get(c) == region and c != comp
            ]
            if not partners:
                continue
            target = partners[0]
            triple = sorted(cur.outer_triple(target))
            verts = sorted(cur.component_vertices(comp))
            for s_v in triple:
                for c_v in verts:
                    if frozenset((s_v, c_v)) in cur.edge_set:
                        continue
                    got = try_join(cur, BUILDER, s_v, c_v)
                    if got:
                        return [got[0]]
        return None

    def _bounded_filler(self, cur: PlaneState) -> list[DrawMove] | None:
        from ..plane import legal_edge_slots, slot_move

        # a chord strictly inside a bounded face never moves any outer walk
        for s in legal_edge_slots(cur):
            if s[2] != OUTER_REGION and cur.component_of(s[0]) == cur.component_of(s[1]):
                return [slot_move(cur, s)]
        return None
