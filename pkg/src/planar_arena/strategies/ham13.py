"""Spoiler strategy for the 1:3 Hamiltonian cycle game.

Spoiler grows one tracked component whose outer face is always a
3-cycle of tracked vertices, spending each 3-move turn fanning one new
vertex onto the outer triangle and walling one victim into each of the
two new pockets.  At the end the tracked set S induces a triangulation
whose occupied faces each hold a separated vertex group, so deleting S
leaves more components than |S| and the final graph cannot be
Hamiltonian.
"""

from __future__ import annotations

from ..plane import OUTER_REGION, SPOILER, DrawMove, PlaneState
from .common import (
    EdgeStrategy,
    encloses_exactly,
    first_legal_move,
    new_face_info,
    owed_moves,
    try_join,
)
from .ham21 import reduced_outer_cycle


class SpoilerHam13(EdgeStrategy):
    name = "spoiler-ham13"
    plays = SPOILER

    def __init__(self, seed: int = 0, strict: bool = False):
        super().__init__(seed, strict)
        self.tracked: list[int] = []
        self.frozen = False

    def report(self) -> dict:
        out = super().report()
        out["separator"] = sorted(self.tracked)
        return out

    # -- helpers ---------------------------------------------------------------

    def _home(self, state: PlaneState) -> int | None:
        if not self.tracked:
            return None
        return state.component_of(self.tracked[0])

    def _pool(self, state: PlaneState) -> list[int]:
        return [
            v for v in range(state.n)
            if state.is_isolated(v) and state.residency[v] == OUTER_REGION
        ]

    def _waiting_move(self, cur: PlaneState) -> DrawMove:
        """A filler that leaves the outer pool untouched: any chord or join
        routed through a bounded face, else any slot avoiding pool vertices."""
        from ..plane import legal_edge_slots, slot_move

        slots = legal_edge_slots(cur)
        for s in slots:
            if s[2] != OUTER_REGION:
                return slot_move(cur, s)
        pool = set(self._pool(cur))
        for s in slots:
            if s[0] not in pool and s[1] not in pool:
                return slot_move(cur, s)
        return first_legal_move(cur)

    # -- turns -------------------------------------------------------------------

    def moves(self, state, history):
        picks: list[DrawMove] = []
        cur = state

        def play(mv: DrawMove):
            nonlocal cur
            cur = cur.apply_move(mv, cur.player_to_move())
            picks.append(mv)

        budget = owed_moves(state)
        if not self.tracked and budget >= 3:
            for mv in self._open(cur, history):
                play(mv)
        elif not self.frozen and budget >= 3:
            step = self._turn(cur, history)
            if step:
                for mv in step:
                    play(mv)
        while len(picks) < budget and not cur.is_complete():
            play(self._waiting_move(cur))
        return picks

    def _open(self, cur: PlaneState, history) -> list[DrawMove]:
        pool = self._pool(cur)
        if not history:
            a, b, c = pool[:3]
            victims = pool[3:4]
            m1, s1 = try_join(cur, SPOILER, a, b)
            m2, s2 = try_join(s1, SPOILER, b, c)
            got = try_join(
                s2, SPOILER, c, a,
                encloses_exactly({a, b, c}, set(victims)),
                enclose=tuple(victims),
            )
            if got:
                self.tracked = [a, b, c]
                return [m1, m2, got[0]]
            return []
        # Builder opened with {a, b}: wall b inside a triangle through a
        a, b = history[-1].u, history[-1].v
        a, b = min(a, b), max(a, b)
        pool = [v for v in pool if v not in (a, b)]
        if len(pool) < 2:
            return []
        x, y = pool[:2]
        got1 = try_join(cur, SPOILER, a, x)
        if not got1:
            return []
        m1, s1 = got1
        got2 = try_join(s1, SPOILER, x, y)
        if not got2:
            return []
        m2, s2 = got2
        got3 = try_join(s2, SPOILER, y, a, encloses_exactly({a, x, y, b}, set()))
        if not got3:
            # b may sit on the other side; surround the other endpoint instead
            a, b = b, a
            got1 = try_join(cur, SPOILER, a, x)
            if not got1:
                return []
            m1, s1 = got1
            got2 = try_join(s1, SPOILER, x, y)
            if not got2:
                return []
            m2, s2 = got2
            got3 = try_join(s2, SPOILER, y, a, encloses_exactly({a, x, y, b}, set()))
            if not got3:
                return []
        self.tracked = [a, x, y]
        return [m1, m2, got3[0]]

    def _turn(self, cur: PlaneState, history) -> list[DrawMove] | None:
        home = self._home(cur)
        cycle = reduced_outer_cycle(cur, home)
        if len(cycle) != 3 or len(set(cycle)) != 3:
            return None
        triple = tuple(cycle)
        pool = self._pool(cur)

        # Builder may have hung something on the outer triangle: fan the
        # attachment point of the excursion
        walk_verts = set(cur.walk_vertices(cur.outer_walk(home)))
        stray = sorted(walk_verts - set(triple))
        if stray:
            x = next(
                (s for s in stray
                 if any(frozenset((s, t)) in cur.edge_set for t in triple)),
                None,
            )
            if x is not None:
                return self._fan(cur, x, triple, pool, None, already_attached=True)
        # Builder may have paired two pool vertices into a lone edge
        for c in cur.residents_of(OUTER_REGION):
            if c == home:
                continue
            verts = sorted(cur.component_vertices(c))
            if len(verts) == 2:
                x, y = verts
                return self._fan(cur, x, triple, pool, y, already_attached=False)
        if pool:
            x = pool[0]
            return self._fan(cur, x, triple, [v for v in pool if v != x], None,
                             already_attached=False)
        self.frozen = True
        return None

    def _pocket_pred(self, x, t_attached, t, third, riders: set[int], victims: set[int]):
        """The new pocket hugs the (x, t_attached, t) corner of the fan: it
        must carry x, both triangle contacts and any structure riding on
        x's component, keep the third outer vertex free, and house exactly
        the chosen victims."""

        def pred(after: PlaneState) -> bool:
            comp, verts, residents, is_outer = new_face_info(after)
            if is_outer:
                return False
            vs = set(verts)
            if not ({x, t_attached, t} <= vs) or third in vs:
                return False
            if riders and not (riders <= vs):
                return False
            housed: set[int] = set()
            for c in residents:
                housed |= after.component_vertices(c)
            return housed == victims

        return pred

    def _fan(self, cur, x, triple, pool, riding_victim, already_attached=False):
        """Join x to the whole outer triangle, walling one victim into each
        new pocket; leftover moves wait."""
        pool = [v for v in pool if v not in (x, riding_victim)]
        out: list[DrawMove] = []
        s = cur
        t_attached = None
        if already_attached:
            t_attached = next(
                (t for t in triple if frozenset((x, t)) in cur.edge_set), None
            )
        if t_attached is None:
            t_attached = min(triple)
            got = try_join(s, SPOILER, x, t_attached)
            if not got:
                return None
            out.append(got[0])
            s = got[1]
        others = sorted(t for t in triple if t != t_attached)
        riders = set(s.component_vertices(s.component_of(x))) - set(
            cur.component_vertices(self._home(cur))
        ) - {x}
        victims = [v for v in pool]
        walled: list[int] = []

        for i, t in enumerate(others):
            third = others[1 - i]
            ride = riders if i == 0 else set()
            # a partner riding on x's component is this pocket's whole catch
            victim = victims[0] if victims and not ride else None
            cands = []
            if victim is not None:
                cands.append((
                    self._pocket_pred(x, t_attached, t, third, ride, {victim}),
                    (victim,), victim,
                ))
            cands.append((
                self._pocket_pred(x, t_attached, t, third, ride, set()),
                (), None,
            ))
            got = None
            for pred, enclose, took in cands:
                got = try_join(s, SPOILER, x, t, pred, enclose=enclose)
                if got:
                    if took is not None:
                        victims.remove(took)
                        walled.append(took)
                    break
            if not got:
                return None
            out.append(got[0])
            s = got[1]
        cycle = set(reduced_outer_cycle(s, s.component_of(x)))
        if cycle != {x, *others}:
            return None
        self.tracked.append(x)
        while len(out) < 3:
            mv = self._waiting_move(s)
            s = s.apply_move(mv, s.player_to_move())
            out.append(mv)
        return out
