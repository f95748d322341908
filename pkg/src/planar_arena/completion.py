"""Exhaustive completion of a drawing to plane triangulations.

eventually_satisfies answers: does EVERY triangulation that completes a
component (together with everything housed in its faces) satisfy a
property?  The enumeration walks all legal move sequences of the
embedding, deduplicating states by a schedule-free canonical form; it is
a test oracle at enumeration scale, not something strategies call.
"""

from __future__ import annotations

import json

from .graphs import BudgetError, Graph, OuterTriple, is_strongly_hamiltonian
from .plane import (
    BUILDER,
    OUTER_REGION,
    BiasSchedule,
    DrawMove,
    PlaneState,
    legal_edge_slots,
)

COMPLETION_VERTEX_BUDGET = 10
STATE_CAP = 200_000
RESIDENT_SPLIT_CAP = 8


def extract_closure(
    state: PlaneState, comp_id: int, include_residents: bool = True
) -> PlaneState:
    """Sub-state of a component, renumbered; with include_residents the
    transitive contents of its faces come along, otherwise the component's
    own vertices only (the literal "V(H) = V(G)" reading)."""
    if include_residents:
        T = sorted(state.transitive_resident_vertices(comp_id))
    else:
        T = sorted(state.component_vertices(comp_id))
    idx = {v: i for i, v in enumerate(T)}
    sub = PlaneState.__new__(PlaneState)
    sub.n = len(T)
    sub.schedule = BiasSchedule(1, 1, BUILDER)
    sub.edges = []
    sub.edge_set = set()
    sub.edge_owner = []
    edge_map: dict[int, int] = {}
    for ei, (a, b) in enumerate(state.edges):
        if a in idx and b in idx:
            edge_map[ei] = len(sub.edges)
            sub.edges.append((idx[a], idx[b]))
            sub.edge_set.add(frozenset((idx[a], idx[b])))
            sub.edge_owner.append(state.edge_owner[ei])

    def dmap(d: int) -> int:
        return 2 * edge_map[d >> 1] | (d & 1)

    sub.rot = [[dmap(d) for d in state.rot[v]] for v in T]
    sub.move_count = len(sub.edges)
    sub.residency = {}
    sub.outer_dart = {}
    closure_comps = {
        c for c in state.residency
        if set(state.component_vertices(c)) <= set(T)
    }
    for c in closure_comps:
        new_c = min(idx[v] for v in state.component_vertices(c))
        if c in state.outer_dart:
            sub.outer_dart[new_c] = dmap(state.outer_dart[c])
        if c == comp_id:
            sub.residency[new_c] = OUTER_REGION
        else:
            r = state.residency[c]
            _, host, fidx = r
            new_host = min(idx[v] for v in state.component_vertices(host))
            sub.residency[new_c] = ("face", new_host, fidx)
    sub._faces_cache = {}
    sub._comp_cache = None
    sub._slots_cache = None
    return sub


def embedding_hash(state: PlaneState):
    """Canonical form invariant under edge creation order.

    Darts are renumbered by the sorted edge list, rotation lists are
    rotated to start at their smallest dart, faces are named by their
    smallest canonical dart.  Two states reached by drawing the same
    edges in different orders hash identically.
    """
    order = {}
    for i, (a, b) in enumerate(sorted((min(e), max(e)) for e in state.edges)):
        order[(a, b)] = i

    def canon_dart(d: int) -> int:
        a, b = state.edges[d >> 1]
        lo, hi = (a, b) if a < b else (b, a)
        origin = a if d & 1 == 0 else b
        return 2 * order[(lo, hi)] + (0 if origin == lo else 1)

    rot_canon = []
    for ring in state.rot:
        cand = [canon_dart(d) for d in ring]
        if cand:
            k = cand.index(min(cand))
            cand = cand[k:] + cand[:k]
        rot_canon.append(tuple(cand))

    def face_rep(comp: int, idx: int) -> int:
        return min(canon_dart(d) for d in state.faces_of(comp)[idx])

    outer = tuple(
        sorted((c, face_rep(c, state.outer_face_index(c))) for c in state.outer_dart)
    )
    res = tuple(
        sorted(
            (c, r if r == OUTER_REGION else ("f", r[1], face_rep(r[1], r[2])))
            for c, r in state.residency.items()
        )
    )
    return (state.n, tuple(sorted(order)), tuple(rot_canon), outer, res)


def embedding_key(state: PlaneState) -> str:
    data = {
        "n": state.n,
        "edges": [[u, v] for u, v in state.edges],
        "rot": [list(r) for r in state.rot],
        "outer": {str(c): d for c, d in sorted(state.outer_dart.items())},
        "res": {
            str(c): (r if r == OUTER_REGION else ["f", r[1], r[2]])
            for c, r in sorted(state.residency.items())
        },
    }
    return json.dumps(data, sort_keys=True, separators=(",", ":"))


def completion_moves(state: PlaneState):
    """Every legal move including both enclosure orientations and all
    resident partitions of splitting chords."""
    for u, v, region, cu, cv in legal_edge_slots(state):
        comp_u = state.component_of(u)
        comp_v = state.component_of(v)
        split = (
            comp_u == comp_v
            and not state.is_isolated(u)
            and not state.is_isolated(v)
        )
        if not split:
            yield DrawMove(u, v, region, cu, cv, None)
            continue
        residents = [c for c in state.residents_of(region) if c != comp_u]
        if len(residents) > RESIDENT_SPLIT_CAP:
            raise BudgetError("too many residents in a split face to enumerate")
        for bits in range(1 << len(residents)):
            inside = tuple(c for i, c in enumerate(residents) if bits >> i & 1)
            outside = tuple(c for i, c in enumerate(residents) if not bits >> i & 1)
            part = {"uv": inside, "vu": outside}
            yield DrawMove(u, v, region, cu, cv, part)
            yield DrawMove(v, u, region, cv, cu, part)


def _region_sort_key(region):
    return (0, 0, 0) if region == OUTER_REGION else (1, region[1], region[2])


def first_region_moves(state: PlaneState) -> list[DrawMove]:
    """Moves of the canonically first region that admits any.

    Moves routed through different regions commute (a region's filling
    never touches another region's contents), so restricting each step to
    one region reaches exactly the same set of completed triangulations
    while killing the interleaving blowup.
    """
    by_region: dict = {}
    for mv in completion_moves(state):
        by_region.setdefault(_region_sort_key(mv.region), []).append(mv)
    if not by_region:
        return []
    return by_region[min(by_region)]


def enumerate_completions(sub: PlaneState, state_cap: int = STATE_CAP):
    """Yields distinct completed triangulations reachable from the
    sub-state, one representative per (edge set, outer triple) class."""
    if sub.n > COMPLETION_VERTEX_BUDGET:
        raise BudgetError(
            f"completion enumeration limited to {COMPLETION_VERTEX_BUDGET} vertices,"
            f" got {sub.n}"
        )
    seen = {embedding_hash(sub)}
    finals: set = set()
    stack = [sub]
    while stack:
        st = stack.pop()
        if st.is_complete():
            comp = min(st.components())
            key = (frozenset(st.edge_set), tuple(sorted(st.outer_triple(comp) or ())))
            if key not in finals:
                finals.add(key)
                yield st
            continue
        for mv in first_region_moves(st):
            nxt = st.apply_move(mv, st.player_to_move())
            k = embedding_hash(nxt)
            if k not in seen:
                seen.add(k)
                if len(seen) > state_cap:
                    raise BudgetError("completion state space exceeded the cap")
                stack.append(nxt)


def eventually_satisfies(
    state: PlaneState, comp_id: int, predicate, include_residents: bool = True
) -> bool:
    """True iff every completion of the component (and, by default, its
    residents) to a plane triangulation satisfies the predicate (called on
    the final sub-state)."""
    sub = extract_closure(state, comp_id, include_residents)
    return all(predicate(final) for final in enumerate_completions(sub))


def _strongly_hamiltonian_final(final: PlaneState) -> bool:
    comp = min(final.components())
    triple = final.outer_triple(comp)
    if triple is None:
        return False
    return is_strongly_hamiltonian(final.union_graph(), OuterTriple(*triple))


_EVENTUALLY_CACHE: dict = {}


def eventually_strongly_hamiltonian(state: PlaneState, comp_id: int) -> bool:
    """Cached acceptance check: does every triangulation on the component's
    own vertex set extending its drawing stay strongly Hamiltonian?"""
    sub = extract_closure(state, comp_id, include_residents=False)
    if sub.n > COMPLETION_VERTEX_BUDGET:
        raise BudgetError("component closure too large to enumerate")
    key = (embedding_hash(sub), "sh")
    if key not in _EVENTUALLY_CACHE:
        _EVENTUALLY_CACHE[key] = all(
            _strongly_hamiltonian_final(f) for f in enumerate_completions(sub)
        )
    return _EVENTUALLY_CACHE[key]
