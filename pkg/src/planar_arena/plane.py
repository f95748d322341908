"""Edge-drawing-game positions as combinatorial plane multigraphs.

A position is a rotation system (counterclockwise dart order at each
vertex) plus a residency forest: every connected component lives either
in the global outer region or inside a bounded face of another component.
Geometry is abstracted away; which residents a new edge encloses is part
of the move, not of any coordinates.

Conventions, fixed once and used everywhere:

* Edge ``i`` owns darts ``2i`` (u -> v) and ``2i + 1`` (v -> u); darts are
  numbered in creation order.
* Face tracing: the successor of dart ``d`` is the predecessor of
  ``rev(d)`` in the rotation at its head.  Each orbit is one face, and a
  face walk is canonically rotated to start at its smallest dart.
* A *corner* of a face walk is indexed by the position of its outgoing
  dart in the canonical walk.
* When a move's endpoints attach to the same boundary circuit the new
  chord splits a region in two.  The side whose boundary picks up the
  dart ``u -> v`` is the "uv" side; if the circuit was a component's
  outer walk, the "uv" side is the newly enclosed bounded face and the
  "vu" side is the new outer walk.  Order (u, v) in the move to choose
  which arc gets enclosed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace

from .graphs import Graph, InvalidParameter

BUILDER = "builder"
SPOILER = "spoiler"
OUTER_REGION = "outer"


class IllegalMove(ValueError):
    """Rejected move; `code` carries the machine-readable reason."""

    def __init__(self, code: str, detail: str = ""):
        self.code = code
        super().__init__(f"{code}: {detail}" if detail else code)


@dataclass(frozen=True)
class BiasSchedule:
    """Per-round move counts; optional (1+eps):1 bonus cadence for Builder.

    With `epsilon` set, play alternates one move each and Builder receives
    one extra move immediately after every floor(1/epsilon)-th of his own
    regular moves.
    """

    builder_per_round: int = 1
    spoiler_per_round: int = 1
    first_player: str = BUILDER
    epsilon: float | None = None

    def __post_init__(self):
        if self.builder_per_round < 1 or self.spoiler_per_round < 1:
            raise InvalidParameter("per-round move counts must be positive")
        if self.first_player not in (BUILDER, SPOILER):
            raise InvalidParameter("unknown first player")
        if self.epsilon is not None and not (0 < self.epsilon <= 1):
            raise InvalidParameter("epsilon must lie in (0, 1]")

    def bonus_every(self) -> int | None:
        return int(1 / self.epsilon) if self.epsilon is not None else None

    def turn_sequence(self, total: int) -> list[str]:
        """Players of moves 0..total-1."""
        seq: list[str] = []
        if self.epsilon is None:
            a, b = self.first_player, other_player(self.first_player)
            ka = self.builder_per_round if a == BUILDER else self.spoiler_per_round
            kb = self.builder_per_round if b == BUILDER else self.spoiler_per_round
            round_pattern = [a] * ka + [b] * kb
            while len(seq) < total:
                seq.extend(round_pattern)
            return seq[:total]
        q = self.bonus_every()
        regulars = 0
        turn = self.first_player
        while len(seq) < total:
            seq.append(turn)
            if turn == BUILDER:
                regulars += 1
                if regulars % q == 0:
                    seq.append(BUILDER)
            turn = other_player(turn)
        return seq[:total]

    def player_at(self, move_index: int) -> str:
        return self.turn_sequence(move_index + 1)[move_index]

    def to_json(self) -> dict:
        out = {
            "builder": self.builder_per_round,
            "spoiler": self.spoiler_per_round,
            "first": self.first_player,
        }
        if self.epsilon is not None:
            out["epsilon"] = self.epsilon
        return out

    @staticmethod
    def from_json(data: dict) -> "BiasSchedule":
        return BiasSchedule(
            data.get("builder", 1),
            data.get("spoiler", 1),
            data.get("first", BUILDER),
            data.get("epsilon"),
        )


def other_player(p: str) -> str:
    return SPOILER if p == BUILDER else BUILDER


RegionKey = object  # "outer" or ("face", host_component_id, face_index)


def face_region(host: int, face_index: int) -> tuple:
    return ("face", host, face_index)


@dataclass(frozen=True)
class DrawMove:
    """One edge insertion with combinatorial routing data.

    corner_u / corner_v index occurrences on the boundary circuit the
    endpoint attaches through (the region's bounding face walk when the
    endpoint belongs to the hosting component, otherwise the endpoint
    component's outer walk); ignored for isolated endpoints.  `partition`
    assigns each resident of a split region to the "uv" or "vu" side and
    must be None for merge moves.
    """

    u: int
    v: int
    region: RegionKey
    corner_u: int = 0
    corner_v: int = 0
    partition: dict | None = None

    def to_json(self) -> dict:
        region = self.region if self.region == OUTER_REGION else {
            "host": self.region[1],
            "face": self.region[2],
        }
        out = {
            "u": self.u,
            "v": self.v,
            "region": region,
            "corner_u": self.corner_u,
            "corner_v": self.corner_v,
        }
        if self.partition is not None:
            out["partition"] = {
                "uv": sorted(self.partition.get("uv", ())),
                "vu": sorted(self.partition.get("vu", ())),
            }
        return out

    @staticmethod
    def from_json(data: dict) -> "DrawMove":
        region = data["region"]
        if region != OUTER_REGION:
            region = face_region(region["host"], region["face"])
        part = data.get("partition")
        if part is not None:
            part = {"uv": tuple(part.get("uv", ())), "vu": tuple(part.get("vu", ()))}
        return DrawMove(
            data["u"], data["v"], region, data.get("corner_u", 0),
            data.get("corner_v", 0), part,
        )


class PlaneState:
    """Mutable-by-move-application plane drawing; cheap to clone."""

    def __init__(self, n: int, schedule: BiasSchedule):
        if n < 3:
            raise InvalidParameter("need at least 3 vertices")
        self.n = n
        self.schedule = schedule
        self.edges: list[tuple[int, int]] = []
        self.edge_set: set[frozenset[int]] = set()
        self.edge_owner: list[str] = []
        self.rot: list[list[int]] = [[] for _ in range(n)]
        # component id (min vertex) -> region key
        self.residency: dict[int, RegionKey] = {v: OUTER_REGION for v in range(n)}
        # component id -> a dart on its outer face (absent for isolated vertices)
        self.outer_dart: dict[int, int] = {}
        self.move_count = 0
        self._faces_cache: dict[int, list[list[int]]] = {}
        self._comp_cache: dict[int, int] | None = None
        self._slots_cache: list | None = None

    # -- dart helpers ------------------------------------------------------

    def dart_origin(self, d: int) -> int:
        u, v = self.edges[d >> 1]
        return u if d & 1 == 0 else v

    def dart_target(self, d: int) -> int:
        u, v = self.edges[d >> 1]
        return v if d & 1 == 0 else u

    @staticmethod
    def rev(d: int) -> int:
        return d ^ 1

    def next_dart(self, d: int) -> int:
        head = self.dart_target(d)
        r = self.rev(d)
        ring = self.rot[head]
        i = ring.index(r)
        return ring[i - 1]

    # -- components and faces ----------------------------------------------

    def component_of(self, v: int) -> int:
        if self._comp_cache is None:
            cache: dict[int, int] = {}
            for comp_id, verts in self.components().items():
                for x in verts:
                    cache[x] = comp_id
            self._comp_cache = cache
        return self._comp_cache[v]

    def components(self) -> dict[int, set[int]]:
        seen: set[int] = set()
        comps: dict[int, set[int]] = {}
        for s in range(self.n):
            if s in seen:
                continue
            comp = {s}
            stack = [s]
            while stack:
                x = stack.pop()
                for d in self.rot[x]:
                    w = self.dart_target(d)
                    if w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            comps[min(comp)] = comp
        return comps

    def is_isolated(self, v: int) -> bool:
        return not self.rot[v]

    def component_vertices(self, comp_id: int) -> set[int]:
        seen = {comp_id}
        stack = [comp_id]
        while stack:
            x = stack.pop()
            for d in self.rot[x]:
                w = self.dart_target(d)
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen

    def faces_of(self, comp_id: int) -> list[list[int]]:
        """Canonical face walks (dart lists) of a component, sorted by min dart."""
        if comp_id in self._faces_cache:
            return self._faces_cache[comp_id]
        verts = self.component_vertices(comp_id)
        darts = [d for v in verts for d in self.rot[v]]
        unseen = set(darts)
        orbits = []
        for d0 in sorted(darts):
            if d0 not in unseen:
                continue
            walk = [d0]
            unseen.discard(d0)
            d = self.next_dart(d0)
            while d != d0:
                walk.append(d)
                unseen.discard(d)
                d = self.next_dart(d)
            orbits.append(walk)
        orbits.sort(key=lambda w: min(w))
        canon = []
        for w in orbits:
            k = w.index(min(w))
            canon.append(w[k:] + w[:k])
        self._faces_cache[comp_id] = canon
        return canon

    def face_index_of_dart(self, comp_id: int, d: int) -> int:
        for i, w in enumerate(self.faces_of(comp_id)):
            if d in w:
                return i
        raise KeyError(f"dart {d} not in component {comp_id}")

    def outer_face_index(self, comp_id: int) -> int:
        return self.face_index_of_dart(comp_id, self.outer_dart[comp_id])

    def outer_walk(self, comp_id: int) -> list[int]:
        return self.faces_of(comp_id)[self.outer_face_index(comp_id)]

    def walk_vertices(self, walk: list[int]) -> list[int]:
        return [self.dart_origin(d) for d in walk]

    def outer_triple(self, comp_id: int):
        """The outer-face 3-cycle as an ordered tuple, or None."""
        if comp_id not in self.outer_dart:
            return None
        vs = self.walk_vertices(self.outer_walk(comp_id))
        return tuple(vs) if len(vs) == 3 and len(set(vs)) == 3 else None

    # -- regions -------------------------------------------------------------

    def regions(self) -> list[RegionKey]:
        out: list[RegionKey] = [OUTER_REGION]
        for comp_id in self.components():
            if comp_id not in self.outer_dart:
                continue
            outer_idx = self.outer_face_index(comp_id)
            for i in range(len(self.faces_of(comp_id))):
                if i != outer_idx:
                    out.append(face_region(comp_id, i))
        return out

    def region_exists(self, region: RegionKey) -> bool:
        if region == OUTER_REGION:
            return True
        if not (isinstance(region, tuple) and len(region) == 3 and region[0] == "face"):
            return False
        _, host, idx = region
        if host not in self.outer_dart:
            return False
        faces = self.faces_of(host)
        return 0 <= idx < len(faces) and idx != self.outer_face_index(host)

    def residents_of(self, region: RegionKey) -> list[int]:
        return sorted(c for c, r in self.residency.items() if r == region)

    def region_of_component(self, comp_id: int) -> RegionKey:
        return self.residency[comp_id]

    def boundary_circuits(self, region: RegionKey):
        """(kind, comp_id, walk) triples: 'host' face walk then resident outer walks.

        Isolated residents appear with an empty walk.
        """
        out = []
        if region != OUTER_REGION:
            _, host, idx = region
            out.append(("host", host, self.faces_of(host)[idx]))
        for c in self.residents_of(region):
            out.append(("resident", c, self.outer_walk(c) if c in self.outer_dart else []))
        return out

    # -- game protocol -------------------------------------------------------

    def total_moves(self) -> int:
        return 3 * self.n - 6

    def is_complete(self) -> bool:
        return self.move_count == self.total_moves()

    def player_to_move(self) -> str:
        return self.schedule.player_at(self.move_count)

    def clone(self) -> "PlaneState":
        s = PlaneState.__new__(PlaneState)
        s.n = self.n
        s.schedule = self.schedule
        s.edges = list(self.edges)
        s.edge_set = set(self.edge_set)
        s.edge_owner = list(self.edge_owner)
        s.rot = [list(r) for r in self.rot]
        s.residency = dict(self.residency)
        s.outer_dart = dict(self.outer_dart)
        s.move_count = self.move_count
        s._faces_cache = {}
        s._comp_cache = None
        s._slots_cache = None
        return s

    # -- move application ------------------------------------------------------

    def _attachment(self, vertex: int, region: RegionKey):
        """How `vertex` touches `region`: ('isolated'|'host'|'resident', comp, walk)."""
        comp = self.component_of(vertex)
        if self.is_isolated(vertex):
            if self.residency[comp] != region:
                raise IllegalMove("endpoint-not-on-region", f"vertex {vertex}")
            return ("isolated", comp, [])
        if region != OUTER_REGION and region[0] == "face" and region[1] == comp:
            return ("host", comp, self.faces_of(comp)[region[2]])
        if self.residency.get(comp) == region:
            return ("resident", comp, self.outer_walk(comp))
        raise IllegalMove("endpoint-not-on-region", f"vertex {vertex}")

    def _corner_dart(self, walk: list[int], vertex: int, corner: int) -> int:
        if not (0 <= corner < len(walk)):
            raise IllegalMove("bad-corner", f"corner {corner} out of range")
        d = walk[corner]
        if self.dart_origin(d) != vertex:
            raise IllegalMove("bad-corner", f"corner {corner} is not at vertex {vertex}")
        return d

    def _insert_after(self, vertex: int, anchor_dart: int | None, new_dart: int):
        ring = self.rot[vertex]
        if anchor_dart is None:
            if ring:
                raise IllegalMove("bad-corner", "missing corner for attached vertex")
            ring.append(new_dart)
        else:
            ring.insert(ring.index(anchor_dart) + 1, new_dart)

    def apply_move(self, move: DrawMove, player: str) -> "PlaneState":
        """Validate and apply; returns the successor state (self is unchanged)."""
        if self.is_complete():
            raise IllegalMove("game-over")
        if player != self.player_to_move():
            raise IllegalMove("wrong-turn", f"expected {self.player_to_move()}")
        u, v = move.u, move.v
        if u == v:
            raise IllegalMove("loop")
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise IllegalMove("bad-vertex")
        if frozenset((u, v)) in self.edge_set:
            raise IllegalMove("duplicate-edge", f"{{{u},{v}}}")
        if not self.region_exists(move.region):
            raise IllegalMove("bad-region", repr(move.region))

        att_u = self._attachment(u, move.region)
        att_v = self._attachment(v, move.region)
        kind_u, comp_u, walk_u = att_u
        kind_v, comp_v, walk_v = att_v

        same_circuit = (
            kind_u != "isolated"
            and kind_v != "isolated"
            and comp_u == comp_v
            and kind_u == kind_v
        )
        if comp_u == comp_v and not same_circuit:
            # one endpoint on the host face, the other would have to be a
            # resident of the same region, impossible within one component
            raise IllegalMove("endpoint-not-on-region", "mixed attachment")

        if same_circuit:
            if move.partition is None:
                raise IllegalMove("missing-partition")
            affected = [c for c in self.residents_of(move.region) if c != comp_u]
            declared = sorted(move.partition.get("uv", ())) + sorted(
                move.partition.get("vu", ())
            )
            if sorted(declared) != affected or len(set(declared)) != len(declared):
                raise IllegalMove(
                    "bad-partition",
                    f"must mention exactly residents {affected}, got {sorted(declared)}",
                )
        elif move.partition is not None:
            raise IllegalMove("bad-partition", "partition supplied for a merge move")

        # stable tokens, captured pre-move: a face's smallest dart keeps lying
        # on the boundary of the same plane region whatever this move changes
        excluded = (comp_u,) if same_circuit else (comp_u, comp_v)
        tokens = {
            c: (r, self._region_token(r))
            for c, r in self.residency.items()
            if c not in excluded
        }

        s = self.clone()
        anchor_u = None if kind_u == "isolated" else s._corner_dart(walk_u, u, move.corner_u)
        anchor_v = None if kind_v == "isolated" else s._corner_dart(walk_v, v, move.corner_v)

        edge_idx = len(s.edges)
        d_uv, d_vu = 2 * edge_idx, 2 * edge_idx + 1
        s.edges.append((u, v))
        s.edge_set.add(frozenset((u, v)))
        s.edge_owner.append(player)
        s._insert_after(u, anchor_u, d_uv)
        s._insert_after(v, anchor_v, d_vu)
        s.move_count += 1
        s._faces_cache = {}
        s._comp_cache = None
        s._slots_cache = None

        if same_circuit:
            s._finish_split(move, comp_u, kind_u, d_uv, d_vu, tokens)
        else:
            s._finish_merge(move, att_u, att_v, d_uv, tokens)
        return s

    def _region_token(self, region: RegionKey) -> int | None:
        if region == OUTER_REGION:
            return None
        _, host, idx = region
        return min(self.faces_of(host)[idx])

    def _finish_merge(self, move: DrawMove, att_u, att_v, d_uv: int, tokens: dict):
        kind_u, comp_u, _ = att_u
        kind_v, comp_v, _ = att_v
        region = move.region
        merged = min(comp_u, comp_v)
        old_u, old_v = comp_u, comp_v
        if kind_u == "host" or kind_v == "host":
            host_comp = comp_u if kind_u == "host" else comp_v
            new_outer = self.outer_dart[host_comp]
            new_region = self.residency[host_comp]
        elif kind_u == "isolated" and kind_v == "isolated":
            new_outer = d_uv
            new_region = region
        elif kind_u == "isolated" or kind_v == "isolated":
            attached = comp_v if kind_u == "isolated" else comp_u
            new_outer = self.outer_dart[attached]
            new_region = self.residency[attached]
        else:
            new_outer = d_uv
            new_region = region

        for c in (old_u, old_v):
            self.residency.pop(c, None)
            self.outer_dart.pop(c, None)
        self.residency[merged] = new_region
        self.outer_dart[merged] = new_outer
        self._remap_residencies(tokens, {old_u: merged, old_v: merged})

    def _finish_split(
        self, move: DrawMove, circuit_comp: int, kind: str, d_uv: int, d_vu: int, tokens: dict
    ):
        region = move.region
        if kind == "resident":
            # chord on the outer walk: "vu" side is the new outer walk
            self.outer_dart[circuit_comp] = d_vu
        uv_idx = self.face_index_of_dart(circuit_comp, d_uv)
        vu_idx = self.face_index_of_dart(circuit_comp, d_vu)
        side_region = {
            "uv": face_region(circuit_comp, uv_idx),
            "vu": region if kind == "resident" else face_region(circuit_comp, vu_idx),
        }
        for side in ("uv", "vu"):
            for c in (move.partition or {}).get(side, ()):
                self.residency[c] = side_region[side]
                tokens.pop(c, None)
        self._remap_residencies(tokens, {})

    def _remap_residencies(self, tokens: dict, comp_rename: dict[int, int]):
        """Re-anchor bounded-face residency keys after a structural change.

        tokens maps resident -> (old region, representative dart); the
        representative dart still lies on the boundary of the same plane
        region, whose face index (and possibly host id) may have moved.
        """
        for c, (old_region, token) in tokens.items():
            if old_region == OUTER_REGION:
                continue
            _, host, _ = old_region
            new_host = comp_rename.get(host, host)
            if new_host not in self.outer_dart:
                new_host = self.component_of(new_host)
            resident = comp_rename.get(c, c)
            self.residency[resident] = face_region(
                new_host, self.face_index_of_dart(new_host, token)
            )

    # -- queries over the drawing ---------------------------------------------

    def union_graph(self) -> Graph:
        return Graph.from_edges(self.n, self.edges)

    def builder_subgraph(self) -> Graph:
        return Graph.from_edges(
            self.n,
            [e for e, o in zip(self.edges, self.edge_owner) if o == BUILDER],
        )

    def component_graph(self, comp_id: int) -> tuple[Graph, list[int]]:
        """Induced graph of the component, plus the sorted vertex relabelling."""
        vs = sorted(self.component_vertices(comp_id))
        idx = {v: i for i, v in enumerate(vs)}
        es = [(idx[a], idx[b]) for a, b in self.edges if a in idx and b in idx]
        return Graph.from_edges(len(vs), es), vs

    def transitive_resident_vertices(self, comp_id: int) -> set[int]:
        """Vertices of the component plus everything housed in its faces, recursively."""
        out = set(self.component_vertices(comp_id))
        frontier = [comp_id]
        while frontier:
            host = frontier.pop()
            for c, r in self.residency.items():
                if r != OUTER_REGION and r[1] == host and c not in out:
                    out |= self.component_vertices(c)
                    frontier.append(c)
        return out

    # -- serialization ---------------------------------------------------------

    def canonical_json(self) -> str:
        comps = self.components()
        data = {
            "n": self.n,
            "schedule": self.schedule.to_json(),
            "move_count": self.move_count,
            "edges": [[u, v] for u, v in self.edges],
            "owners": list(self.edge_owner),
            "rot": [list(r) for r in self.rot],
            "outer_dart": {str(c): d for c, d in sorted(self.outer_dart.items())},
            "residency": {
                str(c): (r if r == OUTER_REGION else ["face", r[1], r[2]])
                for c, r in sorted(self.residency.items())
            },
            "components": {str(c): sorted(vs) for c, vs in sorted(comps.items())},
        }
        return json.dumps(data, sort_keys=True, separators=(",", ":"))


def new_game(n: int, schedule: BiasSchedule) -> PlaneState:
    return PlaneState(n, schedule)


def legal_edge_slots(state: PlaneState) -> list[tuple]:
    """All (u, v, region, corner_u, corner_v) routings of a legal new edge.

    Partition choices are not enumerated; a DrawMove supplies its own.
    Memoized per state (states never mutate after a move is applied).
    """
    if state._slots_cache is not None:
        return state._slots_cache
    slots = []
    regions = state.regions()
    order = sorted(
        range(len(regions)),
        key=lambda i: (0, 0, 0) if regions[i] == OUTER_REGION
        else (1, regions[i][1], regions[i][2]),
    )
    rank_of = {i: r for r, i in enumerate(order)}
    edges = state.edges
    edge_set = state.edge_set
    for ri, region in enumerate(regions):
        rank = rank_of[ri]
        attach: list[tuple[int, int]] = []  # (vertex, corner)
        for _, comp, walk in state.boundary_circuits(region):
            if not walk:
                attach.append((comp, 0))
            else:
                for corner, d in enumerate(walk):
                    e = edges[d >> 1]
                    attach.append((e[0] if d & 1 == 0 else e[1], corner))
        for i in range(len(attach)):
            a, ca = attach[i]
            for j in range(i + 1, len(attach)):
                b, cb = attach[j]
                if a == b or frozenset((a, b)) in edge_set:
                    continue
                if a <= b:
                    slots.append((a, b, region, ca, cb, rank))
                else:
                    slots.append((b, a, region, cb, ca, rank))
    slots.sort(key=lambda s: (s[0], s[1], s[5], s[3], s[4]))
    slots = [s[:5] for s in slots]
    state._slots_cache = slots
    return slots


def default_partition(state: PlaneState, u: int, v: int, region) -> dict | None:
    """Partition for a same-circuit chord that encloses no residents."""
    comp_u = state.component_of(u)
    comp_v = state.component_of(v)
    if comp_u != comp_v or state.is_isolated(u) or state.is_isolated(v):
        return None
    residents = [c for c in state.residents_of(region) if c != comp_u]
    return {"uv": (), "vu": tuple(residents)}


def slot_move(state: PlaneState, slot: tuple) -> DrawMove:
    """DrawMove for a slot, enclosing no residents when the slot splits."""
    u, v, region, cu, cv = slot
    return DrawMove(u, v, region, cu, cv, default_partition(state, u, v, region))


def check_invariants(state: PlaneState):
    """Structural sanity: Euler per component, walk-length bookkeeping, forest."""
    comps = state.components()
    for comp_id, verts in comps.items():
        darts = [d for x in verts for d in state.rot[x]]
        if not darts:
            continue
        faces = state.faces_of(comp_id)
        V = len(verts)
        E = len(darts) // 2
        F = len(faces)
        if V - E + F != 2:
            raise AssertionError(f"Euler failure on component {comp_id}: {V}-{E}+{F}")
        if sum(len(w) for w in faces) != 2 * E:
            raise AssertionError("face walks do not cover darts exactly")
        state.outer_face_index(comp_id)  # raises if outer dart is stale
    # residency forms a forest rooted at the outer region
    for c in comps:
        seen = set()
        cur = c
        while True:
            if cur in seen:
                raise AssertionError(f"residency cycle through {c}")
            seen.add(cur)
            r = state.residency[cur]
            if r == OUTER_REGION:
                break
            cur = r[1]
    for c, r in state.residency.items():
        if c not in comps:
            raise AssertionError(f"stale residency key {c}")
        if r != OUTER_REGION and not state.region_exists(r):
            raise AssertionError(f"resident {c} of nonexistent region {r}")


def completed_is_triangulation(state: PlaneState) -> bool:
    """Every face of the (single) completed component is a triangle."""
    if not state.is_complete():
        return False
    comps = state.components()
    if len(comps) != 1:
        return False
    comp_id = next(iter(comps))
    return all(len(w) == 3 for w in state.faces_of(comp_id))
