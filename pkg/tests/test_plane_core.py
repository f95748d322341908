"""Edge-drawing engine tests: move legality, face bookkeeping, residency,
slot enumeration, serialization determinism."""

import random

import pytest

from planar_arena.graphs import InvalidParameter
from planar_arena.plane import (
    BUILDER,
    OUTER_REGION,
    SPOILER,
    BiasSchedule,
    DrawMove,
    IllegalMove,
    PlaneState,
    check_invariants,
    completed_is_triangulation,
    face_region,
    legal_edge_slots,
    new_game,
    slot_move,
)


def sched(b=1, s=1, first=BUILDER):
    return BiasSchedule(b, s, first)


def apply_slot(state, slot, player=None):
    player = player or state.player_to_move()
    return state.apply_move(slot_move(state, slot), player)


class TestNewGame:
    def test_fresh(self):
        st = new_game(3, sched())
        assert st.move_count == 0
        assert len(st.components()) == 3
        assert all(st.residency[v] == OUTER_REGION for v in range(3))

    def test_total_moves(self):
        assert new_game(6, sched(2, 1)).total_moves() == 12

    def test_too_small(self):
        with pytest.raises(InvalidParameter):
            new_game(2, sched())


class TestSchedule:
    def test_biased_round(self):
        s = BiasSchedule(2, 1, BUILDER)
        assert s.turn_sequence(6) == [BUILDER, BUILDER, SPOILER] * 2

    def test_spoiler_first_1_3(self):
        s = BiasSchedule(1, 3, SPOILER)
        assert s.turn_sequence(8) == [SPOILER] * 3 + [BUILDER] + [SPOILER] * 3 + [BUILDER]

    def test_epsilon_bonus(self):
        s = BiasSchedule(first_player=BUILDER, epsilon=0.5)
        # q = 2: builder bonus right after his 2nd, 4th, ... regular move
        seq = s.turn_sequence(9)
        assert seq == [
            BUILDER, SPOILER, BUILDER, BUILDER, SPOILER,
            BUILDER, SPOILER, BUILDER, BUILDER,
        ]

    def test_epsilon_range(self):
        with pytest.raises(InvalidParameter):
            BiasSchedule(epsilon=1.5)


class TestBasicMoves:
    def test_join_two_isolated(self):
        st = new_game(4, sched())
        st2 = st.apply_move(DrawMove(0, 1, OUTER_REGION), BUILDER)
        assert st2.move_count == 1
        comps = st2.components()
        assert comps[0] == {0, 1}
        check_invariants(st2)

    def test_duplicate_edge_rejected(self):
        st = new_game(4, sched())
        st = st.apply_move(DrawMove(0, 1, OUTER_REGION), BUILDER)
        with pytest.raises(IllegalMove) as ei:
            # corner indices for the existing walk
            st.apply_move(DrawMove(0, 1, OUTER_REGION, 0, 1), SPOILER)
        assert ei.value.code == "duplicate-edge"

    def test_wrong_turn(self):
        st = new_game(4, sched())
        with pytest.raises(IllegalMove) as ei:
            st.apply_move(DrawMove(0, 1, OUTER_REGION), SPOILER)
        assert ei.value.code == "wrong-turn"

    def test_loop_rejected(self):
        st = new_game(4, sched())
        with pytest.raises(IllegalMove):
            st.apply_move(DrawMove(1, 1, OUTER_REGION), BUILDER)

    def test_original_state_unchanged(self):
        st = new_game(4, sched())
        st.apply_move(DrawMove(0, 1, OUTER_REGION), BUILDER)
        assert st.move_count == 0
        assert st.edges == []


def build_triangle_with_inside(n=4, inside=(3,)):
    """Triangle on 0,1,2 with `inside` vertices enclosed in its bounded face."""
    st = new_game(n, sched())
    st = st.apply_move(DrawMove(0, 1, OUTER_REGION), st.player_to_move())
    # attach 2 to the path, then close the triangle enclosing `inside`
    walk = st.outer_walk(0)
    corner_1 = next(i for i, d in enumerate(walk) if st.dart_origin(d) == 1)
    st = st.apply_move(DrawMove(1, 2, OUTER_REGION, corner_1, 0), st.player_to_move())
    walk = st.outer_walk(0)
    corner_2 = next(i for i, d in enumerate(walk) if st.dart_origin(d) == 2)
    corner_0 = next(i for i, d in enumerate(walk) if st.dart_origin(d) == 0)
    part = {
        "uv": tuple(sorted(inside)),
        "vu": tuple(c for c in st.residents_of(OUTER_REGION)
                    if c != 0 and c not in inside),
    }
    st = st.apply_move(DrawMove(2, 0, OUTER_REGION, corner_2, corner_0, part),
                       st.player_to_move())
    return st


class TestSplitAndResidency:
    def test_triangle_traps_vertex(self):
        st = build_triangle_with_inside()
        check_invariants(st)
        # vertex 3 now lives in the bounded face of component 0
        r = st.residency[3]
        assert r != OUTER_REGION and r[1] == 0
        assert r[2] != st.outer_face_index(0)
        # outer face of the triangle is a 3-cycle
        assert st.outer_triple(0) == (0, 1, 2) or set(st.outer_triple(0)) == {0, 1, 2}

    def test_trapped_vertex_slots_inside_only(self):
        st = build_triangle_with_inside()
        slots = legal_edge_slots(st)
        with3 = [s for s in slots if 3 in (s[0], s[1])]
        # 3 can join each triangle vertex exactly once, through the inner face
        assert len(with3) == 3
        assert {frozenset((s[0], s[1])) for s in with3} == {
            frozenset((0, 3)), frozenset((1, 3)), frozenset((2, 3))
        }
        assert all(s[2] != OUTER_REGION for s in with3)

    def test_partition_must_cover_residents(self):
        st = new_game(4, sched())
        st = st.apply_move(DrawMove(0, 1, OUTER_REGION), st.player_to_move())
        walk = st.outer_walk(0)
        corner_1 = next(i for i, d in enumerate(walk) if st.dart_origin(d) == 1)
        st = st.apply_move(DrawMove(1, 2, OUTER_REGION, corner_1, 0), st.player_to_move())
        walk = st.outer_walk(0)
        corner_2 = next(i for i, d in enumerate(walk) if st.dart_origin(d) == 2)
        corner_0 = next(i for i, d in enumerate(walk) if st.dart_origin(d) == 0)
        with pytest.raises(IllegalMove) as ei:
            st.apply_move(
                DrawMove(2, 0, OUTER_REGION, corner_2, corner_0, {"uv": (), "vu": ()}),
                st.player_to_move(),
            )
        assert ei.value.code == "bad-partition"

    def test_face_count_increments_on_chord(self):
        st = build_triangle_with_inside()
        faces_before = len(st.faces_of(0))
        assert faces_before == 2
        # join 3 to all triangle vertices; each same-face chord splits a face
        for k, target in enumerate((0, 1, 2)):
            slots = [s for s in legal_edge_slots(st) if {s[0], s[1]} == {3, target}]
            st = apply_slot(st, slots[0])
            check_invariants(st)
        assert len(st.faces_of(0)) == 4  # K4: 3 inner faces + outer


class TestSlots:
    def test_three_isolated(self):
        st = new_game(3, sched())
        slots = legal_edge_slots(st)
        assert [(s[0], s[1]) for s in slots] == [(0, 1), (0, 2), (1, 2)]

    def test_complete_game_has_no_slots(self):
        st = run_random_game(5, seed=1)
        assert st.is_complete()
        assert legal_edge_slots(st) == []

    def test_slots_all_legal(self):
        rng = random.Random(2)
        st = new_game(6, sched())
        for _ in range(6):
            slots = legal_edge_slots(st)
            if not slots:
                break
            st = apply_slot(st, rng.choice(slots))
            check_invariants(st)


def run_random_game(n, seed=0, schedule=None):
    rng = random.Random(seed)
    st = new_game(n, schedule or sched())
    while not st.is_complete():
        slots = legal_edge_slots(st)
        assert slots, f"no slots at move {st.move_count} of {st.total_moves()}"
        slot = rng.choice(slots)
        u, v, region, cu, cv = slot
        move = slot_move(st, slot)
        # occasionally flip orientation and scatter residents across sides
        if move.partition is not None:
            residents = list(move.partition["uv"]) + list(move.partition["vu"])
            uv, vu = [], []
            for c in residents:
                (uv if rng.random() < 0.5 else vu).append(c)
            if rng.random() < 0.5:
                move = DrawMove(v, u, region, cv, cu,
                                {"uv": tuple(uv), "vu": tuple(vu)})
            else:
                move = DrawMove(u, v, region, cu, cv,
                                {"uv": tuple(uv), "vu": tuple(vu)})
        st = st.apply_move(move, st.player_to_move())
    return st


class TestFullGames:
    @pytest.mark.parametrize("n", [4, 5, 6, 8])
    @pytest.mark.parametrize("seed", [0, 1, 2])
    def test_random_game_terminates_as_triangulation(self, n, seed):
        st = run_random_game(n, seed)
        assert st.move_count == 3 * n - 6
        assert completed_is_triangulation(st)
        check_invariants(st)
        assert legal_edge_slots(st) == []

    def test_every_prefix_keeps_invariants(self):
        rng = random.Random(9)
        st = new_game(7, sched())
        while not st.is_complete():
            slots = legal_edge_slots(st)
            st = apply_slot(st, rng.choice(slots))
            check_invariants(st)
            walks = [w for c in st.components() if c in st.outer_dart
                     for w in st.faces_of(c)]
            assert sum(len(w) for w in walks) == 2 * len(st.edges)

    def test_replay_determinism(self):
        st = run_random_game(8, seed=3)
        moves = []
        st2 = run_random_game(8, seed=3)
        assert st.canonical_json() == st2.canonical_json()

    def test_builder_subgraph_degrees(self):
        st = run_random_game(6, seed=4, schedule=sched(2, 1))
        bg = st.builder_subgraph()
        handshake = sum(bg.degree(v) for v in range(st.n))
        n_builder_edges = sum(1 for o in st.edge_owner if o == BUILDER)
        assert handshake == 2 * n_builder_edges


class TestSerialization:
    def test_move_round_trip(self):
        m = DrawMove(2, 0, face_region(0, 1), 1, 0, {"uv": (3,), "vu": ()})
        assert DrawMove.from_json(m.to_json()) == m

    def test_outer_region_round_trip(self):
        m = DrawMove(0, 1, OUTER_REGION)
        assert DrawMove.from_json(m.to_json()) == m
