"""The abstract biased box game: m disjoint boxes of n cells each.

Maker marks cells, one per move, with a bonus move after every q-th of
his regular moves; Breaker kills a box by touching any of its cells.
Maker wins by filling a box Breaker never touched.  The strategy is the
breadth recursion: keep every live box at the same mark level, deepening
only when the whole level is marked, which wins whenever
m >= (q+1)^(n-1).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..graphs import InvalidParameter


@dataclass
class BoxGameState:
    m: int
    n: int
    q: int
    marks: list[int] = field(default_factory=list)
    dead: list[bool] = field(default_factory=list)

    def __post_init__(self):
        if self.m < 1 or self.n < 1 or self.q < 1:
            raise InvalidParameter("box game needs m, n, q >= 1")
        if not self.marks:
            self.marks = [0] * self.m
        if not self.dead:
            self.dead = [False] * self.m

    def live(self):
        return [i for i in range(self.m) if not self.dead[i]]

    def winner(self) -> str | None:
        if any(not self.dead[i] and self.marks[i] >= self.n for i in range(self.m)):
            return "maker"
        if all(self.dead[i] or self.marks[i] < self.n for i in range(self.m)) and not self.live():
            return "breaker"
        return None

    def maker_mark(self, i: int):
        if self.dead[i]:
            raise InvalidParameter("marking a dead box")
        self.marks[i] += 1

    def breaker_touch(self, i: int):
        self.dead[i] = True


def box_maker_move(state: BoxGameState) -> int:
    """Breadth recursion as a pure function: the live box with the fewest
    marks (lowest index on ties)."""
    live = state.live()
    if not live:
        raise InvalidParameter("no live boxes")
    return min(live, key=lambda i: (state.marks[i], i))


def required_boxes(n: int, epsilon: float) -> int:
    return int(1 / epsilon + 1) ** (n - 1)


def maker_wins_all_lines(m: int, n: int, q: int) -> bool:
    """Exhaustive Breaker: does the breadth Maker win every line?

    Turn order: Maker, Breaker, Maker, Breaker, ... with a bonus Maker
    move immediately after every q-th regular Maker move.
    """

    def rec(marks: tuple, dead: tuple, regulars: int, bonus_pending: bool,
            maker_turn: bool) -> bool:
        state = BoxGameState(m, n, q, list(marks), list(dead))
        if state.winner() == "maker":
            return True
        live = state.live()
        if not live:
            return False
        if maker_turn:
            i = box_maker_move(state)
            state.maker_mark(i)
            if state.winner() == "maker":
                return True
            if bonus_pending:
                # that was the bonus move; Breaker plays next
                return rec(tuple(state.marks), tuple(state.dead), regulars, False, False)
            regulars += 1
            if regulars % q == 0:
                # bonus move follows immediately
                return rec(tuple(state.marks), tuple(state.dead), regulars, True, True)
            return rec(tuple(state.marks), tuple(state.dead), regulars, False, False)
        # Breaker: try every kill; Maker must win them all
        for i in live:
            nd = list(dead)
            nd[i] = True
            if not rec(marks, tuple(nd), regulars, bonus_pending, True):
                return False
        return True

    return rec((0,) * m, (False,) * m, 0, False, True)
