"""Replayable full-game records for both game kinds.

A transcript fixes everything needed to reproduce a game bit-exactly:
config, strategy names and seeds, the ordered move list, plus a verdict
block of property-checker outputs that verification recomputes.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Any

from .. import __version__
from ..plane import BiasSchedule, DrawMove

EDGE = "edge"
PACKING = "packing"


@dataclass
class Transcript:
    kind: str
    n: int | None
    target: dict | None
    schedule: dict
    builder: str
    spoiler: str
    builder_seed: int
    spoiler_seed: int
    moves: list[dict] = field(default_factory=list)
    verdicts: dict = field(default_factory=dict)
    reports: dict = field(default_factory=dict)
    constants: dict = field(default_factory=dict)
    engine_version: str = __version__
    move_budget: int | None = None
    aborted_at: int | None = None
    target_n: int | None = None

    def add_edge_move(self, move: DrawMove, player: str):
        entry = {"player": player, "move": move.to_json()}
        self.moves.append(entry)

    def add_circle_move(self, circle, player: str):
        self.moves.append({
            "player": player,
            "circle": {"x": circle.x, "y": circle.y, "r": circle.r},
        })

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, indent=1)

    @staticmethod
    def from_json(text: str) -> "Transcript":
        data = json.loads(text)
        return Transcript(**data)

    def schedule_obj(self) -> BiasSchedule:
        return BiasSchedule.from_json(self.schedule)
