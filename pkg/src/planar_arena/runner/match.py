"""Plays configured matches to termination and verifies transcripts.

Edge games end at exactly 3n-6 moves; packing games end on the win
condition or a configurable move budget (default 50 moves per side).
Everything is deterministic given the config and seeds.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..graphs import (
    BudgetError,
    Graph,
    contains_subgraph,
    diameter,
    is_apollonian,
    is_hamiltonian,
    separator_witness_nonhamiltonian,
)
from ..packing import Circle, Packing, contact_graph, validate_packing
from ..plane import BUILDER, SPOILER, BiasSchedule, DrawMove, PlaneState, new_game
from ..strategies import edge_strategy, packing_strategy
from ..strategies.common import StrategyConfused, owed_moves
from .transcript import EDGE, PACKING, Transcript

DEFAULT_PACKING_BUDGET = 100  # total moves (50 per side at 1:1)


@dataclass
class MatchConfig:
    kind: str = EDGE
    n: int = 8
    schedule: BiasSchedule = field(default_factory=BiasSchedule)
    builder: str = "random"
    spoiler: str = "random"
    builder_seed: int = 0
    spoiler_seed: int = 1
    target: Graph | None = None
    target_n: int | None = None
    move_budget: int | None = None
    strict: bool = False
    checks: tuple[str, ...] = ()
    builder_opts: dict = field(default_factory=dict)
    spoiler_opts: dict = field(default_factory=dict)


def _make_edge_strategies(cfg: MatchConfig):
    builder = edge_strategy(cfg.builder, seed=cfg.builder_seed, strict=cfg.strict,
                            **cfg.builder_opts)
    spoiler = edge_strategy(cfg.spoiler, seed=cfg.spoiler_seed, strict=cfg.strict,
                            **cfg.spoiler_opts)
    return builder, spoiler


def run_edge_match(cfg: MatchConfig) -> tuple[Transcript, PlaneState]:
    builder, spoiler = _make_edge_strategies(cfg)
    t = Transcript(
        kind=EDGE, n=cfg.n, target=None, schedule=cfg.schedule.to_json(),
        builder=cfg.builder, spoiler=cfg.spoiler,
        builder_seed=cfg.builder_seed, spoiler_seed=cfg.spoiler_seed,
    )
    state = new_game(cfg.n, cfg.schedule)
    history: list[DrawMove] = []
    while not state.is_complete():
        player = state.player_to_move()
        strat = builder if player == BUILDER else spoiler
        try:
            moves = strat.moves(state, history)
        except StrategyConfused as exc:
            t.aborted_at = state.move_count
            t.verdicts["aborted"] = str(exc)
            break
        if not moves:
            t.aborted_at = state.move_count
            t.verdicts["aborted"] = f"{strat.name} returned no moves"
            break
        for mv in moves:
            state = state.apply_move(mv, player)
            history.append(mv)
            t.add_edge_move(mv, player)
    t.reports = {"builder": builder.report(), "spoiler": spoiler.report()}
    t.verdicts.update(edge_verdicts(state, cfg, t.reports))
    return t, state


def edge_verdicts(state: PlaneState, cfg: MatchConfig, reports: dict) -> dict:
    out: dict = {
        "complete": state.is_complete(),
        "edge_count": state.move_count,
    }
    g = state.union_graph()
    if "hamiltonian" in cfg.checks:
        try:
            out["hamiltonian"] = is_hamiltonian(g)
        except BudgetError:
            out["hamiltonian"] = None
    if "separator" in cfg.checks:
        S = reports.get("spoiler", {}).get("separator", [])
        out["separator"] = sorted(S)
        out["separator_certificate"] = separator_witness_nonhamiltonian(g, set(S))
        out["separator_size_ok"] = (
            3 * len(S) - 6 <= cfg.n <= 3 * len(S) - 4 if S else False
        )
    if "builder_degree" in cfg.checks:
        nominated = reports.get("builder", {}).get("nominated", 0)
        out["nominated"] = nominated
        out["builder_degree"] = state.builder_subgraph().degree(nominated)
        out["degree_ratio"] = out["builder_degree"] / cfg.n
        d = diameter(g)
        out["diameter"] = None if d == float("inf") else int(d)
    if "partial3tree" in cfg.checks:
        from ..graphs import is_partial_3tree

        comps_ok = True
        for comp in state.components():
            cg, _ = state.component_graph(comp)
            if cg.n >= 4 and not is_partial_3tree(cg):
                comps_ok = False
                break
        out["all_components_partial_3trees"] = comps_ok
    return out


def run_packing_match(cfg: MatchConfig) -> tuple[Transcript, Packing]:
    builder = packing_strategy(cfg.builder, seed=cfg.builder_seed, **cfg.builder_opts)
    spoiler = packing_strategy(cfg.spoiler, seed=cfg.spoiler_seed, **cfg.spoiler_opts)
    t = Transcript(
        kind=PACKING, n=None,
        target=None if cfg.target is None else {
            "n": cfg.target.n, "edges": cfg.target.edge_list(),
        },
        schedule=cfg.schedule.to_json(), builder=cfg.builder, spoiler=cfg.spoiler,
        builder_seed=cfg.builder_seed, spoiler_seed=cfg.spoiler_seed,
        move_budget=cfg.move_budget or DEFAULT_PACKING_BUDGET,
        target_n=cfg.target_n,
    )
    packing = Packing()
    history: list[Circle] = []
    budget = cfg.move_budget or DEFAULT_PACKING_BUDGET
    seq = cfg.schedule.turn_sequence(budget)
    for ply, player in enumerate(seq):
        strat = builder if player == BUILDER else spoiler
        circle = strat.move(packing, history)
        if not packing.fits(circle):
            t.aborted_at = ply
            t.verdicts["aborted"] = f"{strat.name} produced an overlapping circle"
            break
        packing.add(circle, player, ply)
        history.append(circle)
        t.add_circle_move(circle, player)
        if _packing_win(cfg, builder, packing):
            break
    t.reports = {"builder": builder.report(), "spoiler": spoiler.report()}
    t.verdicts.update(packing_verdicts(packing, cfg, t.reports))
    if hasattr(builder, "constants") and builder.constants:
        delta, x0, eps = builder.constants
        t.constants = {"delta": delta, "x0": x0, "eps": eps}
    return t, packing


def _packing_win(cfg: MatchConfig, builder, packing) -> bool:
    if cfg.builder == "builder-box":
        return getattr(builder, "won_box", None) is not None
    if cfg.builder == "builder-apollonian":
        return (
            cfg.target_n is not None
            and len(getattr(builder, "network", ())) >= cfg.target_n
        )
    return False


def packing_verdicts(packing: Packing, cfg: MatchConfig, reports: dict) -> dict:
    out: dict = {"circles": len(packing)}
    violation = validate_packing(packing)
    out["valid"] = violation is None
    if "contains_target" in cfg.checks and cfg.target is not None:
        cells = reports.get("builder", {}).get("witness_cells")
        if cells:
            idxs = _match_indices(packing, cells)
            sub = contact_graph_on(packing, idxs)
            out["contains_target"] = (
                len(idxs) == cfg.target.n and contains_subgraph(sub, cfg.target)
            )
            out["builder_moves"] = reports.get("builder", {}).get("builder_moves")
        else:
            out["contains_target"] = False
    if "apollonian_network" in cfg.checks:
        cells = reports.get("builder", {}).get("network", [])
        idxs = _match_indices(packing, cells)
        sub = contact_graph_on(packing, idxs)
        out["network_size"] = len(idxs)
        out["network_apollonian"] = len(idxs) >= 3 and is_apollonian(sub)
    return out


def _match_indices(packing: Packing, cells: list[dict]) -> list[int]:
    out = []
    for cell in cells:
        for i, pc in enumerate(packing.placed):
            if (
                abs(pc.circle.x - cell["x"]) < 1e-9
                and abs(pc.circle.y - cell["y"]) < 1e-9
                and abs(pc.circle.r - cell["r"]) < 1e-9
            ):
                out.append(i)
                break
    return out


def contact_graph_on(packing: Packing, idxs: list[int]) -> Graph:
    """Contact graph restricted to the given circle indices (local queries
    only, so huge packings stay cheap)."""
    index_of = {j: k for k, j in enumerate(idxs)}
    edges = []
    for k, j in enumerate(idxs):
        for nb in packing.tangent_indices(packing.placed[j].circle, skip=j):
            if nb in index_of and index_of[nb] > k:
                edges.append((k, index_of[nb]))
    return Graph.from_edges(len(idxs), edges)


def run_match(cfg: MatchConfig):
    if cfg.kind == EDGE:
        return run_edge_match(cfg)
    return run_packing_match(cfg)


def replay_edge(t: Transcript) -> PlaneState:
    state = new_game(t.n, t.schedule_obj())
    for entry in t.moves:
        state = state.apply_move(DrawMove.from_json(entry["move"]), entry["player"])
    return state


def replay_packing(t: Transcript) -> Packing:
    p = Packing()
    for ply, entry in enumerate(t.moves):
        c = entry["circle"]
        p.add(Circle(c["x"], c["y"], c["r"]), entry["player"], ply)
    return p


def verify_transcript(t: Transcript) -> dict:
    """Replays the move list and recomputes the verdict block; reports any
    divergence."""
    report = {"ok": True, "divergences": []}

    def diverge(msg):
        report["ok"] = False
        report["divergences"].append(msg)

    if t.kind == EDGE:
        try:
            state = replay_edge(t)
        except Exception as exc:
            diverge(f"replay failed: {exc}")
            return report
        cfg = MatchConfig(
            kind=EDGE, n=t.n, schedule=t.schedule_obj(),
            checks=_checks_from_verdicts(t.verdicts),
        )
        fresh = edge_verdicts(state, cfg, t.reports)
        for key, val in fresh.items():
            if key in t.verdicts and t.verdicts[key] != val:
                diverge(f"verdict {key}: recorded {t.verdicts[key]!r} != replayed {val!r}")
    else:
        p = replay_packing(t)
        violation = validate_packing(p)
        if (violation is None) != t.verdicts.get("valid", True):
            diverge("packing validity mismatch")
        if violation is not None and t.verdicts.get("valid", True):
            diverge(
                f"overlap between {violation.i} and {violation.j}, depth {violation.depth:.3g}"
            )
        if len(p) != t.verdicts.get("circles", len(p)):
            diverge("circle count mismatch")
    return report


def _checks_from_verdicts(verdicts: dict) -> tuple[str, ...]:
    out = []
    if "hamiltonian" in verdicts:
        out.append("hamiltonian")
    if "separator_certificate" in verdicts:
        out.append("separator")
    if "builder_degree" in verdicts:
        out.append("builder_degree")
    if "all_components_partial_3trees" in verdicts:
        out.append("partial3tree")
    return tuple(out)
